#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "autz/int_matrix.hpp"
#include "autz/lattice.hpp"

namespace autz {

/// Conjugacy invariant of an involution of Z^n: the numbers of fixed,
/// negated and swapped-pair vectors in any canonical basis.
struct InvolutionProfile {
  std::size_t fixed = 0;
  std::size_t negated = 0;
  std::size_t swaps = 0;

  std::size_t dimension() const { return fixed + negated + 2 * swaps; }
  bool diagonalizable() const { return swaps == 0; }
  std::size_t rank_plus() const { return fixed + swaps; }
  std::size_t rank_minus() const { return negated + swaps; }

  friend bool operator==(const InvolutionProfile&, const InvolutionProfile&) = default;
};

/// Column ranges of the canonical block matrix: fixed block, negated
/// block, then one adjacent column pair per swap.
struct BlockLayout {
  std::size_t fixed_begin = 0;
  std::size_t negated_begin = 0;
  std::size_t swaps_begin = 0;
  std::size_t swap_count = 0;

  std::pair<std::size_t, std::size_t> swap_pair(std::size_t k) const {
    return {swaps_begin + 2 * k, swaps_begin + 2 * k + 1};
  }
};

BlockLayout layout_of(const InvolutionProfile& profile);

/// diag(I_a, -I_b, [[0,1],[1,0]] x p)
IntMatrix canonical_block(const InvolutionProfile& profile);

struct CanonicalBasis {
  IntMatrix basis;  // columns form the basis; basis^-1 P basis = canonical_block(profile)
  InvolutionProfile profile;
  BlockLayout layout;
};

enum class InvolutionKindTag {
  gamma_involution,
  extremal,
  one_permutation,
  nondiagonalizable_other,
  diagonalizable_other,
  central,
};

struct InvolutionKind {
  InvolutionKindTag tag = InvolutionKindTag::central;
  std::size_t gamma = 0;  // rank of the negated part for gamma-involutions

  /// gamma_involution(1) is reported as extremal.
  static InvolutionKind gamma_involution(std::size_t g) {
    return {g == 1 ? InvolutionKindTag::extremal : InvolutionKindTag::gamma_involution, g};
  }
  bool is_gamma(std::size_t g) const {
    return (tag == InvolutionKindTag::gamma_involution || tag == InvolutionKindTag::extremal) &&
           gamma == g;
  }
  bool is_extremal() const { return tag == InvolutionKindTag::extremal; }
  std::string name() const;

  friend bool operator==(const InvolutionKind&, const InvolutionKind&) = default;
};

struct EigenLattices {
  Lattice plus;   // {v : P v = v}
  Lattice minus;  // {v : P v = -v}
};

/// Throws not_involution_error unless P^2 = I.
void require_involution(const IntMatrix& p);

EigenLattices eigen_lattices(const IntMatrix& p);
/// GF(2) rank of P - I; equals the number of swap pairs.
std::size_t residue(const IntMatrix& p);
InvolutionProfile involution_profile(const IntMatrix& p);
CanonicalBasis canonical_form(const IntMatrix& p);
InvolutionKind classify(const IntMatrix& p);
bool involutions_conjugate(const IntMatrix& p, const IntMatrix& q);

/// A conjugate P' of a non-diagonalizable involution P with P P' of order 3.
IntMatrix order3_witness(const IntMatrix& p);

/// A conjugate P' with P P' a 4-involution, for non-diagonalizable P that is
/// not a 1-permutation, in rank at least 9.
IntMatrix four_involution_witness(const IntMatrix& p);

/// diag(1,..,-1,..,1) with the -1 in position i, for i = 0..n-1.
std::vector<IntMatrix> standard_commuting_family(std::size_t n);

}  // namespace autz
