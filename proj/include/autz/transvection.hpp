#pragma once

#include <optional>
#include <utility>

#include "autz/int_matrix.hpp"
#include "autz/lattice.hpp"

namespace autz {

/// The automorphism a -> a + delta(a) x, with x primitive and delta(x) = 0.
/// `m` is the content of delta, the conjugacy invariant. The sign of the
/// pair (x, delta) is fixed by making the first nonzero entry of x positive.
struct TransvectionData {
  Vector direction;  // x
  Vector covector;   // delta
  Integer m;

  IntMatrix matrix() const;
};

/// I + x delta. Throws precondition_error for delta = 0, x not primitive,
/// or delta(x) != 0.
IntMatrix make_transvection(const Vector& delta, const Vector& x);

/// nullopt when M is not a transvection.
std::optional<TransvectionData> recognize_transvection(const IntMatrix& m);

/// Transvection with even invariant m.
bool is_even_transvection(const IntMatrix& m);

/// Throws precondition_error if either argument is not a transvection.
bool transvections_conjugate(const IntMatrix& a, const IntMatrix& b);

/// Involution that negates `line` and fixes the span of `hyperplane_basis`;
/// [line | hyperplane_basis] must be unimodular.
IntMatrix reflection(const Vector& line, const IntMatrix& hyperplane_basis);

enum class EigenSide { plus, minus };

struct MutualSubgroup {
  Lattice shared;
  EigenSide side;
  Integer product_m;  // invariant of the transvection Q P
};

/// For distinct extremal involutions P, Q: the shared eigen-lattice, if any.
std::optional<MutualSubgroup> mutual_subgroup(const IntMatrix& p, const IntMatrix& q);

using ExtremalPair = std::pair<IntMatrix, IntMatrix>;

struct SummandComparison {
  bool predicate;       // for all i, j: P_i = Q_j or P_i Q_j is an even transvection
  bool lattices_equal;  // the pairs' shared lattices coincide

  bool agrees() const { return predicate == lattices_equal; }
};

/// Both pairs must consist of distinct extremal involutions sharing an
/// eigen-lattice on the same side.
SummandComparison shared_summand_predicate(const ExtremalPair& first, const ExtremalPair& second);

}  // namespace autz
