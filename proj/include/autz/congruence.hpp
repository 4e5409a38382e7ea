#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "autz/gf2.hpp"
#include "autz/int_matrix.hpp"

namespace autz {

/// M = I mod level, entrywise. Throws precondition_error for non-automorphisms
/// or level < 2.
bool in_gamma(const IntMatrix& m, const Integer& level);

/// I + c E_ij; indices are 0-based.
struct ElementaryFactor {
  std::size_t i = 0;
  std::size_t j = 0;
  Integer c;

  IntMatrix matrix(std::size_t n) const { return elementary(n, i, j, c); }
  friend bool operator==(const ElementaryFactor&, const ElementaryFactor&) = default;
};

struct Factorization {
  std::size_t n = 0;
  std::vector<ElementaryFactor> factors;

  /// factors[0] * factors[1] * ...
  IntMatrix product() const;
  std::size_t length() const { return factors.size(); }
};

/// Euclidean row reduction of M in SL(n, Z), n >= 2. The length is not
/// bounded beyond what the reduction produces.
Factorization elementary_factorization(const IntMatrix& m);

struct Mod2Class {
  bool trivial;                                  // factor = I mod 2, i.e. c even
  std::optional<ElementaryFactor> square_root;   // (i, j, c/2) when trivial
};

std::vector<Mod2Class> factor_mod2_classes(const Factorization& f);

/// Product of the factors reduced mod 2.
Gf2Matrix mod2_image(const Factorization& f);

/// All X in SL(2, Z) with X^2 = T, for unipotent T in SL(2, Z); sorted.
std::vector<IntMatrix> unipotent_sqrt_sl2(const IntMatrix& t);

/// All R with trace 0, det -1, R != S and S R S = R S R, S = [[0,1],[1,0]],
/// derived by case analysis of the entry equations; sorted.
std::vector<IntMatrix> braid_involution_solutions();

struct CommutatorReport {
  IntMatrix cycle;                        // e1 -> e2 -> e3 -> e1
  std::array<IntMatrix, 4> sigmas;        // the four square roots of I + 2E_12
  std::array<IntMatrix, 4> commutators;   // [sigma, cycle sigma cycle^-1]
  std::array<bool, 4> sigma_has_eigenvalue_minus_one{};
  std::array<bool, 4> commutator_has_eigenvalue_minus_one{};
  std::array<bool, 4> conjugate_to_commutator{};
  IntMatrix steinberg;                    // [I + E_12, I + E_23]
};

/// Recomputes the commutator identities behind the recognition of the
/// elementary 1-transvection. Throws std::logic_error if any fails.
CommutatorReport claim1_commutator_identities();

/// det(M + I) = 0.
bool has_eigenvalue_minus_one(const IntMatrix& m);

/// [[a, b, 0], [c, d, 0], [0, 0, 1]] with det 1, b even, d odd; b is the
/// least nonnegative admissible value.
IntMatrix lift_row_to_sl3(const Integer& a, const Integer& c);

/// M in SL(n, Z) with M mod 2 = mbar, built from c = 1 elementary lifts.
IntMatrix lift_mod2(const Gf2Matrix& mbar);

/// For sigma in Gamma_2 and primitive e: rho in Gamma_2 with rho e = sigma e,
/// assembled from lift_row_to_sl3 in a basis adapted to e. n >= 3.
IntMatrix gamma2_line_witness(const IntMatrix& sigma, const Vector& e);

/// For sigma in Gamma_2 and a primitive covector f: rho in Gamma_2 with
/// rho ker(f) = sigma ker(f).
IntMatrix gamma2_hyperplane_witness(const IntMatrix& sigma, const Vector& f);

/// The coefficient pattern forced by sigma C = rho C with rho in Gamma_2 for
/// every coordinate hyperplane C containing e_j: the e_i-coefficient of
/// sigma e_j is even for all i != j.
bool congruence_pattern_holds(const IntMatrix& sigma);

}  // namespace autz
