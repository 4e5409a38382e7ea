// Randomized invariants, seeded so failures replay.
#include <doctest.h>

#include <numeric>

#include "autz/congruence.hpp"
#include "autz/involution.hpp"
#include "autz/kernels.hpp"
#include "autz/lattice.hpp"
#include "autz/transvection.hpp"
#include "support.hpp"

using namespace autz;
using autz::testing::random_small_matrix;

namespace {

IntMatrix random_involution(std::size_t n, Rng& rng, InvolutionProfile* profile = nullptr) {
  InvolutionProfile pr;
  pr.swaps = rng.below(n / 2 + 1);
  pr.fixed = rng.below(n - 2 * pr.swaps + 1);
  pr.negated = n - 2 * pr.swaps - pr.fixed;
  if (profile) *profile = pr;
  return random_unimodular_sample(n, 2 * n, 2, rng).conjugate(canonical_block(pr));
}

IntMatrix random_sl(std::size_t n, Rng& rng) {
  IntMatrix m = random_unimodular_sample(n, 1 + rng.below(30), 3, rng).forward;
  if (determinant(m) == -1) {
    IntMatrix d = IntMatrix::identity(n);
    d(0, 0) = -1;
    m = m * d;
  }
  return m;
}

}  // namespace

TEST_CASE("hnf is idempotent and rank matches") {
  Rng rng(1);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(5), k = rng.below(6);
    const IntMatrix g = random_small_matrix(n, k, 6, rng);
    const Lattice l = hnf(g);
    CHECK(hnf(l.basis()) == l);
    CHECK(l.rank() == rational_rank(g));
    for (std::size_t j = 0; j < k; ++j) CHECK(l.contains(g.column(j)));
  }
}

TEST_CASE("kernel correctness and rank additivity") {
  Rng rng(2);
  for (int t = 0; t < 300; ++t) {
    const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(5);
    IntMatrix m = random_small_matrix(r, c, 3, rng);
    if (rng.coin()) m = m * random_small_matrix(c, c, 1, rng);  // often rank-deficient
    const Lattice k = kernel_lattice(m);
    CHECK((m * k.basis()).is_zero());
    CHECK(k.rank() + rational_rank(m) == c);
    CHECK(k.is_saturated());
  }
}

TEST_CASE("eigen-lattice ranks of an involution sum to n") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(7);
    InvolutionProfile pr;
    const IntMatrix p = random_involution(n, rng, &pr);
    const EigenLattices e = eigen_lattices(p);
    CHECK(e.plus.rank() + e.minus.rank() == n);
    CHECK(e.plus.rank() == pr.rank_plus());
    CHECK(e.minus.rank() == pr.rank_minus());
    CHECK(residue(p) == pr.swaps);
    CHECK(summand_index(e.plus, e.minus) == Integer(1) << pr.swaps);
  }
}

TEST_CASE("summand_index is 1 exactly when L1 + L2 contains the standard basis") {
  Rng rng(4);
  int unit = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng.below(3);
    const std::size_t k = 1 + rng.below(n - 1);
    const IntMatrix a = random_small_matrix(n, k, 2, rng);
    const IntMatrix b = random_small_matrix(n, n - k, 2, rng);
    const Lattice l1 = hnf(a), l2 = hnf(b);
    if (l1.rank() != k || l2.rank() != n - k) continue;
    IntMatrix both(n, n);
    for (std::size_t j = 0; j < k; ++j) both.set_column(j, a.column(j));
    for (std::size_t j = 0; j < n - k; ++j) both.set_column(k + j, b.column(j));
    if (determinant(both) == 0) continue;
    const Lattice sum = hnf(both);
    bool all_units = true;
    for (std::size_t i = 0; i < n; ++i) all_units = all_units && sum.contains(unit_vector(n, i));
    CHECK((summand_index(l1, l2) == 1) == all_units);
    unit += all_units;
  }
  CHECK(unit > 0);
}

TEST_CASE("transvection round trip and invariance") {
  Rng rng(5);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + rng.below(5);
    const Vector x = random_primitive_vector(n, 4, rng);
    // Random entries off the pivot k of x, scaled by x_k so delta_k solving delta(x) = 0 is integral.
    Vector delta(n);
    std::size_t k = 0;
    while (x[k] == 0) ++k;
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) delta[i] = rng.uniform(-4, 4) * x[k];
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) s += delta[i] * x[i];
    delta[k] = -s / x[k];
    if (content(delta) == 0) continue;
    REQUIRE(dot(delta, x) == 0);

    const IntMatrix m = make_transvection(delta, x);
    CHECK(determinant(m) == 1);
    const auto rec = recognize_transvection(m);
    REQUIRE(rec);
    CHECK(rec->m == content(delta));
    const bool same = rec->direction == x && rec->covector == delta;
    Vector nx = x, nd = delta;
    for (auto& v : nx) v = -v;
    for (auto& v : nd) v = -v;
    CHECK((same || (rec->direction == nx && rec->covector == nd)));

    const UnimodularSample u = random_unimodular_sample(n, n + 4, 2, rng);
    const auto conj = recognize_transvection(u.conjugate(m));
    REQUIRE(conj);
    CHECK(conj->m == rec->m);
  }
}

TEST_CASE("canonical form postconditions on random conjugates") {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(8);
    InvolutionProfile pr;
    const IntMatrix p = random_involution(n, rng, &pr);
    const CanonicalBasis cf = canonical_form(p);
    CHECK(cf.profile == pr);
    CHECK(abs(determinant(cf.basis)) == 1);
    CHECK(inverse_unimodular(cf.basis) * p * cf.basis == canonical_block(pr));
    const UnimodularSample u = random_unimodular_sample(n, n + 2, 2, rng);
    CHECK(involution_profile(u.conjugate(p)) == pr);
  }
}

TEST_CASE("factorization round trip and mod-2 classes") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng.below(4);
    const IntMatrix m = random_sl(n, rng);
    const Factorization f = elementary_factorization(m);
    CHECK(f.product() == m);
    CHECK(in_gamma(m, 2) == (mod2_image(f) == Gf2Matrix::identity(n)));
    for (const auto& e : f.factors) CHECK((e.i != e.j && e.c != 0));
  }
  // Gamma_2 elements: all-even words still factor; the classes compose to I mod 2.
  for (int t = 0; t < 50; ++t) {
    const IntMatrix g = elementary(3, 0, 1, 2 * rng.nonzero(3)) * elementary(3, 2, 1, 2 * rng.nonzero(3)) *
                        elementary(3, 1, 0, 2 * rng.nonzero(3));
    const Factorization f = elementary_factorization(g);
    CHECK(mod2_image(f) == Gf2Matrix::identity(3));
  }
}

TEST_CASE("square roots of 2k-transvections in SL(2, Z) are complete") {
  for (long k = -5; k <= 5; ++k) {
    const IntMatrix t = elementary(2, 0, 1, 2 * k);
    const auto found = search_sl2_square_roots(t, 100);
    CHECK(found == unipotent_sqrt_sl2(t));
    CHECK(found.size() == 2);
  }
}

TEST_CASE("braid solutions are non-diagonalizable involutions") {
  for (const auto& r : braid_involution_solutions()) {
    CHECK(is_involution(r));
    CHECK(involution_profile(r) == InvolutionProfile{0, 0, 1});
  }
}

TEST_CASE("lift_row_to_sl3 on random coprime pairs") {
  Rng rng(8);
  int done = 0;
  while (done < 1000) {
    const long a = 2 * rng.uniform(-200, 200) + 1;
    const long c = 2 * rng.uniform(-200, 200);
    if (std::gcd(a, c) != 1) continue;
    const IntMatrix m = lift_row_to_sl3(a, c);
    CHECK(determinant(m) == 1);
    CHECK(in_gamma(m, 2));
    CHECK(m(0, 0) == a);
    CHECK(m(1, 0) == c);
    ++done;
  }
}

TEST_CASE("Gamma_2 is closed under products and inverses") {
  Rng rng(9);
  auto sample = [&](std::size_t n) {
    IntMatrix g = IntMatrix::identity(n);
    for (int s = 0; s < 6; ++s) {
      const std::size_t i = rng.below(n);
      std::size_t j;
      do j = rng.below(n); while (j == i);
      g = g * elementary(n, i, j, 2 * rng.nonzero(2));
    }
    return random_unimodular_sample(n, n + 2, 2, rng).conjugate(g);
  };
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + rng.below(4);
    const IntMatrix a = sample(n), b = sample(n);
    REQUIRE(in_gamma(a, 2));
    CHECK(in_gamma(a * b, 2));
    CHECK(in_gamma(inverse_unimodular(a), 2));
  }
}

TEST_CASE("lift_mod2 on random invertible matrices") {
  Rng rng(10);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(8);
    Gf2Matrix mbar(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mbar.set(i, j, rng.coin());
    } while (!gf2_invertible(mbar));
    const IntMatrix m = lift_mod2(mbar);
    CHECK(reduce_mod2(m) == mbar);
    CHECK(determinant(m) == 1);
  }
}
