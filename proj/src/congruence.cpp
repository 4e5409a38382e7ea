#include "autz/congruence.hpp"

#include <algorithm>
#include <stdexcept>

#include "autz/lattice.hpp"
#include "autz/transvection.hpp"

namespace autz {

bool in_gamma(const IntMatrix& m, const Integer& level) {
  if (level < 2) throw precondition_error("congruence level must be at least 2");
  if (!is_automorphism(m)) throw precondition_error("not an automorphism");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer diff = m(i, j) - (i == j ? 1 : 0);
      if (!mpz_divisible_p(diff.get_mpz_t(), level.get_mpz_t())) return false;
    }
  return true;
}

IntMatrix Factorization::product() const {
  IntMatrix p = IntMatrix::identity(n);
  for (const auto& f : factors) p = p * f.matrix(n);
  return p;
}

Factorization elementary_factorization(const IntMatrix& m) {
  if (!m.square() || m.rows() < 2) throw precondition_error("factorization needs a square matrix, n >= 2");
  if (determinant(m) != 1) throw precondition_error("determinant is not 1");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  std::vector<ElementaryFactor> ops;  // applied on the left, in order
  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < n; ++k) a(dst, k) += q * a(src, k);
    ops.push_back({dst, src, q});
  };

  for (std::size_t j = 0; j < n; ++j) {
    std::size_t s = n;
    for (;;) {
      s = n;
      for (std::size_t r = j; r < n; ++r)
        if (a(r, j) != 0 && (s == n || abs(a(r, j)) < abs(a(s, j)))) s = r;
      bool others = false;
      for (std::size_t r = j; r < n; ++r) {
        if (r == s || a(r, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(r, j).get_mpz_t(), a(s, j).get_mpz_t());
        row_add(r, s, -q);
        if (a(r, j) != 0) others = true;
      }
      if (!others) break;
    }
    if (s != j) {
      row_add(j, s, 1);
      row_add(s, j, -a(s, j) * a(j, j));
    }
    for (std::size_t r = 0; r < j; ++r) row_add(r, j, -a(r, j) * a(j, j));
  }

  Factorization f{n, {}};
  for (const auto& op : ops) f.factors.push_back({op.i, op.j, -op.c});

  // a is now diagonal with an even number of -1 entries. Each pair (i, k) is
  // the square of the quarter turn E_ki(1) E_ik(-1) E_ki(1) in that plane.
  std::vector<std::size_t> negatives;
  for (std::size_t i = 0; i < n; ++i)
    if (a(i, i) == -1) negatives.push_back(i);
  // M = (inverse ops) * D, so the D factors go last.
  for (std::size_t t = 0; t + 1 < negatives.size(); t += 2) {
    const std::size_t i = negatives[t], k = negatives[t + 1];
    for (int rep = 0; rep < 2; ++rep) {
      f.factors.push_back({k, i, 1});
      f.factors.push_back({i, k, -1});
      f.factors.push_back({k, i, 1});
    }
  }
  if (f.product() != m) throw std::logic_error("factorization does not reconstruct its input");
  return f;
}

std::vector<Mod2Class> factor_mod2_classes(const Factorization& f) {
  std::vector<Mod2Class> out;
  out.reserve(f.factors.size());
  for (const auto& e : f.factors) {
    if (mpz_even_p(e.c.get_mpz_t())) {
      out.push_back({true, ElementaryFactor{e.i, e.j, e.c / 2}});
    } else {
      out.push_back({false, std::nullopt});
    }
  }
  return out;
}

Gf2Matrix mod2_image(const Factorization& f) {
  Gf2Matrix p = Gf2Matrix::identity(f.n);
  for (const auto& e : f.factors) p = p * reduce_mod2(e.matrix(f.n));
  return p;
}

std::vector<IntMatrix> unipotent_sqrt_sl2(const IntMatrix& t) {
  if (t.rows() != 2 || t.cols() != 2) throw precondition_error("expected a 2x2 matrix");
  if (determinant(t) != 1 || t(0, 0) + t(1, 1) != 2) throw precondition_error("T is not unipotent");
  const IntMatrix id = IntMatrix::identity(2);
  std::vector<IntMatrix> roots;
  // Cayley-Hamilton: X^2 = tr(X) X - I, so tr(X) X = T + I and tr(X)^2 = 4.
  if (t == id) {
    roots = {id, -id};
  } else {
    const IntMatrix twice_n = t - id;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (mpz_odd_p(twice_n(i, j).get_mpz_t())) return {};
    IntMatrix x = id;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) x(i, j) += twice_n(i, j) / 2;
    roots = {x, -x};
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<IntMatrix> braid_involution_solutions() {
  const IntMatrix s{{0, 1}, {1, 0}};
  // R = [[a, b], [c, -a]]; S R S = R S R reads
  //   -a = a(b + c),  c = b^2 - a^2,  b = c^2 - a^2.
  std::vector<IntMatrix> candidates;
  // a = 0: c = b^2 and b = c^2 give b = b^4, so b is 0 or 1.
  for (long b : {0L, 1L}) candidates.push_back(IntMatrix{{0, b}, {b * b, 0}});
  // b + c + 1 = 0 with det R = -1 gives a^2 = b^2 + b + 1. For b >= 1 this
  // lies strictly between b^2 and (b+1)^2, for b <= -2 strictly between
  // (b+1)^2 and b^2, so only b in {0, -1} leaves a perfect square.
  for (long b : {0L, -1L}) {
    const long c = -b - 1;
    const Integer q = b * b + b + 1;
    if (!mpz_perfect_square_p(q.get_mpz_t())) continue;
    const long a = Integer(sqrt(q)).get_si();
    for (long e : {a, -a}) candidates.push_back(IntMatrix{{e, b}, {c, -e}});
  }

  std::vector<IntMatrix> out;
  for (const auto& r : candidates) {
    if (determinant(r) != -1 || r == s) continue;
    if (s * r * s != r * s * r) continue;
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool has_eigenvalue_minus_one(const IntMatrix& m) {
  return determinant(m + IntMatrix::identity(m.rows())) == 0;
}

CommutatorReport claim1_commutator_identities() {
  CommutatorReport rep;
  rep.cycle = IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const IntMatrix cycle_inv = inverse_unimodular(rep.cycle);
  const IntMatrix sigma1{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  const IntMatrix sigma3{{-1, -1, 0}, {0, -1, 0}, {0, 0, 1}};
  rep.sigmas = {sigma1, -sigma1, sigma3, -sigma3};

  const IntMatrix target = elementary(3, 0, 1, 2);
  for (std::size_t k = 0; k < 4; ++k) {
    const IntMatrix& sigma = rep.sigmas[k];
    if (sigma * sigma != target) throw std::logic_error("sigma is not a square root of I + 2E_12");
    const IntMatrix shifted = rep.cycle * sigma * cycle_inv;
    rep.commutators[k] = commutator(sigma, shifted);
    rep.sigma_has_eigenvalue_minus_one[k] = has_eigenvalue_minus_one(sigma);
    rep.commutator_has_eigenvalue_minus_one[k] = has_eigenvalue_minus_one(rep.commutators[k]);
    const auto ts = recognize_transvection(sigma);
    const auto tc = recognize_transvection(rep.commutators[k]);
    rep.conjugate_to_commutator[k] = ts && tc && ts->m == tc->m;
  }
  rep.steinberg = commutator(elementary(3, 0, 1, 1), elementary(3, 1, 2, 1));

  const IntMatrix first{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}};
  const IntMatrix second{{1, 2, -3}, {0, 1, -2}, {0, 0, 1}};
  const bool ok = rep.commutators[0] == first && rep.commutators[1] == first &&
                  rep.commutators[2] == second && rep.commutators[3] == second &&
                  !rep.sigma_has_eigenvalue_minus_one[0] && rep.sigma_has_eigenvalue_minus_one[1] &&
                  rep.sigma_has_eigenvalue_minus_one[2] && rep.sigma_has_eigenvalue_minus_one[3] &&
                  std::none_of(rep.commutator_has_eigenvalue_minus_one.begin(),
                               rep.commutator_has_eigenvalue_minus_one.end(), [](bool b) { return b; }) &&
                  rep.conjugate_to_commutator[0] && !rep.conjugate_to_commutator[1] &&
                  !rep.conjugate_to_commutator[2] && !rep.conjugate_to_commutator[3] &&
                  rep.steinberg == elementary(3, 0, 2, 1);
  if (!ok) throw std::logic_error("commutator identities failed");
  return rep;
}

IntMatrix lift_row_to_sl3(const Integer& a, const Integer& c) {
  if (mpz_even_p(a.get_mpz_t()) || mpz_odd_p(c.get_mpz_t()))
    throw precondition_error("need a odd and c even");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  if (g != 1) throw precondition_error("gcd(a, c) != 1");

  // a d - b c = 1  <=>  b c = -1 (mod a); b even fixes it mod 2|a|.
  const Integer abs_a = abs(a);
  Integer b = 0;
  if (abs_a != 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), abs_a.get_mpz_t());
    mpz_fdiv_r(b.get_mpz_t(), Integer(-inv).get_mpz_t(), abs_a.get_mpz_t());
    if (mpz_odd_p(b.get_mpz_t())) b += abs_a;
  }
  Integer d = 1 + b * c;
  mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), a.get_mpz_t());

  IntMatrix m = IntMatrix::identity(3);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

IntMatrix lift_mod2(const Gf2Matrix& mbar) {
  if (!gf2_invertible(mbar)) throw precondition_error("matrix is singular over GF(2)");
  const std::size_t n = mbar.rows();
  Gf2Matrix g = mbar;
  // Row operations row(dst) += row(src) reducing mbar to I. Over GF(2) each is
  // its own inverse, so mbar is their product in the order applied.
  std::vector<std::pair<std::size_t, std::size_t>> ops;
  auto add = [&](std::size_t dst, std::size_t src) {
    g.add_row(dst, src);
    ops.emplace_back(dst, src);
  };
  for (std::size_t j = 0; j < n; ++j) {
    if (!g.get(j, j)) {
      std::size_t k = j + 1;
      while (!g.get(k, j)) ++k;
      add(j, k);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (i != j && g.get(i, j)) add(i, j);
  }
  IntMatrix m = IntMatrix::identity(n);
  for (auto [dst, src] : ops) m = m * elementary(n, dst, src, 1);
  return m;
}

IntMatrix gamma2_line_witness(const IntMatrix& sigma, const Vector& e) {
  const std::size_t n = sigma.rows();
  if (n < 3) throw precondition_error("the SL(3, Z) lift needs rank at least 3");
  if (!in_gamma(sigma, 2)) throw precondition_error("sigma is not in Gamma_2");
  if (e.size() != n || !is_primitive(e)) throw precondition_error("e must be primitive");

  IntMatrix basis = complete_to_basis(IntMatrix::from_columns(n, {e}));
  const Vector target = sigma * e;
  const Vector coords = inverse_unimodular(basis) * target;
  const Vector tail(coords.begin() + 1, coords.end());
  auto [s, g] = content_and_primitive(tail);
  if (s != 0) {
    const IntMatrix g_basis = complete_to_basis(IntMatrix::from_columns(n - 1, {g}));
    basis = basis * direct_sum(IntMatrix::identity(1), g_basis);
  }
  const IntMatrix rho = basis * embed(lift_row_to_sl3(coords[0], s), n) * inverse_unimodular(basis);
  if (rho * e != target) throw std::logic_error("line witness misses sigma e");
  return rho;
}

IntMatrix gamma2_hyperplane_witness(const IntMatrix& sigma, const Vector& f) {
  // ker(f) is moved to ker(f sigma^-1); work with the dual action sigma^-T.
  const IntMatrix dual = inverse_unimodular(sigma).transpose();
  const IntMatrix rho_dual = gamma2_line_witness(dual, f);
  return inverse_unimodular(rho_dual).transpose();
}

bool congruence_pattern_holds(const IntMatrix& sigma) {
  for (std::size_t i = 0; i < sigma.rows(); ++i)
    for (std::size_t j = 0; j < sigma.cols(); ++j)
      if (i != j && mpz_odd_p(sigma(i, j).get_mpz_t())) return false;
  return true;
}

}  // namespace autz
