#include "autz/involution.hpp"

#include <optional>
#include <stdexcept>

#include "autz/gf2.hpp"

namespace autz {

std::string InvolutionKind::name() const {
  switch (tag) {
    case InvolutionKindTag::gamma_involution: return "gamma_involution";
    case InvolutionKindTag::extremal: return "extremal";
    case InvolutionKindTag::one_permutation: return "one_permutation";
    case InvolutionKindTag::nondiagonalizable_other: return "nondiagonalizable_other";
    case InvolutionKindTag::diagonalizable_other: return "diagonalizable_other";
    case InvolutionKindTag::central: return "central";
  }
  return "unknown";
}

BlockLayout layout_of(const InvolutionProfile& profile) {
  return {0, profile.fixed, profile.fixed + profile.negated, profile.swaps};
}

IntMatrix canonical_block(const InvolutionProfile& profile) {
  const std::size_t n = profile.dimension();
  IntMatrix m(n, n);
  const BlockLayout layout = layout_of(profile);
  for (std::size_t i = 0; i < profile.fixed; ++i) m(i, i) = 1;
  for (std::size_t i = layout.negated_begin; i < layout.swaps_begin; ++i) m(i, i) = -1;
  for (std::size_t k = 0; k < profile.swaps; ++k) {
    auto [b, c] = layout.swap_pair(k);
    m(b, c) = 1;
    m(c, b) = 1;
  }
  return m;
}

void require_involution(const IntMatrix& p) {
  if (!is_involution(p)) throw not_involution_error();
}

EigenLattices eigen_lattices(const IntMatrix& p) {
  require_involution(p);
  const IntMatrix id = IntMatrix::identity(p.rows());
  return {kernel_lattice(p - id), kernel_lattice(p + id)};
}

std::size_t residue(const IntMatrix& p) {
  require_involution(p);
  return rank_mod2(p - IntMatrix::identity(p.rows()));
}

namespace {

InvolutionProfile profile_from(std::size_t rank_plus, std::size_t rank_minus, std::size_t swaps) {
  if (rank_plus < swaps || rank_minus < swaps)
    throw std::logic_error("eigen-lattice ranks inconsistent with residue");
  return {rank_plus - swaps, rank_minus - swaps, swaps};
}

// Integer basis changes that act on the off-diagonal block X of
//   U^-1 P U = [[I_r, X], [0, -I_s]]
// while keeping the columns of U in step.
struct OffDiagonalReducer {
  IntMatrix& u;
  IntMatrix& x;
  std::size_t r;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t l = 0; l < x.cols(); ++l) swap(x(i, l), x(j, l));
    u.swap_columns(i, j);
  }
  // row_i(X) += row_j(X)  <=>  f_j -= f_i
  void add_row(std::size_t i, std::size_t j) {
    for (std::size_t l = 0; l < x.cols(); ++l) x(i, l) += x(j, l);
    u.add_column_multiple(j, i, -1);
  }
  void swap_cols(std::size_t k, std::size_t l) {
    if (k == l) return;
    x.swap_columns(k, l);
    u.swap_columns(r + k, r + l);
  }
  // col_l(X) += col_k(X)  <=>  g_l += g_k
  void add_col(std::size_t l, std::size_t k) {
    x.add_column_multiple(l, k, 1);
    u.add_column_multiple(r + l, r + k, 1);
  }
  // X -> X + 2Z with entries of X landing in {0, 1}  <=>  g_l += sum_k Z_kl f_k
  void reduce_mod2() {
    for (std::size_t k = 0; k < x.rows(); ++k)
      for (std::size_t l = 0; l < x.cols(); ++l) {
        Integer z;
        mpz_fdiv_q_2exp(z.get_mpz_t(), x(k, l).get_mpz_t(), 1);
        if (z == 0) continue;
        x(k, l) -= 2 * z;
        u.add_column_multiple(r + l, k, -z);
      }
  }
};

bool odd(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

}  // namespace

// Involutions that permute the standard basis up to the sign of fixed
// vectors: each e_i goes to e_i, -e_i, or some e_j with e_j going back to e_i.
// The canonical basis is then a reordering of the standard one.
std::optional<IntMatrix> coordinate_canonical_basis(const IntMatrix& p) {
  const std::size_t n = p.rows();
  std::vector<std::size_t> fixed, negated, swaps;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t nonzero = 0, at = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (p(i, j) != 0) {
        ++nonzero;
        at = i;
      }
    if (nonzero != 1) return std::nullopt;
    if (at == j) {
      if (p(j, j) == 1) fixed.push_back(j);
      else if (p(j, j) == -1) negated.push_back(j);
      else return std::nullopt;
    } else if (p(at, j) != 1) {
      return std::nullopt;
    } else if (j < at) {
      swaps.push_back(j);
      swaps.push_back(at);
    }
  }
  IntMatrix u(n, n);
  std::size_t col = 0;
  for (const auto* group : {&fixed, &negated, &swaps})
    for (std::size_t j : *group) u(j, col++) = 1;
  return u;
}

InvolutionProfile involution_profile(const IntMatrix& p) {
  const EigenLattices e = eigen_lattices(p);
  return profile_from(e.plus.rank(), e.minus.rank(), residue(p));
}

CanonicalBasis canonical_form(const IntMatrix& p) {
  const EigenLattices eig = eigen_lattices(p);
  const std::size_t n = p.rows();
  const std::size_t r = eig.plus.rank();
  const std::size_t s = n - r;
  const InvolutionProfile profile = profile_from(r, eig.minus.rank(), residue(p));
  const IntMatrix block = canonical_block(profile);
  const BlockLayout layout = layout_of(profile);
  if (auto u = coordinate_canonical_basis(p); u && inverse_unimodular(*u) * p * *u == block)
    return {*u, profile, layout};

  // First r columns span A+; P acts as -1 on Z^n / A+, so in this basis
  // P = [[I_r, X], [0, -I_s]].
  IntMatrix u = complete_to_basis(eig.plus.basis());
  const IntMatrix c = inverse_unimodular(u) * p * u;
  IntMatrix x = c.block(0, r, r, s);

  // Bring X mod 2 to [[I, 0], [0, 0]] by basis changes inside A+ and inside
  // the complement, then shift the complement by A+ to make X exact.
  OffDiagonalReducer red{u, x, r};
  std::size_t t = 0;
  for (; t < std::min(r, s); ++t) {
    std::size_t pi = r, pk = s;
    for (std::size_t i = t; i < r && pi == r; ++i)
      for (std::size_t k = t; k < s; ++k)
        if (odd(x(i, k))) {
          pi = i;
          pk = k;
          break;
        }
    if (pi == r) break;
    red.swap_rows(t, pi);
    red.swap_cols(t, pk);
    for (std::size_t i = 0; i < r; ++i)
      if (i != t && odd(x(i, t))) red.add_row(i, t);
    for (std::size_t l = 0; l < s; ++l)
      if (l != t && odd(x(t, l))) red.add_col(l, t);
  }
  red.reduce_mod2();
  if (t != profile.swaps) throw std::logic_error("residue disagrees with off-diagonal rank");

  // f_k = u col k (k < r), g_l = u col r+l. Pairs are (g_i, f_i - g_i).
  IntMatrix basis(n, n);
  std::size_t col = 0;
  for (std::size_t k = t; k < r; ++k) basis.set_column(col++, u.column(k));
  for (std::size_t l = t; l < s; ++l) basis.set_column(col++, u.column(r + l));
  for (std::size_t i = 0; i < t; ++i) {
    Vector g = u.column(r + i);
    Vector f = u.column(i);
    for (std::size_t q = 0; q < n; ++q) f[q] -= g[q];
    basis.set_column(col++, g);
    basis.set_column(col++, f);
  }

  if (inverse_unimodular(basis) * p * basis != block)
    throw std::logic_error("canonical basis failed its postcondition");
  return {basis, profile, layout};
}

InvolutionKind classify(const IntMatrix& p) {
  const InvolutionProfile pr = involution_profile(p);
  const std::size_t n = p.rows();
  if (pr.fixed == n || pr.negated == n) return {InvolutionKindTag::central, 0};
  if (pr.diagonalizable()) {
    if (pr.rank_minus() < pr.rank_plus()) return InvolutionKind::gamma_involution(pr.rank_minus());
    return {InvolutionKindTag::diagonalizable_other, 0};
  }
  if (pr.swaps == 1 && (pr.rank_plus() == 1 || pr.rank_minus() == 1))
    return {InvolutionKindTag::one_permutation, 0};
  return {InvolutionKindTag::nondiagonalizable_other, 0};
}

bool involutions_conjugate(const IntMatrix& p, const IntMatrix& q) {
  require_involution(p);
  require_involution(q);
  if (p.rows() != q.rows()) return false;
  return involution_profile(p) == involution_profile(q);
}

IntMatrix order3_witness(const IntMatrix& p) {
  const CanonicalBasis cf = canonical_form(p);
  if (cf.profile.diagonalizable())
    throw precondition_error("diagonalizable involution: no order-3 witness exists");
  // The swap [[0,1],[1,0]] times [[1,-1],[0,-1]] is [[0,-1],[1,-1]], of order 3.
  IntMatrix block = canonical_block(cf.profile);
  auto [b, c] = cf.layout.swap_pair(0);
  block(b, b) = 1;
  block(b, c) = -1;
  block(c, b) = 0;
  block(c, c) = -1;
  return cf.basis * block * inverse_unimodular(cf.basis);
}

IntMatrix four_involution_witness(const IntMatrix& p) {
  const CanonicalBasis cf = canonical_form(p);
  const InvolutionProfile& pr = cf.profile;
  if (pr.diagonalizable()) throw precondition_error("diagonalizable involution: no 4-involution witness");
  if (classify(p).tag == InvolutionKindTag::one_permutation)
    throw precondition_error("is a 1-permutation: no witness exists");
  if (p.rows() < 9) throw precondition_error("rank too small for a 4-involution");

  std::vector<std::size_t> chosen;
  if (pr.swaps >= 2) {
    auto [b1, b2] = cf.layout.swap_pair(0);
    auto [b3, b4] = cf.layout.swap_pair(1);
    chosen = {b1, b2, b3, b4};
  } else {
    auto [b1, b2] = cf.layout.swap_pair(0);
    chosen = {b1, b2, cf.layout.fixed_begin, cf.layout.negated_begin};
  }
  // P' b_i = -P b_i on the chosen vectors, P' = P elsewhere.
  IntMatrix block = canonical_block(pr);
  for (std::size_t col : chosen)
    for (std::size_t i = 0; i < block.rows(); ++i) block(i, col) = -block(i, col);
  return cf.basis * block * inverse_unimodular(cf.basis);
}

std::vector<IntMatrix> standard_commuting_family(std::size_t n) {
  if (n < 3) throw precondition_error("extremal involutions need rank at least 3");
  std::vector<IntMatrix> family;
  family.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix d = IntMatrix::identity(n);
    d(i, i) = -1;
    family.push_back(std::move(d));
  }
  return family;
}

}  // namespace autz
