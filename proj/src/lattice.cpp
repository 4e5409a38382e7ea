#include "autz/lattice.hpp"

#include <cstdlib>

namespace autz {

namespace {

struct Reducer {
  IntMatrix& a;
  IntMatrix* v;
  IntMatrix* vinv;

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    a.swap_columns(x, y);
    if (v) {
      v->swap_columns(x, y);
      for (std::size_t j = 0; j < vinv->cols(); ++j) swap((*vinv)(x, j), (*vinv)(y, j));
    }
  }
  void negate_col(std::size_t x) {
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, x) = -a(i, x);
    if (v) {
      for (std::size_t i = 0; i < v->rows(); ++i) (*v)(i, x) = -(*v)(i, x);
      for (std::size_t j = 0; j < vinv->cols(); ++j) (*vinv)(x, j) = -(*vinv)(x, j);
    }
  }
  // col(dst) -= q col(src); the inverse picks up row(src) += q row(dst).
  void sub_multiple(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    const Integer neg = -q;
    a.add_column_multiple(dst, src, neg);
    if (v) {
      v->add_column_multiple(dst, src, neg);
      for (std::size_t j = 0; j < vinv->cols(); ++j) (*vinv)(src, j) += q * (*vinv)(dst, j);
    }
  }
};

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& input, bool track_transform) {
  ColumnEchelon out;
  out.form = input;
  const std::size_t nr = input.rows(), nc = input.cols();
  if (track_transform) {
    out.transform = IntMatrix::identity(nc);
    out.transform_inverse = IntMatrix::identity(nc);
  }
  Reducer red{out.form, track_transform ? &out.transform : nullptr,
              track_transform ? &out.transform_inverse : nullptr};
  IntMatrix& a = out.form;

  std::size_t piv = 0;
  for (std::size_t r = 0; r < nr && piv < nc; ++r) {
    for (;;) {
      std::size_t best = nc;
      for (std::size_t j = piv; j < nc; ++j) {
        if (a(r, j) == 0) continue;
        if (best == nc || abs(a(r, j)) < abs(a(r, best))) best = j;
      }
      if (best == nc) break;
      red.swap_cols(piv, best);
      bool residue_left = false;
      for (std::size_t j = piv + 1; j < nc; ++j) {
        if (a(r, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(r, j).get_mpz_t(), a(r, piv).get_mpz_t());
        red.sub_multiple(j, piv, q);
        if (a(r, j) != 0) residue_left = true;
      }
      if (!residue_left) {
        if (a(r, piv) < 0) red.negate_col(piv);
        out.pivot_rows.push_back(r);
        ++piv;
        break;
      }
    }
  }
  out.rank = piv;

  // Reduce entries left of each pivot into [0, pivot).
  for (std::size_t t = 0; t < out.rank; ++t) {
    const std::size_t r = out.pivot_rows[t];
    for (std::size_t s = 0; s < t; ++s) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(r, s).get_mpz_t(), a(r, t).get_mpz_t());
      red.sub_multiple(s, t, q);
    }
  }
  return out;
}

Lattice::Lattice(std::size_t ambient_rank) : basis_(ambient_rank, 0) {}

Lattice Lattice::span(const IntMatrix& generators) {
  ColumnEchelon e = column_echelon(generators, false);
  return Lattice(e.form.block(0, 0, generators.rows(), e.rank));
}

Lattice Lattice::full(std::size_t n) { return Lattice(IntMatrix::identity(n)); }

bool Lattice::contains(const Vector& v) const {
  if (v.size() != ambient_rank()) throw precondition_error("dimension mismatch");
  IntMatrix g(ambient_rank(), rank() + 1);
  for (std::size_t i = 0; i < ambient_rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) g(i, j) = basis_(i, j);
    g(i, rank()) = v[i];
  }
  return span(g) == *this;
}

bool Lattice::is_saturated() const { return saturation(*this) == *this; }

Lattice hnf(const IntMatrix& cols) { return Lattice::span(cols); }

Lattice kernel_lattice(const IntMatrix& m) {
  ColumnEchelon e = column_echelon(m, true);
  const std::size_t nc = m.cols();
  return hnf(e.transform.block(0, e.rank, nc, nc - e.rank));
}

Lattice saturation(const Lattice& l) {
  // Vectors orthogonal to L, then everything orthogonal to those.
  const Lattice annihilator = kernel_lattice(l.basis().transpose());
  return kernel_lattice(annihilator.basis().transpose());
}

Integer summand_index(const Lattice& l1, const Lattice& l2) {
  const std::size_t n = l1.ambient_rank();
  if (l2.ambient_rank() != n) throw precondition_error("lattices live in different ambient ranks");
  if (l1.rank() + l2.rank() != n) throw precondition_error("ranks do not add up to the ambient rank");
  IntMatrix joined(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < l1.rank(); ++j) joined(i, j) = l1.basis()(i, j);
    for (std::size_t j = 0; j < l2.rank(); ++j) joined(i, l1.rank() + j) = l2.basis()(i, j);
  }
  Integer d = abs(determinant(joined));
  if (d == 0) throw precondition_error("lattices intersect nontrivially");
  return d;
}

Lattice image(const IntMatrix& m, const Lattice& l) { return hnf(m * l.basis()); }

IntMatrix complete_to_basis(const IntMatrix& f) {
  const std::size_t r = f.cols();
  // f^T V = [H | 0]  =>  V^T f = [H^T ; 0]  =>  f = (V^-1)^T [H^T ; 0].
  ColumnEchelon e = column_echelon(f.transpose(), true);
  if (e.rank != r) throw precondition_error("columns are linearly dependent");
  Integer pivots = 1;
  for (std::size_t t = 0; t < r; ++t) pivots *= e.form(t, t);
  if (pivots != 1) throw precondition_error("columns do not span a direct summand");
  IntMatrix u = e.transform_inverse.transpose();
  for (std::size_t j = 0; j < r; ++j) u.set_column(j, f.column(j));
  return u;
}

}  // namespace autz
