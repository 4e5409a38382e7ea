#include "autz/int_matrix.hpp"

#include <algorithm>
#include <ostream>

namespace autz {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw precondition_error("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw precondition_error("ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t n, const std::vector<Vector>& cols) {
  IntMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vector IntMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector IntMatrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void IntMatrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw precondition_error("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw precondition_error("block out of range");
  IntMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw precondition_error("dimension mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw precondition_error("dimension mismatch in sum");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw precondition_error("dimension mismatch in difference");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x = -x;
  return c;
}

Vector operator*(const IntMatrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw precondition_error("dimension mismatch in matrix-vector product");
  Vector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

bool operator<(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                      b.data_.end());
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

namespace {

// Fraction-free (Bareiss) forward elimination. Returns the rank and, for a
// square full-rank input, the determinant in `det`.
std::size_t bareiss(IntMatrix a, Integer* det) {
  const std::size_t nr = a.rows(), nc = a.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a(piv, c) == 0) ++piv;
    if (piv == nr) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < nc; ++j) swap(a(piv, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  if (det) *det = (r == nr && nr == nc) ? Integer(sign * prev) : Integer(0);
  return r;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw precondition_error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Integer d;
  bareiss(m, &d);
  return d;
}

std::size_t rational_rank(const IntMatrix& m) { return bareiss(m, nullptr); }

bool is_automorphism(const IntMatrix& m) {
  if (!m.square() || m.rows() == 0) return false;
  return abs(determinant(m)) == 1;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (!is_automorphism(m)) throw precondition_error("matrix is not unimodular");
  const std::size_t n = m.rows();
  std::vector<mpq_class> a(n * 2 * n);
  auto at = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * 2 * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j);
    at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (at(piv, c) == 0) ++piv;
    if (piv != c)
      for (std::size_t j = 0; j < 2 * n; ++j) swap(at(piv, j), at(c, j));
    const mpq_class inv = 1 / at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || at(i, c) == 0) continue;
      const mpq_class f = at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = at(i, n + j).get_num();
  return inv;
}

IntMatrix power(const IntMatrix& m, unsigned exponent) {
  if (!m.square()) throw precondition_error("power of a non-square matrix");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) {
  return a * b * inverse_unimodular(a) * inverse_unimodular(b);
}

bool commute(const IntMatrix& a, const IntMatrix& b) { return a * b == b * a; }

bool is_involution(const IntMatrix& m) {
  return m.square() && m.rows() > 0 && (m * m).is_identity();
}

IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, const Integer& c) {
  if (i >= n || j >= n || i == j) throw precondition_error("elementary matrix needs distinct indices < n");
  IntMatrix e = IntMatrix::identity(n);
  e(i, j) = c;
  return e;
}

IntMatrix diagonal(const std::vector<long>& entries) {
  IntMatrix d(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) d(i, i) = entries[i];
  return d;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
  return s;
}

IntMatrix embed(const IntMatrix& block, std::size_t n) {
  if (!block.square() || block.rows() > n) throw precondition_error("block does not fit");
  return direct_sum(block, IntMatrix::identity(n - block.rows()));
}

std::optional<unsigned> element_order(const IntMatrix& m, unsigned bound) {
  if (!m.square()) throw precondition_error("order of a non-square matrix");
  IntMatrix p = m;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    if (k < bound) p = p * m;
  }
  return std::nullopt;
}

Integer content(const Vector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

std::pair<Integer, Vector> content_and_primitive(const Vector& v) {
  Integer g = content(v);
  if (g == 0) return {0, v};
  Vector p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_divexact(p[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return {g, p};
}

bool is_primitive(const Vector& v) { return content(v) == 1; }

Integer dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw precondition_error("dimension mismatch in dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector e(n);
  e.at(i) = 1;
  return e;
}

}  // namespace autz
