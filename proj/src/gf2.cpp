#include "autz/gf2.hpp"

namespace autz {

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_mask(std::size_t n, std::uint64_t mask) {
  if (n * n > 64) throw precondition_error("mask too short for this size");
  Gf2Matrix m(n, n);
  for (std::size_t k = 0; k < n * n; ++k) m.bits_[k] = (mask >> k) & 1u;
  return m;
}

void Gf2Matrix::add_row(std::size_t dst, std::size_t src) {
  for (std::size_t j = 0; j < cols_; ++j) bits_[dst * cols_ + j] ^= bits_[src * cols_ + j];
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols_ != b.rows_) throw precondition_error("dimension mismatch in GF(2) product");
  Gf2Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a.get(i, k))
        for (std::size_t j = 0; j < b.cols_; ++j) c.bits_[i * c.cols_ + j] ^= b.bits_[k * b.cols_ + j];
  return c;
}

Gf2Matrix reduce_mod2(const IntMatrix& m) {
  Gf2Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.set(i, j, mpz_odd_p(m(i, j).get_mpz_t()) != 0);
  return r;
}

std::size_t gf2_rank(Gf2Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && !m.get(piv, c)) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank) {
      m.add_row(rank, piv);
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != rank && m.get(i, c)) m.add_row(i, rank);
    ++rank;
  }
  return rank;
}

bool gf2_invertible(const Gf2Matrix& m) { return m.rows() == m.cols() && gf2_rank(m) == m.rows(); }

std::size_t rank_mod2(const IntMatrix& m) { return gf2_rank(reduce_mod2(m)); }

}  // namespace autz
