#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "autz/errors.hpp"

namespace autz {

using Integer = mpz_class;
using Vector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers, stored row-major.
///
/// Square instances model endomorphisms of Z^n acting on column vectors;
/// rectangular instances hold lattice bases (one generator per column) and
/// covectors (1 x n).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<Vector>& rows);
  static IntMatrix from_columns(std::size_t n, const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  void set_column(std::size_t j, const Vector& v);
  void swap_columns(std::size_t a, std::size_t b);
  /// col(dst) += factor * col(src)
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);

  /// Rows [r0, r0+nr) x columns [c0, c0+nc).
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  IntMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend Vector operator*(const IntMatrix& a, const Vector& v);

  /// Lexicographic order on (rows, cols, entries); used to sort search output.
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

Integer determinant(const IntMatrix& m);
/// Rank over the rationals.
std::size_t rational_rank(const IntMatrix& m);
bool is_automorphism(const IntMatrix& m);
/// Exact inverse; throws precondition_error unless |det| = 1.
IntMatrix inverse_unimodular(const IntMatrix& m);
IntMatrix power(const IntMatrix& m, unsigned exponent);
/// a b a^-1 b^-1 for automorphisms a, b.
IntMatrix commutator(const IntMatrix& a, const IntMatrix& b);
bool commute(const IntMatrix& a, const IntMatrix& b);
bool is_involution(const IntMatrix& m);

/// I + c E_ij (0-based indices).
IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, const Integer& c);
IntMatrix diagonal(const std::vector<long>& entries);
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
/// Embeds a k x k block in the top-left corner of I_n.
IntMatrix embed(const IntMatrix& block, std::size_t n);

/// Least k <= bound with m^k = I, or nullopt when no such k exists.
std::optional<unsigned> element_order(const IntMatrix& m, unsigned bound);

Integer content(const Vector& v);
/// v = content * primitive; the zero vector maps to (0, 0).
std::pair<Integer, Vector> content_and_primitive(const Vector& v);
bool is_primitive(const Vector& v);
Integer dot(const Vector& a, const Vector& b);
Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace autz
