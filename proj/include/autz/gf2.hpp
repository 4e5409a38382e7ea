#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "autz/int_matrix.hpp"

namespace autz {

/// Matrix over the field with two elements, one byte per entry.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols) {}

  static Gf2Matrix identity(std::size_t n);
  /// Row-major bits of `mask`, least significant bit at (0,0); n*n <= 64.
  static Gf2Matrix from_mask(std::size_t n, std::uint64_t mask);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * cols_ + j] = v ? 1 : 0; }
  void add_row(std::size_t dst, std::size_t src);

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

Gf2Matrix reduce_mod2(const IntMatrix& m);
std::size_t gf2_rank(Gf2Matrix m);
bool gf2_invertible(const Gf2Matrix& m);
/// Rank of m reduced mod 2.
std::size_t rank_mod2(const IntMatrix& m);

}  // namespace autz
