#pragma once

#include <functional>
#include <vector>

#include "autz/int_matrix.hpp"
#include "autz/random.hpp"

namespace autz::testing {

// Calls f on every integer vector of length n with entries in [-bound, bound].
inline void for_each_small_vector(std::size_t n, long bound, const std::function<void(const Vector&)>& f) {
  Vector v(n, Integer(-bound));
  for (;;) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == bound) v[i++] = -bound;
    if (i == n) return;
    v[i] += 1;
  }
}

// Laplace expansion along the first row; independent of the Bareiss code.
inline Integer cofactor_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const Integer term = m(0, j) * cofactor_determinant(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline IntMatrix random_small_matrix(std::size_t rows, std::size_t cols, long bound, Rng& rng) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace autz::testing
