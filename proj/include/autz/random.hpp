#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "autz/int_matrix.hpp"

namespace autz {

/// Seeded generator. Bounded draws reduce raw mt19937_64 output by modulo so
/// that sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Inclusive range.
  long uniform(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }
  long nonzero(long bound) {
    long c = uniform(1, bound);
    return coin() ? c : -c;
  }
  bool coin() { return (engine_() >> 63) != 0; }

  /// Independent stream for sub-task `index` of a run seeded with `seed`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

struct UnimodularSample {
  IntMatrix forward;
  IntMatrix inverse;

  /// forward * m * inverse
  IntMatrix conjugate(const IntMatrix& m) const { return forward * m * inverse; }
};

/// Word of `word_length` letters, each an elementary matrix I + cE_ij with
/// 0 < |c| <= entry_bound or (one time in four) a signed permutation matrix.
/// The inverse word is accumulated alongside.
UnimodularSample random_unimodular_sample(std::size_t n, std::size_t word_length,
                                          unsigned entry_bound, Rng& rng);

IntMatrix random_unimodular(std::size_t n, std::size_t word_length, unsigned entry_bound,
                            std::uint64_t seed);

IntMatrix random_signed_permutation(std::size_t n, Rng& rng);

/// Random vector with entries in [-bound, bound], resampled until primitive.
Vector random_primitive_vector(std::size_t n, long bound, Rng& rng);

}  // namespace autz
