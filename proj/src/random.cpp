#include "autz/random.hpp"

#include <numeric>
#include <vector>

namespace autz {

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

IntMatrix random_signed_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  IntMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) p(perm[j], j) = rng.coin() ? 1 : -1;
  return p;
}

UnimodularSample random_unimodular_sample(std::size_t n, std::size_t word_length,
                                          unsigned entry_bound, Rng& rng) {
  if (n == 0 || entry_bound == 0) throw precondition_error("random_unimodular needs n, entry_bound > 0");
  UnimodularSample s{IntMatrix::identity(n), IntMatrix::identity(n)};
  for (std::size_t k = 0; k < word_length; ++k) {
    if (n == 1 || rng.below(4) == 0) {
      IntMatrix p = random_signed_permutation(n, rng);
      s.forward = s.forward * p;
      s.inverse = p.transpose() * s.inverse;
    } else {
      const std::size_t i = rng.below(n);
      std::size_t j = rng.below(n - 1);
      if (j >= i) ++j;
      const long c = rng.nonzero(static_cast<long>(entry_bound));
      s.forward = s.forward * elementary(n, i, j, c);
      s.inverse = elementary(n, i, j, -c) * s.inverse;
    }
  }
  return s;
}

IntMatrix random_unimodular(std::size_t n, std::size_t word_length, unsigned entry_bound,
                            std::uint64_t seed) {
  Rng rng(seed);
  return random_unimodular_sample(n, word_length, entry_bound, rng).forward;
}

Vector random_primitive_vector(std::size_t n, long bound, Rng& rng) {
  for (;;) {
    Vector v(n);
    for (auto& x : v) x = rng.uniform(-bound, bound);
    if (is_primitive(v)) return v;
  }
}

}  // namespace autz
