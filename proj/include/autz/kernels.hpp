#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

#include "autz/int_matrix.hpp"
#include "autz/random.hpp"

namespace autz {

/// Serial loops are the reference; parallel ones split the same index space
/// with OpenMP and must produce identical results.
enum class Execution { serial, parallel };

/// All 2x2 R with trace 0, det -1, R != [[0,1],[1,0]] and S R S = R S R,
/// entries in [-bound, bound]; sorted.
std::vector<IntMatrix> search_braid_solutions(long bound, Execution ex = Execution::parallel);

/// All X in SL(2, Z) with entries in [-bound, bound] and X^2 = T; sorted.
std::vector<IntMatrix> search_sl2_square_roots(const IntMatrix& t, long bound,
                                               Execution ex = Execution::parallel);

/// Bit masks of the diagonal sign matrices of rank n (bit i set = -1 at i)
/// that commute with every member of standard_commuting_family(n) and
/// classify as extremal; ascending.
std::vector<std::uint32_t> commuting_extremal_sign_masks(std::size_t n,
                                                         Execution ex = Execution::parallel);

struct LiftCensus {
  std::size_t group_order = 0;  // invertible matrices enumerated
  std::size_t failures = 0;     // lifts with det != 1 or wrong reduction
};

/// Enumerates GL(n, 2) by bit mask (n <= 4) and checks lift_mod2 on each.
LiftCensus exhaustive_lift_census(std::size_t n, Execution ex = Execution::parallel);

/// results[i] = body(rng_i, i) with rng_i seeded by Rng::derive(seed, i).
/// The first exception thrown by any trial is rethrown after the loop.
template <class R, class F>
std::vector<R> map_trials(std::size_t trials, std::uint64_t seed, Execution ex, F body) {
  std::vector<R> results(trials);
  std::vector<std::exception_ptr> errors(trials);
  const long count = static_cast<long>(trials);
  auto one = [&](long i) {
    try {
      Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(i)));
      results[i] = body(rng, static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) one(i);
  } else {
    for (long i = 0; i < count; ++i) one(i);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace autz
