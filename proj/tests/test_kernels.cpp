#include <doctest.h>

#include "autz/congruence.hpp"
#include "autz/kernels.hpp"

using namespace autz;

TEST_CASE("braid search: serial and parallel agree with the case analysis") {
  const auto serial = search_braid_solutions(20, Execution::serial);
  const auto parallel = search_braid_solutions(20, Execution::parallel);
  CHECK(serial == parallel);
  CHECK(serial == braid_involution_solutions());
}

TEST_CASE("square-root search: serial and parallel agree") {
  const IntMatrix t{{1, 2}, {0, 1}};
  const auto serial = search_sl2_square_roots(t, 30, Execution::serial);
  CHECK(serial == search_sl2_square_roots(t, 30, Execution::parallel));
  CHECK(serial == unipotent_sqrt_sl2(t));
  // X^2 = I in SL(2, Z) has only the two scalar solutions.
  CHECK(search_sl2_square_roots(IntMatrix::identity(2), 15, Execution::serial) ==
        unipotent_sqrt_sl2(IntMatrix::identity(2)));
}

TEST_CASE("sign-matrix census") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto serial = commuting_extremal_sign_masks(n, Execution::serial);
    CHECK(serial == commuting_extremal_sign_masks(n, Execution::parallel));
    REQUIRE(serial.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(serial[i] == (1u << i));
  }
}

TEST_CASE("lift census over GL(n, 2)") {
  const LiftCensus two = exhaustive_lift_census(2, Execution::serial);
  CHECK(two.group_order == 6);
  CHECK(two.failures == 0);
  const LiftCensus three = exhaustive_lift_census(3, Execution::parallel);
  CHECK(three.group_order == 168);
  CHECK(three.failures == 0);
  CHECK(exhaustive_lift_census(1).group_order == 1);
}

TEST_CASE("map_trials is schedule independent and rethrows") {
  auto draw = [](Rng& rng, std::size_t i) { return rng.next() ^ i; };
  const auto a = map_trials<std::uint64_t>(64, 9, Execution::serial, draw);
  const auto b = map_trials<std::uint64_t>(64, 9, Execution::parallel, draw);
  CHECK(a == b);
  CHECK(a != map_trials<std::uint64_t>(64, 10, Execution::serial, draw));
  CHECK_THROWS_AS(map_trials<int>(8, 1, Execution::parallel,
                                  [](Rng&, std::size_t i) -> int {
                                    if (i == 5) throw precondition_error("boom");
                                    return 0;
                                  }),
                  precondition_error);
}
