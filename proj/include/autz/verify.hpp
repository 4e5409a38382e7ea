#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "autz/json_io.hpp"
#include "autz/kernels.hpp"

namespace autz {

enum class SuiteId {
  L1_3,
  L1_4_partial,
  L1_5,
  L1_6,
  L1_7,
  P1_8,
  P1_9,
  C2_1_claim1,
  C2_1_claim3,
  MU_SURJ,
};

std::string suite_name(SuiteId id);
std::optional<SuiteId> parse_suite_id(std::string_view name);
const std::vector<SuiteId>& all_suites();

struct RankWindow {
  std::size_t min_n;
  std::size_t max_n;
};

/// Ranks at which the suite's finite statement is meaningful.
RankWindow suite_window(SuiteId id);

struct SuiteReport {
  SuiteId suite;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string validity;  // finite-rank window and what is sampled vs exact
  json failures = json::array();  // {trial, reason, inputs}, ordered by trial
  json stats = json::object();    // tallies summed over trials
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

/// Deterministic in (id, n, trials, seed) regardless of `ex`. Throws
/// precondition_error when n is outside suite_window(id).
SuiteReport run_suite(SuiteId id, std::size_t n, std::size_t trials, std::uint64_t seed,
                      Execution ex = Execution::parallel);

/// elapsed_ms is omitted when include_timing is false, which makes the
/// output byte-identical across replays.
json to_json(const SuiteReport& report, bool include_timing = true);

}  // namespace autz
