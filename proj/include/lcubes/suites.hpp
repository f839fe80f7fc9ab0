#pragma once

// Seeded property suites. Trial t of a run with seed s draws its inputs from
// SplitMix64(derive_seed(s, t)), so any failure can be replayed alone.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lcubes/words.hpp"

namespace lcubes {

struct SuiteFailure {
  std::size_t trial;
  std::uint64_t seed;
  std::string digest;  // FNV-1a of the trial's input JSON
  std::string message;
};

struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::vector<SuiteFailure> failures;
  double elapsed_ms = 0;
  /// Named tallies (e.g. inconclusive oracle searches, decomposable inputs).
  std::map<std::string, std::size_t> counters;

  bool passed() const { return failures.empty(); }
};

/// roundtrip, interchange, genpos, equivariance, oracle, contraction,
/// multifactor, bruteforce, algebra.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown suite name.
SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed, const AxisBlocks& blocks);

nlohmann::json encode_report(const SuiteReport& report);

std::string fnv1a_hex(std::string_view bytes);

}  // namespace lcubes
