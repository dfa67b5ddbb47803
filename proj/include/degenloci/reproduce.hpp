#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degenloci/instance.hpp"

namespace degenloci {

struct CheckResult {
  int id = 0;
  std::string name;
  std::string group;
  bool passed = false;
  // Number of individual equalities asserted.
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> lines;
  double seconds = 0;
};

struct ReproduceOptions {
  std::uint64_t seed = 1;
  std::uint64_t prime = 32003;
  // Round-trip pairs per triple.
  std::size_t pairs = 500;
  // Tangent-built points for the case c check.
  std::size_t tangent_points = 24;
  // Randomized checks in the property suite.
  std::uint64_t property_checks = 12000;
  // Criterion ids, names or groups; empty runs everything.
  std::vector<std::string> only;
  // 0 picks the hardware concurrency.
  unsigned workers = 0;
};

struct CriterionInfo {
  int id;
  const char* name;
  const char* group;
};

const std::vector<CriterionInfo>& criteria();

// Ids selected by the filter; throws std::invalid_argument on unknown tokens.
std::vector<int> select_criteria(const std::vector<std::string>& only);

CheckResult run_criterion(int id, const ReproduceOptions& options);

// Results in id order, independent of scheduling.
std::vector<CheckResult> run_reproduction(const ReproduceOptions& options);

struct RoundTripReport {
  TripleParams params;
  std::uint64_t seed = 0;
  std::size_t pairs_requested = 0;
  std::size_t pairs_tested = 0;
  std::size_t degenerate_pairs = 0;
  // Indexed by ZCase.
  std::vector<std::size_t> cases = std::vector<std::size_t>(5, 0);
  std::size_t recovered = 0;
  std::string sampler;
};

// Samples the fewest points of S giving at least `pairs` unordered pairs and
// runs build_point -> classify -> recover_pair on the first `pairs` of them.
RoundTripReport run_roundtrip(const TripleParams& t, std::size_t pairs, std::uint64_t seed,
                              std::uint64_t budget = 0);

struct TangentReport {
  std::size_t built = 0;
  std::size_t case_c = 0;
  std::size_t witness_ok = 0;
  std::size_t skipped = 0;
};

// Builds z-points from random tangent directions at sampled points of S.
TangentReport run_tangent_points(const TripleParams& t, std::size_t count, std::uint64_t seed);

}  // namespace degenloci
