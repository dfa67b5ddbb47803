#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degenloci/instance.hpp"

namespace degenloci {

// (n+m-k)(s+1-k), the codimension of the matrices of rank <= k.
long long codim_rank_stratum(int n, int s, int m, int k);

// (1/s) binom(2s-m-2, s-1) binom(2s-m-3, s-1); requires s >= m+3.
BigInt special_count_c(int m, int s);

// binom(m+4, 2).
BigInt white_blowup_count(int m);

// (-1)^(s-m-1) special_count_c(m, s); requires m+3 <= s <= 2m+3.
BigInt conjecture_delta(int m, int s);

// The i-th element of F_{p^k} in base-p digit order (c_0 fastest).
Scalar field_element(const Field& f, std::uint64_t index);

// The i-th point of P^{d-1}(F) in affine-chart order: charts by position of
// the leading 1, free coordinates in field_element order, first one fastest.
Vec projective_point(const Field& f, int d, BigInt index);

BigInt projective_point_count(const Field& f, int d);

struct StratumReport {
  int n = 0, s = 0, m = 0;
  std::uint64_t p = 0;
  int ext = 1;
  std::string mode;
  // counts[r] = #{[z] : rank A_z = r}, r = 0..s+1.
  std::vector<std::uint64_t> counts;
  std::uint64_t examined = 0;
  // #{[z] : rank A_z <= s-1}.
  std::uint64_t rank_deficient = 0;
  std::vector<ProjPoint> deficient_points;
};

struct CensusOptions {
  enum class Mode { kExhaustive, kSampled };
  Mode mode = Mode::kExhaustive;
  // Maximum number of rank computations.
  std::uint64_t budget = 1000000000;
  // Draws in sampled mode.
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  // 0 picks the hardware concurrency.
  unsigned workers = 0;
  // Keep at most this many rank-deficient points in the report.
  std::size_t keep_points = 64;
};

// Ranks of A_z over F_{p^ext} for the instance (defined over F_p).
// Throws BudgetExhausted when exhaustive enumeration would exceed the budget.
StratumReport empirical_stratum_census(const LinearFormMatrix& m, int ext, const CensusOptions& options = {});

// Counts indexed by extension degree k = 1, 2, ...: the common value when
// the last two agree (a heuristic, not a proof of stabilization).
std::optional<std::uint64_t> stabilized_value(const std::vector<std::uint64_t>& by_degree);

}  // namespace degenloci
