#include "degenloci/census.hpp"

#include <algorithm>
#include <thread>

#include "degenloci/kernels.hpp"
#include "degenloci/random.hpp"

namespace degenloci {

long long codim_rank_stratum(int n, int s, int m, int k) {
  if (k < 0 || k > std::min(n + m, s + 1)) throw std::invalid_argument("rank out of range");
  return static_cast<long long>(n + m - k) * (s + 1 - k);
}

BigInt special_count_c(int m, int s) {
  if (m < 0 || s < m + 3) throw std::invalid_argument("special_count_c needs s >= m+3");
  BigInt num = binomial(2 * s - m - 2, s - 1) * binomial(2 * s - m - 3, s - 1);
  if (num % s != 0) throw std::domain_error("special_count_c: non-integral value");
  return num / s;
}

BigInt white_blowup_count(int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  return binomial(m + 4, 2);
}

BigInt conjecture_delta(int m, int s) {
  if (s < m + 3 || s > 2 * m + 3) throw std::invalid_argument("conjecture_delta needs m+3 <= s <= 2m+3");
  BigInt c = special_count_c(m, s);
  return (s - m - 1) % 2 ? BigInt(-c) : c;
}

Scalar field_element(const Field& f, std::uint64_t index) {
  std::vector<std::uint64_t> digits(f.degree(), 0);
  for (int i = 0; i < f.degree(); ++i) {
    digits[i] = index % f.characteristic();
    index /= f.characteristic();
  }
  return Scalar::from_coordinates(f, digits);
}

BigInt projective_point_count(const Field& f, int d) {
  const BigInt q = f.order();
  BigInt total = 0, power = 1;
  for (int i = 0; i < d; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

namespace {

// Position of the leading 1 and the free-coordinate digits of a point index.
struct ChartIndex {
  int lead = 0;
  std::vector<std::uint64_t> digits;
};

ChartIndex decode(std::uint64_t q, int d, std::uint64_t index) {
  ChartIndex c;
  c.digits.assign(d, 0);
  for (int lead = 0; lead < d; ++lead) {
    std::uint64_t size = 1;
    for (int i = lead + 1; i < d; ++i) size *= q;
    if (index < size) {
      c.lead = lead;
      for (int i = lead + 1; i < d; ++i) {
        c.digits[i] = index % q;
        index /= q;
      }
      return c;
    }
    index -= size;
  }
  throw std::out_of_range("point index beyond projective space");
}

void advance(ChartIndex& c, std::uint64_t q, int d) {
  for (int i = c.lead + 1; i < d; ++i) {
    if (++c.digits[i] < q) return;
    c.digits[i] = 0;
  }
  ++c.lead;
}

Vec point_of(const ChartIndex& c, const std::vector<Scalar>& elements, const Field& f, int d) {
  Vec v = zero_vector(f, d);
  v[c.lead] = Scalar::one(f);
  for (int i = c.lead + 1; i < d; ++i) v[i] = elements[c.digits[i]];
  return v;
}

struct Partial {
  std::vector<std::uint64_t> counts;
  std::vector<std::pair<std::uint64_t, ProjPoint>> deficient;
  std::uint64_t examined = 0;
};

// Exhaustive scan of indices [begin, end) on the generic exact path.
void scan_generic(const LinearFormMatrix& m, const std::vector<Scalar>& elements, std::uint64_t begin,
                  std::uint64_t end, std::size_t keep, Partial& out) {
  const Field& f = m.field();
  const int d = m.params().rows();
  const int s = m.params().s;
  const std::uint64_t q = elements.size();
  ChartIndex c = decode(q, d, begin);
  for (std::uint64_t idx = begin; idx < end; ++idx, advance(c, q, d)) {
    Vec z = point_of(c, elements, f, d);
    const std::size_t r = rank(m.dual_matrix(z));
    ++out.counts[r];
    ++out.examined;
    if (static_cast<int>(r) <= s - 1 && out.deficient.size() < keep) out.deficient.push_back({idx, ProjPoint::from(z)});
  }
}

// Same scan for prime fields with lane-sized p: batches of eight go through
// the combine and screening kernels, exact ranks only for unscreened lanes.
void scan_lanes(const LinearFormMatrix& m, const std::vector<Scalar>& elements, std::uint64_t begin,
                std::uint64_t end, std::size_t keep, Partial& out) {
  const Field& f = m.field();
  const int d = m.params().rows();
  const int s = m.params().s;
  const int rows = m.params().cols();
  const int cols = m.params().vars();
  const int entries = rows * cols;
  const int full = std::min(rows, cols);
  const std::uint64_t q = elements.size();
  const std::uint32_t p = static_cast<std::uint32_t>(f.characteristic());
  std::vector<std::uint32_t> coeffs;
  for (const auto& x : m.coeffs()) coeffs.push_back(static_cast<std::uint32_t>(x.residue()));
  const auto& k = kernels::active_kernels();
  std::vector<std::uint32_t> weights(static_cast<std::size_t>(d) * kernels::kLanes);
  std::vector<std::uint32_t> batch(static_cast<std::size_t>(entries) * kernels::kLanes), work(batch.size());
  std::vector<std::uint32_t> single(entries);
  std::uint8_t certified[kernels::kLanes];
  ChartIndex c = decode(q, d, begin);
  std::uint64_t idx = begin;
  while (idx < end) {
    const int lanes = static_cast<int>(std::min<std::uint64_t>(kernels::kLanes, end - idx));
    std::vector<ChartIndex> held;
    for (int l = 0; l < kernels::kLanes; ++l) {
      for (int i = 0; i < d; ++i) {
        std::uint32_t w = 0;
        if (l < lanes) w = i == c.lead ? 1 : (i > c.lead ? static_cast<std::uint32_t>(c.digits[i]) : 0);
        weights[i * kernels::kLanes + l] = w;
      }
      if (l < lanes) {
        held.push_back(c);
        advance(c, q, d);
      }
    }
    k.combine(coeffs.data(), weights.data(), d, entries, p, batch.data());
    work = batch;
    k.screen_full_rank(work.data(), rows, cols, p, certified);
    for (int l = 0; l < lanes; ++l) {
      int r = full;
      if (!certified[l]) {
        for (int e = 0; e < entries; ++e) single[e] = batch[e * kernels::kLanes + l];
        r = kernels::rank_mod_p(single.data(), rows, cols, p);
      }
      ++out.counts[r];
      ++out.examined;
      if (r <= s - 1 && out.deficient.size() < keep) {
        out.deficient.push_back({idx + l, ProjPoint::from(point_of(held[l], elements, f, d))});
      }
    }
    idx += lanes;
  }
}

}  // namespace

Vec projective_point(const Field& f, int d, BigInt index) {
  if (index < 0 || index >= projective_point_count(f, d)) throw std::out_of_range("point index");
  const BigInt q = f.order();
  Vec v = zero_vector(f, d);
  for (int lead = 0; lead < d; ++lead) {
    BigInt size = 1;
    for (int i = lead + 1; i < d; ++i) size *= q;
    if (index < size) {
      v[lead] = Scalar::one(f);
      for (int i = lead + 1; i < d; ++i) {
        v[i] = field_element(f, static_cast<std::uint64_t>(index % q));
        index /= q;
      }
      return v;
    }
    index -= size;
  }
  return v;
}

StratumReport empirical_stratum_census(const LinearFormMatrix& base, int ext, const CensusOptions& options) {
  const Field& bf = base.field();
  if (bf.kind() != Field::Kind::kPrime) throw std::invalid_argument("census instances live over F_p");
  const Field& f = Field::extension(bf.characteristic(), ext);
  const LinearFormMatrix m = ext == 1 ? base : base.over(f);
  const TripleParams& t = m.params();

  StratumReport report;
  report.n = t.n;
  report.s = t.s;
  report.m = t.m;
  report.p = bf.characteristic();
  report.ext = ext;
  report.counts.assign(t.vars() + 1, 0);

  if (options.mode == CensusOptions::Mode::kSampled) {
    report.mode = "sampled";
    if (options.samples > options.budget) throw BudgetExhausted("sample count exceeds the budget");
    Rng rng(options.seed);
    for (std::uint64_t i = 0; i < options.samples; ++i) {
      Vec z = rng.nonzero_vector(f, t.rows());
      const std::size_t r = rank(m.dual_matrix(z));
      ++report.counts[r];
      ++report.examined;
      if (static_cast<int>(r) <= t.s - 1) {
        ++report.rank_deficient;
        if (report.deficient_points.size() < options.keep_points) report.deficient_points.push_back(ProjPoint::from(z));
      }
    }
    return report;
  }

  report.mode = "exhaustive";
  const BigInt total_big = projective_point_count(f, t.rows());
  if (total_big > options.budget) {
    throw BudgetExhausted("exhaustive census needs " + to_decimal(total_big) + " rank computations, budget is " +
                          std::to_string(options.budget));
  }
  const std::uint64_t total = static_cast<std::uint64_t>(total_big);
  const std::uint64_t q = static_cast<std::uint64_t>(f.order());
  std::vector<Scalar> elements;
  elements.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) elements.push_back(field_element(f, i));

  const bool lanes = ext == 1 && kernels::lane_prime_supported(bf.characteristic());
  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / 4096)));
  std::vector<Partial> parts(workers);
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    parts[w].counts.assign(t.vars() + 1, 0);
    auto job = [&, w, begin, end] {
      if (lanes) {
        scan_lanes(m, elements, begin, end, options.keep_points, parts[w]);
      } else {
        scan_generic(m, elements, begin, end, options.keep_points, parts[w]);
      }
    };
    if (workers == 1) {
      job();
    } else {
      threads.emplace_back(job);
    }
  }
  for (auto& th : threads) th.join();

  std::vector<std::pair<std::uint64_t, ProjPoint>> deficient;
  for (const auto& part : parts) {
    for (std::size_t r = 0; r < part.counts.size(); ++r) report.counts[r] += part.counts[r];
    report.examined += part.examined;
    deficient.insert(deficient.end(), part.deficient.begin(), part.deficient.end());
  }
  for (int r = 0; r <= t.s - 1 && r < static_cast<int>(report.counts.size()); ++r) report.rank_deficient += report.counts[r];
  std::sort(deficient.begin(), deficient.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < deficient.size() && i < options.keep_points; ++i) {
    report.deficient_points.push_back(deficient[i].second);
  }
  return report;
}

std::optional<std::uint64_t> stabilized_value(const std::vector<std::uint64_t>& by_degree) {
  if (by_degree.size() < 2) return std::nullopt;
  const std::uint64_t last = by_degree.back();
  if (by_degree[by_degree.size() - 2] != last) return std::nullopt;
  return last;
}

}  // namespace degenloci
