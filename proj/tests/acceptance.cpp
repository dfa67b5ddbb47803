#include <cstdio>

#include "degenloci/reproduce.hpp"

using namespace degenloci;

namespace {

// Exact equality everywhere (tolerance 0); wall-clock limits in seconds per criterion.
constexpr double kTimeLimit[11] = {0, 1, 1, 1, 300, 300, 1, 120, 30, 120, 60};

}  // namespace

int main() {
  ReproduceOptions options;
  options.workers = 1;
  int failed = 0;
  double total = 0;
  for (const auto& info : criteria()) {
    CheckResult r = run_criterion(info.id, options);
    const bool in_time = r.seconds < kTimeLimit[info.id];
    const bool ok = r.passed && in_time;
    failed += !ok;
    total += r.seconds;
    std::printf("%s criterion %2d %-20s checks=%llu failures=%llu time=%.2fs limit=%.0fs%s\n", ok ? "PASS" : "FAIL",
                info.id, info.name, static_cast<unsigned long long>(r.checks),
                static_cast<unsigned long long>(r.failures), r.seconds, kTimeLimit[info.id],
                in_time ? "" : " (over time)");
    for (const auto& line : r.lines) {
      if (!ok || line.rfind("FAIL", 0) == 0) std::printf("    %s\n", line.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed, total %.1fs (limit 600s)\n", static_cast<int>(criteria().size()) - failed,
              criteria().size(), total);
  return failed == 0 && total < 600 ? 0 : 1;
}
