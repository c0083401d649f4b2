// Serial vs parallel evaluation of verification suites. Reports must agree
// byte for byte; timings go to stdout.
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <omp.h>

#include "hinak/verify.hpp"

using namespace hinak;

namespace {

struct Case {
  const char* suite;
  AlgebraSpec spec;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  if (reps < 1) reps = 1;
  const std::vector<Case> cases = {
      {"hom-ext", AlgebraSpec::linear_an(5, 3)},
      {"ar-formula", AlgebraSpec::linear_an(5, 2)},
      {"cluster-tilting", AlgebraSpec::kupisch_a(KupischSeries::linear({1, 2, 2, 3}), 3)},
      {"hom-ext", AlgebraSpec::tube_trunc(3, 2, 5)},
      {"orbit-periodicity", AlgebraSpec::tube_trunc(3, 2, 5)},
      {"mesh-iso", AlgebraSpec::zl_window(4, 0, 8, 3)},
  };
  std::printf("threads %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-18s %-28s %7s %10s %10s %8s %s\n", "suite", "algebra", "items", "serial_s", "parallel_s", "speedup", "same");
  bool all_same = true;
  for (const auto& c : cases) {
    double best[2] = {1e300, 1e300};
    std::string text[2];
    std::size_t items = 0;
    for (int r = 0; r < reps; ++r)
      for (int p = 0; p < 2; ++p) {
        SuiteOptions opt;
        opt.policy = p == 0 ? ExecPolicy::Serial : ExecPolicy::Parallel;
        auto t0 = std::chrono::steady_clock::now();
        CheckReport rep = run_suite(c.suite, c.spec, opt);
        best[p] = std::min(best[p], seconds_since(t0));
        text[p] = rep.to_json();
        items = rep.checks.size();
      }
    bool same = text[0] == text[1];
    all_same = all_same && same;
    std::printf("%-18s %-28s %7zu %10.4f %10.4f %8.2f %s\n", c.suite, c.spec.describe().c_str(), items, best[0], best[1],
                best[0] / best[1], same ? "yes" : "NO");
  }
  return all_same ? 0 : 1;
}
