// Timing harness comparing the serial reference kernels against the OpenMP
// ones: the oracle's subset sweep and the classifier's antichain sweep.

#include <chrono>
#include <functional>
#include <cstdio>
#include <string>
#include <vector>

#ifdef GB_HAVE_OPENMP
#include <omp.h>
#endif

#include "gb/oracle.hpp"
#include "gb/presets.hpp"

using namespace gb;

namespace {

double time_once(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e100;
  for (int i = 0; i < reps; ++i) best = std::min(best, time_once(fn));
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 3;
  if (argc > 1) reps = std::stoi(argv[1]);

#ifdef GB_HAVE_OPENMP
  std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP unavailable; both columns run the serial path\n");
#endif
  std::printf("%-12s %-10s %4s %12s %12s %9s\n", "preset", "kernel", "k", "serial[s]",
              "openmp[s]", "speedup");

  const std::vector<std::string> names = {"a3-case1", "a3-case2", "a3-case3", "a3-outer"};
  for (const std::string& name : names) {
    GradingBundle bundle = build_preset(name);
    for (unsigned k : {1u, 2u, 3u}) {
      std::vector<Antichain> serial_result, parallel_result;
      double ts = best_of(reps, [&] {
        serial_result = brute_force_classify(*bundle.poset, k, Execution::serial);
      });
      double tp = best_of(reps, [&] {
        parallel_result = brute_force_classify(*bundle.poset, k, Execution::parallel);
      });
      if (serial_result != parallel_result) {
        std::fprintf(stderr, "FATAL: oracle results diverge on %s k=%u\n", name.c_str(), k);
        return 1;
      }
      std::printf("%-12s %-10s %4u %12.4f %12.4f %8.2fx\n", name.c_str(), "oracle", k, ts,
                  tp, ts / tp);
    }
    for (unsigned k : {1u, 2u}) {
      std::vector<Antichain> serial_result, parallel_result;
      double ts = best_of(reps, [&] {
        serial_result = classify_antichains(*bundle.poset, k, Execution::serial);
      });
      double tp = best_of(reps, [&] {
        parallel_result = classify_antichains(*bundle.poset, k, Execution::parallel);
      });
      if (serial_result != parallel_result) {
        std::fprintf(stderr, "FATAL: classifier results diverge on %s k=%u\n", name.c_str(),
                      k);
        return 1;
      }
      std::printf("%-12s %-10s %4u %12.4f %12.4f %8.2fx\n", name.c_str(), "classify", k, ts,
                  tp, ts / tp);
    }
  }
  return 0;
}
