// Serial reference vs OpenMP kernel timings for the two hot loops: the
// deterministic-strategy scan and the simplex tableau elimination. Exact
// arithmetic makes the outputs bit-identical; only the wall time moves.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nsg/classical.hpp"
#include "nsg/ns_lp.hpp"
#include "nsg/oddcycle.hpp"

using namespace nsg;

namespace {

template <class F>
long run_ms(const F& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const std::string& name, const std::function<std::string(bool)>& kernel) {
  std::string serial_result, parallel_result;
  const long serial_ms = run_ms([&] { serial_result = kernel(false); });
  const long parallel_ms = run_ms([&] { parallel_result = kernel(true); });
  const double speedup =
      parallel_ms > 0 ? double(serial_ms) / double(parallel_ms) : 0.0;
  std::printf("%-34s %10ld %10ld %9.2fx   %s  (= %s)\n", name.c_str(), serial_ms,
              parallel_ms, speedup,
              serial_result == parallel_result ? "equal" : "DIFFER",
              serial_result.c_str());
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the serial kernel\n\n");
#endif
  std::printf("%-34s %10s %10s %10s\n", "kernel", "serial_ms", "openmp_ms",
              "speedup");

  row("classical: oddcycle(5) ext, 2^15", [](bool parallel) {
    ClassicalOptions o;
    o.parallel = parallel;
    return classical_value(extend(make_odd_cycle(5), 1), o).value.str();
  });
  row("classical: oddcycle(7) ext, 2^21", [](bool parallel) {
    ClassicalOptions o;
    o.parallel = parallel;
    return classical_value(extend(make_odd_cycle(7), 1), o).value.str();
  });
  row("simplex: reduced odd cycle n=7", [](bool parallel) {
    SolveOptions o;
    o.parallel = parallel;
    return solve(build_reduced_lp(7), o).value.str();
  });
  row("simplex: reduced odd cycle n=9", [](bool parallel) {
    SolveOptions o;
    o.parallel = parallel;
    return solve(build_reduced_lp(9), o).value.str();
  });
  row("simplex: full oddcycle(3) ext LP", [](bool parallel) {
    SolveOptions o;
    o.parallel = parallel;
    return solve(build_ns_lp(extend(make_odd_cycle(3), 1)), o).value.str();
  });
  return 0;
}
