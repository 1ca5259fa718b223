// Serial reference against the OpenMP kernels: subset-enumeration oracle on
// twelve curves and the sampled fibre table rows.

#include "logsurf/catalog.hpp"
#include "logsurf/execution.hpp"
#include "logsurf/zariski.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>

using namespace logsurf;

namespace {

double best_ms(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void compare(const char* name, int reps, const std::function<void(Execution)>& f) {
  const double s = best_ms(reps, [&] { f(Execution::serial); });
  const double p = best_ms(reps, [&] { f(Execution::parallel); });
  std::cout << name << ": serial " << s << " ms, parallel " << p << " ms, speedup " << s / p << "\n";
}

} // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 5;
  std::cout << "threads: " << max_threads() << "\n";

  const auto config = catalog::kodaira_config({catalog::FiberKind::InStar, 6}, true);
  const auto d = QDivisor::sum_of(config.names());
  compare("oracle, 12 curves", reps, [&](Execution e) { zariski_oracle(config, d, e); });
  compare("table1 rows", reps, [&](Execution e) { catalog::table1(e); });
}
