// Times the identity sweeps through the serial reference runner and the
// OpenMP runner and reports the speedup. Verifies along the way that both
// runners return identical results.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "pseudoflat/scenes.hpp"
#include "pseudoflat/parse.hpp"
#include "pseudoflat/verify.hpp"

using namespace pseudoflat;
using Clock = std::chrono::steady_clock;

namespace {

double run_ms(const std::vector<Check>& checks, const VerifyParams& params,
              std::vector<CheckResult>& out) {
  auto t0 = Clock::now();
  out = run_checks(checks, params);
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int trials = 200;
  for (int i = 1; i + 1 < argc; i += 2)
    if (std::string(argv[i]) == "--trials") trials = std::atoi(argv[i + 1]);

  Scene scene = parse_scene(find_builtin_scene("prop5_counterexample")->text, "prop5");
  ODerivOperator op = scene.make_operator();

  std::vector<Check> checks = operator_checks(op);
  std::vector<Check> random_ops = random_operator_checks(2);
  checks.insert(checks.end(), random_ops.begin(), random_ops.end());

  VerifyParams serial_params;
  serial_params.trials = trials;
  serial_params.parallel = false;
  VerifyParams parallel_params = serial_params;
  parallel_params.parallel = true;

  std::vector<CheckResult> serial_results, parallel_results;
  double serial_ms = run_ms(checks, serial_params, serial_results);
  double parallel_ms = run_ms(checks, parallel_params, parallel_results);

  bool identical = serial_results.size() == parallel_results.size();
  for (std::size_t i = 0; identical && i < serial_results.size(); ++i)
    identical = serial_results[i].passed == parallel_results[i].passed &&
                serial_results[i].failed_trial == parallel_results[i].failed_trial &&
                serial_results[i].witness == parallel_results[i].witness;

  std::cout << "sweep of " << checks.size() << " checks x " << trials << " trials\n";
  std::cout << "  serial reference: " << serial_ms << " ms\n";
  std::cout << "  parallel runner:  " << parallel_ms << " ms\n";
  std::cout << "  speedup:          " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
            << "x\n";
  std::cout << "  results identical: " << (identical ? "yes" : "NO") << "\n";
  std::cout << "  all passed: " << (all_passed(serial_results) ? "yes" : "NO") << "\n";
  return identical && all_passed(serial_results) ? 0 : 1;
}
