// Randomized identity sweeps. Every check runs `trials` independent trials,
// each seeded from (seed, check index, trial index), so the serial runner and
// the OpenMP runner produce identical results; the serial runner is the
// reference the parallel one is tested against. A failing trial reports the
// lowest-index witness.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pseudoflat/operator.hpp"
#include "pseudoflat/random_gen.hpp"

namespace pseudoflat {

struct VerifyParams {
  std::uint64_t seed = 0x700d5eedULL;
  int trials = 100;
  int max_degree = 2;
  bool parallel = true;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  int trials = 0;
  long failed_trial = -1;
  std::string witness;  // empty when passed
};

// A trial returns nullopt on success or a witness description on failure.
using TrialFn = std::function<std::optional<std::string>(Rng&)>;

struct Check {
  std::string name;
  TrialFn trial;
  int trials_override = 0;  // 0: use VerifyParams::trials
};

CheckResult run_check_serial(const Check& check, std::uint64_t check_stream,
                             const VerifyParams& params);
CheckResult run_check_parallel(const Check& check, std::uint64_t check_stream,
                               const VerifyParams& params);
CheckResult run_check(const Check& check, std::uint64_t check_stream, const VerifyParams& params);

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, const VerifyParams& params);
bool all_passed(const std::vector<CheckResult>& results);

// Ring axioms, derivations, Lie brackets, wedge/d/evaluation laws on a chart
// of the given dimension.
std::vector<Check> foundation_checks(std::size_t dim);

// The operator-level identity sweeps for one fixed operator (flatness
// agreement included for square operators).
std::vector<Check> operator_checks(const ODerivOperator& op);

// Operator-level identities quantified over freshly sampled operators; the
// flatness/chain agreement stream samples 3-dimensional charts where the
// equivalence is exact (triple compositions vanish for degree reasons on
// smaller charts).
std::vector<Check> random_operator_checks(int max_degree);

}  // namespace pseudoflat
