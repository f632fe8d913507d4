#include "pseudoflat/verify.hpp"

#include <exception>

#include "pseudoflat/print.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pseudoflat {

namespace {

std::optional<std::string> guarded(const TrialFn& trial, Rng& rng) {
  try {
    return trial(rng);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

int effective_trials(const Check& check, const VerifyParams& params) {
  return check.trials_override > 0 ? check.trials_override : params.trials;
}

}  // namespace

CheckResult run_check_serial(const Check& check, std::uint64_t check_stream,
                             const VerifyParams& params) {
  const int trials = effective_trials(check, params);
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(params.seed, check_stream, static_cast<std::uint64_t>(t)));
    if (auto witness = guarded(check.trial, rng))
      return {check.name, false, trials, t, std::move(*witness)};
  }
  return {check.name, true, trials, -1, {}};
}

CheckResult run_check_parallel(const Check& check, std::uint64_t check_stream,
                               const VerifyParams& params) {
#ifndef _OPENMP
  return run_check_serial(check, check_stream, params);
#else
  const int trials = effective_trials(check, params);
  long first_fail = trials;  // shared min of failing indices
  std::string witness;
#pragma omp parallel for schedule(dynamic) shared(first_fail, witness)
  for (int t = 0; t < trials; ++t) {
    long fail_seen;
#pragma omp atomic read
    fail_seen = first_fail;
    if (t > fail_seen) continue;  // stale reads only cost extra work
    Rng rng(trial_seed(params.seed, check_stream, static_cast<std::uint64_t>(t)));
    auto w = guarded(check.trial, rng);
    if (w) {
#pragma omp critical(pseudoflat_verify)
      {
        if (t < first_fail) {
#pragma omp atomic write
          first_fail = t;
          witness = *w;
        }
      }
    }
  }
  if (first_fail < trials)
    return {check.name, false, trials, first_fail, std::move(witness)};
  return {check.name, true, trials, -1, {}};
#endif
}

CheckResult run_check(const Check& check, std::uint64_t check_stream, const VerifyParams& params) {
  return params.parallel ? run_check_parallel(check, check_stream, params)
                         : run_check_serial(check, check_stream, params);
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, const VerifyParams& params) {
  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i)
    results.push_back(run_check(checks[i], i, params));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

// ---------------------------------------------------------------------------
// foundation checks
// ---------------------------------------------------------------------------

namespace {

std::string describe(const char* label, const std::string& value) {
  return std::string(label) + " = " + value;
}

}  // namespace

std::vector<Check> foundation_checks(std::size_t dim) {
  const int deg = 2;
  auto vars = default_var_names(dim);
  std::vector<Check> checks;

  checks.push_back({"poly_ring_axioms", [dim, vars](Rng& rng) -> std::optional<std::string> {
    Polynomial p = rng.polynomial(dim, deg), q = rng.polynomial(dim, deg),
               r = rng.polynomial(dim, deg);
    const Polynomial zero(dim);
    if ((p + q) + r != p + (q + r)) return describe("associativity broke on p", to_string(p, vars));
    if (p * q != q * p) return describe("commutativity broke on p", to_string(p, vars));
    if ((p * q) * r != p * (q * r)) return describe("mul associativity broke on p", to_string(p, vars));
    if (p * (q + r) != p * q + p * r)
      return describe("distributivity broke on p", to_string(p, vars));
    if (p + zero != p || p - p != zero) return describe("additive identity broke on p", to_string(p, vars));
    return std::nullopt;
  }});

  checks.push_back({"poly_partial_leibniz", [dim, vars](Rng& rng) -> std::optional<std::string> {
    Polynomial p = rng.polynomial(dim, deg), q = rng.polynomial(dim, deg);
    std::size_t axis = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(dim) - 1));
    if ((p * q).partial(axis) != p.partial(axis) * q + p * q.partial(axis))
      return describe("p", to_string(p, vars)) + ", " + describe("q", to_string(q, vars));
    return std::nullopt;
  }});

  checks.push_back({"lie_bracket_antisymmetry", [dim, vars](Rng& rng) -> std::optional<std::string> {
    VectorField x = rng.vector_field(dim, deg), y = rng.vector_field(dim, deg);
    if (lie_bracket(x, y) != -lie_bracket(y, x) || lie_bracket(x, x) != VectorField::zero(dim))
      return describe("X", to_string(x, vars)) + ", " + describe("Y", to_string(y, vars));
    return std::nullopt;
  }});

  checks.push_back({"lie_jacobi_identity", [dim, vars](Rng& rng) -> std::optional<std::string> {
    VectorField x = rng.vector_field(dim, deg), y = rng.vector_field(dim, deg),
                z = rng.vector_field(dim, deg);
    VectorField total = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                        lie_bracket(z, lie_bracket(x, y));
    if (total != VectorField::zero(dim))
      return describe("X", to_string(x, vars)) + ", " + describe("Y", to_string(y, vars)) + ", " +
             describe("Z", to_string(z, vars));
    return std::nullopt;
  }});

  checks.push_back({"directional_derivative_matches_d", [dim, vars](Rng& rng) -> std::optional<std::string> {
    VectorField x = rng.vector_field(dim, deg);
    Polynomial f = rng.polynomial(dim, deg);
    const VectorField fields[] = {x};
    if (x.apply(f) != ScalarForm::from_polynomial(f).d().evaluate(fields))
      return describe("X", to_string(x, vars)) + ", " + describe("f", to_string(f, vars));
    return std::nullopt;
  }});

  checks.push_back({"wedge_graded_commutativity", [dim, vars](Rng& rng) -> std::optional<std::string> {
    std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(dim)));
    std::size_t l = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(dim)));
    ScalarForm a = rng.scalar_form(dim, k, deg), b = rng.scalar_form(dim, l, deg);
    ScalarForm ba = wedge(b, a);
    if ((k * l) % 2 == 1) ba = -ba;
    if (wedge(a, b) != ba)
      return describe("a", to_string(a, vars)) + ", " + describe("b", to_string(b, vars));
    return std::nullopt;
  }});

  checks.push_back({"wedge_associativity", [dim, vars](Rng& rng) -> std::optional<std::string> {
    ScalarForm a = rng.scalar_form(dim, static_cast<std::size_t>(rng.uniform_int(0, 2)), deg);
    ScalarForm b = rng.scalar_form(dim, static_cast<std::size_t>(rng.uniform_int(0, 2)), deg);
    ScalarForm c = rng.scalar_form(dim, static_cast<std::size_t>(rng.uniform_int(0, 2)), deg);
    if (wedge(wedge(a, b), c) != wedge(a, wedge(b, c)))
      return describe("a", to_string(a, vars)) + ", " + describe("b", to_string(b, vars)) + ", " +
             describe("c", to_string(c, vars));
    return std::nullopt;
  }});

  checks.push_back({"d_squared_zero", [dim, vars](Rng& rng) -> std::optional<std::string> {
    std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(dim)));
    ScalarForm a = rng.scalar_form(dim, k, deg);
    if (!a.d().d().is_zero()) return describe("a", to_string(a, vars));
    return std::nullopt;
  }});

  checks.push_back({"d_graded_leibniz", [dim, vars](Rng& rng) -> std::optional<std::string> {
    std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, 2));
    std::size_t l = static_cast<std::size_t>(rng.uniform_int(0, 2));
    ScalarForm a = rng.scalar_form(dim, k, deg), b = rng.scalar_form(dim, l, deg);
    ScalarForm rhs = wedge(a.d(), b);
    ScalarForm mixed = wedge(a, b.d());
    rhs = k % 2 == 0 ? rhs + mixed : rhs - mixed;
    if (wedge(a, b).d() != rhs)
      return describe("a", to_string(a, vars)) + ", " + describe("b", to_string(b, vars));
    return std::nullopt;
  }});

  checks.push_back({"evaluation_alternating", [dim, vars](Rng& rng) -> std::optional<std::string> {
    ScalarForm a = rng.scalar_form(dim, 2, deg);
    VectorField x = rng.vector_field(dim, deg), y = rng.vector_field(dim, deg);
    const VectorField xy[] = {x, y};
    const VectorField yx[] = {y, x};
    const VectorField xx[] = {x, x};
    if (a.evaluate(xy) != -a.evaluate(yx) || !a.evaluate(xx).is_zero())
      return describe("a", to_string(a, vars)) + ", " + describe("X", to_string(x, vars)) + ", " +
             describe("Y", to_string(y, vars));
    return std::nullopt;
  }});

  checks.push_back({"evaluation_function_linear", [dim, vars](Rng& rng) -> std::optional<std::string> {
    std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(dim)));
    ScalarForm a = rng.scalar_form(dim, k, deg);
    Polynomial f = rng.polynomial(dim, deg);
    std::vector<VectorField> fields;
    for (std::size_t i = 0; i < k; ++i) fields.push_back(rng.vector_field(dim, deg));
    if (a.scaled(f).evaluate(fields) != f * a.evaluate(fields))
      return describe("a", to_string(a, vars)) + ", " + describe("f", to_string(f, vars));
    return std::nullopt;
  }});

  checks.push_back({"form_scale_is_zero_form_wedge", [dim, vars](Rng& rng) -> std::optional<std::string> {
    std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(dim)));
    ScalarForm a = rng.scalar_form(dim, k, deg);
    Polynomial f = rng.polynomial(dim, deg);
    if (a.scaled(f) != wedge(ScalarForm::from_polynomial(f), a))
      return describe("a", to_string(a, vars)) + ", " + describe("f", to_string(f, vars));
    return std::nullopt;
  }});

  checks.push_back({"cartan_one_form_identity", [dim, vars](Rng& rng) -> std::optional<std::string> {
    ScalarForm w = rng.scalar_form(dim, 1, deg);
    VectorField x = rng.vector_field(dim, deg), y = rng.vector_field(dim, deg);
    const VectorField xy[] = {x, y};
    const VectorField xs[] = {x};
    const VectorField ys[] = {y};
    const VectorField br[] = {lie_bracket(x, y)};
    Polynomial lhs = w.d().evaluate(xy);
    Polynomial rhs = x.apply(w.evaluate(ys)) - y.apply(w.evaluate(xs)) - w.evaluate(br);
    if (lhs != rhs)
      return describe("w", to_string(w, vars)) + ", " + describe("X", to_string(x, vars)) + ", " +
             describe("Y", to_string(y, vars));
    return std::nullopt;
  }});

  checks.push_back({"hom_composition_and_linearity", [dim, vars](Rng& rng) -> std::optional<std::string> {
    std::size_t r1 = static_cast<std::size_t>(rng.uniform_int(1, 3));
    std::size_t r2 = static_cast<std::size_t>(rng.uniform_int(1, 3));
    std::size_t r3 = static_cast<std::size_t>(rng.uniform_int(1, 3));
    std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(dim)));
    BundleHom alpha = rng.hom(r2, r1, dim, deg);
    BundleHom beta = rng.hom(r3, r2, dim, deg);
    BundleForm t = rng.bundle_form(r1, k, dim, deg);
    Polynomial f = rng.polynomial(dim, deg);
    if (beta.apply(alpha.apply(t)) != (beta * alpha).apply(t))
      return describe("T", to_string(t, vars));
    if (alpha.apply(t.scaled(f)) != alpha.apply(t).scaled(f))
      return describe("f", to_string(f, vars)) + ", " + describe("T", to_string(t, vars));
    if (BundleHom::identity(r1, dim).apply(t) != t) return describe("T", to_string(t, vars));
    return std::nullopt;
  }});

  checks.push_back({"twisted_wedge_laws", [dim, vars](Rng& rng) -> std::optional<std::string> {
    std::size_t r1 = static_cast<std::size_t>(rng.uniform_int(1, 3));
    std::size_t r2 = static_cast<std::size_t>(rng.uniform_int(1, 3));
    std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, 2));
    std::size_t l = static_cast<std::size_t>(rng.uniform_int(0, 2));
    BundleHom alpha = rng.hom(r2, r1, dim, deg);
    BundleHom alpha2 = rng.hom(r2, r1, dim, deg);
    ScalarForm beta = rng.scalar_form(dim, k, deg), beta2 = rng.scalar_form(dim, k, deg);
    BundleForm t = rng.bundle_form(r1, l, dim, deg), t2 = rng.bundle_form(r1, l, dim, deg);
    Polynomial f = rng.polynomial(dim, deg);
    if (wedge_alpha(beta, BundleHom::identity(r1, dim), t) != scalar_wedge(beta, t))
      return describe("beta", to_string(beta, vars));
    ScalarForm f0 = ScalarForm::from_polynomial(f);
    if (wedge_alpha(f0, alpha, t) != alpha.apply(t.scaled(f)))
      return describe("f", to_string(f, vars));
    if (wedge_alpha(beta + beta2, alpha, t) !=
        wedge_alpha(beta, alpha, t) + wedge_alpha(beta2, alpha, t))
      return describe("beta", to_string(beta, vars));
    if (wedge_alpha(beta, alpha, t + t2) !=
        wedge_alpha(beta, alpha, t) + wedge_alpha(beta, alpha, t2))
      return describe("T", to_string(t, vars));
    if (wedge_alpha(beta, alpha + alpha2, t) !=
        wedge_alpha(beta, alpha, t) + wedge_alpha(beta, alpha2, t))
      return describe("beta", to_string(beta, vars));
    if (wedge_alpha(beta.scaled(f), alpha, t) != wedge_alpha(beta, alpha, t).scaled(f))
      return describe("f", to_string(f, vars));
    return std::nullopt;
  }});

  checks.push_back({"evaluation_hom_commute", [dim, vars](Rng& rng) -> std::optional<std::string> {
    std::size_t r1 = static_cast<std::size_t>(rng.uniform_int(1, 3));
    std::size_t r2 = static_cast<std::size_t>(rng.uniform_int(1, 3));
    std::size_t k = std::min<std::size_t>(2, dim);
    BundleHom alpha = rng.hom(r2, r1, dim, deg);
    BundleForm t = rng.bundle_form(r1, k, dim, deg);
    std::vector<VectorField> fields;
    for (std::size_t i = 0; i < k; ++i) fields.push_back(rng.vector_field(dim, deg));
    if (alpha.apply(t).evaluate(fields) != alpha.apply(t.evaluate(fields)))
      return describe("T", to_string(t, vars));
    const BundleForm t2 = rng.bundle_form(r1, k, dim, deg);
    if (k == 2 && fields.size() == 2) {
      const VectorField yx[] = {fields[1], fields[0]};
      if (t2.evaluate(yx) != -t2.evaluate(std::span<const VectorField>(fields)))
        return describe("T", to_string(t2, vars));
    }
    return std::nullopt;
  }});

  return checks;
}

// ---------------------------------------------------------------------------
// operator checks
// ---------------------------------------------------------------------------

namespace {

std::optional<std::string> leibniz_trial(const ODerivOperator& op, Rng& rng,
                                         std::span<const std::string> vars) {
  const int deg = 2;
  Polynomial f = rng.polynomial(op.dim(), deg);
  BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
  BundleForm lhs = op.nabla(s.scaled(f));
  BundleForm rhs = wedge_alpha(ScalarForm::from_polynomial(f).d(), op.principal(), s) +
                   op.nabla(s).scaled(f);
  if (lhs != rhs)
    return "f = " + to_string(f, vars) + ", s = " + to_string(s, vars) +
           ", lhs = " + to_string(lhs, vars) + ", rhs = " + to_string(rhs, vars);
  return std::nullopt;
}

std::optional<std::string> generator_trial(const ODerivOperator& op, Rng& rng,
                                           std::span<const std::string> vars) {
  const int deg = 2;
  std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, 2));
  ScalarForm omega = rng.scalar_form(op.dim(), k, deg);
  BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
  BundleForm lhs = op.d_nabla(scalar_wedge(omega, s));
  BundleForm rhs = wedge_alpha(omega.d(), op.principal(), s);
  BundleForm tail = scalar_wedge(omega, op.nabla(s));
  rhs = k % 2 == 0 ? rhs + tail : rhs - tail;
  if (lhs != rhs)
    return "omega = " + to_string(omega, vars) + ", s = " + to_string(s, vars);
  return std::nullopt;
}

std::optional<std::string> product_rule_trial(const ODerivOperator& op, Rng& rng,
                                              std::span<const std::string> vars) {
  const int deg = 2;
  std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, 2));
  std::size_t l = static_cast<std::size_t>(rng.uniform_int(0, 2));
  ScalarForm omega = rng.scalar_form(op.dim(), k, deg);
  BundleForm s = rng.bundle_form(op.source_rank(), l, op.dim(), deg);
  BundleForm lhs = op.d_nabla(scalar_wedge(omega, s));
  BundleForm rhs = wedge_alpha(omega.d(), op.principal(), s);
  BundleForm tail = scalar_wedge(omega, op.d_nabla(s));
  rhs = k % 2 == 0 ? rhs + tail : rhs - tail;
  if (lhs != rhs)
    return "omega = " + to_string(omega, vars) + ", S = " + to_string(s, vars);
  return std::nullopt;
}

}  // namespace

std::vector<Check> operator_checks(const ODerivOperator& op) {
  const int deg = 2;
  auto vars = default_var_names(op.dim());
  std::vector<Check> checks;

  checks.push_back({"leibniz_rule", [op, vars](Rng& rng) { return leibniz_trial(op, rng, vars); }});

  checks.push_back({"degree_zero_reduction", [op, vars](Rng& rng) -> std::optional<std::string> {
    BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
    if (op.d_nabla(s) != op.nabla(s)) return "s = " + to_string(s, vars);
    return std::nullopt;
  }});

  checks.push_back(
      {"generator_formula", [op, vars](Rng& rng) { return generator_trial(op, rng, vars); }});

  checks.push_back(
      {"graded_product_rule", [op, vars](Rng& rng) { return product_rule_trial(op, rng, vars); }});

  if (!op.is_square()) return checks;

  checks.push_back({"map_decomposition", [op, vars](Rng& rng) -> std::optional<std::string> {
    BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
    BundleForm f_via_maps = op.principal().apply(op.map_E(s)) - op.d_nabla(op.map_L(s));
    if (op.map_F(s) != f_via_maps) return "s = " + to_string(s, vars);
    if (op.map_G(s) != op.d_nabla(op.map_E(s))) return "s = " + to_string(s, vars);
    return std::nullopt;
  }});

  checks.push_back({"tensoriality", [op, vars](Rng& rng) -> std::optional<std::string> {
    Polynomial f = rng.polynomial(op.dim(), deg);
    BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
    if (op.map_F(s.scaled(f)) != op.map_F(s).scaled(f))
      return "F not linear over functions: f = " + to_string(f, vars) +
             ", s = " + to_string(s, vars);
    if (op.map_L(s.scaled(f)) != op.map_L(s).scaled(f))
      return "L not linear over functions: f = " + to_string(f, vars) +
             ", s = " + to_string(s, vars);
    return std::nullopt;
  }});

  checks.push_back({"e_map_product_rule", [op, vars](Rng& rng) -> std::optional<std::string> {
    Polynomial f = rng.polynomial(op.dim(), deg);
    BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
    BundleForm rhs = scalar_wedge(ScalarForm::from_polynomial(f).d(), op.map_L(s)) +
                     op.map_E(s).scaled(f);
    if (op.map_E(s.scaled(f)) != rhs)
      return "f = " + to_string(f, vars) + ", s = " + to_string(s, vars);
    return std::nullopt;
  }});

  checks.push_back({"g_map_product_rule", [op, vars](Rng& rng) -> std::optional<std::string> {
    Polynomial f = rng.polynomial(op.dim(), deg);
    BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
    BundleForm rhs = scalar_wedge(ScalarForm::from_polynomial(f).d(), op.map_F(s)) +
                     op.map_G(s).scaled(f);
    if (op.map_G(s.scaled(f)) != rhs)
      return "f = " + to_string(f, vars) + ", s = " + to_string(s, vars);
    return std::nullopt;
  }});

  checks.push_back({"double_derivative_identity", [op, vars](Rng& rng) -> std::optional<std::string> {
    std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, 2));
    ScalarForm omega = rng.scalar_form(op.dim(), k, deg);
    BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
    auto sides = d2_identity_sides(op, omega, s);
    if (!sides.holds())
      return "omega = " + to_string(omega, vars) + ", s = " + to_string(s, vars) +
             ", lhs = " + to_string(sides.lhs, vars) + ", rhs = " + to_string(sides.rhs, vars);
    return std::nullopt;
  }});

  checks.push_back({"triple_derivative_identity", [op, vars](Rng& rng) -> std::optional<std::string> {
    std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, 2));
    ScalarForm omega = rng.scalar_form(op.dim(), k, deg);
    BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
    auto sides = d3_identity_sides(op, omega, s);
    if (!sides.holds())
      return "omega = " + to_string(omega, vars) + ", s = " + to_string(s, vars) +
             ", lhs = " + to_string(sides.lhs, vars) + ", rhs = " + to_string(sides.rhs, vars);
    return std::nullopt;
  }});

  checks.push_back({"covariant_derivative_leibniz", [op, vars](Rng& rng) -> std::optional<std::string> {
    Polynomial f = rng.polynomial(op.dim(), deg);
    VectorField x = rng.vector_field(op.dim(), deg);
    BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
    BundleForm rhs = op.principal().apply(s).scaled(x.apply(f)) + op.nabla_X(x, s).scaled(f);
    if (op.nabla_X(x, s.scaled(f)) != rhs)
      return "f = " + to_string(f, vars) + ", X = " + to_string(x, vars) +
             ", s = " + to_string(s, vars);
    return std::nullopt;
  }});

  checks.push_back({"curvature_evaluation_agreement", [op, vars](Rng& rng) -> std::optional<std::string> {
    VectorField x = rng.vector_field(op.dim(), deg);
    VectorField y = rng.vector_field(op.dim(), deg);
    BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
    BundleForm direct = op.curvature_direct(x, y, s);
    BundleForm formula = op.curvature_formula(x, y, s);
    if (direct != formula)
      return "X = " + to_string(x, vars) + ", Y = " + to_string(y, vars) +
             ", s = " + to_string(s, vars) + ", direct = " + to_string(direct, vars) +
             ", formula = " + to_string(formula, vars);
    return std::nullopt;
  }});

  checks.push_back({"curvature_antisymmetry_linearity", [op, vars](Rng& rng) -> std::optional<std::string> {
    VectorField x = rng.vector_field(op.dim(), deg);
    VectorField y = rng.vector_field(op.dim(), deg);
    Polynomial f = rng.polynomial(op.dim(), deg);
    BundleForm s = rng.section(op.source_rank(), op.dim(), deg);
    if (!op.curvature_direct(x, x, s).is_zero())
      return "X = " + to_string(x, vars) + ", s = " + to_string(s, vars);
    if (op.curvature_direct(x, y, s) != -op.curvature_direct(y, x, s))
      return "X = " + to_string(x, vars) + ", Y = " + to_string(y, vars);
    if (op.curvature_direct(x, y, s.scaled(f)) != op.curvature_direct(x, y, s).scaled(f))
      return "f = " + to_string(f, vars) + ", s = " + to_string(s, vars);
    return std::nullopt;
  }});

  checks.push_back({"flatness_chain_agreement",
                    [op, vars](Rng& rng) -> std::optional<std::string> {
                      FlatnessReport fl = op.classify_flatness();
                      ChainCheckReport chain = chain_check_direct(
                          op, deg, 16, trial_seed(rng.uniform_int(0, 1 << 30), 17, 1));
                      if (fl.strongly_flat && !chain.d2_zero)
                        return "classified strongly flat but d^2 != 0 on " +
                               to_string(chain.d2_witness->input, vars);
                      if (fl.weakly_flat && !chain.d3_zero)
                        return "classified weakly flat but d^3 != 0 on " +
                               to_string(chain.d3_witness->input, vars);
                      // The converse needs room: a nonzero L-obstruction shows
                      // up in degree >= 2 forms, F/G-obstructions in degree 3.
                      if (op.dim() >= 2 && !fl.strongly_flat && chain.d2_zero)
                        return "classified not strongly flat but no d^2 witness found";
                      if (op.dim() >= 3 && !fl.weakly_flat && chain.d3_zero)
                        return "classified not weakly flat but no d^3 witness found";
                      return std::nullopt;
                    },
                    4});

  return checks;
}

// ---------------------------------------------------------------------------
// randomized-operator checks
// ---------------------------------------------------------------------------

namespace {

ODerivOperator random_pseudoconnection(Rng& rng, int max_degree) {
  std::size_t dim = static_cast<std::size_t>(rng.uniform_int(1, 3));
  std::size_t rank = static_cast<std::size_t>(rng.uniform_int(1, 3));
  return rng.pseudoconnection(dim, rank, max_degree);
}

// Flatness-class census on a 3-dimensional chart: flat, curved, and
// tensor-type instances in fixed proportions.
ODerivOperator flatness_census_instance(Rng& rng, int max_degree) {
  const std::size_t n = 3;
  switch (rng.uniform_int(0, 5)) {
    case 0: {  // ordinary flat
      std::size_t rank = static_cast<std::size_t>(rng.uniform_int(1, 3));
      std::vector<std::vector<ScalarForm>> a(rank, std::vector<ScalarForm>(rank, ScalarForm(n, 1)));
      return ODerivOperator(BundleHom::identity(rank, n), std::move(a));
    }
    case 1: {  // gauge-trivial ordinary connection, strongly flat but nonzero A
      std::vector<std::vector<ScalarForm>> a(1, std::vector<ScalarForm>(1, ScalarForm(n, 1)));
      a[0][0] = ScalarForm::from_polynomial(rng.polynomial(n, max_degree)).d();
      return ODerivOperator(BundleHom::identity(1, n), std::move(a));
    }
    case 2: {  // commuting family: strongly flat despite nonzero connection forms
      BundleHom phi = rng.constant_hom(2);
      return triple_form_operator(phi, phi * phi);
    }
    case 3:  // noncommuting pair: F = 0, not weakly flat
      return triple_form_operator(rng.constant_hom(2), rng.constant_hom(2));
    default:
      return rng.pseudoconnection(n, static_cast<std::size_t>(rng.uniform_int(1, 3)), max_degree);
  }
}

}  // namespace

std::vector<Check> random_operator_checks(int max_degree) {
  std::vector<Check> checks;

  auto with_random_op = [max_degree](const char* name,
                                     std::function<std::optional<std::string>(
                                         const ODerivOperator&, Rng&, std::span<const std::string>)>
                                         body) {
    return Check{name, [max_degree, body](Rng& rng) -> std::optional<std::string> {
                   ODerivOperator op = random_pseudoconnection(rng, max_degree);
                   auto vars = default_var_names(op.dim());
                   return body(op, rng, vars);
                 }};
  };

  checks.push_back(with_random_op("leibniz_rule_random_ops", leibniz_trial));
  checks.push_back(with_random_op("generator_formula_random_ops", generator_trial));
  checks.push_back(with_random_op("graded_product_rule_random_ops", product_rule_trial));

  checks.push_back(with_random_op(
      "tensoriality_random_ops",
      [](const ODerivOperator& op, Rng& rng,
         std::span<const std::string> vars) -> std::optional<std::string> {
        Polynomial f = rng.polynomial(op.dim(), 2);
        BundleForm s = rng.section(op.source_rank(), op.dim(), 2);
        if (op.map_F(s.scaled(f)) != op.map_F(s).scaled(f) ||
            op.map_L(s.scaled(f)) != op.map_L(s).scaled(f))
          return "f = " + to_string(f, vars) + ", s = " + to_string(s, vars);
        return std::nullopt;
      }));

  checks.push_back(with_random_op(
      "map_decomposition_random_ops",
      [](const ODerivOperator& op, Rng& rng,
         std::span<const std::string> vars) -> std::optional<std::string> {
        BundleForm s = rng.section(op.source_rank(), op.dim(), 2);
        if (op.map_F(s) != op.principal().apply(op.map_E(s)) - op.d_nabla(op.map_L(s)))
          return "s = " + to_string(s, vars);
        if (op.map_G(s) != op.d_nabla(op.map_E(s))) return "s = " + to_string(s, vars);
        for (std::size_t i = 0; i < op.source_rank(); ++i) {
          BundleForm e = BundleForm::basis_section(op.source_rank(), op.dim(), i);
          if (op.map_F(e) != op.principal().apply(op.map_E(e)) - op.d_nabla(op.map_L(e)))
            return "frame index " + std::to_string(i);
          if (op.map_G(e) != op.d_nabla(op.map_E(e))) return "frame index " + std::to_string(i);
        }
        return std::nullopt;
      }));

  checks.push_back(with_random_op(
      "derivative_identities_random_ops",
      [](const ODerivOperator& op, Rng& rng,
         std::span<const std::string> vars) -> std::optional<std::string> {
        std::size_t k = static_cast<std::size_t>(rng.uniform_int(0, 2));
        ScalarForm omega = rng.scalar_form(op.dim(), k, 2);
        BundleForm s = rng.section(op.source_rank(), op.dim(), 2);
        if (!d2_identity_check(op, omega, s))
          return "d^2 identity: omega = " + to_string(omega, vars) +
                 ", s = " + to_string(s, vars);
        if (!d3_identity_check(op, omega, s))
          return "d^3 identity: omega = " + to_string(omega, vars) +
                 ", s = " + to_string(s, vars);
        return std::nullopt;
      }));

  checks.push_back(with_random_op(
      "curvature_agreement_random_ops",
      [](const ODerivOperator& op, Rng& rng,
         std::span<const std::string> vars) -> std::optional<std::string> {
        VectorField x = rng.vector_field(op.dim(), 2);
        VectorField y = rng.vector_field(op.dim(), 2);
        BundleForm s = rng.section(op.source_rank(), op.dim(), 2);
        if (op.curvature_direct(x, y, s) != op.curvature_formula(x, y, s))
          return "X = " + to_string(x, vars) + ", Y = " + to_string(y, vars) +
                 ", s = " + to_string(s, vars);
        return std::nullopt;
      }));

  checks.push_back({"flatness_chain_agreement_random_ops",
                    [max_degree](Rng& rng) -> std::optional<std::string> {
                      ODerivOperator op = flatness_census_instance(rng, max_degree);
                      auto vars = default_var_names(op.dim());
                      FlatnessReport fl = op.classify_flatness();
                      ChainCheckReport chain = chain_check_direct(
                          op, max_degree, 12,
                          trial_seed(static_cast<std::uint64_t>(rng.uniform_int(0, 1 << 30)), 23, 5));
                      if (fl.strongly_flat != chain.d2_zero)
                        return std::string("strong/d^2 mismatch: classified ") +
                               (fl.strongly_flat ? "flat" : "not flat") +
                               (chain.d2_zero ? ", no d^2 witness" : ", d^2 witness on " +
                                to_string(chain.d2_witness->input, vars));
                      if (fl.weakly_flat != chain.d3_zero)
                        return std::string("weak/d^3 mismatch: classified ") +
                               (fl.weakly_flat ? "flat" : "not flat") +
                               (chain.d3_zero ? ", no d^3 witness" : ", d^3 witness on " +
                                to_string(chain.d3_witness->input, vars));
                      return std::nullopt;
                    }});

  return checks;
}

}  // namespace pseudoflat
