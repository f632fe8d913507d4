#include "pseudoflat/print.hpp"

#include <sstream>

namespace pseudoflat {

std::vector<std::string> default_var_names(std::size_t dim) {
  if (dim <= 3) {
    static const std::vector<std::string> xyz = {"x", "y", "z"};
    return {xyz.begin(), xyz.begin() + static_cast<std::ptrdiff_t>(dim)};
  }
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const Rational& c) { return c.str(); }

namespace {

// One monomial with its coefficient, e.g. "3/2*x^2*y" or "-x".
std::string monomial_str(const Exponents& e, const Rational& c,
                         std::span<const std::string> vars) {
  std::string vars_part;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!vars_part.empty()) vars_part += "*";
    vars_part += vars[i];
    if (e[i] > 1) vars_part += "^" + std::to_string(e[i]);
  }
  if (vars_part.empty()) return c.str();
  if (c.is_one()) return vars_part;
  if (c == Rational(-1)) return "-" + vars_part;
  return c.str() + "*" + vars_part;
}

// Joins term strings with " + " / " - ", folding a leading minus of the
// term into the separator.
std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].empty() && terms[i][0] == '-')
      out += " - " + terms[i].substr(1);
    else
      out += " + " + terms[i];
  }
  return out;
}

bool is_single_monomial(const Polynomial& p) { return p.terms().size() == 1; }

std::string basis_str(const IndexTuple& idx, std::span<const std::string> vars) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += "^";
    out += "d" + vars[idx[i]];
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p, std::span<const std::string> vars) {
  if (p.is_zero()) return "0";
  std::vector<std::string> terms;
  terms.reserve(p.terms().size());
  // highest degree first
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back(monomial_str(it->first, it->second, vars));
  return join_terms(terms);
}

std::string to_string(const ScalarForm& f, std::span<const std::string> vars) {
  if (f.degree() == 0) return to_string(f.as_polynomial(), vars);
  if (f.is_zero()) return "0";
  std::vector<std::string> terms;
  for (const auto& [idx, coeff] : f.terms()) {
    std::string basis = basis_str(idx, vars);
    if (is_single_monomial(coeff)) {
      const auto& [e, c] = *coeff.terms().begin();
      if (total_degree(e) == 0 && c.is_one())
        terms.push_back(basis);
      else if (total_degree(e) == 0 && c == Rational(-1))
        terms.push_back("-" + basis);
      else
        terms.push_back(monomial_str(e, c, vars) + "*" + basis);
    } else {
      terms.push_back("(" + to_string(coeff, vars) + ")*" + basis);
    }
  }
  return join_terms(terms);
}

std::string to_string(const BundleForm& t, std::span<const std::string> vars) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.rank(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(t.component(i), vars);
  }
  return out + "]";
}

std::string to_string(const BundleHom& h, std::span<const std::string> vars) {
  std::string out = "[";
  for (std::size_t j = 0; j < h.rows(); ++j) {
    if (j > 0) out += ", ";
    out += "[";
    for (std::size_t i = 0; i < h.cols(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(h.entry(j, i), vars);
    }
    out += "]";
  }
  return out + "]";
}

std::string to_string(const VectorField& x, std::span<const std::string> vars) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const Polynomial& c = x.component(i);
    if (c.is_zero()) continue;
    std::string basis = "d/d" + vars[i];
    if (is_single_monomial(c)) {
      const auto& [e, r] = *c.terms().begin();
      if (total_degree(e) == 0 && r.is_one())
        terms.push_back(basis);
      else if (total_degree(e) == 0 && r == Rational(-1))
        terms.push_back("-" + basis);
      else
        terms.push_back(monomial_str(e, r, vars) + "*" + basis);
    } else {
      terms.push_back("(" + to_string(c, vars) + ")*" + basis);
    }
  }
  return join_terms(terms);
}

}  // namespace pseudoflat
