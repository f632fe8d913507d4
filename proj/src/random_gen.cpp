#include "pseudoflat/random_gen.hpp"

namespace pseudoflat {

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
  // splitmix64 over the combined words
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1) + 0xbf58476d1ce4e5b9ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

bool Rng::coin() { return uniform_int(0, 1) == 1; }

Rational Rng::small_rational(int max_abs_num) {
  std::int64_t num = uniform_int(-max_abs_num, max_abs_num);
  std::int64_t den = uniform_int(0, 3) == 0 ? 2 : 1;
  return Rational(num, den);
}

Polynomial Rng::polynomial(std::size_t dim, int max_degree, int max_terms) {
  Polynomial p(dim);
  const int terms = uniform_int(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponents e(dim, 0);
    int budget = uniform_int(0, max_degree);
    for (int d = 0; d < budget; ++d) e[static_cast<std::size_t>(uniform_int(0, static_cast<int>(dim) - 1))] += 1;
    p.add_term(e, small_rational());
  }
  return p;
}

Polynomial Rng::nonzero_polynomial(std::size_t dim, int max_degree, int max_terms) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Polynomial p = polynomial(dim, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
  return Polynomial::constant(dim, Rational(1));
}

VectorField Rng::vector_field(std::size_t dim, int max_degree) {
  std::vector<Polynomial> comps;
  comps.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) comps.push_back(polynomial(dim, max_degree));
  return VectorField(std::move(comps));
}

ScalarForm Rng::scalar_form(std::size_t dim, std::size_t degree, int max_degree, int max_terms) {
  ScalarForm f(dim, degree);
  if (degree > dim) return f;
  const int terms = uniform_int(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    IndexTuple idx;
    // choose a random strictly increasing tuple
    std::vector<std::uint32_t> pool;
    for (std::uint32_t i = 0; i < dim; ++i) pool.push_back(i);
    for (std::size_t pick = 0; pick < degree; ++pick) {
      std::size_t at = static_cast<std::size_t>(uniform_int(0, static_cast<int>(pool.size()) - 1));
      idx.push_back(pool[at]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
    }
    f.add_term(std::move(idx), polynomial(dim, max_degree));
  }
  return f;
}

BundleForm Rng::bundle_form(std::size_t rank, std::size_t degree, std::size_t dim,
                            int max_degree) {
  std::vector<ScalarForm> comps;
  comps.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) comps.push_back(scalar_form(dim, degree, max_degree));
  return BundleForm(std::move(comps));
}

BundleForm Rng::section(std::size_t rank, std::size_t dim, int max_degree) {
  return bundle_form(rank, 0, dim, max_degree);
}

BundleHom Rng::hom(std::size_t rows, std::size_t cols, std::size_t dim, int max_degree) {
  BundleHom h(rows, cols, dim);
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t i = 0; i < cols; ++i) h.set_entry(j, i, polynomial(dim, max_degree));
  return h;
}

BundleHom Rng::constant_hom(std::size_t rank, int max_abs_num) {
  std::vector<std::vector<Rational>> entries(rank, std::vector<Rational>(rank, Rational(0)));
  for (auto& row : entries)
    for (auto& c : row) c = Rational(uniform_int(-max_abs_num, max_abs_num));
  return BundleHom::constant(3, entries);
}

std::vector<std::vector<ScalarForm>> Rng::one_form_matrix(std::size_t rows, std::size_t cols,
                                                          std::size_t dim, int max_degree) {
  std::vector<std::vector<ScalarForm>> a(rows, std::vector<ScalarForm>(cols, ScalarForm(dim, 1)));
  for (auto& row : a)
    for (auto& f : row) f = scalar_form(dim, 1, max_degree);
  return a;
}

ODerivOperator Rng::deriv_operator(std::size_t dim, std::size_t source_rank,
                                   std::size_t target_rank, int max_degree) {
  // occasionally degenerate principals: identity-like and zero cases matter
  BundleHom p = [&] {
    int pick = uniform_int(0, 5);
    if (pick == 0 && source_rank == target_rank) return BundleHom::identity(source_rank, dim);
    if (pick == 1) return BundleHom::zero(target_rank, source_rank, dim);
    return hom(target_rank, source_rank, dim, max_degree);
  }();
  return ODerivOperator(std::move(p), one_form_matrix(target_rank, source_rank, dim, max_degree));
}

ODerivOperator Rng::pseudoconnection(std::size_t dim, std::size_t rank, int max_degree) {
  return deriv_operator(dim, rank, rank, max_degree);
}

}  // namespace pseudoflat
