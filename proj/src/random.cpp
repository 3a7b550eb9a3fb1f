#include "dimwit/random.hpp"

#include <cmath>

namespace dimwit {

namespace {

std::vector<cplx> gaussian_vector(int dim, Field field, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> v(static_cast<std::size_t>(dim));
  for (auto& x : v) {
    const double re = g(rng);
    x = field == Field::Real ? cplx(re, 0.0) : cplx(re, g(rng));
  }
  return v;
}

}  // namespace

StateVector random_state(int dim, Field field, Rng& rng) {
  for (;;) {
    auto v = gaussian_vector(dim, field, rng);
    if (norm(v) > 1e-6) return StateVector::normalized(std::move(v), field);
  }
}

Effect random_effect(int dim, Field field, int rank, Rng& rng) {
  if (rank < 1 || rank > dim) throw StructuralError("effect rank out of range");
  for (;;) {
    std::vector<std::vector<cplx>> vs;
    vs.reserve(static_cast<std::size_t>(rank));
    for (int t = 0; t < rank; ++t) vs.push_back(gaussian_vector(dim, field, rng));
    try {
      auto ortho = gram_schmidt_vectors(std::move(vs));
      std::vector<StateVector> cols;
      cols.reserve(ortho.size());
      for (auto& o : ortho) cols.emplace_back(StateVector::normalized(std::move(o), field));
      return Effect::projector(std::move(cols));
    } catch (const DegenerateInputError&) {
      // measure-zero event; redraw
    }
  }
}

Scenario random_scenario(int dim, Field field, int k, Rng& rng, int max_rank) {
  if (max_rank <= 0) max_rank = std::max(1, dim / 2);
  Scenario s;
  s.dim = dim;
  s.field = field;
  for (int j = 0; j <= k; ++j)
    s.preparations.push_back(Preparation::pure(random_state(dim, field, rng)));
  for (int i = 0; i < k; ++i) {
    const int rank = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank));
    s.effects.push_back(random_effect(dim, field, rank, rng));
  }
  s.validate();
  return s;
}

CMat random_unitary(int dim, Field field, Rng& rng) {
  std::vector<std::vector<cplx>> cols;
  for (int j = 0; j < dim; ++j) cols.push_back(gaussian_vector(dim, field, rng));
  cols = gram_schmidt_vectors(std::move(cols));
  CMat u(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) u(i, j) = cols[static_cast<std::size_t>(j)][i];
  return u;
}

Scenario rotate_preparations(const Scenario& s, const CMat& u) {
  Scenario out = s;
  const CMat ud = dagger(u);
  out.preparations.clear();
  for (const auto& p : s.preparations) {
    CMat rho = u * p.matrix() * ud;
    // Round away the numerical imaginary dust on real scenarios.
    if (s.field == Field::Real)
      for (std::size_t i = 0; i < rho.rows(); ++i)
        for (std::size_t j = 0; j < rho.cols(); ++j) rho(i, j) = cplx(rho(i, j).real(), 0.0);
    out.preparations.push_back(Preparation::from_matrix(std::move(rho)));
  }
  return out;
}

}  // namespace dimwit
