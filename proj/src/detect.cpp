#include "dimwit/detect.hpp"

#include <cmath>

#include "dimwit/witness.hpp"

namespace dimwit {

void PerturbedScenario::validate() const {
  base.validate();
  const std::size_t n = static_cast<std::size_t>(base.k()) + 1;
  if (delta_p.rows() != n || delta_p.cols() != n)
    throw StructuralError("delta_p shape must match the probability matrix");
  for (std::size_t j = 0; j < n; ++j)
    if (delta_p(n - 1, j) != 0.0)
      throw StructuralError("the always-yes row of delta_p must be zero");
  const ProbabilityMatrix pm = build_probability_matrix(base);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = pm.at(i, j) + delta_p(i, j);
      if (v < -1e-12 || v > 1.0 + 1e-12)
        throw StructuralError("perturbed probabilities must stay in [0,1]");
    }
}

double first_order_witness(const PerturbedScenario& ps) {
  ps.validate();
  const Mat adj = adjugate(build_probability_matrix(ps.base));
  const std::size_t n = adj.rows();
  double w = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w += ps.delta_p(i, j) * adj(j, i);
  return w;
}

double second_order_witness(const PerturbedScenario& ps) {
  ps.validate();
  const Mat p0 = build_probability_matrix(ps.base).entries();
  const std::size_t n = p0.rows();
  double w = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t i2 = i + 1; i2 < n; ++i2)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t j2 = 0; j2 < n; ++j2) {
          if (j == j2) continue;
          const double d = ps.delta_p(i, j) * ps.delta_p(i2, j2);
          if (d == 0.0) continue;
          const double sgn_j = j2 > j ? 1.0 : -1.0;
          const double parity = ((i + j + i2 + j2) % 2 == 0) ? 1.0 : -1.0;
          w += sgn_j * parity * d * minor2_det(p0, i, i2, j, j2);
        }
  return w;
}

double null_variance(const ProbabilityMatrix& pm, std::int64_t n_shots) {
  if (n_shots < 1) throw StructuralError("need at least one shot");
  const Mat adj = adjugate(pm);
  const std::size_t n = adj.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double p = pm.at(i, j);
      s += p * (1.0 - p) * adj(j, i) * adj(j, i);
    }
  return s / static_cast<double>(n_shots);
}

double null_variance_second(const ProbabilityMatrix& pm, std::int64_t n_shots) {
  if (n_shots < 1) throw StructuralError("need at least one shot");
  const Mat& p = pm.entries();
  const std::size_t n = p.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t i2 = i + 1; i2 < n; ++i2)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t j2 = 0; j2 < n; ++j2) {
          if (j == j2) continue;
          const double var = p(i, j) * (1.0 - p(i, j)) * p(i2, j2) * (1.0 - p(i2, j2));
          if (var == 0.0) continue;
          const double m = minor2_det(p, i, i2, j, j2);
          s += var * m * m;
        }
  return s / (static_cast<double>(n_shots) * static_cast<double>(n_shots));
}

void ShotData::validate() const {
  if (shots < 1) throw StructuralError("shot data needs N >= 1");
  if (counts.rows() + 1 != counts.cols() || counts.rows() < 1)
    throw StructuralError("shot counts must be k x (k+1)");
  for (std::size_t i = 0; i < counts.rows(); ++i)
    for (std::size_t j = 0; j < counts.cols(); ++j)
      if (counts(i, j) < 0 || counts(i, j) > shots)
        throw StructuralError("cell counts must lie in [0, N]");
}

ShotData simulate_shots(const ProbabilityMatrix& pm, std::int64_t n_shots,
                        std::uint64_t seed) {
  if (n_shots < 1) throw StructuralError("need at least one shot");
  const std::size_t k = static_cast<std::size_t>(pm.k());
  ShotData data;
  data.shots = n_shots;
  data.seed = seed;
  data.counts = Matrix<std::int64_t>(k, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= k; ++j) {
      Rng cell_rng(derive_seed(seed, i + 1, j + 1));
      data.counts(i, j) = binomial_sample(n_shots, pm.at(i, j), cell_rng);
    }
  return data;
}

ShotData simulate_shots(const Scenario& s, std::int64_t n_shots, std::uint64_t seed) {
  return simulate_shots(build_probability_matrix(s), n_shots, seed);
}

ProbabilityMatrix estimated_probabilities(const ShotData& data) {
  data.validate();
  const std::size_t k = data.counts.rows();
  Mat p(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      p(i, j) = static_cast<double>(data.counts(i, j)) / static_cast<double>(data.shots);
  for (std::size_t j = 0; j <= k; ++j) p(k, j) = 1.0;
  return ProbabilityMatrix(std::move(p));
}

double witness_estimate(const ShotData& data) {
  return witness(estimated_probabilities(data));
}

const char* to_string(Verdict v) {
  return v == Verdict::Consistent ? "consistent" : "excess-dimension";
}

Decision decide(double w_hat, double variance, double z) {
  if (!(variance > 0.0)) throw StructuralError("decision needs a positive variance");
  if (!(z > 0.0)) throw StructuralError("decision threshold must be positive");
  Decision d;
  d.witness_hat = w_hat;
  d.variance = variance;
  d.threshold = z;
  d.z_score = std::abs(w_hat) / std::sqrt(variance);
  d.verdict = (w_hat * w_hat > z * z * variance) ? Verdict::ExcessDimension
                                                 : Verdict::Consistent;
  return d;
}

namespace {

std::vector<cplx> embedded_amplitudes(const StateVector& v, int new_dim) {
  std::vector<cplx> a(static_cast<std::size_t>(new_dim), cplx(0.0, 0.0));
  for (int c = 0; c < v.dim(); ++c) a[static_cast<std::size_t>(c)] = v.amplitudes()[c];
  return a;
}

const StateVector& pure_prep(const Preparation& p) {
  if (!p.pure_source())
    throw StructuralError("this operation needs pure preparations");
  return *p.pure_source();
}

}  // namespace

Scenario embed_scenario(const Scenario& s, int new_dim, Field new_field) {
  s.validate();
  if (new_dim < s.dim) throw StructuralError("embedding cannot shrink the dimension");
  if (s.field == Field::Complex && new_field == Field::Real)
    throw StructuralError("cannot embed a complex scenario into a real field");
  Scenario out;
  out.dim = new_dim;
  out.field = new_field;
  for (const auto& p : s.preparations)
    out.preparations.push_back(Preparation::pure(
        StateVector(embedded_amplitudes(pure_prep(p), new_dim), new_field)));
  for (const auto& e : s.effects) {
    std::vector<StateVector> cols;
    for (const auto& c : e.columns())
      cols.emplace_back(embedded_amplitudes(c, new_dim), new_field);
    out.effects.push_back(Effect::projector(std::move(cols)));
  }
  out.validate();
  return out;
}

Mat leak_delta_p(const Scenario& base, const std::vector<std::vector<cplx>>& prep_leaks,
                 const std::vector<std::vector<cplx>>& effect_leaks) {
  base.validate();
  const std::size_t m = base.preparations.size();
  const std::size_t k = base.effects.size();
  if (prep_leaks.size() != m || effect_leaks.size() != k)
    throw StructuralError("one leak vector per preparation and per effect required");
  const std::size_t big = prep_leaks.front().size();
  Mat dp(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (base.effects[i].rank() != 1)
      throw StructuralError("leak deviations support rank-1 effects");
    const auto y = embedded_amplitudes(base.effects[i].columns()[0],
                                       static_cast<int>(big));
    const auto& yl = effect_leaks[i];
    if (yl.size() != big) throw StructuralError("leak vector dimension mismatch");
    for (std::size_t j = 0; j < m; ++j) {
      const auto x =
          embedded_amplitudes(pure_prep(base.preparations[j]), static_cast<int>(big));
      const auto& xl = prep_leaks[j];
      if (xl.size() != big) throw StructuralError("leak vector dimension mismatch");
      // Tr(dY dX) for dX = |x'><x| + |x><x'|, dY likewise: four pairings.
      const cplx term = inner(y, xl) * inner(x, yl) + inner(y, x) * inner(xl, yl) +
                        inner(yl, xl) * inner(x, y) + inner(yl, x) * inner(xl, y);
      if (std::abs(term.imag()) > 1e-10)
        throw NumericIntegrityError("leak deviation has an imaginary residue");
      dp(i, j) = term.real();
    }
  }
  return dp;
}

Scenario leaky_scenario(const Scenario& base,
                        const std::vector<std::vector<cplx>>& prep_leaks,
                        const std::vector<std::vector<cplx>>& effect_leaks) {
  base.validate();
  if (prep_leaks.size() != base.preparations.size() ||
      effect_leaks.size() != base.effects.size())
    throw StructuralError("one leak vector per preparation and per effect required");
  const int big = static_cast<int>(prep_leaks.front().size());
  Scenario out;
  out.dim = big;
  out.field = Field::Complex;
  for (std::size_t j = 0; j < base.preparations.size(); ++j) {
    auto a = embedded_amplitudes(pure_prep(base.preparations[j]), big);
    for (std::size_t c = 0; c < a.size(); ++c) a[c] += prep_leaks[j][c];
    out.preparations.push_back(
        Preparation::pure(StateVector::normalized(std::move(a), Field::Complex)));
  }
  for (std::size_t i = 0; i < base.effects.size(); ++i) {
    if (base.effects[i].rank() != 1)
      throw StructuralError("leak deviations support rank-1 effects");
    auto a = embedded_amplitudes(base.effects[i].columns()[0], big);
    for (std::size_t c = 0; c < a.size(); ++c) a[c] += effect_leaks[i][c];
    out.effects.push_back(Effect::projector(
        {StateVector::normalized(std::move(a), Field::Complex)}));
  }
  out.validate();
  return out;
}

}  // namespace dimwit
