#include "dimwit/witness.hpp"

#include <cmath>

namespace dimwit {

double probability(const Preparation& prep, const Effect& eff) {
  if (prep.dim() != eff.dim())
    throw StructuralError("preparation/effect dimension mismatch");
  cplx tr = 0.0;
  if (eff.projector_form()) {
    // Tr(|v><v| X) = <v|X|v> summed over projector columns.
    const CMat& x = prep.matrix();
    for (const auto& col : eff.columns()) {
      const auto& v = col.amplitudes();
      for (std::size_t i = 0; i < v.size(); ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j) row += x(i, j) * v[j];
        tr += std::conj(v[i]) * row;
      }
    }
  } else {
    const CMat y = eff.as_matrix();
    const CMat& x = prep.matrix();
    for (std::size_t a = 0; a < y.rows(); ++a)
      for (std::size_t b = 0; b < y.cols(); ++b) tr += y(a, b) * x(b, a);
  }
  if (std::abs(tr.imag()) > 1e-10)
    throw NumericIntegrityError("probability trace has a non-negligible imaginary part");
  const double p = tr.real();
  if (p < -1e-10 || p > 1.0 + 1e-10)
    throw NumericIntegrityError("probability outside [0,1] beyond tolerance");
  return std::min(1.0, std::max(0.0, p));
}

ProbabilityMatrix build_probability_matrix(const Scenario& s) {
  s.validate();
  const std::size_t k = s.effects.size();
  Mat m(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      m(i, j) = probability(s.preparations[j], s.effects[i]);
  for (std::size_t j = 0; j <= k; ++j) m(k, j) = 1.0;
  return ProbabilityMatrix(std::move(m));
}

double witness(const ProbabilityMatrix& pm) {
  const double det = lu_det(pm.entries());
  if (std::abs(det) > hadamard_bound(pm.k()) + 1e-9)
    throw NumericIntegrityError("witness exceeds the Hadamard bound");
  return det;
}

double witness(const Scenario& s) { return witness(build_probability_matrix(s)); }

WitnessReport witness_report(const Scenario& s,
                             std::map<std::string, std::string> metadata) {
  ProbabilityMatrix pm = build_probability_matrix(s);
  const double w = witness(pm);
  return WitnessReport{w, std::move(pm), s.digest(), std::move(metadata)};
}

Mat reduce_columns(const ProbabilityMatrix& pm) {
  const std::size_t k = static_cast<std::size_t>(pm.k());
  Mat r(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r(i, j) = pm.at(i, j) - pm.at(i, k);
  return r;
}

Mat adjugate(const ProbabilityMatrix& pm) { return adjugate_mat(pm.entries()); }

double pm_minor(const ProbabilityMatrix& pm, std::pair<int, int> rows,
                std::pair<int, int> cols) {
  const int n = pm.k() + 1;
  if (rows.first == rows.second || cols.first == cols.second)
    throw StructuralError("minor indices must be distinct");
  for (int v : {rows.first, rows.second, cols.first, cols.second})
    if (v < 0 || v >= n) throw StructuralError("minor index out of range");
  return minor2_det(pm.entries(), rows.first, rows.second, cols.first, cols.second);
}

std::vector<StateVector> gram_schmidt(const std::vector<StateVector>& vs) {
  if (vs.empty()) return {};
  const Field f = vs.front().field();
  std::vector<std::vector<cplx>> raw;
  raw.reserve(vs.size());
  for (const auto& v : vs) raw.push_back(v.amplitudes());
  raw = gram_schmidt_vectors(std::move(raw));
  std::vector<StateVector> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.push_back(StateVector::normalized(std::move(r), f));
  return out;
}

StateVector bloch_vector_state(const std::array<double, 3>& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (std::abs(n - 1.0) > 1e-12)
    throw StructuralError("pure Bloch state needs a unit vector");
  const double theta = std::acos(std::min(1.0, std::max(-1.0, v[2])));
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  if (v[1] == 0.0) {
    // Keep real scenarios exactly real.
    const double sign = v[0] >= 0.0 ? 1.0 : -1.0;
    return StateVector::normalized({cplx(c, 0.0), cplx(sign * s, 0.0)}, Field::Real);
  }
  const double phi = std::atan2(v[1], v[0]);
  return StateVector::normalized({cplx(c, 0.0), s * cplx(std::cos(phi), std::sin(phi))},
                                 Field::Complex);
}

Preparation bloch_state(const std::array<double, 3>& v) {
  const double n2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  if (n2 > 1.0 + 1e-12) throw StructuralError("Bloch vector must have |v| <= 1");
  if (std::abs(n2 - 1.0) <= 1e-12) return Preparation::pure(bloch_vector_state(v));
  CMat rho(2, 2);
  rho(0, 0) = cplx((1.0 + v[2]) / 2.0, 0.0);
  rho(1, 1) = cplx((1.0 - v[2]) / 2.0, 0.0);
  rho(0, 1) = cplx(v[0] / 2.0, -v[1] / 2.0);
  rho(1, 0) = cplx(v[0] / 2.0, v[1] / 2.0);
  return Preparation::from_matrix(std::move(rho));
}

Effect bloch_effect(const std::array<double, 3>& v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (n > 1.0 + 1e-12) throw StructuralError("Bloch vector must have |v| <= 1");
  if (std::abs(n - 1.0) > 1e-12)
    throw StructuralError("rank-1 Bloch effect needs a unit vector");
  return Effect::projector({bloch_vector_state(v)});
}

std::array<double, 3> bloch_of(const CMat& op) {
  if (op.rows() != 2 || op.cols() != 2)
    throw StructuralError("Bloch components need a qubit operator");
  return {2.0 * op(0, 1).real(), -2.0 * op(0, 1).imag(),
          (op(0, 0) - op(1, 1)).real()};
}

namespace {

std::array<double, 3> cross(const std::array<double, 3>& a,
                            const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::array<double, 3> sub(const std::array<double, 3>& a,
                          const std::array<double, 3>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

}  // namespace

double qubit_witness_closed_form(const Scenario& s) {
  s.validate();
  if (s.dim != 2) throw StructuralError("closed form holds only for qubits");
  const int k = s.k();
  if (k != 2 && k != 3) throw StructuralError("closed form holds only for k = 2 or 3");
  std::vector<std::array<double, 3>> x, y;
  for (const auto& p : s.preparations) x.push_back(bloch_of(p.matrix()));
  for (const auto& e : s.effects) {
    if (!e.projector_form() || e.rank() != 1)
      throw StructuralError("closed form needs rank-1 effects");
    y.push_back(bloch_of(e.as_matrix()));
  }
  if (k == 2) {
    const auto a = sub(x[0], x[2]), b = sub(x[1], x[2]);
    return dot(cross(a, b), cross(y[0], y[1])) / 4.0;
  }
  const auto a = sub(x[0], x[3]), b = sub(x[1], x[3]), c = sub(x[2], x[3]);
  const double xs = dot(a, cross(b, c));
  const double ys = dot(y[0], cross(y[1], y[2]));
  return xs * ys / 8.0;
}

MinimalCounts minimal_counts(int d, WitnessModel model) {
  if (d < 1) throw StructuralError("dimension must be at least 1");
  int k = 0;
  switch (model) {
    case WitnessModel::Classical: k = d; break;
    case WitnessModel::Real: k = d * (d + 1) / 2; break;
    case WitnessModel::Complex: k = d * d; break;
  }
  return MinimalCounts{k, k + 1};
}

double hadamard_bound(int k) {
  if (k < 1) throw StructuralError("k must be at least 1");
  return std::exp(0.5 * (k + 1) * std::log(static_cast<double>(k + 1)) -
                  k * std::log(2.0));
}

}  // namespace dimwit
