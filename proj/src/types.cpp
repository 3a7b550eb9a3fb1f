#include "dimwit/types.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>

namespace dimwit {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
constexpr double kSpectralTol = 1e-10;
constexpr double kOrthoTol = 1e-10;

void require_real(const std::vector<cplx>& amp) {
  for (const cplx& a : amp)
    if (a.imag() != 0.0)
      throw StructuralError("real field forbids nonzero imaginary parts");
}

void require_real(const CMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).imag() != 0.0)
        throw StructuralError("real field forbids nonzero imaginary parts");
}

void require_hermitian(const CMat& m, double tol) {
  if (m.rows() != m.cols()) throw StructuralError("operator must be square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
        throw StructuralError("operator is not Hermitian within tolerance");
}

}  // namespace

const char* to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

const char* to_string(WitnessModel m) {
  switch (m) {
    case WitnessModel::Classical: return "classical";
    case WitnessModel::Real: return "real";
    case WitnessModel::Complex: return "complex";
  }
  return "?";
}

StateVector::StateVector(std::vector<cplx> amplitudes, Field field)
    : amp_(std::move(amplitudes)), field_(field) {
  if (amp_.empty()) throw StructuralError("state vector needs positive dimension");
  if (std::abs(norm(amp_) - 1.0) > kNormTol)
    throw StructuralError("state vector is not normalized");
  if (field_ == Field::Real) require_real(amp_);
}

StateVector StateVector::normalized(std::vector<cplx> amplitudes, Field field) {
  const double n = norm(amplitudes);
  if (n < 1e-14) throw DegenerateInputError("cannot normalize a zero vector");
  for (auto& a : amplitudes) a /= n;
  if (field == Field::Real)
    for (auto& a : amplitudes) a = cplx(a.real(), 0.0);
  return StateVector(std::move(amplitudes), field);
}

StateVector StateVector::basis(int dim, int index, Field field) {
  if (dim <= 0 || index < 0 || index >= dim)
    throw StructuralError("basis vector index out of range");
  std::vector<cplx> amp(static_cast<std::size_t>(dim), cplx(0.0, 0.0));
  amp[static_cast<std::size_t>(index)] = cplx(1.0, 0.0);
  return StateVector(std::move(amp), field);
}

Preparation Preparation::pure(const StateVector& v) {
  Preparation p;
  const auto& a = v.amplitudes();
  const std::size_t d = a.size();
  p.rho_ = CMat(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p.rho_(i, j) = a[i] * std::conj(a[j]);
  if (v.field() == Field::Real)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) p.rho_(i, j) = cplx(p.rho_(i, j).real(), 0.0);
  p.pure_ = v;
  return p;
}

Preparation Preparation::from_matrix(CMat rho) {
  require_hermitian(rho, kHermTol);
  cplx tr = 0.0;
  for (std::size_t i = 0; i < rho.rows(); ++i) tr += rho(i, i);
  if (std::abs(tr - cplx(1.0, 0.0)) > kTraceTol)
    throw StructuralError("preparation must have unit trace");
  const auto ev = hermitian_eigenvalues(rho);
  if (!ev.empty() && ev.front() < -kPsdTol)
    throw StructuralError("preparation is not positive semidefinite");
  Preparation p;
  p.rho_ = std::move(rho);
  return p;
}

Effect Effect::projector(std::vector<StateVector> columns) {
  Effect e;
  if (columns.empty()) throw StructuralError("projector effect needs at least one column");
  e.dim_ = columns.front().dim();
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].dim() != e.dim_)
      throw StructuralError("effect columns must share dimension");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(inner(columns[j].amplitudes(), columns[i].amplitudes())) > kOrthoTol)
        throw StructuralError("effect columns must be orthonormal");
  }
  if (static_cast<int>(columns.size()) > e.dim_)
    throw StructuralError("effect rank exceeds dimension");
  e.cols_ = std::move(columns);
  return e;
}

Effect Effect::from_matrix(CMat y) {
  require_hermitian(y, kHermTol);
  const auto ev = hermitian_eigenvalues(y);
  if (!ev.empty() && (ev.front() < -kSpectralTol || ev.back() > 1.0 + kSpectralTol))
    throw StructuralError("effect eigenvalues must lie in [0,1]");
  Effect e;
  e.dim_ = static_cast<int>(y.rows());
  e.raw_ = std::move(y);
  return e;
}

int Effect::rank() const {
  if (!projector_form())
    throw CapabilityError("rank is defined only for projector-form effects");
  return static_cast<int>(cols_.size());
}

const std::vector<StateVector>& Effect::columns() const {
  if (!projector_form())
    throw CapabilityError("raw-matrix effects have no column decomposition");
  return cols_;
}

CMat Effect::as_matrix() const {
  if (raw_) return *raw_;
  CMat y(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
  for (const auto& col : cols_) {
    const auto& a = col.amplitudes();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) y(i, j) += a[i] * std::conj(a[j]);
  }
  return y;
}

void Scenario::validate() const {
  if (dim <= 0) throw StructuralError("scenario dimension must be positive");
  if (effects.empty()) throw StructuralError("scenario needs at least one effect");
  if (preparations.size() != effects.size() + 1)
    throw StructuralError("scenario needs exactly k+1 preparations for k effects");
  for (const auto& p : preparations) {
    if (p.dim() != dim) throw StructuralError("preparation dimension mismatch");
    if (field == Field::Real) require_real(p.matrix());
  }
  for (const auto& e : effects) {
    if (e.dim() != dim) throw StructuralError("effect dimension mismatch");
    if (field == Field::Real) require_real(e.as_matrix());
  }
}

namespace {

void fnv_mix(std::uint64_t& h, const void* p, std::size_t n) {
  const auto* b = static_cast<const unsigned char*>(p);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= b[i];
    h *= 1099511628211ull;
  }
}

void fnv_mix_cmat(std::uint64_t& h, const CMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const double re = m(i, j).real(), im = m(i, j).imag();
      fnv_mix(h, &re, sizeof re);
      fnv_mix(h, &im, sizeof im);
    }
}

}  // namespace

std::string Scenario::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  fnv_mix(h, &dim, sizeof dim);
  const int f = field == Field::Real ? 0 : 1;
  fnv_mix(h, &f, sizeof f);
  for (const auto& p : preparations) fnv_mix_cmat(h, p.matrix());
  for (const auto& e : effects) fnv_mix_cmat(h, e.as_matrix());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

ProbabilityMatrix::ProbabilityMatrix(Mat entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 2)
    throw StructuralError("probability matrix must be square, at least 2x2");
  const std::size_t n = entries_.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = entries_(i, j);
      if (!(v >= -1e-12 && v <= 1.0 + 1e-12))
        throw StructuralError("probability entries must lie in [0,1]");
    }
  for (std::size_t j = 0; j < n; ++j)
    if (entries_(n - 1, j) != 1.0)
      throw StructuralError("last probability row must be identically one");
}

}  // namespace dimwit
