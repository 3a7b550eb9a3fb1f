#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimwit/linalg.hpp"

namespace dimwit {

// Number field of a scenario. Real scenarios must have exactly zero
// imaginary parts everywhere, not merely small ones.
enum class Field { Real, Complex };

// System model for threshold counting: classical register, real quantum,
// complex quantum.
enum class WitnessModel { Classical, Real, Complex };

const char* to_string(Field f);
const char* to_string(WitnessModel m);

// Unit-norm pure state (or projector column).
class StateVector {
 public:
  StateVector(std::vector<cplx> amplitudes, Field field);

  // Normalizes before constructing.
  static StateVector normalized(std::vector<cplx> amplitudes, Field field);
  static StateVector basis(int dim, int index, Field field);

  int dim() const { return static_cast<int>(amp_.size()); }
  Field field() const { return field_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }

 private:
  std::vector<cplx> amp_;
  Field field_;
};

// Trace-one positive semidefinite Hermitian preparation. Pure preparations
// remember their source vector so local refinement can move them.
class Preparation {
 public:
  static Preparation pure(const StateVector& v);
  static Preparation from_matrix(CMat rho);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const CMat& matrix() const { return rho_; }
  const std::optional<StateVector>& pure_source() const { return pure_; }

 private:
  Preparation() = default;
  CMat rho_;
  std::optional<StateVector> pure_;
};

// Measurement effect 0 <= Y <= 1. The normal form is a projector given by
// orthonormal columns; arbitrary Hermitian effects enter only through
// from_matrix (used by the statistics module).
class Effect {
 public:
  static Effect projector(std::vector<StateVector> columns);
  static Effect from_matrix(CMat y);

  int dim() const { return dim_; }
  bool projector_form() const { return !raw_.has_value(); }
  // Number of projector columns; capability error for raw-matrix effects.
  int rank() const;
  const std::vector<StateVector>& columns() const;
  CMat as_matrix() const;

 private:
  Effect() = default;
  int dim_ = 0;
  std::vector<StateVector> cols_;
  std::optional<CMat> raw_;
};

// k+1 preparations and k effects over a common dimension and field.
// The always-yes effect is implicit and never stored.
struct Scenario {
  int dim = 0;
  Field field = Field::Complex;
  std::vector<Preparation> preparations;
  std::vector<Effect> effects;

  int k() const { return static_cast<int>(effects.size()); }
  void validate() const;
  std::string digest() const;
};

// (k+1)x(k+1) matrix of outcome probabilities, last row identically one.
class ProbabilityMatrix {
 public:
  explicit ProbabilityMatrix(Mat entries);

  int k() const { return static_cast<int>(entries_.rows()) - 1; }
  const Mat& entries() const { return entries_; }
  double at(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  Mat entries_;
};

struct WitnessReport {
  double witness = 0.0;
  ProbabilityMatrix probability_matrix;
  std::string scenario_digest;
  std::map<std::string, std::string> metadata;
};

struct MinimalCounts {
  int k = 0;
  int m = 0;
};

}  // namespace dimwit
