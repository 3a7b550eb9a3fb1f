#pragma once

// Internal light-weight scenario representation for hot loops: pure
// preparation vectors and orthonormal effect columns, no validation per
// evaluation. Converted to/from the public Scenario at the boundaries.

#include <vector>

#include "dimwit/linalg.hpp"
#include "dimwit/types.hpp"

namespace dimwit::detail {

struct FastScenario {
  int dim = 0;
  Field field = Field::Complex;
  std::vector<std::vector<cplx>> preps;
  std::vector<std::vector<std::vector<cplx>>> effects;  // orthonormal columns

  int k() const { return static_cast<int>(effects.size()); }
};

inline FastScenario fast_from(const Scenario& s) {
  FastScenario f;
  f.dim = s.dim;
  f.field = s.field;
  for (const auto& p : s.preparations) {
    if (!p.pure_source())
      throw StructuralError("fast evaluation needs pure preparations");
    f.preps.push_back(p.pure_source()->amplitudes());
  }
  for (const auto& e : s.effects) {
    std::vector<std::vector<cplx>> cols;
    for (const auto& c : e.columns()) cols.push_back(c.amplitudes());
    f.effects.push_back(std::move(cols));
  }
  return f;
}

inline Scenario fast_to(const FastScenario& f) {
  Scenario s;
  s.dim = f.dim;
  s.field = f.field;
  for (const auto& p : f.preps)
    s.preparations.push_back(Preparation::pure(StateVector(p, f.field)));
  for (const auto& e : f.effects) {
    std::vector<StateVector> cols;
    for (const auto& c : e) cols.emplace_back(c, f.field);
    s.effects.push_back(Effect::projector(std::move(cols)));
  }
  s.validate();
  return s;
}

inline void fill_probabilities(const FastScenario& f, Mat& p) {
  const std::size_t k = f.effects.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= k; ++j) {
      double sum = 0.0;
      for (const auto& col : f.effects[i]) sum += std::norm(inner(col, f.preps[j]));
      p(i, j) = sum;
    }
  for (std::size_t j = 0; j <= k; ++j) p(k, j) = 1.0;
}

inline double fast_abs_witness(const FastScenario& f) {
  const std::size_t n = f.effects.size() + 1;
  Mat p(n, n);
  fill_probabilities(f, p);
  return std::abs(lu_det(p));
}

}  // namespace dimwit::detail
