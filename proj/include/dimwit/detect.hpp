#pragma once

#include <cstdint>

#include "dimwit/rng.hpp"
#include "dimwit/types.hpp"

namespace dimwit {

// Clean d-level scenario plus a small probability deviation produced by
// extra-space contributions. The always-yes row is exact, so the last row of
// delta_p must vanish.
struct PerturbedScenario {
  Scenario base;
  Mat delta_p;  // (k+1) x (k+1)
  void validate() const;
};

// First-order witness expansion Tr(delta_p Adj p0); valid at the minimal k
// for the base dimension, where the zeroth order vanishes.
double first_order_witness(const PerturbedScenario& ps);

// Second-order expansion over pairs of deviation cells and complementary
// minors; the leading term at minimal k + 1.
double second_order_witness(const PerturbedScenario& ps);

// Null-hypothesis variance of the witness estimator after n_shots
// repetitions per cell: sum of p(1-p) Adj^2 / N.
double null_variance(const ProbabilityMatrix& pm, std::int64_t n_shots);

// Second-order analogue: pair sum of p(1-p) products times squared minors
// over N^2.
double null_variance_second(const ProbabilityMatrix& pm, std::int64_t n_shots);

// Finite-shot counts, one binomial draw per (measurement, preparation) cell.
struct ShotData {
  std::int64_t shots = 0;
  Matrix<std::int64_t> counts;  // k x (k+1)
  std::uint64_t seed = 0;
  void validate() const;
};

ShotData simulate_shots(const ProbabilityMatrix& pm, std::int64_t n_shots,
                        std::uint64_t seed);
ShotData simulate_shots(const Scenario& s, std::int64_t n_shots, std::uint64_t seed);

// Estimated probability matrix (counts/N with the ones row appended).
ProbabilityMatrix estimated_probabilities(const ShotData& data);

// Witness of the estimated probability matrix.
double witness_estimate(const ShotData& data);

enum class Verdict { Consistent, ExcessDimension };

const char* to_string(Verdict v);

// The test can only falsify the assumed dimension: the verdict is either
// "consistent" or "excess dimension", never a certification.
struct Decision {
  Verdict verdict = Verdict::Consistent;
  double witness_hat = 0.0;
  double variance = 0.0;
  double z_score = 0.0;
  double threshold = 5.0;
};

Decision decide(double w_hat, double variance, double z = 5.0);

// Physical deviation path. Base states live in the first base.dim levels of
// an enlarged space; each leak vector (orthogonal deviation, already small)
// perturbs the matching preparation or rank-1 effect.

// Same scenario embedded into new_dim levels (extra amplitudes zero).
Scenario embed_scenario(const Scenario& s, int new_dim, Field new_field);

// delta_p from the exact bilinear deviation dX = |x'><x| + |x><x'|,
// dY = |y'><y| + |y><y'|: delta_p(i,j) = Tr(dY_i dX_j).
Mat leak_delta_p(const Scenario& base, const std::vector<std::vector<cplx>>& prep_leaks,
                 const std::vector<std::vector<cplx>>& effect_leaks);

// Exact perturbed scenario with normalized states x -> (x + x')/|x + x'|.
Scenario leaky_scenario(const Scenario& base,
                        const std::vector<std::vector<cplx>>& prep_leaks,
                        const std::vector<std::vector<cplx>>& effect_leaks);

}  // namespace dimwit
