#pragma once

#include <cstdint>
#include <vector>

#include "dimwit/rng.hpp"
#include "dimwit/types.hpp"

namespace dimwit {

// Gauge-fixed angle coordinates for a pure-state scenario.
//
// Preparations follow a staircase: the first one is pinned to the first
// basis vector, the j-th is supported on the first min(j, dim) basis vectors
// with its first and (for j <= dim) last supported components real. Later
// preparations and all effect vectors are generic rays with a real first
// component. Effect vectors are orthonormalized per effect, after any fixed
// basis-projector blocks.
struct AngleParametrization {
  int dim = 0;
  int k = 0;
  Field field = Field::Complex;
  std::vector<int> effect_ranks;               // length k, annealed columns per effect
  std::vector<std::vector<int>> fixed_blocks;  // optional, length k; basis indices

  static AngleParametrization uniform(int dim, int k, Field field, int rank);

  void validate() const;
  int angle_count() const;
  Scenario decode(const std::vector<double>& angles) const;
};

struct AnnealSchedule {
  double t0 = 0.003;  // acceptance scale matched to typical one-angle moves
  double ratio = 0.25;
  double precision = 1e-9;  // stop once the proposal width falls below this
  int max_stages = 0;       // 0: derive from precision
  int sweeps_per_stage = 200;
  std::uint64_t seed = 1;

  void validate() const;
  int derived_max_stages() const;
};

struct OptimizationResult {
  double best_value = 0.0;
  std::vector<double> best_angles;
  Scenario best_scenario;
  std::vector<double> stage_best;  // best |W| seen up to the end of each stage
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
};

// Metropolis annealing of |W| over the angle coordinates: one angle moves at
// a time by a uniform perturbation whose window shrinks with the
// temperature.
OptimizationResult anneal(const AngleParametrization& params,
                          const AnnealSchedule& schedule);

// Independent restarts with derived seeds; the best run wins (ties go to the
// lowest restart index). jobs > 1 runs restarts concurrently without
// changing the result.
OptimizationResult anneal_restarts(const AngleParametrization& params,
                                   const AnnealSchedule& schedule, int restarts,
                                   int jobs = 1);

// Coordinate-wise finite-difference ascent on the state amplitudes of a
// pure-state scenario. The objective |W| never decreases; stops once the
// step drops below tol.
Scenario refine(const Scenario& s, double step0 = 1e-2, double tol = 1e-7);

struct RankSweepRun {
  int rank = 0;
  OptimizationResult result;
};

struct RankSweepResult {
  std::vector<RankSweepRun> runs;  // one per admissible uniform rank profile
  int best_index = -1;
  std::vector<int> tie_ranks;  // ranks within 1e-6 of the best value
};

// Anneal every uniform effect rank 1..max(1, dim/2) and report the best.
RankSweepResult rank_sweep(int dim, int k, Field field,
                           const AnnealSchedule& schedule, int restarts = 1,
                           int jobs = 1);

}  // namespace dimwit
