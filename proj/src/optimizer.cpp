#include "dimwit/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "dimwit/witness.hpp"
#include "fast_eval.hpp"

namespace dimwit {

namespace {

using detail::FastScenario;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Slot {
  int support = 0;
  int polar = 0;
  int phases = 0;
  bool last_real = false;
};

// Angle layout per preparation/effect vector.
std::vector<Slot> prep_slots(int dim, int k, Field field) {
  std::vector<Slot> slots;
  for (int j = 1; j <= k + 1; ++j) {
    Slot s;
    s.support = std::min(j, dim);
    s.polar = s.support - 1;
    s.last_real = j <= dim;
    s.phases = field == Field::Complex
                   ? (s.last_real ? std::max(0, s.support - 2) : dim - 1)
                   : 0;
    slots.push_back(s);
  }
  return slots;
}

Slot generic_slot(int dim, Field field) {
  Slot s;
  s.support = dim;
  s.polar = dim - 1;
  s.last_real = false;
  s.phases = field == Field::Complex ? dim - 1 : 0;
  return s;
}

std::vector<cplx> decode_vector(const Slot& s, int dim, const double* a) {
  std::vector<cplx> v(static_cast<std::size_t>(dim), cplx(0.0, 0.0));
  std::vector<double> mag(static_cast<std::size_t>(s.support), 1.0);
  double sines = 1.0;
  for (int c = 0; c < s.polar; ++c) {
    mag[static_cast<std::size_t>(c)] = sines * std::cos(a[c]);
    sines *= std::sin(a[c]);
  }
  if (s.support > 0) mag[static_cast<std::size_t>(s.support - 1)] = sines;
  const double* phase = a + s.polar;
  int used_phases = 0;
  for (int c = 0; c < s.support; ++c) {
    const bool phased = c >= 1 && used_phases < s.phases &&
                        !(s.last_real && c == s.support - 1);
    if (phased) {
      const double ph = phase[used_phases++];
      v[static_cast<std::size_t>(c)] =
          mag[static_cast<std::size_t>(c)] * cplx(std::cos(ph), std::sin(ph));
    } else {
      v[static_cast<std::size_t>(c)] = cplx(mag[static_cast<std::size_t>(c)], 0.0);
    }
  }
  return v;
}

FastScenario decode_fast(const AngleParametrization& p, const std::vector<double>& angles) {
  FastScenario f;
  f.dim = p.dim;
  f.field = p.field;
  const double* a = angles.data();
  for (const Slot& slot : prep_slots(p.dim, p.k, p.field)) {
    f.preps.push_back(decode_vector(slot, p.dim, a));
    a += slot.polar + slot.phases;
  }
  const Slot g = generic_slot(p.dim, p.field);
  for (int i = 0; i < p.k; ++i) {
    std::vector<std::vector<cplx>> cols;
    if (!p.fixed_blocks.empty())
      for (int b : p.fixed_blocks[static_cast<std::size_t>(i)]) {
        std::vector<cplx> e(static_cast<std::size_t>(p.dim), cplx(0.0, 0.0));
        e[static_cast<std::size_t>(b)] = cplx(1.0, 0.0);
        cols.push_back(std::move(e));
      }
    for (int t = 0; t < p.effect_ranks[static_cast<std::size_t>(i)]; ++t) {
      cols.push_back(decode_vector(g, p.dim, a));
      a += g.polar + g.phases;
    }
    f.effects.push_back(gram_schmidt_vectors(std::move(cols)));
  }
  return f;
}

}  // namespace

AngleParametrization AngleParametrization::uniform(int dim, int k, Field field,
                                                   int rank) {
  AngleParametrization p;
  p.dim = dim;
  p.k = k;
  p.field = field;
  p.effect_ranks.assign(static_cast<std::size_t>(k), rank);
  p.validate();
  return p;
}

void AngleParametrization::validate() const {
  if (dim < 2) throw StructuralError("parametrization needs dim >= 2");
  if (k < 1) throw StructuralError("parametrization needs k >= 1");
  if (static_cast<int>(effect_ranks.size()) != k)
    throw StructuralError("one effect rank per effect required");
  if (!fixed_blocks.empty() && static_cast<int>(fixed_blocks.size()) != k)
    throw StructuralError("fixed blocks must be given for every effect or none");
  for (int i = 0; i < k; ++i) {
    const int rank = effect_ranks[static_cast<std::size_t>(i)];
    const int fixed =
        fixed_blocks.empty()
            ? 0
            : static_cast<int>(fixed_blocks[static_cast<std::size_t>(i)].size());
    if (rank < 1 || rank + fixed > dim)
      throw StructuralError("effect rank plus fixed blocks exceeds dimension");
    if (!fixed_blocks.empty())
      for (int b : fixed_blocks[static_cast<std::size_t>(i)])
        if (b < 0 || b >= dim) throw StructuralError("fixed block index out of range");
  }
}

int AngleParametrization::angle_count() const {
  validate();
  int n = 0;
  for (const Slot& s : prep_slots(dim, k, field)) n += s.polar + s.phases;
  const Slot g = generic_slot(dim, field);
  for (int rank : effect_ranks) n += rank * (g.polar + g.phases);
  return n;
}

Scenario AngleParametrization::decode(const std::vector<double>& angles) const {
  validate();
  if (static_cast<int>(angles.size()) != angle_count())
    throw StructuralError("angle vector length does not match the parametrization");
  Scenario s = detail::fast_to(decode_fast(*this, angles));
  return s;
}

void AnnealSchedule::validate() const {
  if (!(t0 > 0.0)) throw StructuralError("t0 must be positive");
  if (!(ratio > 0.0 && ratio < 1.0)) throw StructuralError("ratio must be in (0,1)");
  if (!(precision > 0.0)) throw StructuralError("precision must be positive");
  if (sweeps_per_stage < 1) throw StructuralError("sweeps_per_stage must be positive");
}

int AnnealSchedule::derived_max_stages() const {
  validate();
  // The proposal window starts at pi and shrinks with the temperature; stop
  // once it falls below the requested precision.
  int s = 0;
  double width = std::numbers::pi;
  while (width >= precision && s < 10000) {
    width *= ratio;
    ++s;
  }
  return s;
}

namespace {

double objective(const AngleParametrization& params, const std::vector<double>& angles) {
  // Degenerate orthogonalization marks an invalid proposal; scored so that
  // Metropolis never accepts it.
  try {
    return detail::fast_abs_witness(decode_fast(params, angles));
  } catch (const DegenerateInputError&) {
    return -1.0;
  }
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0.0 ? a + kTwoPi : a;
}

}  // namespace

OptimizationResult anneal(const AngleParametrization& params,
                          const AnnealSchedule& schedule) {
  params.validate();
  schedule.validate();
  const int n = params.angle_count();
  const int stages = schedule.max_stages > 0
                         ? std::min(schedule.max_stages, schedule.derived_max_stages())
                         : schedule.derived_max_stages();

  Rng rng(schedule.seed);
  OptimizationResult out;
  out.seed = schedule.seed;

  std::vector<double> angles(static_cast<std::size_t>(n));
  double current = -1.0;
  for (int attempt = 0; attempt < 64 && current < 0.0; ++attempt) {
    for (auto& a : angles) a = uniform(rng, 0.0, kTwoPi);
    current = objective(params, angles);
    ++out.evaluations;
  }
  if (!std::isfinite(current))
    throw NumericIntegrityError("objective is not finite");
  double best = current;
  std::vector<double> best_angles = angles;

  double temp = schedule.t0;
  for (int stage = 0; stage < stages; ++stage) {
    const double width = std::numbers::pi * temp / schedule.t0;
    for (int sweep = 0; sweep < schedule.sweeps_per_stage; ++sweep) {
      for (int idx = 0; idx < n; ++idx) {
        const double old = angles[static_cast<std::size_t>(idx)];
        angles[static_cast<std::size_t>(idx)] =
            wrap_angle(old + uniform(rng, -width, width));
        const double cand = objective(params, angles);
        ++out.evaluations;
        if (!std::isfinite(cand))
          throw NumericIntegrityError("objective is not finite");
        const double delta = current - cand;  // minimizing -|W|
        if (delta <= 0.0 || uniform01(rng) < std::exp(-delta / temp)) {
          current = cand;
          if (cand > best) {
            best = cand;
            best_angles = angles;
          }
        } else {
          angles[static_cast<std::size_t>(idx)] = old;
        }
      }
    }
    out.stage_best.push_back(best);
    temp *= schedule.ratio;
  }

  out.best_value = best;
  out.best_angles = std::move(best_angles);
  out.best_scenario = params.decode(out.best_angles);
  return out;
}

OptimizationResult anneal_restarts(const AngleParametrization& params,
                                   const AnnealSchedule& schedule, int restarts,
                                   int jobs) {
  if (restarts < 1) throw StructuralError("need at least one restart");
  std::vector<OptimizationResult> results(static_cast<std::size_t>(restarts));
  auto run = [&](int t) {
    AnnealSchedule s = schedule;
    s.seed = derive_seed(schedule.seed, static_cast<std::uint64_t>(t));
    results[static_cast<std::size_t>(t)] = anneal(params, s);
  };
  if (jobs <= 1) {
    for (int t = 0; t < restarts; ++t) run(t);
  } else {
    std::vector<std::future<void>> fut;
    for (int t = 0; t < restarts; ++t)
      fut.push_back(std::async(std::launch::async, run, t));
    for (auto& f : fut) f.get();
  }
  std::size_t best = 0;
  std::uint64_t evals = 0;
  for (std::size_t t = 0; t < results.size(); ++t) {
    evals += results[t].evaluations;
    if (results[t].best_value > results[best].best_value) best = t;
  }
  OptimizationResult merged = std::move(results[best]);
  merged.evaluations = evals;
  return merged;
}

namespace {

// One movable amplitude component of a pure-state scenario.
struct Coord {
  bool is_prep = false;
  int member = 0;
  int column = 0;
  int comp = 0;
  bool imag = false;
};

std::vector<Coord> list_coords(const FastScenario& f) {
  std::vector<Coord> cs;
  const bool complex_field = f.field == Field::Complex;
  for (std::size_t j = 0; j < f.preps.size(); ++j)
    for (int c = 0; c < f.dim; ++c) {
      cs.push_back({true, static_cast<int>(j), 0, c, false});
      if (complex_field) cs.push_back({true, static_cast<int>(j), 0, c, true});
    }
  for (std::size_t i = 0; i < f.effects.size(); ++i)
    for (std::size_t col = 0; col < f.effects[i].size(); ++col)
      for (int c = 0; c < f.dim; ++c) {
        cs.push_back({false, static_cast<int>(i), static_cast<int>(col), c, false});
        if (complex_field)
          cs.push_back({false, static_cast<int>(i), static_cast<int>(col), c, true});
      }
  return cs;
}

// Applies the move into `cand`; false when the move degenerates.
bool apply_move(const FastScenario& f, const Coord& co, double delta,
                FastScenario& cand) {
  const cplx bump = co.imag ? cplx(0.0, delta) : cplx(delta, 0.0);
  if (co.is_prep) {
    cand.preps[static_cast<std::size_t>(co.member)] =
        f.preps[static_cast<std::size_t>(co.member)];
    auto& v = cand.preps[static_cast<std::size_t>(co.member)];
    v[static_cast<std::size_t>(co.comp)] += bump;
    const double nv = norm(v);
    if (nv < 1e-12) return false;
    for (auto& x : v) x /= nv;
    return true;
  }
  auto cols = f.effects[static_cast<std::size_t>(co.member)];
  cols[static_cast<std::size_t>(co.column)][static_cast<std::size_t>(co.comp)] += bump;
  try {
    cand.effects[static_cast<std::size_t>(co.member)] =
        gram_schmidt_vectors(std::move(cols));
  } catch (const DegenerateInputError&) {
    return false;
  }
  return true;
}

void undo_move(const FastScenario& f, const Coord& co, FastScenario& cand) {
  if (co.is_prep)
    cand.preps[static_cast<std::size_t>(co.member)] =
        f.preps[static_cast<std::size_t>(co.member)];
  else
    cand.effects[static_cast<std::size_t>(co.member)] =
        f.effects[static_cast<std::size_t>(co.member)];
}

}  // namespace

Scenario refine(const Scenario& s, double step0, double tol) {
  s.validate();
  if (!(step0 > 0.0) || !(tol > 0.0) || tol > step0)
    throw StructuralError("refine needs step0 >= tol > 0");
  FastScenario cur = detail::fast_from(s);
  double best = detail::fast_abs_witness(cur);
  const auto coords = list_coords(cur);
  FastScenario cand = cur;
  for (double step = step0; step >= tol;) {
    bool improved = false;
    for (const Coord& co : coords) {
      for (const double delta : {step, -step}) {
        if (!apply_move(cur, co, delta, cand)) {
          undo_move(cur, co, cand);
          continue;
        }
        const double v = detail::fast_abs_witness(cand);
        if (v > best) {
          best = v;
          if (co.is_prep)
            cur.preps[static_cast<std::size_t>(co.member)] =
                cand.preps[static_cast<std::size_t>(co.member)];
          else
            cur.effects[static_cast<std::size_t>(co.member)] =
                cand.effects[static_cast<std::size_t>(co.member)];
          improved = true;
        } else {
          undo_move(cur, co, cand);
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return detail::fast_to(cur);
}

RankSweepResult rank_sweep(int dim, int k, Field field, const AnnealSchedule& schedule,
                           int restarts, int jobs) {
  if (dim > 6 || k > 9)
    throw CapabilityError("rank sweep supports dim <= 6 and k <= 9");
  RankSweepResult out;
  const int max_rank = std::max(1, dim / 2);
  for (int rank = 1; rank <= max_rank; ++rank) {
    const auto params = AngleParametrization::uniform(dim, k, field, rank);
    AnnealSchedule s = schedule;
    s.seed = derive_seed(schedule.seed, 0x5eed, static_cast<std::uint64_t>(rank));
    out.runs.push_back({rank, anneal_restarts(params, s, restarts, jobs)});
  }
  for (std::size_t i = 0; i < out.runs.size(); ++i)
    if (out.best_index < 0 ||
        out.runs[i].result.best_value >
            out.runs[static_cast<std::size_t>(out.best_index)].result.best_value)
      out.best_index = static_cast<int>(i);
  const double top =
      out.runs[static_cast<std::size_t>(out.best_index)].result.best_value;
  for (const auto& run : out.runs)
    if (top - run.result.best_value <= 1e-6) out.tie_ranks.push_back(run.rank);
  return out;
}

}  // namespace dimwit
