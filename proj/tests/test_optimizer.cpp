#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dimwit/optimizer.hpp"
#include "dimwit/registry.hpp"
#include "dimwit/witness.hpp"

using namespace dimwit;

TEST_CASE("angle counts reproduce the published parameter tallies") {
  CHECK(AngleParametrization::uniform(4, 4, Field::Complex, 1).angle_count() == 39);
  CHECK(AngleParametrization::uniform(4, 4, Field::Complex, 2).angle_count() == 63);
  CHECK(AngleParametrization::uniform(2, 2, Field::Real, 1).angle_count() == 4);
}

TEST_CASE("decode yields valid scenarios and honors the real field") {
  Rng rng(47);
  for (const Field f : {Field::Real, Field::Complex}) {
    const auto p = AngleParametrization::uniform(3, 3, f, 1);
    for (int t = 0; t < 20; ++t) {
      std::vector<double> angles(static_cast<std::size_t>(p.angle_count()));
      for (auto& a : angles) a = uniform(rng, 0.0, 2.0 * 3.14159265358979);
      Scenario s;
      try {
        s = p.decode(angles);
      } catch (const DegenerateInputError&) {
        continue;  // measure-zero coincidence in the effect draw
      }
      s.validate();
      CHECK(s.dim == 3);
      CHECK(s.k() == 3);
      if (f == Field::Real)
        for (const auto& prep : s.preparations)
          for (const auto& a : prep.pure_source()->amplitudes())
            CHECK(a.imag() == 0.0);
    }
  }
}

TEST_CASE("all-zero angles collapse every preparation onto the first basis ray") {
  const auto p = AngleParametrization::uniform(4, 4, Field::Complex, 1);
  const std::vector<double> zeros(static_cast<std::size_t>(p.angle_count()), 0.0);
  const auto s = p.decode(zeros);
  for (const auto& prep : s.preparations) {
    CHECK(std::abs(prep.pure_source()->amplitudes()[0] - cplx(1, 0)) < 1e-14);
  }
  CHECK(std::abs(witness(s)) < 1e-12);
}

TEST_CASE("gauge staircase structure of the decoded preparations") {
  const auto p = AngleParametrization::uniform(4, 4, Field::Complex, 1);
  Rng rng(53);
  std::vector<double> angles(static_cast<std::size_t>(p.angle_count()));
  for (auto& a : angles) a = uniform(rng, 0.0, 6.28);
  const auto s = p.decode(angles);
  const auto& x1 = s.preparations[0].pure_source()->amplitudes();
  CHECK(std::abs(x1[0] - cplx(1, 0)) < 1e-14);
  const auto& x2 = s.preparations[1].pure_source()->amplitudes();
  CHECK(x2[0].imag() == 0.0);
  CHECK(x2[1].imag() == 0.0);
  CHECK(std::abs(x2[2]) == 0.0);
  const auto& x3 = s.preparations[2].pure_source()->amplitudes();
  CHECK(x3[0].imag() == 0.0);
  CHECK(x3[2].imag() == 0.0);  // last supported component stays real
  CHECK(std::abs(x3[3]) == 0.0);
}

TEST_CASE("fixed blocks appear as effect columns") {
  AngleParametrization p;
  p.dim = 4;
  p.k = 4;
  p.field = Field::Real;
  p.effect_ranks = {1, 1, 1, 1};
  p.fixed_blocks = {{3}, {3}, {3}, {3}};
  Rng rng(59);
  std::vector<double> angles(static_cast<std::size_t>(p.angle_count()));
  for (auto& a : angles) a = uniform(rng, 0.0, 6.28);
  const auto s = p.decode(angles);
  for (const auto& e : s.effects) {
    CHECK(e.rank() == 2);
    const auto& block = e.columns()[0].amplitudes();
    CHECK(std::abs(block[3] - cplx(1, 0)) < 1e-14);
  }
}

TEST_CASE("parametrization validation") {
  CHECK_THROWS_AS(AngleParametrization::uniform(1, 2, Field::Real, 1), StructuralError);
  CHECK_THROWS_AS(AngleParametrization::uniform(2, 2, Field::Real, 3), StructuralError);
  AngleParametrization p = AngleParametrization::uniform(4, 2, Field::Real, 2);
  p.fixed_blocks = {{3}, {3}};
  CHECK_NOTHROW(p.validate());
  p.fixed_blocks = {{4}, {3}};
  CHECK_THROWS_AS(p.validate(), StructuralError);
  const auto q = AngleParametrization::uniform(2, 2, Field::Real, 1);
  CHECK_THROWS_AS(q.decode({0.0}), StructuralError);
}

TEST_CASE("anneal is deterministic and budget-exact") {
  const auto p = AngleParametrization::uniform(2, 2, Field::Real, 1);
  AnnealSchedule sched;
  sched.seed = 7;
  const auto r1 = anneal(p, sched);
  const auto r2 = anneal(p, sched);
  CHECK(r1.best_value == r2.best_value);  // bit-for-bit
  CHECK(r1.best_angles == r2.best_angles);
  CHECK(r1.evaluations == r2.evaluations);
  const std::uint64_t stages = r1.stage_best.size();
  CHECK(r1.evaluations ==
        1 + stages * static_cast<std::uint64_t>(sched.sweeps_per_stage) *
                static_cast<std::uint64_t>(p.angle_count()));
  CHECK(stages == static_cast<std::uint64_t>(sched.derived_max_stages()));
  // trace is nondecreasing
  for (std::size_t i = 1; i < r1.stage_best.size(); ++i)
    CHECK(r1.stage_best[i] >= r1.stage_best[i - 1]);
}

TEST_CASE("restart merging is independent of the job count") {
  const auto p = AngleParametrization::uniform(2, 3, Field::Complex, 1);
  AnnealSchedule sched;
  sched.seed = 11;
  const auto serial = anneal_restarts(p, sched, 4, 1);
  const auto parallel = anneal_restarts(p, sched, 4, 2);
  CHECK(serial.best_value == parallel.best_value);
  CHECK(serial.seed == parallel.seed);
}

TEST_CASE("anneal finds the qubit triangle maximum") {
  const auto p = AngleParametrization::uniform(2, 2, Field::Real, 1);
  AnnealSchedule sched;
  sched.seed = 3;
  const auto r = anneal_restarts(p, sched, 4, 2);
  CHECK(r.best_value >= 0.6495 - 1e-4);
  CHECK(r.best_value <= 0.6495190528383290 + 1e-6);
}

TEST_CASE("anneal respects known maxima as upper bounds") {
  const auto p = AngleParametrization::uniform(2, 3, Field::Complex, 1);
  AnnealSchedule sched;
  sched.seed = 13;
  const auto r = anneal_restarts(p, sched, 4, 2);
  const auto cap = known_quantum_max(3, 2, Field::Complex);
  REQUIRE(cap.has_value());
  CHECK(r.best_value <= *cap + 1e-6);
  CHECK(r.best_value <= hadamard_bound(3) + 1e-9);
  CHECK(r.best_value >= 0.3849 - 1e-3);
}

TEST_CASE("real runs stay real") {
  const auto p = AngleParametrization::uniform(3, 3, Field::Real, 1);
  AnnealSchedule sched;
  sched.seed = 17;
  sched.sweeps_per_stage = 40;
  const auto r = anneal(p, sched);
  for (const auto& prep : r.best_scenario.preparations)
    for (const auto& a : prep.pure_source()->amplitudes()) CHECK(a.imag() == 0.0);
}

TEST_CASE("refine is monotone and stationary at the triangle optimum") {
  const auto tri = build_entry("qubit_triangle_k2");
  const double w0 = std::abs(witness(tri));
  const auto polished = refine(tri, 1e-3, 1e-7);
  CHECK(std::abs(witness(polished)) >= w0);
  CHECK(std::abs(witness(polished)) <= w0 + 1e-6);
}

TEST_CASE("refine recovers the triangle maximum from a perturbed start") {
  const double h = std::sqrt(3.0) / 2.0;
  Scenario s;
  s.dim = 2;
  s.field = Field::Real;
  auto tip = [h](double phi) {
    return Preparation::pure(StateVector::normalized(
        {cplx(std::cos(phi), 0), cplx(std::sin(phi), 0)}, Field::Real));
  };
  // Bloch angles shifted by +0.05 rad
  s.preparations = {tip(0.025), tip(2.0 * 3.14159265358979 / 3.0 / 2.0 + 0.025),
                    tip(-2.0 * 3.14159265358979 / 3.0 / 2.0 + 0.025)};
  s.effects = {bloch_effect({0, 0, 1}), bloch_effect({1, 0, 0})};
  const auto polished = refine(s, 0.05, 1e-8);
  CHECK(std::abs(witness(polished)) ==
        doctest::Approx(0.6495190528383290).epsilon(1e-6));
}

TEST_CASE("refine never decreases on random starts") {
  Rng rng(61);
  for (int t = 0; t < 5; ++t) {
    std::vector<double> angles;
    const auto p = AngleParametrization::uniform(3, 3, Field::Complex, 1);
    angles.resize(static_cast<std::size_t>(p.angle_count()));
    for (auto& a : angles) a = uniform(rng, 0.0, 6.28);
    Scenario s;
    try {
      s = p.decode(angles);
    } catch (const DegenerateInputError&) {
      continue;
    }
    const double before = std::abs(witness(s));
    const auto after = refine(s, 1e-2, 1e-5);
    CHECK(std::abs(witness(after)) >= before - 1e-15);
  }
}

TEST_CASE("rank sweep prefers rank 2 for the ququart at k = 4") {
  AnnealSchedule sched;
  sched.seed = 19;
  sched.sweeps_per_stage = 120;
  const auto sweep = rank_sweep(4, 4, Field::Real, sched, 4, 2);
  REQUIRE(sweep.runs.size() == 2);
  CHECK(sweep.runs[0].rank == 1);
  CHECK(sweep.runs[1].rank == 2);
  CHECK(sweep.best_index == 1);
  CHECK(sweep.runs[1].result.best_value > 1.7);
  CHECK(sweep.runs[0].result.best_value < 1.0);
}

TEST_CASE("rank sweep handles the qubit trivially") {
  AnnealSchedule sched;
  sched.seed = 23;
  sched.sweeps_per_stage = 50;
  const auto sweep = rank_sweep(2, 2, Field::Real, sched, 2, 1);
  CHECK(sweep.runs.size() == 1);
  CHECK(sweep.runs[0].rank == 1);
  CHECK_THROWS_AS(rank_sweep(7, 4, Field::Real, sched, 1, 1), CapabilityError);
}
