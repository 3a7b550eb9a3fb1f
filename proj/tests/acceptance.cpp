// Acceptance suite: one checkable criterion per function, one PASS/FAIL line
// each. Run all criteria by default or a single one with --criterion N.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "dimwit/classical.hpp"
#include "dimwit/detect.hpp"
#include "dimwit/optimizer.hpp"
#include "dimwit/random.hpp"
#include "dimwit/registry.hpp"
#include "dimwit/serialize.hpp"
#include "dimwit/witness.hpp"

using namespace dimwit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

// ---- criterion 1: registry regression --------------------------------------

Outcome criterion_registry() {
  Outcome o;
  const auto results = verify_all();
  int passed = 0;
  for (const auto& r : results) {
    if (r.pass)
      ++passed;
    else
      note(o, false, r.name + " off by " + format_double(r.computed - r.expected));
  }
  const double listed[] = {0.6495190528,
                           0.3849001795,
                           0.5966213466,
                           2048.0 / 2187.0,
                           4096.0 / 2187.0,
                           0.4188205525,
                           1.7816261831,
                           3125.0 * 81.0 / 262144.0,
                           3.144615108566082,
                           3.3984718576415207,
                           823543.0 / 221184.0,
                           3125.0 / 20736.0,
                           0.125};
  for (const double v : listed) {
    bool found = false;
    for (const auto& r : results)
      if (std::abs(r.expected - v) < 1e-9 && r.pass) found = true;
    note(o, found, "missing verified entry near " + format_double(v));
  }
  o.detail = std::to_string(passed) + "/" + std::to_string(results.size()) +
             " entries verified" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// ---- criterion 2: classical maxima ------------------------------------------

Outcome criterion_classical() {
  Outcome o;
  const std::int64_t small[] = {1, 1, 2, 3};
  for (int k = 1; k <= 4; ++k) {
    const auto res = exhaustive_binary_max(k);
    note(o, res.value == small[k - 1],
         "exhaustive k=" + std::to_string(k) + " gave " + std::to_string(res.value));
  }
  const std::int64_t full[] = {1, 1, 2, 3, 5, 9, 32, 56, 144};
  for (int k = 1; k <= 9; ++k) {
    const auto chk = verify_certificate(k);
    note(o, chk.pass && chk.expected == full[k - 1],
         "certificate k=" + std::to_string(k) + " gave " + std::to_string(chk.computed));
  }
  o.detail = "exhaustive 1,1,2,3 and certificates 1,1,2,3,5,9,32,56,144" +
             (o.detail.empty() ? std::string() : "; " + o.detail);
  return o;
}

// ---- criterion 3: zero-witness suites ---------------------------------------

Outcome criterion_zero_witness() {
  Outcome o;
  Rng rng(0xd1132e55);
  int cells = 0;
  double worst = 0.0;
  for (const int d : {2, 3}) {
    for (int k = d; k <= d + 2; ++k) {
      ++cells;
      for (int t = 0; t < 1000; ++t) {
        const double w =
            std::abs(witness(classical_probability_matrix(random_classical_model(d, k, rng))));
        worst = std::max(worst, w);
        if (w >= 1e-9) {
          note(o, false, "classical d=" + std::to_string(d) + " k=" + std::to_string(k));
          break;
        }
      }
    }
    for (const Field f : {Field::Real, Field::Complex}) {
      const int k = f == Field::Real ? d * (d + 1) / 2 : d * d;
      ++cells;
      for (int t = 0; t < 1000; ++t) {
        const double w = std::abs(witness(random_scenario(d, f, k, rng)));
        worst = std::max(worst, w);
        if (w >= 1e-9) {
          note(o, false, std::string(to_string(f)) + " d=" + std::to_string(d));
          break;
        }
      }
    }
  }
  note(o, known_quantum_max(3, 2, Field::Real) == 0.0, "k3 d2 real not zero");
  note(o, known_quantum_max(4, 2, Field::Complex) == 0.0, "k4 d2 complex not zero");
  note(o, known_quantum_max(6, 3, Field::Real) == 0.0, "k6 d3 real not zero");
  note(o, known_quantum_max(9, 3, Field::Complex) == 0.0, "k9 d3 complex not zero");
  std::ostringstream os;
  os << cells << " cells x 1000 scenarios, worst |W| = " << format_double(worst);
  o.detail = os.str() + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// ---- criterion 4: optimizer recovery ----------------------------------------

double anneal_refine(int dim, int k, Field f, int rank, int restarts,
                     std::uint64_t seed) {
  const auto params = AngleParametrization::uniform(dim, k, f, rank);
  AnnealSchedule sched;
  sched.seed = seed;
  const auto r = anneal_restarts(params, sched, restarts, 2);
  const auto polished = refine(r.best_scenario, 1e-2, 1e-8);
  return std::abs(witness(polished));
}

Outcome criterion_optimizer() {
  Outcome o;
  struct CiCell {
    const char* name;
    int dim, k, rank, restarts;
    Field field;
    double target, tol;
    std::uint64_t seed;
  };
  const CiCell cells[] = {
      {"d2k2", 2, 2, 1, 8, Field::Real, 0.6495190528383290, 1e-3, 11},
      {"d2k3c", 2, 3, 1, 8, Field::Complex, 0.3849001794597505, 1e-3, 12},
      {"d4k4r1", 4, 4, 1, 8, Field::Complex, 0.9364426154549611, 1e-3, 13},
      {"d4k4r2", 4, 4, 2, 8, Field::Complex, 1.8728852309099222, 1e-3, 14},
      {"d3k4r", 3, 4, 1, 32, Field::Real, 0.5966213466261495, 1e-2, 15},
      {"d3k4c", 3, 4, 1, 32, Field::Complex, 0.6319201017558774, 1e-2, 16},
      {"d3k5r", 3, 5, 1, 32, Field::Real, 0.4188205525198219, 1e-2, 17},
      {"d3k5c", 3, 5, 1, 32, Field::Complex, 0.457413503, 1e-2, 18},
  };
  std::ostringstream os;
  for (const auto& c : cells) {
    const double got =
        anneal_refine(c.dim, c.k, c.field, c.rank, c.restarts, derive_seed(777, c.seed));
    os << c.name << "=" << format_double(got) << " ";
    note(o, got >= c.target - c.tol,
         std::string(c.name) + " reached only " + format_double(got));
    note(o, got <= c.target + 1e-6,
         std::string(c.name) + " exceeds the recorded maximum: " + format_double(got));
  }
  {
    AnnealSchedule sched;
    sched.seed = derive_seed(777, 19);
    const auto sweep = rank_sweep(5, 5, Field::Real, sched, 32, 2);
    const auto& top = sweep.runs[static_cast<std::size_t>(sweep.best_index)];
    const auto polished = refine(top.result.best_scenario, 1e-2, 1e-8);
    const double got = std::abs(witness(polished));
    os << "d5k5=" << format_double(got) << " (rank " << top.rank << ")";
    note(o, top.rank == 2, "d5k5 best rank is not 2");
    note(o, got >= 3.144615108566082 - 1e-2, "d5k5 reached only " + format_double(got));
    note(o, got <= 3.144615108566082 + 1e-6, "d5k5 exceeds the recorded maximum");
  }
  o.detail = os.str() + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// ---- criterion 5: variance formulas ------------------------------------------

Outcome criterion_variance() {
  Outcome o;
  const auto sat = build_probability_matrix(build_entry("variance_saturating_k4"));
  const auto axes = build_probability_matrix(build_entry("qubit_axes_test_k4"));
  for (const std::int64_t n : {std::int64_t(1), std::int64_t(1000), std::int64_t(1000000)}) {
    const double vs = null_variance(sat, n);
    note(o, std::abs(vs - 1.0 / (6.0 * n)) <= 1e-12 / (6.0 * n),
         "saturating variance at N=" + std::to_string(n));
    const double va = null_variance(axes, n);
    note(o, std::abs(va - 1.0 / (16.0 * n)) <= 1e-12 / (16.0 * n),
         "axes variance at N=" + std::to_string(n));
  }
  const std::int64_t shots = 10000;
  const int trials = 10000;
  std::ostringstream os;
  os << "1/(6N) and 1/(16N) exact";
  int idx = 0;
  for (const auto* pm : {&sat, &axes}) {
    double sum = 0.0, sum2 = 0.0;
    for (int t = 0; t < trials; ++t) {
      const auto data = simulate_shots(*pm, shots, derive_seed(0xacce97a, t, idx));
      const double w = witness_estimate(data);
      sum += w;
      sum2 += w * w;
    }
    const double mean = sum / trials;
    const double var = sum2 / trials - mean * mean;
    const double predicted = null_variance(*pm, shots);
    const double rel = std::abs(var - predicted) / predicted;
    os << (idx == 0 ? "; MC saturating rel err " : "; MC axes rel err ")
       << format_double(rel);
    note(o, rel < 0.05, "Monte Carlo variance off by " + format_double(rel));
    ++idx;
  }
  o.detail = os.str() + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// ---- criterion 6: perturbation order checks ----------------------------------

double laplace_det(const Mat& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  double det = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    Mat sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(r - 1, cc++) = a(r, c);
      }
    }
    det += ((j % 2) ? -1.0 : 1.0) * a(0, j) * laplace_det(sub);
  }
  return det;
}

Mat random_direction(const ProbabilityMatrix& pm, Rng& rng) {
  const std::size_t n = pm.entries().rows();
  Mat dir(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double margin = std::min(pm.at(i, j), 1.0 - pm.at(i, j));
      dir(i, j) = uniform(rng, -1.0, 1.0) * std::min(1.0, margin / 0.0101);
    }
  return dir;
}

Outcome criterion_orders() {
  Outcome o;
  Rng rng(0x0bde7);
  const double eps[3] = {1e-2, 1e-3, 1e-4};
  const int instances = 100;
  double first_err[3] = {0, 0, 0}, second_err[3] = {0, 0, 0};
  for (int t = 0; t < instances; ++t) {
    {
      const auto base = random_scenario(2, Field::Complex, 4, rng, 1);
      const auto pm = build_probability_matrix(base);
      const Mat dir = random_direction(pm, rng);
      for (int e = 0; e < 3; ++e) {
        Mat p = pm.entries();
        Mat dp(p.rows(), p.cols());
        for (std::size_t i = 0; i < p.rows(); ++i)
          for (std::size_t j = 0; j < p.cols(); ++j) {
            dp(i, j) = eps[e] * dir(i, j);
            p(i, j) += dp(i, j);
          }
        const double exact = laplace_det(p);
        const double first = first_order_witness(PerturbedScenario{base, dp});
        first_err[e] += std::abs(exact - first) / instances;
      }
    }
    {
      const auto base = random_scenario(2, Field::Complex, 5, rng, 1);
      const auto pm = build_probability_matrix(base);
      const Mat dir = random_direction(pm, rng);
      for (int e = 0; e < 3; ++e) {
        Mat p = pm.entries();
        Mat dp(p.rows(), p.cols());
        for (std::size_t i = 0; i < p.rows(); ++i)
          for (std::size_t j = 0; j < p.cols(); ++j) {
            dp(i, j) = eps[e] * dir(i, j);
            p(i, j) += dp(i, j);
          }
        const double exact = laplace_det(p);
        const double second = second_order_witness(PerturbedScenario{base, dp});
        second_err[e] += std::abs(exact - second) / instances;
      }
    }
  }
  const double slope1 = (std::log(first_err[0]) - std::log(first_err[2])) /
                        (std::log(eps[0]) - std::log(eps[2]));
  const double slope2 = (std::log(second_err[0]) - std::log(second_err[2])) /
                        (std::log(eps[0]) - std::log(eps[2]));
  std::ostringstream os;
  os << "first-order slope " << format_double(slope1) << ", second-order slope "
     << format_double(slope2) << " over " << instances << " instances";
  note(o, std::abs(slope1 - 2.0) <= 0.1, "first-order slope out of band");
  note(o, std::abs(slope2 - 3.0) <= 0.15, "second-order slope out of band");
  o.detail = os.str() + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// ---- criterion 7: axes-test four-term identity --------------------------------

Outcome criterion_axes_identity() {
  Outcome o;
  const auto axes = build_entry("qubit_axes_test_k4");
  const auto pm = build_probability_matrix(axes);
  Rng rng(0xe13);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Mat dir = random_direction(pm, rng);
    Mat dp(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) dp(i, j) = 5e-3 * dir(i, j);
    const double w = first_order_witness(PerturbedScenario{axes, dp});
    const double sum = (dp(0, 0) + dp(0, 1) - dp(0, 3) - dp(0, 4) + dp(1, 0) +
                        dp(1, 1) - dp(1, 3) - dp(1, 4)) /
                       4.0;
    worst = std::max(worst, std::abs(w - sum));
  }
  note(o, worst < 1e-12, "identity off by " + format_double(worst));
  o.detail = "100 random deviations, worst gap " + format_double(worst) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// ---- criterion 8: heptagonal structure ----------------------------------------

Outcome criterion_heptagonal() {
  Outcome o;
  const auto s = build_entry("d5_k7_heptagonal");
  double worst_overlap = 0.0, worst_p = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const double ov = std::norm(inner(s.preparations[i].pure_source()->amplitudes(),
                                        s.preparations[j].pure_source()->amplitudes()));
      double want = 1.0 / 8.0;
      if (i == j) want = 1.0;
      else if (i == 7 || j == 7) want = 0.0;
      worst_overlap = std::max(worst_overlap, std::abs(ov - want));
    }
  note(o, worst_overlap < 1e-12, "overlap table off by " + format_double(worst_overlap));
  const auto pm = build_probability_matrix(s);
  const double s7 = std::sqrt(7.0) / (4.0 * std::sqrt(3.0));
  for (int row = 0; row < 7; ++row)
    for (int col = 0; col < 8; ++col) {
      double want;
      if (col == 7) want = 0.0;
      else if (row == col) want = 0.5;
      else {
        const int diff = ((row - col) % 7 + 7) % 7;
        want = (diff == 1 || diff == 2 || diff == 4) ? 0.5 + s7 : 0.5 - s7;
      }
      worst_p = std::max(worst_p, std::abs(pm.at(row, col) - want));
    }
  note(o, worst_p < 1e-12, "probability table off by " + format_double(worst_p));
  o.detail = "overlaps {1, 1/8, 0} and entries 1/2 +- sqrt(7)/(4 sqrt(3)); worst gaps " +
             format_double(worst_overlap) + ", " + format_double(worst_p) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

// ---- criterion 9: replay determinism ------------------------------------------

Outcome criterion_replay() {
  Outcome o;
#ifdef DIMWIT_CLI_PATH
  const std::string cli = DIMWIT_CLI_PATH;
  auto run = [&](const std::string& args) {
    const std::string cmd = cli + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  note(o, run("registry build qubit_axes_test_k4 --out acc9_scenario.json") == 0,
       "registry build failed");
  note(o,
       run("optimize --dim 2 --k 2 --field real --restarts 2 --seed 4242 "
           "--out acc9_opt.json") == 0,
       "optimize run failed");
  note(o, run("optimize --replay acc9_opt.json") == 0, "optimize replay mismatch");
  note(o,
       run("simulate --scenario acc9_scenario.json --shots 2000 --trials 5 "
           "--seed 99 --out acc9_sim.json") == 0,
       "simulate run failed");
  note(o, run("simulate --replay acc9_sim.json") == 0, "simulate replay mismatch");
  note(o,
       run("optimize --dim 2 --k 2 --field real --restarts 2 --seed 4242 "
           "--out acc9_opt2.json") == 0,
       "optimize rerun failed");
  note(o, read_file("acc9_opt.json") == read_file("acc9_opt2.json"),
       "optimize results differ between identical runs");
  for (const char* f : {"acc9_scenario.json", "acc9_opt.json", "acc9_opt2.json",
                        "acc9_sim.json"})
    std::remove(f);
  o.detail = std::string("CLI optimize and simulate replay bit-exact") +
             (o.detail.empty() ? "" : "; " + o.detail);
#else
  note(o, false, "CLI path not configured");
#endif
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--criterion") == 0 && a + 1 < argc)
      only = std::atoi(argv[++a]);
  }
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "registry regression", criterion_registry},
      {2, "classical maxima", criterion_classical},
      {3, "zero-witness suites", criterion_zero_witness},
      {4, "optimizer recovery", criterion_optimizer},
      {5, "variance formulas", criterion_variance},
      {6, "perturbation order checks", criterion_orders},
      {7, "axes-test identity", criterion_axes_identity},
      {8, "heptagonal structure", criterion_heptagonal},
      {9, "replay determinism", criterion_replay},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id,
                c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures;
}
