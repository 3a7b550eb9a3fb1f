// dimwit: determinant dimension-witness toolkit.
//
// Subcommands: eval, optimize, classical-max, registry, simulate, detect,
// report. Every optimize/simulate run writes a JSON result embedding its full
// configuration and the library version, and can be replayed bit-exactly
// with --replay.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dimwit/classical.hpp"
#include "dimwit/detect.hpp"
#include "dimwit/optimizer.hpp"
#include "dimwit/registry.hpp"
#include "dimwit/serialize.hpp"
#include "dimwit/version.hpp"
#include "dimwit/witness.hpp"

using nlohmann::json;
using namespace dimwit;

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DIMWIT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 1;
}

Field parse_field(const std::string& f) {
  if (f == "real") return Field::Real;
  if (f == "complex") return Field::Complex;
  throw StructuralError("field must be real or complex");
}

json decision_json(const Decision& d) {
  return json{{"witness_hat", d.witness_hat},
              {"variance", d.variance},
              {"z_score", d.z_score},
              {"z_threshold", d.threshold},
              {"verdict", to_string(d.verdict)}};
}

// --- optimize ---------------------------------------------------------------

struct OptimizeConfig {
  int dim = 2;
  int k = 2;
  std::string field = "complex";
  std::string rank_profile = "auto";
  std::uint64_t seed = 1;
  double t0 = AnnealSchedule{}.t0;
  double ratio = 0.25;
  double precision = 1e-9;
  int sweeps = 200;
  int max_stages = 0;
  int restarts = 8;
  int jobs = 1;
  bool refine_after = true;
};

json config_to_json(const OptimizeConfig& c) {
  return json{{"dim", c.dim},
              {"k", c.k},
              {"field", c.field},
              {"rank_profile", c.rank_profile},
              {"seed", c.seed},
              {"t0", c.t0},
              {"ratio", c.ratio},
              {"precision", c.precision},
              {"sweeps_per_stage", c.sweeps},
              {"max_stages", c.max_stages},
              {"restarts", c.restarts},
              {"jobs", c.jobs},
              {"refine", c.refine_after}};
}

OptimizeConfig config_from_json(const json& j) {
  OptimizeConfig c;
  c.dim = j.at("dim").get<int>();
  c.k = j.at("k").get<int>();
  c.field = j.at("field").get<std::string>();
  c.rank_profile = j.at("rank_profile").get<std::string>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.t0 = j.at("t0").get<double>();
  c.ratio = j.at("ratio").get<double>();
  c.precision = j.at("precision").get<double>();
  c.sweeps = j.at("sweeps_per_stage").get<int>();
  c.max_stages = j.at("max_stages").get<int>();
  c.restarts = j.at("restarts").get<int>();
  c.jobs = j.at("jobs").get<int>();
  c.refine_after = j.at("refine").get<bool>();
  return c;
}

json run_optimize(const OptimizeConfig& c) {
  const Field field = parse_field(c.field);
  AnnealSchedule sched;
  sched.t0 = c.t0;
  sched.ratio = c.ratio;
  sched.precision = c.precision;
  sched.sweeps_per_stage = c.sweeps;
  sched.max_stages = c.max_stages;
  sched.seed = c.seed;

  json runs = json::array();
  OptimizationResult best;
  int best_rank = 0;
  std::uint64_t evaluations = 0;
  std::vector<int> ties;

  if (c.rank_profile == "auto") {
    const auto sweep = rank_sweep(c.dim, c.k, field, sched, c.restarts, c.jobs);
    for (const auto& run : sweep.runs) {
      evaluations += run.result.evaluations;
      runs.push_back(json{{"rank", run.rank},
                          {"best_value", run.result.best_value},
                          {"seed", run.result.seed},
                          {"evaluations", run.result.evaluations}});
    }
    best = sweep.runs[static_cast<std::size_t>(sweep.best_index)].result;
    best_rank = sweep.runs[static_cast<std::size_t>(sweep.best_index)].rank;
    ties = sweep.tie_ranks;
  } else {
    const int rank = std::stoi(c.rank_profile);
    const auto params = AngleParametrization::uniform(c.dim, c.k, field, rank);
    best = anneal_restarts(params, sched, c.restarts, c.jobs);
    best_rank = rank;
    evaluations = best.evaluations;
    runs.push_back(json{{"rank", rank},
                        {"best_value", best.best_value},
                        {"seed", best.seed},
                        {"evaluations", best.evaluations}});
    ties = {rank};
  }

  const double anneal_value = best.best_value;
  Scenario final_scenario = best.best_scenario;
  double final_value = anneal_value;
  if (c.refine_after) {
    final_scenario = refine(final_scenario, 1e-2, 1e-8);
    final_value = std::abs(witness(final_scenario));
  }

  json trace = json::array();
  for (std::size_t s = 0; s < best.stage_best.size(); ++s)
    trace.push_back(json::array({s, best.stage_best[s]}));

  return json{{"command", "optimize"},
              {"version", kVersion},
              {"config", config_to_json(c)},
              {"best_value", final_value},
              {"anneal_value", anneal_value},
              {"best_rank", best_rank},
              {"tie_ranks", ties},
              {"evaluations", evaluations},
              {"runs", runs},
              {"trace", trace},
              {"best_scenario", scenario_to_json(final_scenario)}};
}

int replay_optimize(const std::string& path) {
  const json original = json::parse(read_file(path));
  const json rerun = run_optimize(config_from_json(original.at("config")));
  for (const char* key : {"best_value", "anneal_value", "evaluations"}) {
    if (original.at(key) != rerun.at(key)) {
      std::cerr << "replay mismatch on " << key << ": "
                << original.at(key).dump() << " vs " << rerun.at(key).dump()
                << "\n";
      return 1;
    }
  }
  if (original.at("trace") != rerun.at("trace") ||
      original.at("best_scenario") != rerun.at("best_scenario")) {
    std::cerr << "replay mismatch in trace or scenario\n";
    return 1;
  }
  std::cout << "replay OK: " << path << "\n";
  return 0;
}

// --- simulate ---------------------------------------------------------------

struct SimulateConfig {
  std::string scenario_file;
  std::int64_t shots = 1000;
  int trials = 1;
  std::uint64_t seed = 1;
  double z = 5.0;
};

json run_simulate(const SimulateConfig& c, const Scenario& s) {
  const auto pm = build_probability_matrix(s);
  json trials = json::array();
  for (int t = 0; t < c.trials; ++t) {
    const auto data = simulate_shots(pm, c.shots, derive_seed(c.seed, t));
    const double w = witness_estimate(data);
    const double var = null_variance(estimated_probabilities(data), data.shots);
    const auto d = decide(w, var, c.z);
    json row = decision_json(d);
    row["trial"] = t;
    trials.push_back(std::move(row));
  }
  return json{{"command", "simulate"},
              {"version", kVersion},
              {"config", json{{"scenario_file", c.scenario_file},
                              {"shots", c.shots},
                              {"trials", c.trials},
                              {"seed", c.seed},
                              {"z", c.z}}},
              {"scenario", scenario_to_json(s)},
              {"trials", trials}};
}

std::string simulate_csv(const json& result) {
  std::string csv = "trial,witness_hat,variance,z_score,verdict\n";
  for (const auto& row : result.at("trials")) {
    csv += std::to_string(row.at("trial").get<int>()) + "," +
           format_double(row.at("witness_hat").get<double>()) + "," +
           format_double(row.at("variance").get<double>()) + "," +
           format_double(row.at("z_score").get<double>()) + "," +
           row.at("verdict").get<std::string>() + "\n";
  }
  return csv;
}

int replay_simulate(const std::string& path) {
  const json original = json::parse(read_file(path));
  SimulateConfig c;
  const auto& cfg = original.at("config");
  c.scenario_file = cfg.at("scenario_file").get<std::string>();
  c.shots = cfg.at("shots").get<std::int64_t>();
  c.trials = cfg.at("trials").get<int>();
  c.seed = cfg.at("seed").get<std::uint64_t>();
  c.z = cfg.at("z").get<double>();
  const Scenario s = scenario_from_json(original.at("scenario"));
  const json rerun = run_simulate(c, s);
  if (original.at("trials") != rerun.at("trials")) {
    std::cerr << "replay mismatch in trial data\n";
    return 1;
  }
  std::cout << "replay OK: " << path << "\n";
  return 0;
}

void write_result(const json& result, const std::string& out) {
  if (out.size() >= 5 && out.substr(out.size() - 5) == ".json") {
    write_file(out, canonical_dump(result));
    return;
  }
  // CSV plus a JSON sidecar carrying the replayable result
  if (result.at("command") == "simulate") write_file(out, simulate_csv(result));
  write_file(out + ".json", canonical_dump(result));
}

// --- report -----------------------------------------------------------------

std::string optimize_trace_csv(const json& r) {
  std::string csv = "stage,best_value\n";
  for (const auto& row : r.at("trace"))
    csv += std::to_string(row.at(0).get<int>()) + "," +
           format_double(row.at(1).get<double>()) + "\n";
  return csv;
}

void print_summary(const json& r) {
  const std::string cmd = r.at("command").get<std::string>();
  std::cout << cmd << " result (version " << r.at("version").get<std::string>()
            << ")\n";
  if (cmd == "optimize") {
    std::cout << "  best |W| = " << format_double(r.at("best_value").get<double>())
              << " (anneal " << format_double(r.at("anneal_value").get<double>())
              << ", rank " << r.at("best_rank").get<int>() << ", "
              << r.at("evaluations").get<std::uint64_t>() << " evaluations)\n";
    for (const auto& run : r.at("runs"))
      std::cout << "    rank " << run.at("rank").get<int>() << ": "
                << format_double(run.at("best_value").get<double>()) << "\n";
  } else if (cmd == "simulate") {
    int excess = 0;
    const auto& trials = r.at("trials");
    for (const auto& row : trials)
      if (row.at("verdict").get<std::string>() != "consistent") ++excess;
    std::cout << "  trials: " << trials.size() << ", excess verdicts: " << excess
              << "\n";
    if (!trials.empty()) {
      const auto& first = trials.front();
      std::cout << "  first trial: W = "
                << format_double(first.at("witness_hat").get<double>())
                << ", z = " << format_double(first.at("z_score").get<double>())
                << ", verdict " << first.at("verdict").get<std::string>() << "\n";
    }
  } else if (cmd == "detect") {
    std::cout << "  W = " << format_double(r.at("witness_hat").get<double>())
              << ", z = " << format_double(r.at("z_score").get<double>())
              << ", verdict " << r.at("verdict").get<std::string>() << "\n";
  } else {
    std::cout << canonical_dump(r);
  }
}

int run_report(const std::string& file, const std::string& csv_out,
               const std::string& compare) {
  const json r = json::parse(read_file(file));
  print_summary(r);
  if (!compare.empty()) {
    const json other = json::parse(read_file(compare));
    std::cout << "\ncomparison\n";
    std::printf("  %-24s %-20s %-20s\n", "metric", "first", "second");
    auto metric = [&](const char* key) {
      const std::string a =
          r.contains(key) ? format_double(r.at(key).get<double>()) : "-";
      const std::string b =
          other.contains(key) ? format_double(other.at(key).get<double>()) : "-";
      std::printf("  %-24s %-20s %-20s\n", key, a.c_str(), b.c_str());
    };
    metric("best_value");
    metric("anneal_value");
    metric("witness_hat");
  }
  if (!csv_out.empty()) {
    if (r.at("command") == "optimize")
      write_file(csv_out, optimize_trace_csv(r));
    else if (r.at("command") == "simulate")
      write_file(csv_out, simulate_csv(r));
    else
      throw StructuralError("no CSV rendering for this result type");
    std::cout << "wrote " << csv_out << "\n";
  }
  return 0;
}

void print_binary_matrix(const BinaryWitnessMatrix& m) {
  for (const auto& row : m.bits) {
    for (std::size_t j = 0; j < row.size(); ++j)
      std::cout << row[j] << (j + 1 < row.size() ? " " : "");
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"determinant dimension-witness toolkit"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a scenario's witness");
  std::string eval_scenario, eval_out, eval_pm_out;
  bool eval_json = false, eval_closed = false;
  eval_cmd->add_option("--scenario", eval_scenario, "scenario JSON file")->required();
  eval_cmd->add_option("--out", eval_out, "write the witness report JSON here");
  eval_cmd->add_option("--pm-out", eval_pm_out, "write the probability matrix CSV here");
  eval_cmd->add_flag("--json", eval_json, "print the report as JSON");
  eval_cmd->add_flag("--closed-form", eval_closed,
                     "also evaluate the qubit closed form (k = 2 or 3)");

  // optimize
  auto* opt_cmd = app.add_subcommand("optimize", "anneal the witness maximum");
  OptimizeConfig oc;
  oc.seed = default_seed();
  std::string opt_out = "optimize_result.json", opt_replay;
  opt_cmd->add_option("--dim", oc.dim, "system dimension")->check(CLI::Range(2, 6));
  opt_cmd->add_option("--k", oc.k, "number of measurements")->check(CLI::Range(1, 9));
  opt_cmd->add_option("--field", oc.field, "real | complex");
  opt_cmd->add_option("--rank-profile", oc.rank_profile,
                      "auto (sweep) or a fixed effect rank");
  opt_cmd->add_option("--seed", oc.seed, "master seed (env DIMWIT_SEED)");
  opt_cmd->add_option("--t0", oc.t0, "initial temperature");
  opt_cmd->add_option("--ratio", oc.ratio, "cooling ratio");
  opt_cmd->add_option("--precision", oc.precision, "stopping proposal width");
  opt_cmd->add_option("--sweeps", oc.sweeps, "sweeps per stage");
  opt_cmd->add_option("--max-stages", oc.max_stages, "stage cap (0 = derive)");
  opt_cmd->add_option("--restarts", oc.restarts, "independent restarts");
  opt_cmd->add_option("--jobs", oc.jobs, "parallel workers for restarts");
  opt_cmd->add_flag("!--no-refine", oc.refine_after, "skip the local refiner");
  opt_cmd->add_option("--out", opt_out, "result JSON path");
  opt_cmd->add_option("--replay", opt_replay, "re-run a result file and compare");

  // classical-max
  auto* cls_cmd = app.add_subcommand("classical-max", "classical witness maxima");
  int cls_k = 3;
  bool cls_exhaustive = false, cls_anneal = false, cls_cert = false,
       cls_bound = false, cls_json = false;
  std::uint64_t cls_seed = default_seed();
  cls_cmd->add_option("--k", cls_k, "number of measurements");
  cls_cmd->add_flag("--exhaustive", cls_exhaustive, "exact search (k <= 4)");
  cls_cmd->add_flag("--anneal", cls_anneal, "bit-flip annealing search");
  cls_cmd->add_flag("--certificates", cls_cert, "print the shipped extremal matrices");
  cls_cmd->add_flag("--bound", cls_bound, "print the Hadamard bound for k");
  cls_cmd->add_flag("--json", cls_json, "JSON output");
  cls_cmd->add_option("--seed", cls_seed, "annealing seed");

  // registry
  auto* reg_cmd = app.add_subcommand("registry", "catalog of extremal scenarios");
  auto* reg_list = reg_cmd->add_subcommand("list", "list entry names");
  auto* reg_verify = reg_cmd->add_subcommand("verify", "verify entries");
  std::string reg_name;
  bool reg_all = false, reg_json = false;
  reg_verify->add_option("name", reg_name, "entry name");
  reg_verify->add_flag("--all", reg_all, "verify every entry");
  reg_verify->add_flag("--json", reg_json, "JSON output");
  auto* reg_export = reg_cmd->add_subcommand("export", "write the catalog JSON");
  std::string reg_export_out = "registry.json";
  reg_export->add_option("--out", reg_export_out, "output path");
  auto* reg_build = reg_cmd->add_subcommand("build", "write an entry's scenario");
  std::string reg_build_name, reg_build_out;
  reg_build->add_option("name", reg_build_name, "entry name")->required();
  reg_build->add_option("--out", reg_build_out, "scenario JSON path")->required();

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "finite-shot witness trials");
  SimulateConfig sc;
  sc.seed = default_seed();
  std::string sim_out = "simulate_result.json", sim_replay;
  sim_cmd->add_option("--scenario", sc.scenario_file, "scenario JSON file");
  sim_cmd->add_option("--shots", sc.shots, "repetitions per cell");
  sim_cmd->add_option("--trials", sc.trials, "number of independent trials");
  sim_cmd->add_option("--seed", sc.seed, "master seed (env DIMWIT_SEED)");
  sim_cmd->add_option("--z", sc.z, "decision threshold");
  sim_cmd->add_option("--out", sim_out, "result path (.json or .csv)");
  sim_cmd->add_option("--replay", sim_replay, "re-run a result file and compare");
  std::string sim_counts_out;
  sim_cmd->add_option("--counts-out", sim_counts_out,
                      "write the first trial's raw counts CSV here");

  // detect
  auto* det_cmd = app.add_subcommand("detect", "decide from measured counts");
  std::string det_scenario, det_counts, det_out;
  double det_z = 5.0;
  bool det_json = false;
  det_cmd->add_option("--scenario", det_scenario,
                      "reference scenario JSON (variance from its clean matrix)");
  det_cmd->add_option("--counts", det_counts, "counts CSV file")->required();
  det_cmd->add_option("--z", det_z, "decision threshold");
  det_cmd->add_option("--out", det_out, "write the report JSON here");
  det_cmd->add_flag("--json", det_json, "print the report as JSON");

  // report
  auto* rep_cmd = app.add_subcommand("report", "summarize result files");
  std::string rep_file, rep_csv, rep_compare;
  rep_cmd->add_option("file", rep_file, "result JSON")->required();
  rep_cmd->add_option("--csv", rep_csv, "render the trace/trials as CSV");
  rep_cmd->add_option("--compare", rep_compare, "second result for comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*eval_cmd) {
      const Scenario s = load_scenario(eval_scenario);
      const auto rep = witness_report(s, {{"scenario_file", eval_scenario}});
      json out{{"command", "eval"},
               {"version", kVersion},
               {"config", json{{"scenario_file", eval_scenario}}},
               {"witness", rep.witness},
               {"abs_witness", std::abs(rep.witness)},
               {"k", s.k()},
               {"dim", s.dim},
               {"field", to_string(s.field)},
               {"scenario_digest", rep.scenario_digest}};
      if (eval_closed) out["closed_form"] = qubit_witness_closed_form(s);
      if (eval_json)
        std::cout << canonical_dump(out);
      else
        std::cout << "W = " << format_double(rep.witness)
                  << "  |W| = " << format_double(std::abs(rep.witness)) << "\n";
      if (!eval_out.empty()) write_file(eval_out, canonical_dump(out));
      if (!eval_pm_out.empty())
        write_file(eval_pm_out, pm_to_csv(rep.probability_matrix));
      return 0;
    }
    if (*opt_cmd) {
      if (!opt_replay.empty()) return replay_optimize(opt_replay);
      const json result = run_optimize(oc);
      write_file(opt_out, canonical_dump(result));
      std::cout << "best |W| = " << format_double(result.at("best_value").get<double>())
                << " (rank " << result.at("best_rank").get<int>() << ") -> " << opt_out
                << "\n";
      return 0;
    }
    if (*cls_cmd) {
      if (cls_cert) {
        if (cls_json) {
          std::cout << certificates_json();
        } else {
          for (const auto& c : extremal_certificates()) {
            std::cout << "k = " << c.k << ", max |W| = " << c.value << "\n";
            print_binary_matrix(c.matrix);
            std::cout << "\n";
          }
        }
        return 0;
      }
      if (cls_bound) {
        std::cout << format_double(hadamard_bound(cls_k)) << "\n";
        return 0;
      }
      BinarySearchResult res;
      std::string method;
      if (cls_exhaustive) {
        res = exhaustive_binary_max(cls_k);
        method = "exhaustive";
      } else if (cls_anneal) {
        BinaryAnnealSchedule sched;
        sched.seed = cls_seed;
        res = binary_anneal_max(cls_k, sched);
        method = "anneal";
      } else {
        throw StructuralError(
            "choose one of --exhaustive, --anneal, --certificates, --bound");
      }
      if (cls_json) {
        json bits = json::array();
        for (const auto& row : res.matrix.bits) bits.push_back(row);
        std::cout << canonical_dump(json{{"command", "classical-max"},
                                         {"version", kVersion},
                                         {"k", cls_k},
                                         {"method", method},
                                         {"seed", cls_seed},
                                         {"max_witness", res.value},
                                         {"bits", bits}});
      } else {
        std::cout << "max |W| = " << res.value << " (" << method << ")\n";
        print_binary_matrix(res.matrix);
      }
      return 0;
    }
    if (*reg_cmd) {
      if (*reg_list) {
        for (const auto& name : registry_names()) std::cout << name << "\n";
        return 0;
      }
      if (*reg_export) {
        write_file(reg_export_out, registry_json());
        std::cout << "wrote " << reg_export_out << "\n";
        return 0;
      }
      if (*reg_build) {
        save_scenario(build_entry(reg_build_name), reg_build_out);
        std::cout << "wrote " << reg_build_out << "\n";
        return 0;
      }
      if (*reg_verify) {
        std::vector<VerifyResult> results;
        if (reg_all || reg_name.empty())
          results = verify_all();
        else
          results.push_back(verify_entry(reg_name));
        int fails = 0;
        json rows = json::array();
        for (const auto& r : results) {
          if (!r.pass) ++fails;
          if (reg_json) {
            rows.push_back(json{{"name", r.name},
                                {"computed", r.computed},
                                {"expected", r.expected},
                                {"tolerance", r.tolerance},
                                {"pass", r.pass},
                                {"note", r.note}});
          } else {
            std::printf("%-28s %-9s computed=%.15g expected=%.15g %s\n",
                        r.name.c_str(), r.pass ? "PASS" : "FAIL", r.computed,
                        r.expected, r.note.c_str());
          }
        }
        if (reg_json)
          std::cout << canonical_dump(json{{"command", "registry-verify"},
                                           {"version", kVersion},
                                           {"results", rows},
                                           {"failures", fails}});
        return fails == 0 ? 0 : 1;
      }
      std::cerr << "registry needs a subcommand (list, verify, export, build)\n";
      return 1;
    }
    if (*sim_cmd) {
      if (!sim_replay.empty()) return replay_simulate(sim_replay);
      if (sc.scenario_file.empty())
        throw StructuralError("simulate needs --scenario");
      const Scenario s = load_scenario(sc.scenario_file);
      const json result = run_simulate(sc, s);
      write_result(result, sim_out);
      if (!sim_counts_out.empty()) {
        const auto data =
            simulate_shots(build_probability_matrix(s), sc.shots, derive_seed(sc.seed, 0));
        write_file(sim_counts_out, counts_to_csv(data));
      }
      print_summary(result);
      return 0;
    }
    if (*det_cmd) {
      const ShotData data = counts_from_csv(read_file(det_counts));
      const double w = witness_estimate(data);
      double variance;
      if (!det_scenario.empty()) {
        const Scenario s = load_scenario(det_scenario);
        variance = null_variance(build_probability_matrix(s), data.shots);
      } else {
        variance = null_variance(estimated_probabilities(data), data.shots);
      }
      const auto d = decide(w, variance, det_z);
      json out = decision_json(d);
      out["command"] = "detect";
      out["version"] = kVersion;
      out["config"] = json{{"counts_file", det_counts},
                           {"scenario_file", det_scenario},
                           {"z", det_z},
                           {"shots", data.shots}};
      if (det_json)
        std::cout << canonical_dump(out);
      else
        std::cout << "W = " << format_double(w)
                  << ", z = " << format_double(d.z_score) << ", verdict "
                  << to_string(d.verdict) << "\n";
      if (!det_out.empty()) write_file(det_out, canonical_dump(out));
      return 0;
    }
    if (*rep_cmd) return run_report(rep_file, rep_csv, rep_compare);
  } catch (const NumericIntegrityError& e) {
    std::cerr << "numeric integrity error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
