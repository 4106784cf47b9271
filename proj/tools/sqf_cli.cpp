// Copyright 2026 The SQF Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
   Command-line front end for statistical qubit freezing experiments.

     sqf generate ising|nae3sat ...   write a problem file
     sqf solve PROBLEM ...            sample once, write samples + histogram
     sqf sqf PROBLEM ...              run the freezing loop, write report/graph/histograms
     sqf spectrum PROBLEM ...         instantaneous spectrum and minimum gap
     sqf convert PROBLEM --to ...     QUBO <-> Ising
     sqf replay MANIFEST              re-execute a recorded run

   Every command writes <command>.manifest.json next to its outputs. The
   manifest holds the fully resolved argument list, so `replay` reproduces
   the outputs byte for byte.
*/

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sqf/generators.hpp"
#include "sqf/io.hpp"
#include "sqf/kernels.hpp"
#include "sqf/samplers.hpp"
#include "sqf/spectrum.hpp"
#include "sqf/sqf.hpp"

namespace fs = std::filesystem;
using sqf::io::json;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct Global {
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string format = "json";
};

struct SamplerFlags {
  std::string kind = "simulated_annealing";
  std::size_t sweeps = 1000;
  double beta_start = 0.1;
  double beta_end = 10.0;
  bool canonical_gauge = true;

  void add(CLI::App* cmd) {
    cmd->add_option("--sampler", kind, "Sampler kind")
        ->check(CLI::IsMember({"simulated_annealing", "sa", "exact"}))
        ->capture_default_str();
    cmd->add_option("--sa-sweeps,--sweeps", sweeps, "Metropolis sweeps per shot")->capture_default_str();
    cmd->add_option("--beta-start", beta_start, "Initial inverse temperature")->capture_default_str();
    cmd->add_option("--beta-end", beta_end, "Final inverse temperature")->capture_default_str();
    cmd->add_flag("--canonical-gauge,!--no-canonical-gauge", canonical_gauge,
                  "Fold the global spin flip of models without linear terms");
  }

  sqf::SamplerParams params(std::uint64_t seed, std::size_t shots) const {
    sqf::SamplerParams p;
    p.kind = sqf::sampler_kind_from_string(kind);
    p.seed = seed;
    p.shots = shots;
    p.sa_sweeps = sweeps;
    p.sa_beta_range = {beta_start, beta_end};
    p.canonical_gauge = canonical_gauge;
    p.validate();
    return p;
  }

  std::vector<std::string> args() const {
    return {"--sampler", sqf::to_string(sqf::sampler_kind_from_string(kind)),
            "--sa-sweeps", std::to_string(sweeps),
            "--beta-start", json(beta_start).dump(),
            "--beta-end", json(beta_end).dump(),
            canonical_gauge ? "--canonical-gauge" : "--no-canonical-gauge"};
  }
};

std::string absolute(const std::string& path) { return fs::absolute(path).lexically_normal().string(); }

std::string out_path(const Global& g, const std::string& name) {
  fs::create_directories(g.out_dir);
  return (fs::path(g.out_dir) / name).string();
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

void write_manifest(const Global& g, const std::string& command, const std::vector<std::string>& args,
                    const json& config, const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs) {
  std::vector<std::string> argv = {"--seed", std::to_string(g.seed), "--format", g.format, command};
  argv.insert(argv.end(), args.begin(), args.end());
  json manifest = {
      {"command", command},
      {"argv", argv},
      {"config", config},
      {"seed", g.seed},
      {"inputs", inputs},
      {"outputs", outputs},
      {"tool_version", kToolVersion},
      {"timestamp", utc_timestamp()},
  };
  sqf::io::write_file(out_path(g, command + ".manifest.json"), sqf::io::dump(manifest));
}

sqf::io::Problem load_problem(const std::string& path) {
  return sqf::io::problem_from_json(sqf::io::load_json(path));
}

template <class Writer>
std::string render(Writer&& writer) {
  std::ostringstream ss;
  writer(ss);
  return ss.str();
}

// ---------------------------------------------------------------- generate

struct GenerateCmd {
  std::string kind;
  std::size_t n = 0;
  double rho = sqf::kDefaultClauseRatio;
  bool plant = true;
  std::string out = "problem.json";

  void run(const Global& g) const {
    json doc;
    json config = {{"kind", kind}, {"n", n}, {"seed", g.seed}};
    std::vector<std::string> args = {kind, "--n", std::to_string(n)};
    if (kind == "ising") {
      doc = sqf::io::to_json(sqf::random_complete_ising(n, g.seed));
    } else {
      doc = sqf::io::to_json(sqf::random_nae3sat(n, rho, g.seed, plant));
      config["rho"] = rho;
      config["plant"] = plant;
      args.insert(args.end(), {"--rho", json(rho).dump(), plant ? "--plant" : "--no-plant"});
    }
    args.insert(args.end(), {"--out", out});
    const std::string path = out_path(g, out);
    sqf::io::write_file(path, sqf::io::dump(doc));
    write_manifest(g, "generate", args, config, {}, {path});
  }
};

// ---------------------------------------------------------------- solve

struct SolveCmd {
  std::string problem;
  std::size_t shots = 1000;
  SamplerFlags sampler;

  void run(const Global& g) const {
    const auto model = load_problem(problem).as_ising();
    const auto params = sampler.params(g.seed, shots);
    const auto samples = sqf::sample(model, params);

    std::vector<std::string> outputs;
    if (g.format == "csv") {
      outputs.push_back(out_path(g, "samples.csv"));
      sqf::io::write_file(outputs.back(), render([&](std::ostream& os) { sqf::io::write_sample_set_csv(os, samples); }));
    } else {
      outputs.push_back(out_path(g, "samples.json"));
      sqf::io::write_file(outputs.back(), sqf::io::dump(sqf::io::to_json(samples)));
    }
    outputs.push_back(out_path(g, "histogram.csv"));
    sqf::io::write_file(outputs.back(), render([&](std::ostream& os) { sqf::io::write_histogram_csv(os, samples); }));

    std::vector<std::string> args = {absolute(problem), "--shots", std::to_string(shots)};
    const auto extra = sampler.args();
    args.insert(args.end(), extra.begin(), extra.end());
    json config = {{"shots", shots}, {"sampler", sqf::to_string(params.kind)}, {"sa_sweeps", params.sa_sweeps},
                   {"sa_beta_range", {params.sa_beta_range.first, params.sa_beta_range.second}}};
    write_manifest(g, "solve", args, config, {absolute(problem)}, outputs);
  }
};

// ---------------------------------------------------------------- sqf

struct SqfCmd {
  std::string problem;
  sqf::SqfConfig config;
  std::string strategy = "vanilla";
  SamplerFlags sampler;

  void run(const Global& g) {
    const auto loaded = load_problem(problem);
    const auto model = loaded.as_ising();
    config.strategy = sqf::strategy_from_string(strategy);
    config.sampler = sampler.params(g.seed, config.shots);
    config.validate();
    const auto run = sqf::run_sqf(model, config);

    std::vector<std::string> outputs = {out_path(g, "report.json"), out_path(g, "histograms.csv"),
                                        out_path(g, "graph.json")};
    sqf::io::write_file(outputs[0], sqf::io::dump(sqf::io::run_report(run, config, &loaded)));
    sqf::io::write_file(outputs[1], render([&](std::ostream& os) { sqf::io::write_run_histograms_csv(os, run); }));
    sqf::io::write_file(outputs[2], sqf::io::dump(sqf::io::graph_evolution(model, run)));
    if (g.format == "csv") {
      outputs.push_back(out_path(g, "report.csv"));
      sqf::io::write_file(outputs.back(), render([&](std::ostream& os) {
        os << "iteration,active_count,effective_threshold,frozen,lowest_energy,best_energy_so_far\n";
        for (std::size_t k = 0; k < run.iterations.size(); ++k) {
          const auto& it = run.iterations[k];
          os << k << ',' << it.model_before.num_vars() << ',' << json(it.effective_threshold).dump() << ','
             << it.freezes.size() << ',' << json(it.lowest_energy).dump() << ','
             << json(it.best_energy_so_far).dump() << '\n';
        }
      }));
    }

    std::vector<std::string> args = {absolute(problem),
                                     "--strategy", sqf::to_string(config.strategy),
                                     "--threshold", json(config.threshold).dump(),
                                     "--threshold-increment", json(config.threshold_increment).dump(),
                                     "--increment-every", std::to_string(config.increment_every),
                                     "--m-limit", std::to_string(config.m_limit),
                                     "--shots", std::to_string(config.shots),
                                     "--max-iterations", std::to_string(config.max_iterations)};
    const auto extra = sampler.args();
    args.insert(args.end(), extra.begin(), extra.end());
    write_manifest(g, "sqf", args, sqf::io::to_json(config), {absolute(problem)}, outputs);

    std::cout << "terminated: " << sqf::to_string(run.terminated_reason) << ", iterations: " << run.iterations.size()
              << ", frozen: " << run.frozen_count() << ", best energy: " << json(run.best_energy).dump() << '\n';
  }
};

// ---------------------------------------------------------------- spectrum

struct SpectrumCmd {
  std::string problem;
  std::string schedule_path;
  double scale = 5.0;
  std::size_t grid = 201;
  std::size_t k = 2;
  bool freeze_discriminating = false;

  void run(const Global& g) const {
    const auto model = load_problem(problem).as_ising();
    const auto schedule = schedule_path.empty() ? sqf::AnnealSchedule::linear(scale)
                                                : sqf::AnnealSchedule::load_csv(schedule_path);
    const auto s_grid = sqf::uniform_grid(grid);

    std::vector<std::string> outputs;
    auto emit = [&](const sqf::IsingModel& m, const std::string& suffix, json extra) {
      const auto sweep = sqf::sweep_spectrum(m, schedule, s_grid, k);
      outputs.push_back(out_path(g, "sweep" + suffix + ".csv"));
      sqf::io::write_file(outputs.back(), render([&](std::ostream& os) { sqf::io::write_sweep_csv(os, sweep); }));
      json report = extra;
      if (k >= 2) {
        const auto gap = sqf::min_gap(sweep);
        report.update(sqf::io::to_json(gap));
        outputs.push_back(out_path(g, "gap" + suffix + ".json"));
        sqf::io::write_file(outputs.back(), sqf::io::dump(report));
        return gap.min_gap;
      }
      return 0.0;
    };

    const double before = emit(model, "", json::object());
    if (freeze_discriminating) {
      const auto dq = sqf::discriminating_qubit(model);
      sqf::FreezeDirective directive;
      directive.frozen.emplace(dq.label, dq.value);
      const auto reduced = sqf::freeze(model, directive);
      json extra = {{"frozen", {{"label", sqf::io::label_to_json(dq.label)}, {"value", int{dq.value}}}}};
      const double after = emit(reduced, "_frozen", extra);
      if (k >= 2) {
        std::cout << "min gap before: " << json(before).dump() << " GHz, after: " << json(after).dump()
                  << " GHz, ratio: " << json(after / before).dump() << '\n';
      }
    }

    std::vector<std::string> args = {absolute(problem), "--grid", std::to_string(grid), "--k", std::to_string(k)};
    if (schedule_path.empty()) args.insert(args.end(), {"--scale", json(scale).dump()});
    else args.insert(args.end(), {"--schedule", absolute(schedule_path)});
    if (freeze_discriminating) args.emplace_back("--freeze-discriminating");
    json config = {{"grid", grid}, {"k", k}, {"freeze_discriminating", freeze_discriminating}};
    if (schedule_path.empty()) config["linear_scale_ghz"] = scale;
    else config["schedule"] = absolute(schedule_path);
    std::vector<std::string> inputs = {absolute(problem)};
    if (!schedule_path.empty()) inputs.push_back(absolute(schedule_path));
    write_manifest(g, "spectrum", args, config, inputs, outputs);
  }
};

// ---------------------------------------------------------------- convert

struct ConvertCmd {
  std::string problem;
  std::string to;
  std::string out = "converted.json";

  void run(const Global& g) const {
    const auto loaded = load_problem(problem);
    json doc;
    if (to == "ising") {
      doc = sqf::io::to_json(loaded.as_ising());
    } else {
      doc = sqf::io::to_json(loaded.kind == sqf::io::Problem::Kind::qubo ? loaded.qubo
                                                                         : sqf::ising_to_qubo(loaded.ising));
    }
    const std::string path = out_path(g, out);
    sqf::io::write_file(path, sqf::io::dump(doc));
    write_manifest(g, "convert", {absolute(problem), "--to", to, "--out", out}, {{"to", to}}, {absolute(problem)},
                   {path});
  }
};

int run(const std::vector<std::string>& arguments);

int dispatch(CLI::App& app, int argc, const char* const* argv) {
  Global g;
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g.seed, "Seed for every randomized step")->capture_default_str();
  app.add_option("--out-dir", g.out_dir, "Directory for output files")->capture_default_str();
  app.add_option("--format", g.format, "Primary output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  GenerateCmd gen;
  auto* generate = app.add_subcommand("generate", "Write a random problem file");
  generate->add_option("kind", gen.kind, "Problem family")->required()->check(CLI::IsMember({"ising", "nae3sat"}));
  generate->add_option("--n", gen.n, "Number of variables")->required();
  generate->add_option("--rho", gen.rho, "Clause-to-variable ratio (nae3sat)")->capture_default_str();
  generate->add_flag("--plant,!--no-plant", gen.plant, "Plant a satisfying assignment (nae3sat)");
  generate->add_option("--out", gen.out, "Output file name inside --out-dir")->capture_default_str();

  SolveCmd solve;
  auto* solve_cmd = app.add_subcommand("solve", "Sample a problem once");
  solve_cmd->add_option("problem", solve.problem, "Problem JSON")->required();
  solve_cmd->add_option("--shots", solve.shots, "Number of shots m")->capture_default_str();
  solve.sampler.add(solve_cmd);

  SqfCmd sq;
  auto* sqf_cmd = app.add_subcommand("sqf", "Run statistical qubit freezing");
  sqf_cmd->add_option("problem", sq.problem, "Problem JSON")->required();
  sqf_cmd->add_option("--strategy", sq.strategy, "vanilla | progressive | first-m | one-each-time")
      ->capture_default_str();
  sqf_cmd->add_option("--threshold", sq.config.threshold, "Freezing threshold z_f")->capture_default_str();
  sqf_cmd->add_option("--threshold-increment,--increment", sq.config.threshold_increment,
                      "Progressive threshold step")
      ->capture_default_str();
  sqf_cmd->add_option("--increment-every,--every", sq.config.increment_every, "Iterations per threshold step")
      ->capture_default_str();
  sqf_cmd->add_option("--m-limit", sq.config.m_limit, "Freezes per iteration for first-m")->capture_default_str();
  sqf_cmd->add_option("--shots", sq.config.shots, "Shots per iteration")->capture_default_str();
  sqf_cmd->add_option("--max-iterations", sq.config.max_iterations, "Iteration cap")->capture_default_str();
  sq.sampler.add(sqf_cmd);

  SpectrumCmd spec;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Instantaneous spectrum and minimum gap");
  spectrum_cmd->add_option("problem", spec.problem, "Problem JSON")->required();
  spectrum_cmd->add_option("--schedule", spec.schedule_path, "Schedule CSV (s, A_GHz, B_GHz)");
  spectrum_cmd->add_option("--scale", spec.scale, "Linear schedule energy scale in GHz")->capture_default_str();
  spectrum_cmd->add_option("--grid", spec.grid, "Number of s points")->capture_default_str();
  spectrum_cmd->add_option("--k", spec.k, "Levels per point")->capture_default_str();
  spectrum_cmd->add_flag("--freeze-discriminating", spec.freeze_discriminating,
                         "Also analyse the model with its discriminating qubit frozen");

  ConvertCmd conv;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between QUBO and Ising");
  convert_cmd->add_option("problem", conv.problem, "Problem JSON")->required();
  convert_cmd->add_option("--to", conv.to, "Target form")->required()->check(CLI::IsMember({"ising", "qubo"}));
  convert_cmd->add_option("--out", conv.out, "Output file name inside --out-dir")->capture_default_str();

  std::string manifest_path;
  auto* replay_cmd = app.add_subcommand("replay", "Re-run a command from its manifest");
  replay_cmd->add_option("manifest", manifest_path, "Manifest JSON")->required();

  app.parse(argc, argv);

  if (*generate) gen.run(g);
  else if (*solve_cmd) solve.run(g);
  else if (*sqf_cmd) sq.run(g);
  else if (*spectrum_cmd) spec.run(g);
  else if (*convert_cmd) conv.run(g);
  else if (*replay_cmd) {
    const auto manifest = sqf::io::load_json(manifest_path);
    auto args = manifest.at("argv").get<std::vector<std::string>>();
    const std::string dir = app.get_option("--out-dir")->count() > 0
                                ? g.out_dir
                                : fs::absolute(manifest_path).parent_path().string();
    args.insert(args.begin(), {"--out-dir", dir});
    return run(args);
  }
  return 0;
}

int run(const std::vector<std::string>& arguments) {
  std::vector<const char*> argv = {"sqf"};
  for (const auto& a : arguments) argv.push_back(a.c_str());
  CLI::App app{"Statistical qubit freezing toolkit"};
  try {
    return dispatch(app, static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const sqf::Error& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("SQF_THREADS")) sqf::kernels::set_thread_limit(std::atoi(threads));
  return run(std::vector<std::string>(argv + 1, argv + argc));
}
