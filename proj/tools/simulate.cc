// Copyright 2026 The Wavebroker Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// simulate: run broker/optical-network competition scenarios.
//
//   simulate run <scenario.json> [--seed N] [--sweep K] [--out DIR] [--traces] [--jobs J]
//   simulate curve <scenario.json> --vc LABEL --qmax N [--network ID] [--out DIR]
//   simulate validate <scenario.json>
//
// Seed precedence: --seed, then the scenario's "seed", then $SIM_SEED.
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 configuration error,
// 4 runtime error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "wavebroker/cost.h"
#include "wavebroker/errors.h"
#include "wavebroker/market.h"
#include "wavebroker/report_io.h"
#include "wavebroker/scenario.h"
#include "wavebroker/sweep.h"

namespace {

using namespace wavebroker;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;
constexpr int kExitRuntime = 4;

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("SIM_SEED");
  if (!raw || !*raw) return std::nullopt;
  const std::string text(raw);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("$SIM_SEED", "not a non-negative integer: '" + text + "'");
  }
  return value;
}

ScenarioConfig load(const std::string& path, std::optional<std::uint64_t> seed_flag) {
  ScenarioConfig config = load_scenario(path, seed_flag ? seed_flag : env_seed());
  if (seed_flag) config.seed = *seed_flag;
  return config;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

struct RunArgs {
  std::string scenario;
  std::optional<std::uint64_t> seed;
  std::optional<int> sweep;
  std::string out = "out";
  bool traces = false;
  int jobs = 0;
};

int cmd_run(const RunArgs& args) {
  const ScenarioConfig config = load(args.scenario, args.seed);
  const Report report = run_scenario(config);
  write_report_files(args.out, report, config, args.traces || config.emit_traces);

  std::cout << "scenario " << (config.name.empty() ? args.scenario : config.name) << " seed " << config.seed << ": "
            << report.auctions.size() << " requests\n";
  for (const SupplierConfig& s : config.suppliers) {
    const LedgerEntry t = report.ledger.network_total(s.network.id);
    std::cout << "  " << s.network.id << ": won " << report.wins.at(s.network.id) << ", profit " << t.profit()
              << " (revenue " << t.revenue << ", cost " << t.cost << ")\n";
  }

  if (args.sweep) {
    const int jobs = args.jobs > 0 ? args.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const SweepResult sweep = run_sweep(config, *args.sweep, jobs);
    std::ostringstream summary;
    write_sweep_summary_csv(summary, sweep);
    write_text(std::filesystem::path(args.out) / "sweep_summary.csv", summary.str());
    std::ostringstream runs;
    write_sweep_runs_csv(runs, sweep);
    write_text(std::filesystem::path(args.out) / "sweep_runs.csv", runs.str());
    std::cout << "sweep of " << *args.sweep << " runs:\n" << summary.str();
  }
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

struct CurveArgs {
  std::string scenario;
  std::string vc;
  int qmax = 0;
  std::string network;
  std::string out;
};

int cmd_curve(const CurveArgs& args) {
  const ScenarioConfig config = load(args.scenario, std::uint64_t{0});
  const SupplierConfig* chosen = nullptr;
  if (args.network.empty()) {
    if (config.suppliers.size() != 1) throw ConfigError("--network", "scenario has several networks; pick one");
    chosen = &config.suppliers.front();
  } else {
    for (const SupplierConfig& s : config.suppliers) {
      if (s.network.id == args.network) chosen = &s;
    }
    if (!chosen) throw ConfigError("--network", "unknown network '" + args.network + "'");
  }
  const ChannelConfig& channel = config.channel(args.vc);
  const CostCurve curve = total_cost_curve(chosen->network, Allocation{}, channel.vc, args.qmax);
  std::ostringstream csv;
  write_cost_curve_csv(csv, curve);
  if (args.out.empty()) {
    std::cout << csv.str();
  } else {
    std::filesystem::create_directories(args.out);
    write_text(std::filesystem::path(args.out) / ("cost_curve_" + chosen->network.id + "_" + args.vc + ".csv"),
               csv.str());
  }
  return 0;
}

int cmd_validate(const std::string& path) {
  const ScenarioConfig config = load(path, std::uint64_t{0});
  std::cout << "ok: " << config.suppliers.size() << " network(s), " << config.channels.size()
            << " virtual channel(s), " << config.schedule.size() << " request(s)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wavelength broker market simulator"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Run a scenario (optionally a seed sweep) and write reports");
  run->add_option("scenario", run_args.scenario, "Scenario JSON file")->required();
  run->add_option("--seed", run_args.seed, "Override the scenario seed");
  run->add_option("--sweep", run_args.sweep, "Run K child seeds and write sweep_summary.csv")
      ->check(CLI::PositiveNumber);
  run->add_option("--out", run_args.out, "Output directory")->capture_default_str();
  run->add_flag("--traces", run_args.traces, "Write per-auction protocol traces");
  run->add_option("--jobs", run_args.jobs, "Sweep worker threads (default: hardware threads)");

  CurveArgs curve_args;
  auto* curve = app.add_subcommand("curve", "Print the marginal-cost curve of one virtual channel");
  curve->add_option("scenario", curve_args.scenario, "Scenario JSON file")->required();
  curve->add_option("--vc", curve_args.vc, "Virtual channel label")->required();
  curve->add_option("--qmax", curve_args.qmax, "Largest quantity to price")->required()->check(CLI::PositiveNumber);
  curve->add_option("--network", curve_args.network, "Network id (needed when there are several)");
  curve->add_option("--out", curve_args.out, "Write a CSV file here instead of stdout");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a scenario file and report problems");
  validate->add_option("scenario", validate_path, "Scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run) return cmd_run(run_args);
    if (*curve) return cmd_curve(curve_args);
    if (*validate) return cmd_validate(validate_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
