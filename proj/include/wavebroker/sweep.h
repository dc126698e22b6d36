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

#ifndef WAVEBROKER_SWEEP_H_
#define WAVEBROKER_SWEEP_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "wavebroker/market.h"

namespace wavebroker {

struct SweepRun {
  int index = 0;
  std::uint64_t seed = 0;
  std::map<std::string, LedgerEntry> totals;
  std::map<std::string, int> wins;
  int decided = 0;  // competitions that ended with a winner
  // Ledger cost equals the cost of the final allocation, per network.
  bool conserved = true;
};

struct SweepSummaryRow {
  std::string network;
  int runs = 0;
  double mean_profit = 0;
  double stddev_profit = 0;  // sample standard deviation; 0 for one run
  int wins = 0;
  int decided = 0;
  double win_rate = 0;
};

struct SweepResult {
  std::vector<SweepRun> runs;  // run-index order
  std::vector<SweepSummaryRow> summary;
};

// Runs the scenario `runs` times, run i seeded with
// child_seed(config.seed, i), on up to `workers` threads. Output order does
// not depend on scheduling.
SweepResult run_sweep(const ScenarioConfig& config, int runs, int workers = 1);

// network,runs,mean_profit,stddev_profit,wins,decided,win_rate
void write_sweep_summary_csv(std::ostream& os, const SweepResult& result);
// run,seed,network,revenue,cost,profit,wins,conserved
void write_sweep_runs_csv(std::ostream& os, const SweepResult& result);

}  // namespace wavebroker

#endif  // WAVEBROKER_SWEEP_H_
