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

#include "wavebroker/sweep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "wavebroker/random.h"

namespace wavebroker {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

SweepRun one_run(const ScenarioConfig& base, int index) {
  ScenarioConfig config = base;
  config.seed = child_seed(base.seed, static_cast<std::uint64_t>(index));
  const Report report = run_scenario(config);

  SweepRun run;
  run.index = index;
  run.seed = config.seed;
  for (const SupplierConfig& s : config.suppliers) {
    const std::string& id = s.network.id;
    run.totals[id] = report.ledger.network_total(id);
    run.wins[id] = report.wins.at(id);
    run.decided += report.wins.at(id);
    run.conserved =
        run.conserved && run.totals[id].cost == allocation_cost(s.network, report.final_state.at(id));
  }
  return run;
}

}  // namespace

SweepResult run_sweep(const ScenarioConfig& config, int runs, int workers) {
  if (runs < 1) throw std::invalid_argument("sweep needs at least one run");
  validate_config(config);
  workers = std::clamp(workers, 1, runs);

  SweepResult result;
  result.runs.resize(runs);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (int i = next++; i < runs; i = next++) {
      try {
        result.runs[i] = one_run(config, i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const SupplierConfig& s : config.suppliers) {
    const std::string& id = s.network.id;
    SweepSummaryRow row;
    row.network = id;
    row.runs = runs;
    double sum = 0;
    for (const SweepRun& r : result.runs) {
      sum += static_cast<double>(r.totals.at(id).profit());
      row.wins += r.wins.at(id);
      row.decided += r.decided;
    }
    row.mean_profit = sum / runs;
    if (runs > 1) {
      double sq = 0;
      for (const SweepRun& r : result.runs) {
        const double d = static_cast<double>(r.totals.at(id).profit()) - row.mean_profit;
        sq += d * d;
      }
      row.stddev_profit = std::sqrt(sq / (runs - 1));
    }
    row.win_rate = row.decided ? static_cast<double>(row.wins) / row.decided : 0.0;
    result.summary.push_back(row);
  }
  return result;
}

void write_sweep_summary_csv(std::ostream& os, const SweepResult& result) {
  os << "network,runs,mean_profit,stddev_profit,wins,decided,win_rate\n";
  for (const SweepSummaryRow& r : result.summary) {
    os << r.network << ',' << r.runs << ',' << fixed(r.mean_profit, 2) << ',' << fixed(r.stddev_profit, 2) << ','
       << r.wins << ',' << r.decided << ',' << fixed(r.win_rate, 4) << '\n';
  }
}

void write_sweep_runs_csv(std::ostream& os, const SweepResult& result) {
  os << "run,seed,network,revenue,cost,profit,wins,conserved\n";
  for (const SweepRun& r : result.runs) {
    for (const auto& [id, t] : r.totals) {
      os << r.index << ',' << r.seed << ',' << id << ',' << t.revenue << ',' << t.cost << ',' << t.profit() << ','
         << r.wins.at(id) << ',' << (r.conserved ? "true" : "false") << '\n';
    }
  }
}

}  // namespace wavebroker
