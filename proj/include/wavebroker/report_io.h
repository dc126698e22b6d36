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

#ifndef WAVEBROKER_REPORT_IO_H_
#define WAVEBROKER_REPORT_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "wavebroker/cost.h"
#include "wavebroker/market.h"

namespace wavebroker {

// network,vc,revenue,cost,profit,wavelengths_sold
void write_ledger_csv(std::ostream& os, const ProfitLedger& ledger);
// round,vc,requested,winner,final_price,allocated
void write_series_csv(std::ostream& os, const Report& report);
// vc,q_from,q_to,mc_minor_units
void write_cost_curve_csv(std::ostream& os, const CostCurve& curve);

// Whole report as pretty-printed JSON with a trailing newline. Key order is
// fixed, so equal reports give equal bytes.
std::string report_json(const Report& report, const ScenarioConfig& config);

// ledger.csv, series.csv, report.json, cost_curve_<network>_<vc>.csv per
// requested curve, and traces/auction_<index>.tsv when emit_traces.
void write_report_files(const std::filesystem::path& out_dir, const Report& report, const ScenarioConfig& config,
                        bool emit_traces);

}  // namespace wavebroker

#endif  // WAVEBROKER_REPORT_IO_H_
