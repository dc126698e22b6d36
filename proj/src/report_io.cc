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

#include "wavebroker/report_io.h"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "wavebroker/errors.h"

namespace wavebroker {

namespace {

using ojson = nlohmann::ordered_json;

template <class T>
ojson or_null(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("failed writing " + path.string());
}

std::string padded(int n, int width) {
  std::string s = std::to_string(n);
  return std::string(s.size() < static_cast<std::size_t>(width) ? width - s.size() : 0, '0') + s;
}

}  // namespace

void write_ledger_csv(std::ostream& os, const ProfitLedger& ledger) {
  os << "network,vc,revenue,cost,profit,wavelengths_sold\n";
  for (const auto& [key, e] : ledger.entries()) {
    os << key.first << ',' << key.second << ',' << e.revenue << ',' << e.cost << ',' << e.profit() << ','
       << e.wavelengths_sold << '\n';
  }
}

void write_series_csv(std::ostream& os, const Report& report) {
  os << "round,vc,requested,winner,final_price,allocated\n";
  for (const SeriesRow& r : report.series) {
    os << r.round << ',' << r.vc << ',' << r.requested << ',' << r.winner.value_or("") << ',';
    if (r.final_price) os << *r.final_price;
    os << ',' << r.allocated << '\n';
  }
}

void write_cost_curve_csv(std::ostream& os, const CostCurve& curve) {
  os << "vc,q_from,q_to,mc_minor_units\n";
  for (const CostSegment& s : curve.segments) {
    os << curve.vc.label << ',' << s.q_from << ',' << s.q_to << ',' << s.mc << '\n';
  }
}

std::string report_json(const Report& report, const ScenarioConfig& config) {
  ojson root;
  root["scenario"] = report.scenario;
  root["seed"] = report.seed;

  ojson totals = ojson::object();
  for (const SupplierConfig& s : config.suppliers) {
    const std::string& id = s.network.id;
    const LedgerEntry t = report.ledger.network_total(id);
    ojson n;
    n["revenue"] = t.revenue;
    n["cost"] = t.cost;
    n["profit"] = t.profit();
    n["wavelengths_sold"] = t.wavelengths_sold;
    n["competitions_won"] = report.wins.at(id);
    n["requests_served"] = report.served.at(id);
    const auto pct = profit_percentages(report.ledger, id);
    n["profit_percentages"] = pct ? ojson(*pct) : ojson(nullptr);
    totals[id] = std::move(n);
  }
  root["totals"] = std::move(totals);

  ojson ledger = ojson::array();
  for (const auto& [key, e] : report.ledger.entries()) {
    ledger.push_back({{"network", key.first},
                      {"vc", key.second},
                      {"revenue", e.revenue},
                      {"cost", e.cost},
                      {"profit", e.profit()},
                      {"wavelengths_sold", e.wavelengths_sold}});
  }
  root["ledger"] = std::move(ledger);

  ojson auctions = ojson::array();
  for (const AuctionRecord& a : report.auctions) {
    ojson rec;
    rec["index"] = a.index;
    rec["round"] = a.round;
    rec["vc"] = a.vc;
    rec["termination"] = std::string(termination_name(a.outcome.termination));
    rec["winner"] = or_null(a.outcome.winner);
    rec["final_price"] = or_null(a.outcome.final_price);
    rec["rounds"] = a.outcome.rounds;
    ojson bidders = ojson::array();
    for (const BidderSummary& b : a.outcome.bidders) {
      bidders.push_back({{"id", b.id},
                         {"mc", or_null(b.mc)},
                         {"initial_bid", or_null(b.initial_bid)},
                         {"l_min", b.policy.l_min},
                         {"l_max", b.policy.l_max}});
    }
    rec["bidders"] = std::move(bidders);
    if (a.bound) {
      rec["equilibrium_bounds"] = {{"reference_mc", a.bound->reference},
                                   {"e_min", a.bound->e_min},
                                   {"e_max", a.bound->e_max},
                                   {"lower", a.bound->lower()},
                                   {"upper", a.bound->upper()}};
    } else {
      rec["equilibrium_bounds"] = nullptr;
    }
    rec["within_band"] = or_null(a.within_band);
    rec["demanded"] = a.demanded;
    rec["allocated"] = a.allocated;
    rec["revenue"] = a.settled.revenue;
    rec["cost"] = a.settled.cost;
    rec["messages"] = a.outcome.trace.events.size();
    auctions.push_back(std::move(rec));
  }
  root["auctions"] = std::move(auctions);

  ojson series = ojson::array();
  for (const SeriesRow& r : report.series) {
    series.push_back({{"round", r.round},
                      {"vc", r.vc},
                      {"requested", r.requested},
                      {"winner", or_null(r.winner)},
                      {"final_price", or_null(r.final_price)},
                      {"allocated", r.allocated},
                      {"cumulative_profit", ojson(r.cumulative_profit)}});
  }
  root["series"] = std::move(series);

  ojson curves = ojson::array();
  for (const NamedCurve& c : report.curves) {
    ojson segs = ojson::array();
    for (const CostSegment& s : c.curve.segments) segs.push_back({{"q_from", s.q_from}, {"q_to", s.q_to}, {"mc", s.mc}});
    curves.push_back({{"network", c.network}, {"vc", c.curve.vc.label}, {"q_max", c.curve.q_max}, {"segments", segs}});
  }
  root["cost_curves"] = std::move(curves);

  ojson allocations = ojson::object();
  for (const SupplierConfig& s : config.suppliers) {
    const Allocation& state = report.final_state.at(s.network.id);
    ojson lines = ojson::array();
    std::istringstream dump(format_allocation(s.network, state.lightpaths()));
    for (std::string line; std::getline(dump, line);) lines.push_back(line);
    allocations[s.network.id] = {{"cost", allocation_cost(s.network, state)}, {"lightpaths", lines}};
  }
  root["allocations"] = std::move(allocations);

  return root.dump(2) + "\n";
}

void write_report_files(const std::filesystem::path& out_dir, const Report& report, const ScenarioConfig& config,
                        bool emit_traces) {
  std::filesystem::create_directories(out_dir);
  {
    std::ostringstream os;
    write_ledger_csv(os, report.ledger);
    write_file(out_dir / "ledger.csv", os.str());
  }
  {
    std::ostringstream os;
    write_series_csv(os, report);
    write_file(out_dir / "series.csv", os.str());
  }
  write_file(out_dir / "report.json", report_json(report, config));
  for (const NamedCurve& c : report.curves) {
    std::ostringstream os;
    write_cost_curve_csv(os, c.curve);
    write_file(out_dir / ("cost_curve_" + c.network + "_" + c.curve.vc.label + ".csv"), os.str());
  }
  if (emit_traces) {
    const auto dir = out_dir / "traces";
    std::filesystem::create_directories(dir);
    for (const AuctionRecord& a : report.auctions) {
      std::ostringstream os;
      write_trace(os, a.outcome.trace);
      write_file(dir / ("auction_" + padded(a.index, 4) + ".tsv"), os.str());
    }
  }
}

}  // namespace wavebroker
