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

#include "wavebroker/market.h"

#include <algorithm>
#include <climits>
#include <cmath>
#include <set>
#include <stdexcept>

#include "wavebroker/errors.h"

namespace wavebroker {

namespace {

int clamp_demand(double x) {
  // The epsilon absorbs representation error in products like 0.1 * 30.
  const double floored = std::floor(x + 1e-9);
  if (!(floored > 0)) return 0;
  if (floored >= static_cast<double>(INT_MAX)) return INT_MAX;
  return static_cast<int>(floored);
}

Money floor_div(Money num, Money den) {
  const Money q = num / den;
  return (num % den != 0 && ((num < 0) != (den < 0))) ? q - 1 : q;
}

bool label_ok(const std::string& s) {
  return !s.empty() && s.find_first_of("\t\n\r,=") == std::string::npos;
}

}  // namespace

int broker_demand(const DemandFunction& df, Money price) {
  if (price < 0) throw std::invalid_argument("price must be >= 0");
  if (const auto* lin = std::get_if<LinearDemand>(&df)) {
    return clamp_demand(lin->a - lin->b * static_cast<double>(price));
  }
  const auto& ce = std::get<ConstantElasticityDemand>(df);
  const double p = static_cast<double>(std::max<Money>(price, 1));
  return clamp_demand(ce.a * std::pow(p, -ce.eps));
}

LedgerEntry& LedgerEntry::operator+=(const LedgerEntry& other) {
  revenue += other.revenue;
  cost += other.cost;
  wavelengths_sold += other.wavelengths_sold;
  return *this;
}

void ProfitLedger::open(const std::string& network, const std::string& vc) { entries_.try_emplace({network, vc}); }

void ProfitLedger::add(const std::string& network, const std::string& vc, const LedgerEntry& delta) {
  entries_[{network, vc}] += delta;
}

bool ProfitLedger::has_network(const std::string& network) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& kv) { return kv.first.first == network; });
}

LedgerEntry ProfitLedger::network_total(const std::string& network) const {
  if (!has_network(network)) throw UnknownNetworkError("no ledger rows for network '" + network + "'");
  LedgerEntry total;
  for (const auto& [key, entry] : entries_) {
    if (key.first == network) total += entry;
  }
  return total;
}

std::map<std::string, LedgerEntry> ProfitLedger::by_vc(const std::string& network) const {
  std::map<std::string, LedgerEntry> out;
  for (const auto& [key, entry] : entries_) {
    if (key.first == network) out[key.second] += entry;
  }
  return out;
}

std::vector<std::string> ProfitLedger::networks() const {
  std::vector<std::string> out;
  for (const auto& [key, entry] : entries_) {
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  }
  return out;
}

std::optional<std::map<std::string, double>> profit_percentages(const ProfitLedger& ledger,
                                                                const std::string& network) {
  const Money total = ledger.network_total(network).profit();
  if (total <= 0) return std::nullopt;
  std::map<std::string, double> out;
  for (const auto& [vc, entry] : ledger.by_vc(network)) {
    // round(1000 * profit / total) half-up, in tenths of a percent.
    const Money tenths = floor_div(2000 * entry.profit() + total, 2 * total);
    out[vc] = static_cast<double>(tenths) / 10.0;
  }
  return out;
}

SettlementResult settle(const CompetitionOutcome& outcome, const DemandFunction& df, const SupplierAgent& winner,
                        bool reject_partial) {
  if (outcome.termination != Termination::kWon) throw InvalidOutcomeError("settle() needs a won competition");
  return settle(outcome, df, winner, reject_partial, all_routes(winner.network, outcome.vc));
}

SettlementResult settle(const CompetitionOutcome& outcome, const DemandFunction& df, const SupplierAgent& winner,
                        bool reject_partial, std::span<const Route> candidates) {
  if (outcome.termination != Termination::kWon || !outcome.winner || !outcome.final_price) {
    throw InvalidOutcomeError("settle() needs a won competition");
  }
  if (*outcome.winner != winner.id) {
    throw InvalidOutcomeError("competition was won by " + *outcome.winner + ", not " + winner.id);
  }
  const VirtualChannel& vc = outcome.vc;
  const Money price = *outcome.final_price;
  const int round = outcome.rounds + 1;
  const auto to_winner = Direction::kBrokerToSupplier;

  SettlementResult out;
  out.demanded = broker_demand(df, price);
  if (out.demanded == 0) {
    out.messages.push_back({round, to_winner, winner.id, Exc2{vc.src, vc.dst, price}});
    out.messages.push_back({round, to_winner, winner.id, Nack{vc.src, vc.dst}});
    return out;
  }

  Increment inc = incremental_allocate(winner.network, winner.state, vc, out.demanded, candidates);
  if (!inc.complete()) {
    out.messages.push_back({round, Direction::kSupplierToBroker, winner.id, Exc1{inc.placed(), price, vc.src, vc.dst}});
    if (inc.placed() == 0 || reject_partial) {
      out.messages.push_back({round, to_winner, winner.id, Nack{vc.src, vc.dst}});
      return out;
    }
  }
  out.allocated = inc.placed();
  out.messages.push_back({round, to_winner, winner.id, Ack{vc.src, vc.dst, out.allocated}});
  out.allocation_delta = std::move(inc.delta);
  out.ledger_delta.revenue = price * out.allocated;
  out.ledger_delta.cost = inc.added_cost;
  out.ledger_delta.wavelengths_sold = out.allocated;
  return out;
}

const ChannelConfig& ScenarioConfig::channel(const std::string& label) const {
  for (const ChannelConfig& c : channels) {
    if (c.vc.label == label) return c;
  }
  throw ConfigError("", "unknown virtual channel '" + label + "'");
}

void validate_config(const ScenarioConfig& config) {
  if (config.suppliers.empty()) throw ConfigError("/networks", "at least one network is required");
  if (config.round_cap < 1) throw ConfigError("/round_cap", "must be >= 1");

  std::set<std::string> ids;
  for (std::size_t i = 0; i < config.suppliers.size(); ++i) {
    const std::string at = "/networks/" + std::to_string(i);
    const SupplierConfig& s = config.suppliers[i];
    if (!label_ok(s.network.id)) throw ConfigError(at + "/id", "network id must be non-empty without tab, comma or '='");
    if (!ids.insert(s.network.id).second) throw ConfigError(at + "/id", "duplicate network id '" + s.network.id + "'");
    const auto violations = validate_network(s.network);
    if (!violations.empty()) throw ConfigError(at, violations.front().code + ": " + violations.front().detail);
    for (std::size_t n = 0; n < s.network.nodes.size(); ++n) {
      if (!label_ok(s.network.nodes[n])) {
        throw ConfigError(at + "/nodes/" + std::to_string(n), "node label must not contain tab, comma or '='");
      }
    }
    if (static_cast<int>(s.network.nodes.size()) > kMaxRoutingNodes) {
      throw ConfigError(at + "/nodes", "at most " + std::to_string(kMaxRoutingNodes) + " nodes are supported");
    }
    if (!s.policy.valid()) throw ConfigError(at + "/supplier", "undercut steps need 0 < l_min <= l_max");
    if (!(s.markup >= 1.0) || !std::isfinite(s.markup)) throw ConfigError(at + "/supplier/markup", "must be >= 1");
  }

  std::set<std::string> labels;
  for (std::size_t i = 0; i < config.channels.size(); ++i) {
    const std::string at = "/virtual_channels/" + std::to_string(i);
    const ChannelConfig& c = config.channels[i];
    if (!label_ok(c.vc.label)) throw ConfigError(at + "/label", "label must be non-empty without tab, comma or '='");
    if (!labels.insert(c.vc.label).second) throw ConfigError(at + "/label", "duplicate label '" + c.vc.label + "'");
    if (c.vc.src == c.vc.dst) throw ConfigError(at, "src and dst must differ");
    for (const SupplierConfig& s : config.suppliers) {
      for (const NodeId* end : {&c.vc.src, &c.vc.dst}) {
        if (!s.network.has_node(*end)) {
          throw ConfigError(at, "endpoint " + *end + " is not a node of network '" + s.network.id + "'");
        }
      }
    }
    if (const auto* lin = std::get_if<LinearDemand>(&c.demand)) {
      if (!(lin->a >= 0) || !(lin->b >= 0) || !std::isfinite(lin->a) || !std::isfinite(lin->b)) {
        throw ConfigError(at + "/demand", "linear demand needs finite a >= 0 and b >= 0");
      }
    } else {
      const auto& ce = std::get<ConstantElasticityDemand>(c.demand);
      if (!(ce.a >= 0) || !(ce.eps > 0) || !std::isfinite(ce.a) || !std::isfinite(ce.eps)) {
        throw ConfigError(at + "/demand", "constant-elasticity demand needs finite a >= 0 and eps > 0");
      }
    }
    if (c.reserve_price && *c.reserve_price < 0) throw ConfigError(at + "/reserve_price", "must be >= 0");
  }

  int last_round = 0;
  for (std::size_t i = 0; i < config.schedule.size(); ++i) {
    const std::string at = "/schedule/" + std::to_string(i);
    const ScheduledRequest& r = config.schedule[i];
    if (!labels.contains(r.vc)) throw ConfigError(at + "/vc", "unknown virtual channel '" + r.vc + "'");
    if (r.round < 1) throw ConfigError(at + "/round", "rounds start at 1");
    if (r.round < last_round) throw ConfigError(at + "/round", "schedule rounds must be nondecreasing");
    last_round = r.round;
  }

  for (std::size_t i = 0; i < config.cost_curves.size(); ++i) {
    const std::string at = "/cost_curves/" + std::to_string(i);
    const CurveRequest& c = config.cost_curves[i];
    if (!ids.contains(c.network)) throw ConfigError(at + "/network", "unknown network '" + c.network + "'");
    if (!labels.contains(c.vc)) throw ConfigError(at + "/vc", "unknown virtual channel '" + c.vc + "'");
    if (c.q_cap < 1) throw ConfigError(at + "/q_cap", "must be >= 1");
  }
}

Report run_scenario(const ScenarioConfig& config, const SettlementObserver& observer) {
  validate_config(config);

  Report report;
  report.scenario = config.name;
  report.seed = config.seed;
  SeededStream rng(config.seed);

  std::vector<SupplierAgent> agents;
  for (const SupplierConfig& s : config.suppliers) {
    agents.push_back({s.network.id, s.network, Allocation{}, s.policy, s.markup});
    report.wins[s.network.id] = 0;
    report.served[s.network.id] = 0;
    for (const ChannelConfig& c : config.channels) report.ledger.open(s.network.id, c.vc.label);
  }

  // Route enumeration is the expensive part of an MC query; do it once.
  std::map<std::pair<std::size_t, std::string>, std::vector<Route>> routes;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    for (const ChannelConfig& c : config.channels) routes[{i, c.vc.label}] = all_routes(agents[i].network, c.vc);
  }

  for (const CurveRequest& req : config.cost_curves) {
    for (const SupplierAgent& a : agents) {
      if (a.id != req.network) continue;
      report.curves.push_back({a.id, total_cost_curve(a.network, a.state, config.channel(req.vc).vc, req.q_cap)});
    }
  }

  std::map<std::string, Money> cumulative;
  for (const SupplierAgent& a : agents) cumulative[a.id] = 0;

  for (std::size_t n = 0; n < config.schedule.size(); ++n) {
    const ScheduledRequest& req = config.schedule[n];
    const ChannelConfig& channel = config.channel(req.vc);

    std::vector<Bidder> bidders;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      const SupplierAgent& a = agents[i];
      bidders.push_back({a.id, marginal_cost(a.network, a.state, channel.vc, routes[{i, req.vc}]), a.policy, a.markup});
    }

    AuctionRecord record;
    record.index = static_cast<int>(n);
    record.round = req.round;
    record.vc = req.vc;
    record.outcome = run_competition(channel.vc, bidders, BrokerAgent{channel.reserve_price}, rng, config.round_cap);

    std::vector<Money> mcs;
    std::vector<UndercutPolicy> policies;
    for (const BidderSummary& b : record.outcome.bidders) {
      if (!b.mc) continue;
      mcs.push_back(*b.mc);
      policies.push_back(b.policy);
    }
    if (mcs.size() >= 2) {
      record.bound = equilibrium_bounds(mcs, policies);
      if (record.outcome.final_price) record.within_band = record.bound->contains(*record.outcome.final_price);
    }

    if (record.outcome.termination == Termination::kWon) {
      std::size_t w = 0;
      while (agents[w].id != *record.outcome.winner) ++w;
      SupplierAgent& winner = agents[w];
      SettlementResult settled =
          settle(record.outcome, channel.demand, winner, config.reject_partial, routes[{w, req.vc}]);
      auto& events = record.outcome.trace.events;
      events.insert(events.end(), settled.messages.begin(), settled.messages.end());
      record.demanded = settled.demanded;
      record.allocated = settled.allocated;
      record.settled = settled.ledger_delta;
      if (settled.allocated > 0) {
        winner.state = apply_delta(winner.state, settled.allocation_delta);
        report.ledger.add(winner.id, req.vc, settled.ledger_delta);
        cumulative[winner.id] += settled.ledger_delta.profit();
        ++report.served[winner.id];
      }
      ++report.wins[winner.id];
      if (observer) observer(winner.id, winner.state);
    }

    SeriesRow row;
    row.round = req.round;
    row.vc = req.vc;
    row.requested = record.demanded;
    row.winner = record.outcome.winner;
    row.final_price = record.outcome.final_price;
    row.allocated = record.allocated;
    row.cumulative_profit = cumulative;
    report.series.push_back(std::move(row));
    report.auctions.push_back(std::move(record));
  }

  for (const SupplierAgent& a : agents) report.final_state[a.id] = a.state;
  return report;
}

}  // namespace wavebroker
