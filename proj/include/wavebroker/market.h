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

#ifndef WAVEBROKER_MARKET_H_
#define WAVEBROKER_MARKET_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wavebroker/cost.h"
#include "wavebroker/game.h"
#include "wavebroker/protocol.h"
#include "wavebroker/rwa.h"
#include "wavebroker/topology.h"

namespace wavebroker {

// D(p) = max(0, floor(a - b * p)), p in minor units.
struct LinearDemand {
  double a = 0;
  double b = 0;
};

// D(p) = floor(a * p^-eps), with p clamped to at least one minor unit.
struct ConstantElasticityDemand {
  double a = 0;
  double eps = 1;
};

using DemandFunction = std::variant<LinearDemand, ConstantElasticityDemand>;

// Wavelengths the broker buys at `price`. Nonincreasing in price; zero
// means the broker cannot afford the offer.
int broker_demand(const DemandFunction& df, Money price);

struct LedgerEntry {
  Money revenue = 0;
  Money cost = 0;
  int wavelengths_sold = 0;

  Money profit() const { return revenue - cost; }
  LedgerEntry& operator+=(const LedgerEntry& other);
  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

// Revenue and allocation cost per (network, virtual channel).
class ProfitLedger {
 public:
  // Registers a zero row so every pair shows up in reports.
  void open(const std::string& network, const std::string& vc);
  void add(const std::string& network, const std::string& vc, const LedgerEntry& delta);

  const std::map<std::pair<std::string, std::string>, LedgerEntry>& entries() const { return entries_; }
  // Throws UnknownNetworkError.
  LedgerEntry network_total(const std::string& network) const;
  std::map<std::string, LedgerEntry> by_vc(const std::string& network) const;
  std::vector<std::string> networks() const;
  bool has_network(const std::string& network) const;

 private:
  std::map<std::pair<std::string, std::string>, LedgerEntry> entries_;
};

// Per-VC share of the network's total profit, in percent rounded half-up to
// one decimal. nullopt when the total is not positive. Throws
// UnknownNetworkError.
std::optional<std::map<std::string, double>> profit_percentages(const ProfitLedger& ledger,
                                                                const std::string& network);

struct SettlementResult {
  std::vector<TraceEvent> messages;
  LedgerEntry ledger_delta;
  std::vector<LightPath> allocation_delta;
  int demanded = 0;
  int allocated = 0;
};

// Grants the winner D(final price) wavelengths, or fewer when it runs out
// (Exc1 then Ack of what fits, unless reject_partial). Zero demand is
// answered with Exc2 and Nack. Throws InvalidOutcomeError unless the
// outcome was won by `winner`.
SettlementResult settle(const CompetitionOutcome& outcome, const DemandFunction& df, const SupplierAgent& winner,
                        bool reject_partial = false);
SettlementResult settle(const CompetitionOutcome& outcome, const DemandFunction& df, const SupplierAgent& winner,
                        bool reject_partial, std::span<const Route> candidates);

struct SupplierConfig {
  Network network;  // network.id doubles as the supplier id
  UndercutPolicy policy;
  double markup = kDefaultMarkup;
};

struct ChannelConfig {
  VirtualChannel vc;
  DemandFunction demand;
  std::optional<Money> reserve_price;
};

struct ScheduledRequest {
  int round = 1;
  std::string vc;
};

struct CurveRequest {
  std::string network;
  std::string vc;
  int q_cap = 1;
};

struct ScenarioConfig {
  std::string name;
  std::vector<SupplierConfig> suppliers;
  std::vector<ChannelConfig> channels;
  std::vector<ScheduledRequest> schedule;  // nondecreasing rounds
  std::uint64_t seed = 0;
  int round_cap = kDefaultRoundCap;
  bool reject_partial = false;
  bool emit_traces = false;
  std::vector<CurveRequest> cost_curves;

  const ChannelConfig& channel(const std::string& label) const;
};

// Throws ConfigError at the first violated invariant.
void validate_config(const ScenarioConfig& config);

struct AuctionRecord {
  int index = 0;
  int round = 0;
  std::string vc;
  CompetitionOutcome outcome;  // trace includes settlement messages
  std::optional<EquilibriumBound> bound;
  std::optional<bool> within_band;
  int demanded = 0;
  int allocated = 0;
  LedgerEntry settled;
};

struct SeriesRow {
  int round = 0;
  std::string vc;
  int requested = 0;
  std::optional<std::string> winner;
  std::optional<Money> final_price;
  int allocated = 0;
  std::map<std::string, Money> cumulative_profit;
};

struct NamedCurve {
  std::string network;
  CostCurve curve;
};

struct Report {
  std::string scenario;
  std::uint64_t seed = 0;
  ProfitLedger ledger;
  std::vector<AuctionRecord> auctions;
  std::vector<SeriesRow> series;
  std::map<std::string, int> wins;    // competitions won
  std::map<std::string, int> served;  // requests granted at least one wavelength
  std::map<std::string, Allocation> final_state;
  std::vector<NamedCurve> curves;
};

// Called after every settlement with the winner's id and new state.
using SettlementObserver = std::function<void(const std::string& network, const Allocation& state)>;

// Runs the schedule in order: one competition and settlement per request
// against the live allocation states. Deterministic in (config, seed).
Report run_scenario(const ScenarioConfig& config, const SettlementObserver& observer = {});

}  // namespace wavebroker

#endif  // WAVEBROKER_MARKET_H_
