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

#include "doctest.h"
#include "support/fixtures.h"
#include "wavebroker/errors.h"
#include "wavebroker/market.h"
#include "wavebroker/report_io.h"

using namespace wavebroker;

namespace {

const VirtualChannel kVc{"A", "B", "VC1"};

CompetitionOutcome won_by(const std::string& id, Money price) {
  CompetitionOutcome out;
  out.vc = kVc;
  out.winner = id;
  out.final_price = price;
  out.rounds = 3;
  out.termination = Termination::kWon;
  return out;
}

SupplierAgent agent(int capacity, Money cost) {
  return {"netB", wbtest::single_link(capacity, cost, 16), {}, {50, 100}, 2.0};
}

template <class T>
bool is(const TraceEvent& e) {
  return std::holds_alternative<T>(e.message);
}

// Two single-link networks; B is cheaper by far more than any undercut step.
ScenarioConfig two_network_config() {
  ScenarioConfig c;
  c.name = "unit";
  c.seed = 17;
  c.suppliers = {{Network{"netA", {"A", "B"}, {{"A", "B", 32, 600}}, 32}, {50, 100}, 2.0},
                 {Network{"netB", {"A", "B"}, {{"A", "B", 32, 400}}, 32}, {50, 100}, 2.0}};
  c.channels = {{kVc, LinearDemand{10, 0.01}, std::nullopt}};
  return c;
}

}  // namespace

TEST_CASE("broker_demand examples") {
  CHECK(broker_demand(LinearDemand{100, 2}, 10) == 80);
  CHECK(broker_demand(LinearDemand{100, 2}, 50) == 0);
  CHECK(broker_demand(LinearDemand{100, 2}, 60) == 0);
  CHECK(broker_demand(ConstantElasticityDemand{100, 1}, 4) == 25);
  CHECK(broker_demand(ConstantElasticityDemand{100, 1}, 0) == 100);
  CHECK(broker_demand(LinearDemand{10, 0.1}, 30) == 7);
  CHECK_THROWS(broker_demand(LinearDemand{1, 1}, -1));
}

TEST_CASE("demand never rises with price") {
  const DemandFunction fns[] = {LinearDemand{500, 0.3}, ConstantElasticityDemand{1e6, 1.3}};
  for (const auto& df : fns) {
    int last = broker_demand(df, 0);
    for (Money p = 1; p < 5000; p += 7) {
      const int d = broker_demand(df, p);
      CHECK(d >= 0);
      CHECK(d <= last);
      last = d;
    }
  }
}

TEST_CASE("settle: zero demand") {
  const auto r = settle(won_by("netB", 500), LinearDemand{100, 2}, agent(8, 10));
  REQUIRE(r.messages.size() == 2);
  CHECK(is<Exc2>(r.messages[0]));
  CHECK(is<Nack>(r.messages[1]));
  CHECK(r.ledger_delta == LedgerEntry{});
  CHECK(r.allocation_delta.empty());
}

TEST_CASE("settle: demand fits") {
  // D(100) = 5.
  const auto r = settle(won_by("netB", 100), LinearDemand{15, 0.1}, agent(8, 10));
  REQUIRE(r.messages.size() == 1);
  CHECK(std::get<Ack>(r.messages[0].message).d == 5);
  CHECK(r.messages[0].round == 4);
  CHECK(r.ledger_delta.revenue == 500);
  CHECK(r.ledger_delta.cost == 50);
  CHECK(r.ledger_delta.wavelengths_sold == 5);
  CHECK(r.allocation_delta.size() == 5);
}

TEST_CASE("settle: demand exceeds capacity") {
  // D(100) = 10, capacity 8.
  const auto r = settle(won_by("netB", 100), LinearDemand{20, 0.1}, agent(8, 10));
  REQUIRE(r.messages.size() == 2);
  CHECK(std::get<Exc1>(r.messages[0].message) == Exc1{8, 100, "A", "B"});
  CHECK(r.messages[0].direction == Direction::kSupplierToBroker);
  CHECK(std::get<Ack>(r.messages[1].message).d == 8);
  CHECK(r.ledger_delta.revenue == 800);
  CHECK(r.demanded == 10);
  CHECK(r.allocated == 8);

  const auto strict = settle(won_by("netB", 100), LinearDemand{20, 0.1}, agent(8, 10), true);
  REQUIRE(strict.messages.size() == 2);
  CHECK(is<Nack>(strict.messages[1]));
  CHECK(strict.allocated == 0);
  CHECK(strict.ledger_delta == LedgerEntry{});
}

TEST_CASE("settle: only won outcomes by the named winner") {
  CompetitionOutcome declined;
  declined.vc = kVc;
  CHECK_THROWS_AS(settle(declined, LinearDemand{10, 0}, agent(8, 10)), InvalidOutcomeError);
  CHECK_THROWS_AS(settle(won_by("netA", 100), LinearDemand{10, 0}, agent(8, 10)), InvalidOutcomeError);
}

TEST_CASE("profit percentages") {
  ProfitLedger ledger;
  ledger.add("n", "VC1", {150, 100, 1});
  ledger.add("n", "VC2", {50, 0, 1});
  ledger.add("n", "VC3", {300, 200, 2});
  const auto pct = profit_percentages(ledger, "n");
  REQUIRE(pct);
  CHECK(*pct == std::map<std::string, double>{{"VC1", 25.0}, {"VC2", 25.0}, {"VC3", 50.0}});

  ProfitLedger single;
  single.add("n", "VC1", {10, 3, 1});
  CHECK(profit_percentages(single, "n")->at("VC1") == 100.0);

  ProfitLedger thirds;
  thirds.add("n", "a", {1, 0, 1});
  thirds.add("n", "b", {2, 0, 1});
  CHECK(profit_percentages(thirds, "n")->at("a") == 33.3);
  CHECK(profit_percentages(thirds, "n")->at("b") == 66.7);

  ProfitLedger zero;
  zero.open("n", "VC1");
  CHECK_FALSE(profit_percentages(zero, "n"));
  CHECK_THROWS_AS(profit_percentages(zero, "other"), UnknownNetworkError);
}

TEST_CASE("run_scenario: cheaper network takes the request") {
  ScenarioConfig c = two_network_config();
  c.schedule = {{1, "VC1"}};
  const Report r = run_scenario(c);
  CHECK(r.ledger.network_total("netA") == LedgerEntry{});
  CHECK(r.ledger.network_total("netB").profit() > 0);
  REQUIRE(r.auctions.size() == 1);
  CHECK(r.auctions[0].within_band == true);
  CHECK_FALSE(validate_trace(r.auctions[0].outcome.trace));
  CHECK(r.ledger.network_total("netB").cost == allocation_cost(c.suppliers[1].network, r.final_state.at("netB")));
}

TEST_CASE("run_scenario: empty schedule leaves a zero ledger") {
  const Report r = run_scenario(two_network_config());
  CHECK(r.auctions.empty());
  CHECK(r.ledger.entries().size() == 2);
  for (const auto& [key, e] : r.ledger.entries()) CHECK(e == LedgerEntry{});
}

TEST_CASE("run_scenario: same seed, same bytes") {
  ScenarioConfig c = two_network_config();
  c.suppliers[0].network.links[0].unit_cost = 400;  // equal MCs: ties and coin flips
  c.schedule.assign(12, {1, "VC1"});
  const std::string a = report_json(run_scenario(c), c);
  const std::string b = report_json(run_scenario(c), c);
  CHECK(a == b);
  c.seed = 18;
  CHECK(report_json(run_scenario(c), c) != a);
}

TEST_CASE("run_scenario: allocations stay valid after every settlement") {
  ScenarioConfig c = two_network_config();
  c.suppliers[0].network = wbtest::fig3_network(100, 60);
  c.suppliers[0].network.id = "netA";
  c.suppliers[1].network = wbtest::fig3_network(90, 70);
  c.suppliers[1].network.id = "netB";
  c.channels = {{wbtest::fig3_vc(), LinearDemand{6, 0.005}, std::nullopt}};
  c.schedule.assign(10, {1, "VC1"});
  int checks = 0;
  const Report r = run_scenario(c, [&](const std::string& id, const Allocation& state) {
    const Network& net = id == "netA" ? c.suppliers[0].network : c.suppliers[1].network;
    CHECK(validate_allocation(net, state).empty());
    ++checks;
  });
  CHECK(checks > 0);
  for (const SupplierConfig& s : c.suppliers) {
    CHECK(r.ledger.network_total(s.network.id).cost == allocation_cost(s.network, r.final_state.at(s.network.id)));
  }
}

TEST_CASE("validate_config locations") {
  ScenarioConfig c = two_network_config();
  c.schedule = {{2, "VC1"}, {1, "VC1"}};
  try {
    validate_config(c);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.location() == "/schedule/1/round");
  }
  c.schedule = {{1, "nope"}};
  CHECK_THROWS_AS(validate_config(c), ConfigError);
}
