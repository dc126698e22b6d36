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

#include <sstream>

#include "doctest.h"
#include "support/fixtures.h"
#include "wavebroker/errors.h"
#include "wavebroker/protocol.h"

using namespace wavebroker;

namespace {

const VirtualChannel kVc{"X", "Y", "VC1"};

std::vector<Bidder> duel(Money mc_a, Money mc_b, UndercutPolicy pa = {50, 100}, UndercutPolicy pb = {50, 100}) {
  return {{"netA", mc_a, pa, 2.0}, {"netB", mc_b, pb, 2.0}};
}

TraceEvent ev(int round, Direction d, std::string who, Message m) { return {round, d, std::move(who), std::move(m)}; }

constexpr auto kB2S = Direction::kBrokerToSupplier;
constexpr auto kS2B = Direction::kSupplierToBroker;

}  // namespace

TEST_CASE("duel with MC 600 vs 400 settles near 600") {
  SeededStream rng(42);
  const auto out = run_competition(kVc, duel(600, 400), {}, rng);
  CHECK(out.termination == Termination::kWon);
  CHECK(out.winner == "netB");
  REQUIRE(out.final_price);
  CHECK(*out.final_price >= 500);
  CHECK(*out.final_price <= 700);
  CHECK_FALSE(validate_trace(out.trace));
}

TEST_CASE("a lone capable supplier wins at its opening bid") {
  SeededStream rng(1);
  const std::vector<Bidder> bidders{{"netA", std::nullopt, {50, 100}, 2.0}, {"netB", 400, {50, 100}, 2.0}};
  const auto out = run_competition(kVc, bidders, {}, rng);
  CHECK(out.winner == "netB");
  CHECK(out.final_price == 800);
  CHECK(out.rounds == 1);
  CHECK(out.trace.events.size() == 4);
  CHECK(std::holds_alternative<Exc1>(out.trace.events[2].message));
  CHECK_FALSE(validate_trace(out.trace));
}

TEST_CASE("nobody has capacity") {
  SeededStream rng(1);
  const std::vector<Bidder> bidders{{"netA", std::nullopt, {50, 100}, 2.0}, {"netB", std::nullopt, {50, 100}, 2.0}};
  const auto out = run_competition(kVc, bidders, {}, rng);
  CHECK(out.termination == Termination::kAllDeclined);
  CHECK_FALSE(out.winner);
  CHECK_FALSE(out.final_price);
  CHECK_FALSE(validate_trace(out.trace));
}

TEST_CASE("broker walks away above its reserve price") {
  SeededStream rng(1);
  const std::vector<Bidder> bidders{{"netB", 400, {50, 100}, 2.0}};
  const auto out = run_competition(kVc, bidders, BrokerAgent{700}, rng);
  CHECK(out.termination == Termination::kBrokerRejected);
  CHECK_FALSE(out.winner);
  CHECK(out.final_price == 800);
  REQUIRE(out.trace.events.size() == 4);
  CHECK(std::holds_alternative<Exc2>(out.trace.events[2].message));
  CHECK(std::holds_alternative<Nack>(out.trace.events[3].message));
  CHECK_FALSE(validate_trace(out.trace));
}

TEST_CASE("round cap") {
  SeededStream rng(9);
  CHECK_THROWS_AS(run_competition(kVc, duel(600, 400), {}, rng, 2), RoundCapExceededError);
}

TEST_CASE("competition replays from the seed") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SeededStream a(seed), b(seed);
    const auto x = run_competition(kVc, duel(500, 500), {}, a);
    const auto y = run_competition(kVc, duel(500, 500), {}, b);
    CHECK(x.winner == y.winner);
    CHECK(x.trace.events == y.trace.events);
  }
}

TEST_CASE("trace text format") {
  const TraceEvent e = ev(3, kS2B, "netB", Offp{650, "X", "Y"});
  CHECK(format_event(e) == "3\ts>b\tnetB\tOffp\tp=650,x=X,y=Y");
  CHECK(parse_event(format_event(e)) == e);
  CHECK(format_event(ev(1, kB2S, "netA", Reqc{"X", "Y"})) == "1\tb>s\tnetA\tReqc\tx=X,y=Y");
  CHECK(format_event(ev(4, kS2B, "netA", Exc1{2, 650, "X", "Y"})) == "4\ts>b\tnetA\tExc1\td=2,p=650,x=X,y=Y");
  CHECK_THROWS_AS(parse_event("1\tb>s\tnetA\tBogus\tx=X"), ParseError);
  CHECK_THROWS_AS(parse_event("1\tsideways\tnetA\tReqc\tx=X,y=Y"), ParseError);
  CHECK_THROWS_AS(parse_event("1\tb>s\tnetA\tAck\tx=X,y=Y"), ParseError);

  SeededStream rng(8);
  const auto out = run_competition(kVc, duel(600, 400), {}, rng);
  std::stringstream io;
  write_trace(io, out.trace);
  CHECK(read_trace(io).events == out.trace.events);
}

TEST_CASE("validate_trace rejects broken traces") {
  std::vector<TraceEvent> good{
      ev(1, kB2S, "netA", Reqc{"X", "Y"}),   ev(1, kB2S, "netB", Reqc{"X", "Y"}),
      ev(1, kS2B, "netA", Offp{1200, "X", "Y"}), ev(1, kS2B, "netB", Offp{800, "X", "Y"}),
      ev(2, kB2S, "netA", Ocl{"X", "Y", 800}),  ev(2, kB2S, "netB", Ocl{"X", "Y", 800}),
      ev(2, kS2B, "netA", Offp{720, "X", "Y"}),
      ev(3, kB2S, "netA", Ocl{"X", "Y", 720}),  ev(3, kB2S, "netB", Ocl{"X", "Y", 720}),
      ev(4, kB2S, "netA", Ack{"X", "Y", 3}),
  };
  REQUIRE_FALSE(validate_trace({good}));

  auto broken = [&](auto edit) {
    auto events = good;
    edit(events);
    const auto v = validate_trace({events});
    return v ? v->code : std::string("ok");
  };
  CHECK(broken([](auto& e) { e.erase(e.begin(), e.begin() + 4); }) == "missing-reqc");
  CHECK(broken([](auto& e) { std::get<Offp>(e[6].message).p = 800; }) == "non-undercutting-bid");
  CHECK(broken([](auto& e) { std::get<Ocl>(e[7].message).p = 800; }) == "ocl-price-mismatch");
  CHECK(broken([](auto& e) { e[9].supplier = "netB"; }) == "settlement-to-non-leader");
  CHECK(broken([](auto& e) { e[6].supplier = "netC"; }) == "unknown-supplier");
  CHECK(broken([](auto& e) { e.erase(e.begin() + 8); }) == "ocl-incomplete");
  CHECK(broken([](auto& e) { e.erase(e.begin() + 7, e.begin() + 9); e[7].round = 3; }) == "premature-close");
  CHECK(broken([](auto& e) { e.push_back(ev(4, kB2S, "netA", Nack{"X", "Y"})); }) == "after-close");
  CHECK(broken([](auto& e) { e[4].round = 1; }) == "illegal-message");
  CHECK(broken([](auto& e) { e[6].round = 1; }) == "round-order");
  CHECK(broken([](auto& e) { std::get<Offp>(e[6].message).x = "Z"; }) == "endpoint-mismatch");
  CHECK(broken([](auto& e) {
          e.insert(e.begin() + 9, ev(4, kS2B, "netA", Exc1{2, 720, "X", "Y"}));
        }) == "ack-exceeds-capacity");
}

TEST_CASE("Ocl carries no supplier identity") {
  // The wire form of an undercut request names the recipient only.
  SeededStream rng(4);
  const auto out = run_competition(kVc, duel(600, 400), {}, rng);
  for (const TraceEvent& e : out.trace.events) {
    if (!std::holds_alternative<Ocl>(e.message)) continue;
    const std::string line = format_event(e);
    CHECK(line.find("\tOcl\tx=X,y=Y,p=") != std::string::npos);
    CHECK(line.find("netA", line.find("Ocl")) == std::string::npos);
    CHECK(line.find("netB", line.find("Ocl")) == std::string::npos);
  }
}
