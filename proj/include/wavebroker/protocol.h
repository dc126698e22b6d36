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

#ifndef WAVEBROKER_PROTOCOL_H_
#define WAVEBROKER_PROTOCOL_H_

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wavebroker/game.h"
#include "wavebroker/random.h"
#include "wavebroker/topology.h"

namespace wavebroker {

// Broker/supplier message vocabulary. None of the broker's messages name a
// supplier: the undercut request carries the minimum price only.

// Broker opens a competition for the virtual link x-y.
struct Reqc {
  NodeId x, y;
  friend bool operator==(const Reqc&, const Reqc&) = default;
};
// Supplier offers price p per wavelength on x-y.
struct Offp {
  Money p = 0;
  NodeId x, y;
  friend bool operator==(const Offp&, const Offp&) = default;
};
// Broker asks for an offer below the current minimum p.
struct Ocl {
  NodeId x, y;
  Money p = 0;
  friend bool operator==(const Ocl&, const Ocl&) = default;
};
// Request not granted.
struct Nack {
  NodeId x, y;
  friend bool operator==(const Nack&, const Nack&) = default;
};
// Request granted with d wavelengths.
struct Ack {
  NodeId x, y;
  int d = 0;
  friend bool operator==(const Ack&, const Ack&) = default;
};
// Supplier can accommodate only d wavelengths (0: none at all).
struct Exc1 {
  int d = 0;
  Money p = 0;
  NodeId x, y;
  friend bool operator==(const Exc1&, const Exc1&) = default;
};
// Price p yields zero demand; the broker cannot afford it.
struct Exc2 {
  NodeId x, y;
  Money p = 0;
  friend bool operator==(const Exc2&, const Exc2&) = default;
};

using Message = std::variant<Reqc, Offp, Ocl, Nack, Ack, Exc1, Exc2>;

std::string_view message_name(const Message& m);

enum class Direction { kBrokerToSupplier, kSupplierToBroker };

struct TraceEvent {
  int round = 1;
  Direction direction = Direction::kBrokerToSupplier;
  std::string supplier;  // recipient or sender
  Message message;
  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct CompetitionTrace {
  std::vector<TraceEvent> events;
};

// Trace lines: round<TAB>dir<TAB>supplier<TAB>msgtype<TAB>field=value,...
// with dir "b>s" or "s>b" and fields in message order, e.g.
//   3	s>b	netB	Offp	p=650,x=X,y=Y
std::string format_event(const TraceEvent& event);
// Throws ParseError on malformed input.
TraceEvent parse_event(std::string_view line);
void write_trace(std::ostream& os, const CompetitionTrace& trace);
CompetitionTrace read_trace(std::istream& is);

enum class Termination { kWon, kAllDeclined, kBrokerRejected };
std::string_view termination_name(Termination t);

// What the auction needs to know about one supplier for one request.
struct Bidder {
  std::string id;
  std::optional<Money> next_unit_mc;  // nullopt: no capacity at all
  UndercutPolicy policy;
  double markup = kDefaultMarkup;
};

struct BidderSummary {
  std::string id;
  std::optional<Money> mc;
  std::optional<Money> initial_bid;
  UndercutPolicy policy;
};

struct CompetitionOutcome {
  VirtualChannel vc;
  std::optional<std::string> winner;  // set iff termination == kWon
  std::optional<Money> final_price;   // last standing minimum
  int rounds = 0;
  CompetitionTrace trace;
  Termination termination = Termination::kAllDeclined;
  std::vector<BidderSummary> bidders;
};

struct BrokerAgent {
  // Above this final price the broker walks away (Exc2 + Nack).
  std::optional<Money> reserve_price;
};

inline constexpr int kDefaultRoundCap = 10000;

// Runs one competition for vc:
//   round 1: Reqc to every supplier; each answers Offp(initial bid) or, with
//            no capacity, Exc1{d=0} and drops out;
//   round r: Ocl(current minimum) to every remaining supplier; the leader
//            passes, the others reply via decide_bid;
// and stops when a round draws no undercut, or when a single supplier is
// left after round 1. The holder of the minimum wins. Ties at the minimum
// are broken uniformly at random from `rng`.
//
// Throws RoundCapExceededError past round_cap.
CompetitionOutcome run_competition(const VirtualChannel& vc, std::span<const Bidder> bidders,
                                   const BrokerAgent& broker, SeededStream& rng,
                                   int round_cap = kDefaultRoundCap);

// Derives each supplier's next-unit MC from its network and state.
CompetitionOutcome run_competition(const VirtualChannel& vc, std::span<const SupplierAgent> suppliers,
                                   const BrokerAgent& broker, SeededStream& rng,
                                   int round_cap = kDefaultRoundCap);

Bidder make_bidder(const SupplierAgent& supplier, const VirtualChannel& vc);

// Replays a trace against the broker/supplier state machine. Codes:
// "missing-reqc", "round-order", "endpoint-mismatch", "unknown-supplier",
// "duplicate-reply", "ocl-price-mismatch", "ocl-to-inactive",
// "ocl-incomplete", "non-undercutting-bid", "unsolicited-offer",
// "premature-close", "illegal-message", "settlement-to-non-leader",
// "ack-exceeds-capacity", "after-close".
std::optional<Violation> validate_trace(const CompetitionTrace& trace);

}  // namespace wavebroker

#endif  // WAVEBROKER_PROTOCOL_H_
