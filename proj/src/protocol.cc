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

#include "wavebroker/protocol.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "wavebroker/cost.h"
#include "wavebroker/errors.h"

namespace wavebroker {

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::kWon:
      return "won";
    case Termination::kAllDeclined:
      return "all_declined";
    case Termination::kBrokerRejected:
      return "broker_rejected";
  }
  return "?";
}

namespace {

constexpr auto kToSupplier = Direction::kBrokerToSupplier;
constexpr auto kToBroker = Direction::kSupplierToBroker;

// Lowest price among `who`; ties drawn uniformly, in `who` order.
std::size_t pick_minimum(const std::vector<std::size_t>& who, const std::vector<Money>& price, SeededStream& rng) {
  Money best = price[who.front()];
  for (std::size_t i : who) best = std::min(best, price[i]);
  std::vector<std::size_t> tied;
  for (std::size_t i : who) {
    if (price[i] == best) tied.push_back(i);
  }
  return tied.size() == 1 ? tied.front() : tied[rng.pick(tied.size())];
}

}  // namespace

Bidder make_bidder(const SupplierAgent& supplier, const VirtualChannel& vc) {
  return {supplier.id, marginal_cost(supplier.network, supplier.state, vc), supplier.policy, supplier.markup};
}

CompetitionOutcome run_competition(const VirtualChannel& vc, std::span<const SupplierAgent> suppliers,
                                   const BrokerAgent& broker, SeededStream& rng, int round_cap) {
  std::vector<Bidder> bidders;
  bidders.reserve(suppliers.size());
  for (const SupplierAgent& s : suppliers) bidders.push_back(make_bidder(s, vc));
  return run_competition(vc, bidders, broker, rng, round_cap);
}

CompetitionOutcome run_competition(const VirtualChannel& vc, std::span<const Bidder> bidders,
                                   const BrokerAgent& broker, SeededStream& rng, int round_cap) {
  if (bidders.empty()) throw std::invalid_argument("a competition needs at least one supplier");
  if (round_cap < 1) throw std::invalid_argument("round_cap must be >= 1");
  {
    std::set<std::string> ids;
    for (const Bidder& b : bidders) {
      if (!ids.insert(b.id).second) throw std::invalid_argument("duplicate supplier id " + b.id);
    }
  }

  CompetitionOutcome out;
  out.vc = vc;
  auto& events = out.trace.events;
  const NodeId& x = vc.src;
  const NodeId& y = vc.dst;

  int round = 1;
  for (const Bidder& b : bidders) events.push_back({round, kToSupplier, b.id, Reqc{x, y}});

  std::vector<Money> price(bidders.size(), 0);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < bidders.size(); ++i) {
    const Bidder& b = bidders[i];
    BidderSummary summary{b.id, b.next_unit_mc, std::nullopt, b.policy};
    if (!b.next_unit_mc) {
      events.push_back({round, kToBroker, b.id, Exc1{0, 0, x, y}});
    } else {
      price[i] = initial_bid(*b.next_unit_mc, b.markup);
      summary.initial_bid = price[i];
      events.push_back({round, kToBroker, b.id, Offp{price[i], x, y}});
      active.push_back(i);
    }
    out.bidders.push_back(std::move(summary));
  }

  out.rounds = round;
  if (active.empty()) {
    out.termination = Termination::kAllDeclined;
    return out;
  }

  std::size_t leader = pick_minimum(active, price, rng);
  Money current = price[leader];
  if (active.size() > 1) {
    while (true) {
      ++round;
      if (round > round_cap) {
        throw RoundCapExceededError("competition on " + vc.label + " exceeded " + std::to_string(round_cap) +
                                    " rounds");
      }
      for (std::size_t i : active) events.push_back({round, kToSupplier, bidders[i].id, Ocl{x, y, current}});
      std::vector<std::size_t> cutters;
      for (std::size_t i : active) {
        const Bidder& b = bidders[i];
        const auto bid = decide_bid(current, *b.next_unit_mc, i == leader, b.policy, rng);
        if (!bid) continue;
        price[i] = *bid;
        cutters.push_back(i);
        events.push_back({round, kToBroker, b.id, Offp{*bid, x, y}});
      }
      if (cutters.empty()) break;
      leader = pick_minimum(cutters, price, rng);
      current = price[leader];
    }
  }

  out.rounds = round;
  out.final_price = current;
  if (broker.reserve_price && current > *broker.reserve_price) {
    out.termination = Termination::kBrokerRejected;
    events.push_back({round + 1, kToSupplier, bidders[leader].id, Exc2{x, y, current}});
    events.push_back({round + 1, kToSupplier, bidders[leader].id, Nack{x, y}});
    return out;
  }
  out.termination = Termination::kWon;
  out.winner = bidders[leader].id;
  return out;
}

namespace {

// State machine behind validate_trace.
class TraceChecker {
 public:
  std::optional<Violation> run(const CompetitionTrace& trace) {
    if (trace.events.empty() || !std::holds_alternative<Reqc>(trace.events.front().message) ||
        trace.events.front().direction != kToSupplier || trace.events.front().round != 1) {
      return Violation{"missing-reqc", "trace must open with a round-1 Reqc"};
    }
    const auto& first = std::get<Reqc>(trace.events.front().message);
    x_ = first.x;
    y_ = first.y;
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
      if (auto v = step(trace.events[i])) {
        v->detail = "event " + std::to_string(i) + ": " + v->detail;
        return v;
      }
    }
    return std::nullopt;
  }

 private:
  enum class Phase { kBidding, kUndercut, kSettlement, kClosed };

  struct Supplier {
    bool replied_initial = false;
    bool declined = false;
    std::optional<Money> bid;
    int ocl_round = 0;
    int offer_round = 0;
  };

  static Violation fail(std::string code, std::string detail) { return {std::move(code), std::move(detail)}; }

  bool active(const Supplier& s) const { return s.bid.has_value() && !s.declined; }

  std::optional<Violation> check_endpoints(const NodeId& x, const NodeId& y) const {
    if (x != x_ || y != y_) return fail("endpoint-mismatch", "message for " + x + "-" + y + " in a " + x_ + "-" + y_ + " trace");
    return std::nullopt;
  }

  // Closes the round that just ended before entering `next_round`.
  std::optional<Violation> close_round(int next_round) {
    if (phase_ == Phase::kBidding) {
      std::optional<Money> best;
      for (const auto& [id, s] : suppliers_) {
        if (active(s) && (!best || *s.bid < *best)) best = s.bid;
      }
      current_min_ = best;
      holders_.clear();
      for (const auto& [id, s] : suppliers_) {
        if (active(s) && s.bid == best) holders_.insert(id);
      }
      phase_ = Phase::kUndercut;
      last_round_offers_ = -1;  // no undercut round yet
    } else if (phase_ == Phase::kUndercut && round_ > 1) {
      std::set<std::string> recipients;
      std::optional<Money> best;
      for (const auto& [id, s] : suppliers_) {
        if (s.ocl_round == round_) recipients.insert(id);
        if (s.offer_round == round_ && (!best || *s.bid < *best)) best = s.bid;
      }
      std::set<std::string> expected;
      for (const auto& [id, s] : suppliers_) {
        if (active(s)) expected.insert(id);
      }
      if (recipients != expected) {
        return fail("ocl-incomplete", "round " + std::to_string(round_) + " did not ask every active supplier");
      }
      last_round_offers_ = 0;
      if (best) {
        holders_.clear();
        for (const auto& [id, s] : suppliers_) {
          if (s.offer_round == round_ && s.bid == best) holders_.insert(id);
        }
        current_min_ = best;
        last_round_offers_ = static_cast<int>(holders_.size());
      }
    }
    round_ = next_round;
    return std::nullopt;
  }

  bool auction_closed() const {
    if (phase_ != Phase::kUndercut) return phase_ == Phase::kSettlement;
    if (!current_min_) return false;
    int n_active = 0;
    for (const auto& [id, s] : suppliers_) n_active += active(s) ? 1 : 0;
    const bool ocl_seen = last_round_offers_ >= 0;
    return (!ocl_seen && n_active == 1) || last_round_offers_ == 0;
  }

  std::optional<Violation> step(const TraceEvent& e) {
    if (e.round < round_) return fail("round-order", "round " + std::to_string(e.round) + " after " + std::to_string(round_));
    if (phase_ == Phase::kClosed) return fail("after-close", "message after the request was answered");
    if (e.round > round_) {
      // A jump can only happen inside the current round's message set; any
      // settlement message is handled below.
      if (auto v = close_round(e.round)) return v;
    }
    const bool settlement_msg = std::holds_alternative<Ack>(e.message) || std::holds_alternative<Nack>(e.message) ||
                                std::holds_alternative<Exc2>(e.message) ||
                                (std::holds_alternative<Exc1>(e.message) && phase_ != Phase::kBidding);
    if (settlement_msg) return settle(e);

    if (phase_ == Phase::kSettlement) return fail("illegal-message", std::string(message_name(e.message)) + " during settlement");

    if (const auto* m = std::get_if<Reqc>(&e.message)) {
      if (phase_ != Phase::kBidding || e.direction != kToSupplier) return fail("illegal-message", "Reqc outside round 1");
      if (auto v = check_endpoints(m->x, m->y)) return v;
      if (!suppliers_.emplace(e.supplier, Supplier{}).second) return fail("illegal-message", "second Reqc to " + e.supplier);
      return std::nullopt;
    }

    auto it = suppliers_.find(e.supplier);
    if (it == suppliers_.end()) return fail("unknown-supplier", e.supplier + " was never invited");
    Supplier& s = it->second;

    if (const auto* m = std::get_if<Offp>(&e.message)) {
      if (e.direction != kToBroker) return fail("illegal-message", "Offp sent by the broker");
      if (auto v = check_endpoints(m->x, m->y)) return v;
      if (m->p < 0) return fail("illegal-message", "negative price");
      if (phase_ == Phase::kBidding) {
        if (s.replied_initial) return fail("duplicate-reply", e.supplier + " answered Reqc twice");
        s.replied_initial = true;
        s.bid = m->p;
        return std::nullopt;
      }
      if (s.ocl_round != round_) return fail("unsolicited-offer", e.supplier + " offered without an Ocl this round");
      if (s.offer_round == round_) return fail("duplicate-reply", e.supplier + " offered twice in one round");
      if (m->p >= *current_min_) {
        return fail("non-undercutting-bid", e.supplier + " offered " + std::to_string(m->p) + " against Ocl " +
                                                std::to_string(*current_min_));
      }
      s.offer_round = round_;
      s.bid = m->p;
      return std::nullopt;
    }

    if (const auto* m = std::get_if<Exc1>(&e.message)) {
      // Round-1 decline.
      if (e.direction != kToBroker) return fail("illegal-message", "Exc1 sent by the broker");
      if (auto v = check_endpoints(m->x, m->y)) return v;
      if (s.replied_initial) return fail("duplicate-reply", e.supplier + " answered Reqc twice");
      s.replied_initial = true;
      s.declined = true;
      return std::nullopt;
    }

    if (const auto* m = std::get_if<Ocl>(&e.message)) {
      if (e.direction != kToSupplier || phase_ != Phase::kUndercut) return fail("illegal-message", "Ocl out of place");
      if (auto v = check_endpoints(m->x, m->y)) return v;
      if (auction_closed()) return fail("illegal-message", "Ocl after the auction closed");
      if (!active(s)) return fail("ocl-to-inactive", e.supplier + " is not bidding");
      if (s.ocl_round == round_) return fail("illegal-message", "second Ocl to " + e.supplier + " in one round");
      if (!current_min_ || m->p != *current_min_) {
        return fail("ocl-price-mismatch", "Ocl price " + std::to_string(m->p) + " is not the current minimum " +
                                              (current_min_ ? std::to_string(*current_min_) : std::string("(none)")));
      }
      s.ocl_round = round_;
      return std::nullopt;
    }
    return fail("illegal-message", std::string(message_name(e.message)));
  }

  std::optional<Violation> settle(const TraceEvent& e) {
    if (phase_ == Phase::kBidding) return fail("illegal-message", "settlement before any bidding round closed");
    if (phase_ == Phase::kUndercut) {
      if (!auction_closed()) return fail("premature-close", "settlement while undercutting is still open");
      phase_ = Phase::kSettlement;
      settled_with_ = e.supplier;
    }
    if (e.supplier != settled_with_ || !holders_.contains(e.supplier)) {
      return fail("settlement-to-non-leader", e.supplier + " does not hold the minimum price");
    }
    if (const auto* m = std::get_if<Exc2>(&e.message)) {
      if (e.direction != kToSupplier || seen_exc_) return fail("illegal-message", "Exc2 out of place");
      if (auto v = check_endpoints(m->x, m->y)) return v;
      if (m->p != *current_min_) return fail("illegal-message", "Exc2 quotes a price other than the final one");
      seen_exc_ = true;
      exc2_ = true;
      return std::nullopt;
    }
    if (const auto* m = std::get_if<Exc1>(&e.message)) {
      if (e.direction != kToBroker || seen_exc_) return fail("illegal-message", "Exc1 out of place");
      if (auto v = check_endpoints(m->x, m->y)) return v;
      seen_exc_ = true;
      capacity_ = m->d;
      return std::nullopt;
    }
    if (const auto* m = std::get_if<Ack>(&e.message)) {
      if (e.direction != kToSupplier || exc2_) return fail("illegal-message", "Ack out of place");
      if (auto v = check_endpoints(m->x, m->y)) return v;
      if (m->d < 1) return fail("illegal-message", "Ack for zero wavelengths");
      if (capacity_ && m->d > *capacity_) {
        return fail("ack-exceeds-capacity", "Ack " + std::to_string(m->d) + " above Exc1 " + std::to_string(*capacity_));
      }
      phase_ = Phase::kClosed;
      return std::nullopt;
    }
    const auto& m = std::get<Nack>(e.message);
    if (e.direction != kToSupplier) return fail("illegal-message", "Nack sent by a supplier");
    if (auto v = check_endpoints(m.x, m.y)) return v;
    phase_ = Phase::kClosed;
    return std::nullopt;
  }

  NodeId x_, y_;
  Phase phase_ = Phase::kBidding;
  int round_ = 1;
  std::map<std::string, Supplier> suppliers_;
  std::optional<Money> current_min_;
  std::set<std::string> holders_;
  int last_round_offers_ = -1;
  std::string settled_with_;
  bool seen_exc_ = false;
  bool exc2_ = false;
  std::optional<int> capacity_;
};

}  // namespace

std::optional<Violation> validate_trace(const CompetitionTrace& trace) { return TraceChecker().run(trace); }

}  // namespace wavebroker
