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

#ifndef WAVEBROKER_GAME_H_
#define WAVEBROKER_GAME_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wavebroker/random.h"
#include "wavebroker/rwa.h"
#include "wavebroker/topology.h"

namespace wavebroker {

// Undercut steps are drawn uniformly from [l_min, l_max] minor units.
struct UndercutPolicy {
  Money l_min = 1;
  Money l_max = 1;

  bool valid() const { return 0 < l_min && l_min <= l_max; }
};

inline constexpr double kDefaultMarkup = 2.0;

// A competing network: its topology, what it has already sold, and how it
// bids.
struct SupplierAgent {
  std::string id;
  Network network;
  Allocation state;
  UndercutPolicy policy;
  double markup = kDefaultMarkup;  // >= 1
};

// One draw from the policy's integer range.
Money sample_undercut(const UndercutPolicy& policy, SeededStream& rng);

// Opening price: round(markup * next-unit MC), halves away from zero.
Money initial_bid(Money next_unit_mc, double markup);

// The undercut reply to a broadcast minimum. The current leader passes
// without drawing. Everyone else draws a step U and bids current_min - U if
// that does not go below its own next-unit MC; otherwise passes. nullopt
// means pass.
std::optional<Money> decide_bid(Money current_min, Money own_next_unit_mc, bool is_leader,
                                const UndercutPolicy& policy, SeededStream& rng);

// Predicted resting price: the second-lowest MC, give or take e, where
// e_min <= e <= e_max over all competitors' step ranges.
struct EquilibriumBound {
  Money reference = 0;
  Money e_min = 0;
  Money e_max = 0;

  Money lower() const { return reference - e_max; }
  Money upper() const { return reference + e_max; }
  bool contains(Money price) const { return lower() <= price && price <= upper(); }
};

// Throws DegenerateMarketError with fewer than two competitors.
EquilibriumBound equilibrium_bounds(std::span<const Money> mcs, std::span<const UndercutPolicy> policies);

}  // namespace wavebroker

#endif  // WAVEBROKER_GAME_H_
