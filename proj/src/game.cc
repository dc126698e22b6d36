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

#include "wavebroker/game.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wavebroker/errors.h"

namespace wavebroker {

Money sample_undercut(const UndercutPolicy& policy, SeededStream& rng) {
  if (!policy.valid()) throw std::invalid_argument("undercut policy needs 0 < l_min <= l_max");
  return rng.uniform_int(policy.l_min, policy.l_max);
}

Money initial_bid(Money next_unit_mc, double markup) {
  if (markup < 1.0) throw std::invalid_argument("markup must be >= 1");
  return static_cast<Money>(std::llround(markup * static_cast<double>(next_unit_mc)));
}

std::optional<Money> decide_bid(Money current_min, Money own_next_unit_mc, bool is_leader,
                                const UndercutPolicy& policy, SeededStream& rng) {
  if (current_min < 0) throw std::invalid_argument("current minimum price is negative");
  if (is_leader) return std::nullopt;
  const Money candidate = current_min - sample_undercut(policy, rng);
  if (candidate < own_next_unit_mc) return std::nullopt;
  return candidate;
}

EquilibriumBound equilibrium_bounds(std::span<const Money> mcs, std::span<const UndercutPolicy> policies) {
  if (mcs.size() < 2) throw DegenerateMarketError("equilibrium needs at least two competitors");
  if (policies.size() != mcs.size()) throw std::invalid_argument("one policy per competitor expected");
  std::vector<Money> sorted(mcs.begin(), mcs.end());
  std::sort(sorted.begin(), sorted.end());
  EquilibriumBound bound;
  bound.reference = sorted[1];
  bound.e_min = policies.front().l_min;
  bound.e_max = policies.front().l_max;
  for (const UndercutPolicy& p : policies) {
    bound.e_min = std::min(bound.e_min, p.l_min);
    bound.e_max = std::max(bound.e_max, p.l_max);
  }
  return bound;
}

}  // namespace wavebroker
