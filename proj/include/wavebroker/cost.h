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

#ifndef WAVEBROKER_COST_H_
#define WAVEBROKER_COST_H_

#include <optional>
#include <span>
#include <vector>

#include "wavebroker/rwa.h"
#include "wavebroker/topology.h"

namespace wavebroker {

// Units q_from..q_to (inclusive, 1-based) each cost `mc` to add.
struct CostSegment {
  int q_from = 1;
  int q_to = 1;
  Money mc = 0;
  friend bool operator==(const CostSegment&, const CostSegment&) = default;
};

// Piecewise-constant marginal cost of a virtual channel, hence a
// piecewise-linear total cost with TC(0) = 0.
struct CostCurve {
  VirtualChannel vc;
  std::vector<CostSegment> segments;
  int q_max = 0;  // units that fit, capped at the requested q_cap

  // MC of the q-th unit, 1 <= q <= q_max.
  Money marginal(int q) const;
  // TC(q), 0 <= q <= q_max.
  Money total(int q) const;
};

// Places up to q_cap units of one new connection on a scratch copy of
// `state` with incremental_allocate and merges runs of equal MC. Throws
// EmptyCurveError when not a single wavelength fits.
CostCurve total_cost_curve(const Network& net, const Allocation& state, const VirtualChannel& vc, int q_cap);

// Cost of the next unit on vc given `state`; nullopt when nothing fits.
std::optional<Money> marginal_cost(const Network& net, const Allocation& state, const VirtualChannel& vc);
std::optional<Money> marginal_cost(const Network& net, const Allocation& state, const VirtualChannel& vc,
                                   std::span<const Route> candidates);

}  // namespace wavebroker

#endif  // WAVEBROKER_COST_H_
