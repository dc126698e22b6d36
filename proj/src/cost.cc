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

#include "wavebroker/cost.h"

#include <algorithm>
#include <stdexcept>

#include "wavebroker/errors.h"

namespace wavebroker {

Money CostCurve::marginal(int q) const {
  for (const CostSegment& s : segments) {
    if (q >= s.q_from && q <= s.q_to) return s.mc;
  }
  throw std::out_of_range("q=" + std::to_string(q) + " outside 1.." + std::to_string(q_max));
}

Money CostCurve::total(int q) const {
  if (q < 0 || q > q_max) throw std::out_of_range("q=" + std::to_string(q) + " outside 0.." + std::to_string(q_max));
  Money tc = 0;
  for (const CostSegment& s : segments) {
    if (q < s.q_from) break;
    const int upto = std::min(q, s.q_to);
    tc += static_cast<Money>(upto - s.q_from + 1) * s.mc;
  }
  return tc;
}

CostCurve total_cost_curve(const Network& net, const Allocation& state, const VirtualChannel& vc, int q_cap) {
  if (q_cap < 1) throw std::invalid_argument("q_cap must be >= 1");
  const Increment inc = incremental_allocate(net, state, vc, q_cap);
  if (inc.placed() == 0) {
    throw EmptyCurveError("no wavelength fits on " + vc.label + " in network '" + net.id + "'");
  }
  CostCurve curve{vc, {}, inc.placed()};
  const auto costs = inc.unit_costs(net);
  for (int q = 1; q <= inc.placed(); ++q) {
    const Money mc = costs[q - 1];
    if (!curve.segments.empty() && curve.segments.back().mc == mc) {
      curve.segments.back().q_to = q;
    } else {
      curve.segments.push_back({q, q, mc});
    }
  }
  return curve;
}

std::optional<Money> marginal_cost(const Network& net, const Allocation& state, const VirtualChannel& vc) {
  const Increment inc = incremental_allocate(net, state, vc, 1);
  if (!inc.complete()) return std::nullopt;
  return inc.added_cost;
}

std::optional<Money> marginal_cost(const Network& net, const Allocation& state, const VirtualChannel& vc,
                                   std::span<const Route> candidates) {
  const Increment inc = incremental_allocate(net, state, vc, 1, candidates);
  if (!inc.complete()) return std::nullopt;
  return inc.added_cost;
}

}  // namespace wavebroker
