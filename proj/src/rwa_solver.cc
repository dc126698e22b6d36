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

#include <limits>
#include <stdexcept>

#include "dense_state.h"
#include "graph.h"
#include "wavebroker/rwa.h"

namespace wavebroker {

namespace {

using internal::DenseState;
using internal::IndexedNetwork;
using internal::IndexedRoute;

constexpr Money kUnbounded = std::numeric_limits<Money>::max();

void check_request(const Network& net, const VirtualChannel& vc, int count) {
  if (count < 1) throw std::invalid_argument("demand for " + vc.label + " must be >= 1");
  if (!net.has_node(vc.src) || !net.has_node(vc.dst)) {
    throw std::invalid_argument("virtual channel " + vc.label + " endpoints are not in network '" + net.id + "'");
  }
}

LightPath make_lightpath(const IndexedNetwork& g, int connection, const VirtualChannel& vc,
                         int wavelength, const IndexedRoute& route) {
  LightPath lp{connection, vc, wavelength, {}};
  for (int node : route.nodes) lp.route.push_back(g.label(node));
  return lp;
}

// Depth-first branch and bound. Units are the demanded wavelengths in
// request order; the units of one request take strictly increasing
// wavelengths, which removes their permutation symmetry. Children are
// visited in (wavelength, route rank) order and only strictly better
// leaves replace the incumbent, so the first optimum found is the
// lexicographically smallest one.
class BranchAndBound {
 public:
  BranchAndBound(const IndexedNetwork& g, DenseState& state,
                 const std::vector<std::vector<IndexedRoute>>& routes,
                 std::span<const DemandRequest> requests)
      : g_(g), state_(state), routes_(routes) {
    const int k_count = static_cast<int>(requests.size());
    for (int k = 0; k < k_count; ++k) {
      for (int i = 0; i < requests[k].count; ++i) {
        unit_conn_.push_back(k);
        rest_of_conn_.push_back(requests[k].count - 1 - i);
      }
    }
    const int units = static_cast<int>(unit_conn_.size());
    // Cheapest route per unit ignoring every conflict is admissible.
    bound_suffix_.assign(units + 1, 0);
    for (int u = units - 1; u >= 0; --u) {
      bound_suffix_[u] = bound_suffix_[u + 1] + routes_[unit_conn_[u]].front().cost;
    }
    last_wavelength_.assign(k_count, 0);
    choice_.assign(units, {0, 0});
  }

  bool run() {
    search(0, 0);
    return best_cost_ != kUnbounded;
  }

  Money best_cost() const { return best_cost_; }
  // (wavelength, route rank) per unit.
  const std::vector<std::pair<int, int>>& best_choice() const { return best_choice_; }
  int unit_connection(int u) const { return unit_conn_[u]; }

 private:
  void search(int unit, Money cost) {
    if (unit == static_cast<int>(unit_conn_.size())) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_choice_ = choice_;
      }
      return;
    }
    const int k = unit_conn_[unit];
    const int prev = last_wavelength_[k];
    const int top = g_.wavelength_count() - rest_of_conn_[unit];
    const auto& candidates = routes_[k];
    for (int w = prev + 1; w <= top; ++w) {
      for (int rank = 0; rank < static_cast<int>(candidates.size()); ++rank) {
        const IndexedRoute& route = candidates[rank];
        if (best_cost_ != kUnbounded && cost + route.cost + bound_suffix_[unit + 1] >= best_cost_) break;
        if (!state_.fits(route, w)) continue;
        state_.take(route, w);
        last_wavelength_[k] = w;
        choice_[unit] = {w, rank};
        search(unit + 1, cost + route.cost);
        state_.release(route, w);
      }
    }
    last_wavelength_[k] = prev;
  }

  const IndexedNetwork& g_;
  DenseState& state_;
  const std::vector<std::vector<IndexedRoute>>& routes_;
  std::vector<int> unit_conn_;
  std::vector<int> rest_of_conn_;
  std::vector<Money> bound_suffix_;
  std::vector<int> last_wavelength_;
  std::vector<std::pair<int, int>> choice_;
  std::vector<std::pair<int, int>> best_choice_;
  Money best_cost_ = kUnbounded;
};

}  // namespace

std::optional<RwaSolution> solve_min_cost_rwa(const Network& net, const Allocation& state,
                                              std::span<const DemandRequest> requests) {
  require_valid(net);
  const IndexedNetwork g(net);
  std::vector<std::vector<IndexedRoute>> routes;
  for (const DemandRequest& req : requests) {
    check_request(net, req.vc, req.count);
    const auto candidates = all_routes(net, req.vc);
    if (candidates.empty() || req.count > net.wavelength_count) return std::nullopt;
    routes.push_back(internal::resolve_routes(g, candidates));
  }

  DenseState dense(g, state);
  BranchAndBound search(g, dense, routes, requests);
  if (!search.run()) return std::nullopt;

  RwaSolution solution;
  const int base = state.next_connection();
  const auto& choice = search.best_choice();
  for (std::size_t u = 0; u < choice.size(); ++u) {
    const int k = search.unit_connection(static_cast<int>(u));
    const auto [w, rank] = choice[u];
    solution.delta.push_back(make_lightpath(g, base + k, requests[k].vc, w, routes[k][rank]));
  }
  solution.allocation = apply_delta(state, solution.delta);
  solution.added_cost = search.best_cost();
  solution.total_cost = allocation_cost(net, solution.allocation);
  solution.optimal = true;
  return solution;
}

Increment incremental_allocate(const Network& net, const Allocation& state, const VirtualChannel& vc,
                               int count) {
  check_request(net, vc, count);
  const auto candidates = all_routes(net, vc);
  return incremental_allocate(net, state, vc, count, candidates);
}

Increment incremental_allocate(const Network& net, const Allocation& state, const VirtualChannel& vc,
                               int count, std::span<const Route> candidates) {
  check_request(net, vc, count);
  const IndexedNetwork g(net);
  const auto routes = internal::resolve_routes(g, candidates);
  DenseState dense(g, state);
  const int width = g.wavelength_count();
  const int connection = state.next_connection();
  std::vector<char> used_wavelength(width + 1, 0);

  Increment out;
  out.requested = count;
  for (int unit = 0; unit < count; ++unit) {
    Money best = kUnbounded;
    int best_w = 0;
    int best_rank = -1;
    for (int w = 1; w <= width; ++w) {
      if (used_wavelength[w]) continue;
      for (int rank = 0; rank < static_cast<int>(routes.size()); ++rank) {
        if (routes[rank].cost >= best) break;
        if (!dense.fits(routes[rank], w)) continue;
        best = routes[rank].cost;
        best_w = w;
        best_rank = rank;
        break;
      }
    }
    if (best_rank < 0) break;
    dense.take(routes[best_rank], best_w);
    used_wavelength[best_w] = 1;
    out.delta.push_back(make_lightpath(g, connection, vc, best_w, routes[best_rank]));
    out.added_cost += best;
  }
  return out;
}

std::vector<Money> Increment::unit_costs(const Network& net) const {
  std::vector<Money> costs;
  costs.reserve(delta.size());
  for (const LightPath& lp : delta) costs.push_back(lightpath_cost(net, lp));
  return costs;
}

}  // namespace wavebroker
