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
#include <set>
#include <stdexcept>

#include "wavebroker/errors.h"
#include "wavebroker/rwa.h"

namespace wavebroker {

namespace {

// Plain exhaustive enumeration over label-keyed sets. Shares nothing with
// the branch-and-bound search except route_candidates() ordering, which the
// tie-break is defined over.
class Enumerator {
 public:
  Enumerator(const Network& net, const Allocation& state, std::span<const DemandRequest> requests,
             std::vector<std::vector<Route>> routes)
      : net_(net), requests_(requests), routes_(std::move(routes)) {
    for (const auto& [cell, occupant] : state.occupancy()) {
      taken_.insert(cell);
      ++use_[{cell.a, cell.b}];
    }
    for (std::size_t k = 0; k < requests.size(); ++k) {
      for (int i = 0; i < requests[k].count; ++i) unit_conn_.push_back(static_cast<int>(k));
    }
    current_.resize(unit_conn_.size());
  }

  void run() { visit(0); }

  bool found() const { return found_; }
  Money best_cost() const { return best_cost_; }
  const std::vector<std::pair<int, int>>& best() const { return best_; }
  int unit_connection(std::size_t u) const { return unit_conn_[u]; }

 private:
  bool placeable(const Route& route, int w) const {
    for (std::size_t i = 0; i + 1 < route.nodes.size(); ++i) {
      const NodeId& x = route.nodes[i];
      const NodeId& y = route.nodes[i + 1];
      if (taken_.contains(Cell::of(x, y, w))) return false;
      const Link* link = net_.find_link(x, y);
      auto it = use_.find(std::minmax(x, y));
      const int used = it == use_.end() ? 0 : it->second;
      if (used >= link->capacity) return false;
    }
    return true;
  }

  void place(const Route& route, int w, int delta) {
    for (std::size_t i = 0; i + 1 < route.nodes.size(); ++i) {
      const Cell cell = Cell::of(route.nodes[i], route.nodes[i + 1], w);
      if (delta > 0) {
        taken_.insert(cell);
      } else {
        taken_.erase(cell);
      }
      use_[{cell.a, cell.b}] += delta;
    }
  }

  Money leaf_cost() const {
    Money total = 0;
    for (std::size_t u = 0; u < current_.size(); ++u) {
      const Route& route = routes_[unit_conn_[u]][current_[u].second];
      for (std::size_t i = 0; i + 1 < route.nodes.size(); ++i) {
        total += net_.find_link(route.nodes[i], route.nodes[i + 1])->unit_cost;
      }
    }
    return total;
  }

  void visit(std::size_t unit) {
    if (unit == unit_conn_.size()) {
      const Money cost = leaf_cost();
      if (!found_ || cost < best_cost_) {
        found_ = true;
        best_cost_ = cost;
        best_ = current_;
      }
      return;
    }
    const int k = unit_conn_[unit];
    // Units of one connection are listed with increasing wavelengths: the
    // canonical form of an unordered set of distinct wavelengths.
    const bool continues = unit > 0 && unit_conn_[unit - 1] == k;
    const int first_w = continues ? current_[unit - 1].first + 1 : 1;
    for (int w = first_w; w <= net_.wavelength_count; ++w) {
      for (std::size_t rank = 0; rank < routes_[k].size(); ++rank) {
        const Route& route = routes_[k][rank];
        if (!placeable(route, w)) continue;
        place(route, w, +1);
        current_[unit] = {w, static_cast<int>(rank)};
        visit(unit + 1);
        place(route, w, -1);
      }
    }
  }

  const Network& net_;
  std::span<const DemandRequest> requests_;
  std::vector<std::vector<Route>> routes_;
  std::set<Cell> taken_;
  std::map<std::pair<NodeId, NodeId>, int> use_;
  std::vector<int> unit_conn_;
  std::vector<std::pair<int, int>> current_;
  std::vector<std::pair<int, int>> best_;
  Money best_cost_ = 0;
  bool found_ = false;
};

}  // namespace

std::optional<RwaSolution> brute_force_rwa(const Network& net, const Allocation& state,
                                           std::span<const DemandRequest> requests,
                                           const BruteForceLimits& limits) {
  require_valid(net);
  int total_demand = 0;
  for (const DemandRequest& req : requests) total_demand += req.count;
  if (static_cast<int>(net.nodes.size()) > limits.max_nodes || net.wavelength_count > limits.max_wavelengths ||
      total_demand > limits.max_total_demand) {
    throw InstanceTooLargeError("brute force limited to " + std::to_string(limits.max_nodes) + " nodes, W <= " +
                                std::to_string(limits.max_wavelengths) + ", total demand <= " +
                                std::to_string(limits.max_total_demand));
  }

  std::vector<std::vector<Route>> routes;
  for (const DemandRequest& req : requests) {
    if (req.count < 1) throw std::invalid_argument("demand must be >= 1");
    routes.push_back(all_routes(net, req.vc));
  }

  Enumerator search(net, state, requests, routes);
  search.run();
  if (!search.found()) return std::nullopt;

  RwaSolution solution;
  const int base = state.next_connection();
  for (std::size_t u = 0; u < search.best().size(); ++u) {
    const int k = search.unit_connection(u);
    const auto [w, rank] = search.best()[u];
    solution.delta.push_back({base + k, requests[k].vc, w, routes[k][rank].nodes});
  }
  solution.allocation = apply_delta(state, solution.delta);
  solution.added_cost = search.best_cost();
  solution.total_cost = allocation_cost(net, solution.allocation);
  return solution;
}

}  // namespace wavebroker
