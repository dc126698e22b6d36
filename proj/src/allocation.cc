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

#include <algorithm>
#include <set>
#include <sstream>

#include "wavebroker/errors.h"
#include "wavebroker/rwa.h"

namespace wavebroker {

std::vector<std::pair<NodeId, NodeId>> LightPath::hops() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (std::size_t i = 0; i + 1 < route.size(); ++i) out.emplace_back(route[i], route[i + 1]);
  return out;
}

Cell Cell::of(const NodeId& x, const NodeId& y, int wavelength) {
  return x < y ? Cell{x, y, wavelength} : Cell{y, x, wavelength};
}

bool Allocation::is_free(const NodeId& x, const NodeId& y, int wavelength) const {
  return !occupancy_.contains(Cell::of(x, y, wavelength));
}

int Allocation::used_on(const NodeId& x, const NodeId& y) const {
  auto it = link_use_.find(std::minmax(x, y));
  return it == link_use_.end() ? 0 : it->second;
}

Allocation apply_delta(const Allocation& state, std::span<const LightPath> delta) {
  Allocation next = state;
  for (const LightPath& lp : delta) {
    for (const auto& [from, to] : lp.hops()) {
      const Cell cell = Cell::of(from, to, lp.wavelength);
      if (!next.occupancy_.emplace(cell, Occupant{lp.connection, from, to}).second) {
        throw ConflictError("cell " + cell.a + "-" + cell.b + " w=" + std::to_string(cell.wavelength) +
                            " is already occupied");
      }
      ++next.link_use_[std::minmax(from, to)];
    }
    next.lightpaths_.push_back(lp);
    next.next_connection_ = std::max(next.next_connection_, lp.connection + 1);
  }
  return next;
}

Money lightpath_cost(const Network& net, const LightPath& lp) {
  Money cost = 0;
  for (const auto& [from, to] : lp.hops()) {
    const Link* link = net.find_link(from, to);
    if (!link) throw std::invalid_argument("lightpath hop " + from + "-" + to + " is not a link");
    cost += link->unit_cost;
  }
  return cost;
}

Money allocation_cost(const Network& net, const Allocation& alloc) {
  Money total = 0;
  for (const LightPath& lp : alloc.lightpaths()) total += lightpath_cost(net, lp);
  return total;
}

std::vector<Violation> validate_allocation(const Network& net, const Allocation& alloc,
                                           const std::map<int, int>* demand) {
  std::vector<Violation> out;
  auto add = [&out](std::string code, std::string detail) {
    out.push_back({std::move(code), std::move(detail)});
  };

  // b[(k, w)][(x, y)] = 1 when connection k uses directed arc x->y on w.
  std::map<std::pair<int, int>, std::vector<std::pair<NodeId, NodeId>>> arcs;
  std::map<std::pair<int, int>, int> omega;
  std::map<std::pair<int, int>, const VirtualChannel*> endpoints;
  std::map<int, const VirtualChannel*> connection_vc;
  std::map<Cell, std::vector<Occupant>> traversals;
  std::map<int, int> lightpaths_per_connection;

  for (const LightPath& lp : alloc.lightpaths()) {
    const std::string name = lp.vc.label + "#" + std::to_string(lp.connection) + " w=" +
                             std::to_string(lp.wavelength);
    if (lp.wavelength < 1 || lp.wavelength > net.wavelength_count) {
      add("wavelength-range", name + " outside 1.." + std::to_string(net.wavelength_count));
    }
    if (lp.route.size() < 2 || lp.route.front() != lp.vc.src || lp.route.back() != lp.vc.dst) {
      add("endpoint-mismatch", name + " route " + format_route(lp.route) + " does not join " +
                                   lp.vc.src + " to " + lp.vc.dst);
    }
    if (std::set<NodeId>(lp.route.begin(), lp.route.end()).size() != lp.route.size()) {
      add("non-simple-route", name + " revisits a node");
    }
    auto [it, inserted] = connection_vc.emplace(lp.connection, &lp.vc);
    if (!inserted && (it->second->src != lp.vc.src || it->second->dst != lp.vc.dst)) {
      add("connection-vc-mismatch", name + " disagrees with its connection's endpoints");
    }
    const auto key = std::make_pair(lp.connection, lp.wavelength);
    ++omega[key];
    endpoints[key] = &lp.vc;
    ++lightpaths_per_connection[lp.connection];
    for (const auto& [from, to] : lp.hops()) {
      if (!net.find_link(from, to)) {
        add("missing-link", name + " uses " + from + "-" + to + " which is not a link");
        continue;
      }
      arcs[key].emplace_back(from, to);
      traversals[Cell::of(from, to, lp.wavelength)].push_back({lp.connection, from, to});
    }
  }

  // Omega is binary.
  for (const auto& [key, count] : omega) {
    if (count > 1) {
      add("omega-not-binary", "connection " + std::to_string(key.first) + " holds " +
                                  std::to_string(count) + " lightpaths on w=" + std::to_string(key.second));
    }
  }

  // Flow conservation per (connection, wavelength) at every node.
  for (const auto& [key, list] : arcs) {
    std::map<NodeId, int> balance;
    for (const auto& [from, to] : list) {
      ++balance[from];
      --balance[to];
    }
    const VirtualChannel& vc = *endpoints[key];
    const int om = omega[key];
    for (const NodeId& node : net.nodes) {
      const int expected = node == vc.src ? om : node == vc.dst ? -om : 0;
      const int got = balance.contains(node) ? balance[node] : 0;
      if (got != expected) {
        add("flow-conservation", "connection " + std::to_string(key.first) + " w=" +
                                     std::to_string(key.second) + " at node " + node + ": net outflow " +
                                     std::to_string(got) + ", expected " + std::to_string(expected));
      }
    }
  }

  // One lightpath, one direction, per (fiber, wavelength).
  std::map<std::pair<NodeId, NodeId>, int> per_link;
  for (const auto& [cell, users] : traversals) {
    if (users.size() > 1) {
      add("direction-conflict", "cell " + cell.a + "-" + cell.b + " w=" + std::to_string(cell.wavelength) +
                                    " carries " + std::to_string(users.size()) + " traversals");
    }
    ++per_link[{cell.a, cell.b}];
  }

  for (const auto& [pair, used] : per_link) {
    const Link* link = net.find_link(pair.first, pair.second);
    if (link && used > link->capacity) {
      add("capacity-exceeded", "link " + pair.first + "-" + pair.second + " uses " + std::to_string(used) +
                                   " of " + std::to_string(link->capacity) + " wavelengths");
    }
  }

  // The occupancy index must be exactly the union of hops.
  std::map<Cell, Occupant> rebuilt;
  for (const auto& [cell, users] : traversals) rebuilt.emplace(cell, users.front());
  if (rebuilt != alloc.occupancy()) add("occupancy-mismatch", "occupancy index differs from lightpath hops");

  if (demand) {
    for (const auto& [connection, d] : *demand) {
      const int got = lightpaths_per_connection.contains(connection) ? lightpaths_per_connection[connection] : 0;
      if (got != d) {
        add("demand-mismatch", "connection " + std::to_string(connection) + " has " + std::to_string(got) +
                                   " lightpaths, demanded " + std::to_string(d));
      }
    }
  }
  return out;
}

std::string format_allocation(const Network& net, std::span<const LightPath> lightpaths) {
  std::ostringstream os;
  for (const LightPath& lp : lightpaths) {
    os << lp.vc.label << " w=" << lp.wavelength << " path=" << format_route(lp.route)
       << " cost=" << lightpath_cost(net, lp) << '\n';
  }
  return os.str();
}

}  // namespace wavebroker
