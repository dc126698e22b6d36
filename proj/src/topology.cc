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

#include "wavebroker/topology.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "graph.h"
#include "wavebroker/errors.h"

namespace wavebroker {

bool Network::has_node(const NodeId& node) const {
  return std::find(nodes.begin(), nodes.end(), node) != nodes.end();
}

const Link* Network::find_link(const NodeId& x, const NodeId& y) const {
  for (const Link& link : links) {
    if ((link.a == x && link.b == y) || (link.a == y && link.b == x)) return &link;
  }
  return nullptr;
}

std::vector<Violation> validate_network(const Network& net) {
  std::vector<Violation> out;
  auto add = [&out](std::string code, std::string detail) {
    out.push_back({std::move(code), std::move(detail)});
  };

  if (net.wavelength_count < 1) {
    add("bad-wavelength-count",
        "wavelength_count must be >= 1, got " + std::to_string(net.wavelength_count));
  }

  std::set<NodeId> seen;
  for (const NodeId& node : net.nodes) {
    if (node.empty()) {
      add("empty-node-id", "node label is empty");
      continue;
    }
    if (!seen.insert(node).second) add("duplicate-node", "node " + node + " declared twice");
  }

  std::set<std::pair<NodeId, NodeId>> pairs;
  for (std::size_t i = 0; i < net.links.size(); ++i) {
    const Link& link = net.links[i];
    const std::string name = "link " + std::to_string(i) + " (" + link.a + "-" + link.b + ")";
    if (link.a == link.b) add("self-loop", name + " joins a node to itself");
    for (const NodeId* end : {&link.a, &link.b}) {
      if (!seen.contains(*end)) add("dangling-endpoint", name + ": unknown node " + *end);
    }
    if (link.capacity < 0) add("negative-capacity", name + " has capacity " + std::to_string(link.capacity));
    if (link.unit_cost < 0) add("negative-cost", name + " has unit_cost " + std::to_string(link.unit_cost));
    auto key = std::minmax(link.a, link.b);
    if (link.a != link.b && !pairs.emplace(key.first, key.second).second) {
      add("duplicate-link", name + " repeats an existing node pair");
    }
  }
  return out;
}

void require_valid(const Network& net) {
  const auto violations = validate_network(net);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "network '" << net.id << "' is invalid:";
  for (const auto& v : violations) msg << " [" << v.code << "] " << v.detail << ";";
  throw std::invalid_argument(msg.str());
}

std::string format_route(const std::vector<NodeId>& nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += '-';
    out += nodes[i];
  }
  return out;
}

namespace internal {

IndexedNetwork::IndexedNetwork(const Network& net)
    : labels_(net.nodes), wavelengths_(net.wavelength_count) {
  std::sort(labels_.begin(), labels_.end());
  for (int i = 0; i < node_count(); ++i) index_.emplace(labels_[i], i);

  const int n = node_count();
  adjacency_.resize(n);
  link_matrix_.assign(static_cast<std::size_t>(n) * n, -1);
  for (const Link& link : net.links) {
    int u = require_node(link.a);
    int v = require_node(link.b);
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v, link.capacity, link.unit_cost});
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& l, const Edge& r) { return std::tie(l.u, l.v) < std::tie(r.u, r.v); });
  for (int i = 0; i < link_count(); ++i) {
    const Edge& e = edges_[i];
    link_matrix_[static_cast<std::size_t>(e.u) * n + e.v] = i;
    link_matrix_[static_cast<std::size_t>(e.v) * n + e.u] = i;
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<int> IndexedNetwork::node_index(const NodeId& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int IndexedNetwork::require_node(const NodeId& label) const {
  auto idx = node_index(label);
  if (!idx) throw std::invalid_argument("unknown node '" + label + "'");
  return *idx;
}

int IndexedNetwork::link_between(int x, int y) const {
  return link_matrix_[static_cast<std::size_t>(x) * node_count() + y];
}

IndexedRoute resolve_route(const IndexedNetwork& g, const Route& route) {
  IndexedRoute out;
  out.cost = route.cost;
  for (const NodeId& label : route.nodes) out.nodes.push_back(g.require_node(label));
  for (std::size_t i = 0; i + 1 < out.nodes.size(); ++i) {
    const int link = g.link_between(out.nodes[i], out.nodes[i + 1]);
    if (link < 0) throw std::invalid_argument("route " + format_route(route.nodes) + " uses a missing link");
    out.links.push_back(link);
  }
  return out;
}

std::vector<IndexedRoute> resolve_routes(const IndexedNetwork& g, std::span<const Route> routes) {
  std::vector<IndexedRoute> out;
  out.reserve(routes.size());
  for (const Route& r : routes) out.push_back(resolve_route(g, r));
  return out;
}

}  // namespace internal

namespace {

void enumerate(const internal::IndexedNetwork& g, int at, int target, std::vector<int>& stack,
               std::vector<char>& on_path, Money cost, std::vector<std::pair<Money, std::vector<int>>>& out) {
  if (at == target) {
    out.emplace_back(cost, stack);
    return;
  }
  for (int next : g.neighbors(at)) {
    if (on_path[next]) continue;
    const Money hop = g.edge(g.link_between(at, next)).unit_cost;
    on_path[next] = 1;
    stack.push_back(next);
    enumerate(g, next, target, stack, on_path, cost + hop, out);
    stack.pop_back();
    on_path[next] = 0;
  }
}

}  // namespace

std::vector<Route> all_routes(const Network& net, const VirtualChannel& vc) {
  require_valid(net);
  if (static_cast<int>(net.nodes.size()) > kMaxRoutingNodes) {
    throw TooLargeError("network '" + net.id + "' has " + std::to_string(net.nodes.size()) +
                        " nodes; path enumeration is limited to " + std::to_string(kMaxRoutingNodes));
  }
  if (vc.src == vc.dst) throw std::invalid_argument("virtual channel " + vc.label + " has src == dst");
  const internal::IndexedNetwork g(net);
  const int src = g.require_node(vc.src);
  const int dst = g.require_node(vc.dst);

  std::vector<std::pair<Money, std::vector<int>>> found;
  std::vector<int> stack{src};
  std::vector<char> on_path(g.node_count(), 0);
  on_path[src] = 1;
  enumerate(g, src, dst, stack, on_path, 0, found);

  std::vector<Route> routes;
  routes.reserve(found.size());
  for (auto& [cost, idx] : found) {
    Route r;
    r.cost = cost;
    for (int i : idx) r.nodes.push_back(g.label(i));
    routes.push_back(std::move(r));
  }
  std::sort(routes.begin(), routes.end(), [](const Route& l, const Route& r) {
    if (l.cost != r.cost) return l.cost < r.cost;
    return l.nodes < r.nodes;
  });
  return routes;
}

std::vector<Route> route_candidates(const Network& net, const VirtualChannel& vc) {
  auto routes = all_routes(net, vc);
  if (routes.empty()) {
    throw NoPathError("no path from " + vc.src + " to " + vc.dst + " in network '" + net.id + "'");
  }
  return routes;
}

}  // namespace wavebroker
