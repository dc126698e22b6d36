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

#ifndef WAVEBROKER_TOPOLOGY_H_
#define WAVEBROKER_TOPOLOGY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wavebroker {

// Money is held in integer minor units (cents). Solver costs, bids and
// ledgers never touch floating point.
using Money = std::int64_t;

using NodeId = std::string;

// Bidirectional fiber. `capacity` bounds the number of wavelengths in use
// on the fiber counting both directions; `unit_cost` is charged once per
// wavelength carried.
struct Link {
  NodeId a;
  NodeId b;
  int capacity = 0;
  Money unit_cost = 0;
};

struct Network {
  std::string id;
  std::vector<NodeId> nodes;
  std::vector<Link> links;
  int wavelength_count = 1;

  bool has_node(const NodeId& node) const;
  // Link joining the unordered pair {x, y}, if any.
  const Link* find_link(const NodeId& x, const NodeId& y) const;
};

struct VirtualChannel {
  NodeId src;
  NodeId dst;
  std::string label;
};

struct DemandRequest {
  VirtualChannel vc;
  int count = 1;
};

struct Violation {
  std::string code;
  std::string detail;
};

// Codes: "empty-node-id", "duplicate-node", "self-loop",
// "dangling-endpoint", "duplicate-link", "negative-capacity",
// "negative-cost", "bad-wavelength-count".
std::vector<Violation> validate_network(const Network& net);

// Throws std::invalid_argument listing every violation.
void require_valid(const Network& net);

// A simple path, as its node sequence, with the per-wavelength cost of
// carrying one lightpath along it.
struct Route {
  std::vector<NodeId> nodes;
  Money cost = 0;

  std::size_t hop_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  friend bool operator==(const Route&, const Route&) = default;
};

// Simple-path enumeration is exponential, so routing refuses larger graphs.
inline constexpr int kMaxRoutingNodes = 12;

// Every simple path from vc.src to vc.dst, ordered by ascending cost with
// ties broken lexicographically on the node-label sequence. The order does
// not depend on the order nodes or links were declared in.
//
// Throws NoPathError when the endpoints are disconnected and TooLargeError
// above kMaxRoutingNodes.
std::vector<Route> route_candidates(const Network& net, const VirtualChannel& vc);

// Same, but an empty list instead of NoPathError.
std::vector<Route> all_routes(const Network& net, const VirtualChannel& vc);

std::string format_route(const std::vector<NodeId>& nodes);

}  // namespace wavebroker

#endif  // WAVEBROKER_TOPOLOGY_H_
