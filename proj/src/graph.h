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

#ifndef WAVEBROKER_SRC_GRAPH_H_
#define WAVEBROKER_SRC_GRAPH_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wavebroker/topology.h"

namespace wavebroker::internal {

// Dense, label-sorted view of a validated Network. Node indices follow
// label order, so anything iterated by index is insertion-order free.
class IndexedNetwork {
 public:
  struct Edge {
    int u = 0;  // u < v
    int v = 0;
    int capacity = 0;
    Money unit_cost = 0;
  };

  explicit IndexedNetwork(const Network& net);

  int node_count() const { return static_cast<int>(labels_.size()); }
  int link_count() const { return static_cast<int>(edges_.size()); }
  int wavelength_count() const { return wavelengths_; }

  const NodeId& label(int node) const { return labels_[node]; }
  std::optional<int> node_index(const NodeId& label) const;
  int require_node(const NodeId& label) const;

  const Edge& edge(int link) const { return edges_[link]; }
  // -1 when not adjacent.
  int link_between(int x, int y) const;
  // Neighbors in ascending index order.
  const std::vector<int>& neighbors(int node) const { return adjacency_[node]; }

 private:
  std::vector<NodeId> labels_;
  std::map<NodeId, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> link_matrix_;
  int wavelengths_ = 1;
};

// A route resolved to node and link indices; links[i] joins nodes[i] and
// nodes[i + 1].
struct IndexedRoute {
  std::vector<int> nodes;
  std::vector<int> links;
  Money cost = 0;
};

IndexedRoute resolve_route(const IndexedNetwork& g, const Route& route);

std::vector<IndexedRoute> resolve_routes(const IndexedNetwork& g,
                                         std::span<const Route> routes);

}  // namespace wavebroker::internal

#endif  // WAVEBROKER_SRC_GRAPH_H_
