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

#ifndef WAVEBROKER_TESTS_SUPPORT_FIXTURES_H_
#define WAVEBROKER_TESTS_SUPPORT_FIXTURES_H_

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wavebroker/random.h"
#include "wavebroker/rwa.h"
#include "wavebroker/topology.h"

namespace wbtest {

using wavebroker::DemandRequest;
using wavebroker::Link;
using wavebroker::Money;
using wavebroker::Network;
using wavebroker::SeededStream;
using wavebroker::VirtualChannel;

// Two disjoint Vancouver-Toronto routes: a 2-hop one through Winnipeg and
// a 5-hop one through the south. Every link carries 8 wavelengths.
inline Network fig3_network(Money short_hop = 100, Money long_hop = 60) {
  Network net;
  net.id = "fig3";
  net.wavelength_count = 16;
  net.nodes = {"Vancouver", "Winnipeg", "Toronto", "Calgary", "Regina", "Minneapolis", "Chicago"};
  net.links = {
      {"Vancouver", "Winnipeg", 8, short_hop},   // A
      {"Winnipeg", "Toronto", 8, short_hop},     // B
      {"Vancouver", "Calgary", 8, long_hop},     // C
      {"Calgary", "Regina", 8, long_hop},        // D
      {"Regina", "Minneapolis", 8, long_hop},    // E
      {"Minneapolis", "Chicago", 8, long_hop},   // F
      {"Chicago", "Toronto", 8, long_hop},       // G
  };
  return net;
}

inline VirtualChannel fig3_vc() { return {"Vancouver", "Toronto", "VC1"}; }

inline Network single_link(int capacity, Money cost, int wavelengths = 4) {
  return Network{"single", {"A", "B"}, {{"A", "B", capacity, cost}}, wavelengths};
}

// Cost of a node sequence, summed from the fixture's links directly.
inline Money path_cost(const Network& net, const std::vector<std::string>& nodes) {
  Money total = 0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    for (const Link& l : net.links) {
      if ((l.a == nodes[i] && l.b == nodes[i + 1]) || (l.b == nodes[i] && l.a == nodes[i + 1])) total += l.unit_cost;
    }
  }
  return total;
}

struct GenLimits {
  int min_nodes = 2;
  int max_nodes = 6;
  int max_links = 8;
  int max_wavelengths = 3;
  int max_capacity = 3;
  Money max_cost = 20;
  bool connected = true;
};

// Random simple undirected graph. Node labels are shuffled so that the
// declaration order carries no information.
inline Network random_network(SeededStream& rng, const GenLimits& lim = {}) {
  Network net;
  net.id = "gen";
  const int n = static_cast<int>(rng.uniform_int(lim.min_nodes, lim.max_nodes));
  for (int i = 0; i < n; ++i) net.nodes.push_back(std::string(1, static_cast<char>('A' + i)));
  for (int i = n - 1; i > 0; --i) std::swap(net.nodes[i], net.nodes[rng.pick(i + 1)]);

  // A random spanning tree (unless lim.connected is off), then extra pairs.
  std::vector<std::pair<int, int>> pairs, extra;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) extra.emplace_back(i, j);
  }
  if (lim.connected) {
    for (int j = 1; j < n; ++j) pairs.emplace_back(static_cast<int>(rng.pick(j)), j);
    std::erase_if(extra, [&](const auto& e) { return std::find(pairs.begin(), pairs.end(), e) != pairs.end(); });
  }
  for (int i = static_cast<int>(extra.size()) - 1; i > 0; --i) std::swap(extra[i], extra[rng.pick(i + 1)]);
  pairs.insert(pairs.end(), extra.begin(), extra.end());
  const int fewest = lim.connected ? n - 1 : 1;
  const int links = static_cast<int>(
      rng.uniform_int(fewest, std::max(fewest, std::min<int>(lim.max_links, static_cast<int>(pairs.size())))));
  for (int k = 0; k < links; ++k) {
    const auto [i, j] = pairs[k];
    Link l{net.nodes[i], net.nodes[j], static_cast<int>(rng.uniform_int(0, lim.max_capacity)),
           rng.uniform_int(0, lim.max_cost)};
    if (rng.pick(2)) std::swap(l.a, l.b);
    net.links.push_back(std::move(l));
  }
  net.wavelength_count = static_cast<int>(rng.uniform_int(1, lim.max_wavelengths));
  return net;
}

inline VirtualChannel random_vc(SeededStream& rng, const Network& net, const std::string& label) {
  const std::size_t s = rng.pick(net.nodes.size());
  std::size_t d = rng.pick(net.nodes.size() - 1);
  if (d >= s) ++d;
  return {net.nodes[s], net.nodes[d], label};
}

// 1..max_connections requests with total demand <= max_total.
inline std::vector<DemandRequest> random_requests(SeededStream& rng, const Network& net, int max_connections,
                                                  int max_total) {
  std::vector<DemandRequest> out;
  const int k = static_cast<int>(rng.uniform_int(1, max_connections));
  int left = max_total;
  for (int i = 0; i < k && left > 0; ++i) {
    const int d = static_cast<int>(rng.uniform_int(1, std::max(1, left - (k - i - 1))));
    out.push_back({random_vc(rng, net, "VC" + std::to_string(i + 1)), d});
    left -= d;
  }
  return out;
}

}  // namespace wbtest

#endif  // WAVEBROKER_TESTS_SUPPORT_FIXTURES_H_
