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

#include "doctest.h"
#include "support/fixtures.h"
#include "wavebroker/errors.h"
#include "wavebroker/topology.h"

using namespace wavebroker;

namespace {

bool has_code(const std::vector<Violation>& v, const std::string& code) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.code == code; });
}

// Simple paths from `at` to `dst` by plain DFS over the link list.
int count_paths(const Network& net, const NodeId& at, const NodeId& dst, std::set<NodeId>& on_path) {
  if (at == dst) return 1;
  int total = 0;
  on_path.insert(at);
  for (const Link& l : net.links) {
    const NodeId* next = l.a == at ? &l.b : (l.b == at ? &l.a : nullptr);
    if (next && !on_path.contains(*next)) total += count_paths(net, *next, dst, on_path);
  }
  on_path.erase(at);
  return total;
}

}  // namespace

TEST_CASE("minimal network validates") {
  CHECK(validate_network(wbtest::single_link(2, 5)).empty());
}

TEST_CASE("validate_network reports each broken invariant") {
  Network net = wbtest::single_link(2, 5);
  SUBCASE("self-loop") {
    net.links.push_back({"A", "A", 1, 1});
    CHECK(has_code(validate_network(net), "self-loop"));
  }
  SUBCASE("dangling endpoint") {
    net.nodes.push_back("C");
    net.links.push_back({"C", "D", 1, 1});
    CHECK(has_code(validate_network(net), "dangling-endpoint"));
  }
  SUBCASE("duplicate link in either orientation") {
    net.links.push_back({"B", "A", 1, 1});
    CHECK(has_code(validate_network(net), "duplicate-link"));
  }
  SUBCASE("negative capacity and cost together") {
    net.links[0].capacity = -1;
    net.links[0].unit_cost = -3;
    const auto v = validate_network(net);
    CHECK(has_code(v, "negative-capacity"));
    CHECK(has_code(v, "negative-cost"));
  }
  SUBCASE("node ids") {
    net.nodes.push_back("A");
    net.nodes.push_back("");
    const auto v = validate_network(net);
    CHECK(has_code(v, "duplicate-node"));
    CHECK(has_code(v, "empty-node-id"));
  }
  SUBCASE("wavelength count") {
    net.wavelength_count = 0;
    CHECK(has_code(validate_network(net), "bad-wavelength-count"));
  }
  CHECK_THROWS_AS(require_valid(net), std::invalid_argument);
}

TEST_CASE("fig3 routes come cheapest first") {
  const Network net = wbtest::fig3_network();
  const auto routes = route_candidates(net, wbtest::fig3_vc());
  REQUIRE(routes.size() == 2);
  CHECK(routes[0].nodes == std::vector<NodeId>{"Vancouver", "Winnipeg", "Toronto"});
  CHECK(routes[0].cost == wbtest::path_cost(net, routes[0].nodes));
  CHECK(routes[1].hop_count() == 5);
  CHECK(routes[1].cost == wbtest::path_cost(net, routes[1].nodes));
  CHECK(routes[0].cost < routes[1].cost);
}

TEST_CASE("single link and disconnected pair") {
  const Network net = wbtest::single_link(1, 7);
  const auto routes = route_candidates(net, {"A", "B", "x"});
  REQUIRE(routes.size() == 1);
  CHECK(routes[0] == Route{{"A", "B"}, 7});

  Network split{"split", {"A", "B", "C", "D"}, {{"A", "B", 1, 1}, {"C", "D", 1, 1}}, 1};
  CHECK_THROWS_AS(route_candidates(split, {"A", "D", "x"}), NoPathError);
  CHECK(all_routes(split, {"A", "D", "x"}).empty());
}

TEST_CASE("routing refuses oversized graphs") {
  Network big;
  big.id = "big";
  for (int i = 0; i <= kMaxRoutingNodes; ++i) big.nodes.push_back("n" + std::to_string(i));
  for (int i = 0; i < kMaxRoutingNodes; ++i) big.links.push_back({big.nodes[i], big.nodes[i + 1], 1, 1});
  CHECK_THROWS_AS(route_candidates(big, {"n0", "n1", "x"}), TooLargeError);
}

TEST_CASE("equal-cost routes tie-break on labels") {
  // Square: A-B-D and A-C-D both cost 2.
  Network sq{"sq", {"D", "C", "B", "A"}, {{"C", "D", 1, 1}, {"A", "C", 1, 1}, {"B", "D", 1, 1}, {"A", "B", 1, 1}}, 1};
  const auto routes = route_candidates(sq, {"A", "D", "x"});
  REQUIRE(routes.size() == 2);
  CHECK(format_route(routes[0].nodes) == "A-B-D");
  CHECK(format_route(routes[1].nodes) == "A-C-D");
}

TEST_CASE("route order ignores declaration order") {
  SeededStream rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Network net = wbtest::random_network(rng);
    if (net.nodes.size() < 2) continue;
    const VirtualChannel vc = wbtest::random_vc(rng, net, "vc");
    const auto base = all_routes(net, vc);
    std::set<NodeId> on_path;
    CHECK(static_cast<int>(base.size()) == count_paths(net, vc.src, vc.dst, on_path));

    Network shuffled = net;
    std::reverse(shuffled.nodes.begin(), shuffled.nodes.end());
    std::reverse(shuffled.links.begin(), shuffled.links.end());
    for (Link& l : shuffled.links) std::swap(l.a, l.b);
    CHECK(all_routes(shuffled, vc) == base);

    std::set<std::vector<NodeId>> seen;
    for (std::size_t i = 0; i < base.size(); ++i) {
      const auto& nodes = base[i].nodes;
      CHECK(std::set<NodeId>(nodes.begin(), nodes.end()).size() == nodes.size());
      CHECK(nodes.front() == vc.src);
      CHECK(nodes.back() == vc.dst);
      CHECK(base[i].cost == wbtest::path_cost(net, nodes));
      CHECK(seen.insert(nodes).second);
      if (i > 0) CHECK(base[i - 1].cost <= base[i].cost);
    }
  }
}
