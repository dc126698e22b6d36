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

#ifndef WAVEBROKER_RWA_H_
#define WAVEBROKER_RWA_H_

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wavebroker/topology.h"

namespace wavebroker {

// One wavelength on every hop of a simple route (no wavelength conversion).
// `connection` identifies the demand the lightpath serves; lightpaths of
// one connection always sit on distinct wavelength indices.
struct LightPath {
  int connection = 0;
  VirtualChannel vc;
  int wavelength = 1;          // 1..W
  std::vector<NodeId> route;   // vc.src ... vc.dst

  // Directed hops (from, to) along the route.
  std::vector<std::pair<NodeId, NodeId>> hops() const;
};

// A (fiber, wavelength) slot. Endpoints are stored in label order.
struct Cell {
  NodeId a;
  NodeId b;
  int wavelength = 1;

  static Cell of(const NodeId& x, const NodeId& y, int wavelength);
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Occupant {
  int connection = 0;
  NodeId from;
  NodeId to;
  friend bool operator==(const Occupant&, const Occupant&) = default;
};

// Committed lightpaths of one network. Immutable: apply_delta returns a new
// value. The occupancy index is derived from the lightpaths and kept in step
// with them.
class Allocation {
 public:
  Allocation() = default;

  const std::vector<LightPath>& lightpaths() const { return lightpaths_; }
  const std::map<Cell, Occupant>& occupancy() const { return occupancy_; }

  bool is_free(const NodeId& x, const NodeId& y, int wavelength) const;
  // Wavelengths in use on the fiber {x, y}, both directions.
  int used_on(const NodeId& x, const NodeId& y) const;
  // Smallest connection id not used by any lightpath.
  int next_connection() const { return next_connection_; }
  bool empty() const { return lightpaths_.empty(); }

  friend Allocation apply_delta(const Allocation& state, std::span<const LightPath> delta);

 private:
  std::vector<LightPath> lightpaths_;
  std::map<Cell, Occupant> occupancy_;
  std::map<std::pair<NodeId, NodeId>, int> link_use_;
  int next_connection_ = 0;
};

// Merges `delta` into `state`. Throws ConflictError when a delta cell is
// already taken (or taken twice within the delta).
Allocation apply_delta(const Allocation& state, std::span<const LightPath> delta);

// Sum of unit costs over the lightpath's hops.
Money lightpath_cost(const Network& net, const LightPath& lp);
Money allocation_cost(const Network& net, const Allocation& alloc);

struct RwaSolution {
  Allocation allocation;          // state plus the new lightpaths
  std::vector<LightPath> delta;   // new lightpaths only
  Money total_cost = 0;           // every occupied cell, state included
  Money added_cost = 0;           // delta only
  bool optimal = true;
};

// Exact minimum-cost routing and wavelength assignment of every request on
// top of `state`, whose lightpaths stay where they are. Branch and bound
// over (wavelength, candidate route) choices per demanded unit; among
// cost-equal optima the result is lexicographically smallest in
// (request index, wavelength, route rank). Request k becomes connection
// state.next_connection() + k.
//
// nullopt when no assignment satisfies continuity, capacity, direction
// exclusivity and the demand counts.
std::optional<RwaSolution> solve_min_cost_rwa(const Network& net, const Allocation& state,
                                              std::span<const DemandRequest> requests);

// Brute-force guard.
struct BruteForceLimits {
  int max_nodes = 6;
  int max_wavelengths = 3;
  int max_total_demand = 4;
};

// Exhaustive enumeration of every feasible assignment; test oracle for
// solve_min_cost_rwa with the same tie-break. Throws InstanceTooLargeError
// outside the limits.
std::optional<RwaSolution> brute_force_rwa(const Network& net, const Allocation& state,
                                           std::span<const DemandRequest> requests,
                                           const BruteForceLimits& limits = {});

// Result of unit-by-unit placement. When fewer than `requested` units fit,
// `delta` holds the ones that did (Infeasible(k) with k = placed()).
struct Increment {
  std::vector<LightPath> delta;
  Money added_cost = 0;
  int requested = 0;

  int placed() const { return static_cast<int>(delta.size()); }
  bool complete() const { return placed() == requested; }
  // Per-unit costs in placement order.
  std::vector<Money> unit_costs(const Network& net) const;
};

// Adds `count` wavelengths for one new connection on `vc`, one at a time,
// each on the cheapest (route, wavelength) still free given everything
// placed before it; ties go to the lower wavelength, then the better-ranked
// route. Commits nothing.
Increment incremental_allocate(const Network& net, const Allocation& state,
                               const VirtualChannel& vc, int count);

// Same with a precomputed route_candidates() list for vc.
Increment incremental_allocate(const Network& net, const Allocation& state,
                               const VirtualChannel& vc, int count,
                               std::span<const Route> candidates);

// Independent constraint checker. Rebuilds the binary flow variables from
// the lightpath hops and checks, per connection and wavelength, flow
// conservation at every node (continuity), at most one lightpath per
// (connection, wavelength), the per-fiber capacity over both directions,
// one lightpath per (fiber, wavelength) in one direction, that the
// occupancy index is exactly the union of hops, and, when `demand` is
// given (connection -> d_k), the lightpath count per connection.
std::vector<Violation> validate_allocation(const Network& net, const Allocation& alloc,
                                           const std::map<int, int>* demand = nullptr);

// One line per lightpath:
//   <vc_label> w=<w> path=<n1>-<n2>-...-<nk> cost=<minor_units>
std::string format_allocation(const Network& net, std::span<const LightPath> lightpaths);

}  // namespace wavebroker

#endif  // WAVEBROKER_RWA_H_
