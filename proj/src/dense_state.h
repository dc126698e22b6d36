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

#ifndef WAVEBROKER_SRC_DENSE_STATE_H_
#define WAVEBROKER_SRC_DENSE_STATE_H_

#include <vector>

#include "graph.h"
#include "wavebroker/rwa.h"

namespace wavebroker::internal {

// Flat (link, wavelength) occupancy plus per-link usage, for the search
// loops. Wavelengths are 1-based at the interface.
class DenseState {
 public:
  DenseState(const IndexedNetwork& g, const Allocation& state)
      : g_(g),
        width_(g.wavelength_count()),
        cells_(static_cast<std::size_t>(g.link_count()) * width_, 0),
        used_(g.link_count(), 0) {
    for (const auto& [cell, occupant] : state.occupancy()) {
      const int link = g.link_between(g.require_node(cell.a), g.require_node(cell.b));
      if (link < 0 || cell.wavelength < 1 || cell.wavelength > width_) {
        throw std::invalid_argument("allocation references a cell outside the network");
      }
      cells_[index(link, cell.wavelength)] = 1;
      ++used_[link];
    }
  }

  bool fits(const IndexedRoute& route, int wavelength) const {
    for (int link : route.links) {
      if (cells_[index(link, wavelength)] || used_[link] >= g_.edge(link).capacity) return false;
    }
    return true;
  }

  void take(const IndexedRoute& route, int wavelength) {
    for (int link : route.links) {
      cells_[index(link, wavelength)] = 1;
      ++used_[link];
    }
  }

  void release(const IndexedRoute& route, int wavelength) {
    for (int link : route.links) {
      cells_[index(link, wavelength)] = 0;
      --used_[link];
    }
  }

 private:
  std::size_t index(int link, int wavelength) const {
    return static_cast<std::size_t>(link) * width_ + (wavelength - 1);
  }

  const IndexedNetwork& g_;
  int width_;
  std::vector<char> cells_;
  std::vector<int> used_;
};

}  // namespace wavebroker::internal

#endif  // WAVEBROKER_SRC_DENSE_STATE_H_
