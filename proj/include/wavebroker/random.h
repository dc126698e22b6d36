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

#ifndef WAVEBROKER_RANDOM_H_
#define WAVEBROKER_RANDOM_H_

#include <cstdint>
#include <random>

namespace wavebroker {

// Deterministic random stream. The engine output is fixed by the standard
// and the range reduction below is ours, so a seed replays identically on
// every conforming toolchain (std::uniform_int_distribution is not
// portable in that sense).
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi], inclusive. One logical draw; rejection
  // sampling may pull more than one engine word.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == UINT64_MAX) return static_cast<std::int64_t>(engine_());
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % range);
  }

  // Uniform index in [0, n).
  std::size_t pick(std::size_t n) {
    return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n) - 1));
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of the index-th child stream of a root seed. Stable across
// platforms and releases; sweeps depend on it for reproducibility.
constexpr std::uint64_t child_seed(std::uint64_t root, std::uint64_t index) {
  return mix64(mix64(root) ^ (index * 0xd1b54a32d192ed03ULL + 1));
}

}  // namespace wavebroker

#endif  // WAVEBROKER_RANDOM_H_
