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

#include <array>
#include <cmath>

#include "doctest.h"
#include "wavebroker/errors.h"
#include "wavebroker/game.h"

using namespace wavebroker;

TEST_CASE("sample_undercut") {
  SeededStream rng(1);
  for (int i = 0; i < 100; ++i) CHECK(sample_undercut({50, 50}, rng) == 50);

  double sum = 0;
  Money lo = 1000, hi = 0;
  for (int i = 0; i < 10000; ++i) {
    const Money u = sample_undercut({50, 100}, rng);
    sum += static_cast<double>(u);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo == 50);
  CHECK(hi == 100);
  CHECK(std::abs(sum / 10000 - 75.0) < 0.02 * 75.0);
}

TEST_CASE("sample_undercut consumes one draw") {
  SeededStream a(5), b(5);
  sample_undercut({1, 1000}, a);
  b.uniform_int(1, 1000);
  CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("decide_bid") {
  SUBCASE("leader passes without touching the stream") {
    SeededStream rng(3), twin(3);
    CHECK_FALSE(decide_bid(1000, 1, true, {50, 100}, rng));
    CHECK(rng.next_u64() == twin.next_u64());
  }
  SUBCASE("forced draw of 100") {
    SeededStream rng(3);
    CHECK(decide_bid(1000, 500, false, {100, 100}, rng) == 900);
    CHECK_FALSE(decide_bid(550, 500, false, {100, 100}, rng));
  }
  SUBCASE("landing exactly on the MC is allowed") {
    SeededStream rng(3);
    CHECK(decide_bid(600, 500, false, {100, 100}, rng) == 500);
  }
}

TEST_CASE("initial_bid rounds the markup") {
  CHECK(initial_bid(400, 2.0) == 800);
  CHECK(initial_bid(5, 1.5) == 8);
  CHECK(initial_bid(333, 1.0) == 333);
  CHECK_THROWS(initial_bid(100, 0.5));
}

TEST_CASE("equilibrium_bounds") {
  const std::array<UndercutPolicy, 2> same{UndercutPolicy{50, 100}, UndercutPolicy{50, 100}};
  const std::array<Money, 2> duel{600, 400};
  const auto b = equilibrium_bounds(duel, same);
  CHECK(b.reference == 600);
  CHECK(b.lower() == 500);
  CHECK(b.upper() == 700);
  CHECK(b.contains(500));
  CHECK_FALSE(b.contains(701));

  const std::array<Money, 2> tie{500, 500};
  CHECK(equilibrium_bounds(tie, same).reference == 500);

  const std::array<UndercutPolicy, 2> mixed{UndercutPolicy{25, 200}, UndercutPolicy{50, 100}};
  const auto m = equilibrium_bounds(duel, mixed);
  CHECK(m.e_min == 25);
  CHECK(m.e_max == 200);

  const std::array<Money, 1> alone{400};
  const std::array<UndercutPolicy, 1> one{UndercutPolicy{50, 100}};
  CHECK_THROWS_AS(equilibrium_bounds(alone, one), DegenerateMarketError);
}

TEST_CASE("child seeds are distinct and stable") {
  CHECK(child_seed(1, 0) != child_seed(1, 1));
  CHECK(child_seed(1, 0) != child_seed(2, 0));
  static_assert(child_seed(7, 3) == child_seed(7, 3));
}
