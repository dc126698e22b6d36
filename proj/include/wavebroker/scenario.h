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

#ifndef WAVEBROKER_SCENARIO_H_
#define WAVEBROKER_SCENARIO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "wavebroker/market.h"

namespace wavebroker {

// Parses a JSON scenario (format in docs/scenario-format.md) and validates
// it. `fallback_seed` is used only when the document has no "seed".
//
// Throws ParseError (with line and column) for malformed JSON and
// ConfigError (with a JSON-pointer location) for anything else, including
// "seed required" when neither source provides one.
ScenarioConfig parse_scenario(std::string_view text, std::optional<std::uint64_t> fallback_seed = std::nullopt,
                              const std::string& source = "<scenario>");

ScenarioConfig load_scenario(const std::filesystem::path& path,
                             std::optional<std::uint64_t> fallback_seed = std::nullopt);

}  // namespace wavebroker

#endif  // WAVEBROKER_SCENARIO_H_
