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

#include "wavebroker/scenario.h"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "wavebroker/errors.h"

namespace wavebroker {

namespace {

using nlohmann::json;

void only_keys(const json& obj, const std::string& at, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (std::string_view a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(at + "/" + key, "unknown field");
  }
}

const json& field(const json& obj, const std::string& at, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError(at + "/" + key, "required field missing");
  return obj.at(key);
}

const json& object_at(const json& obj, const std::string& at) {
  if (!obj.is_object()) throw ConfigError(at, "expected an object");
  return obj;
}

const json& array_at(const json& obj, const std::string& at) {
  if (!obj.is_array()) throw ConfigError(at, "expected an array");
  return obj;
}

std::string string_at(const json& v, const std::string& at) {
  if (!v.is_string()) throw ConfigError(at, "expected a string");
  return v.get<std::string>();
}

std::int64_t integer_at(const json& v, const std::string& at) {
  if (!v.is_number_integer()) throw ConfigError(at, "expected an integer");
  return v.get<std::int64_t>();
}

int int_at(const json& v, const std::string& at) {
  const std::int64_t x = integer_at(v, at);
  if (x < INT32_MIN || x > INT32_MAX) throw ConfigError(at, "integer out of range");
  return static_cast<int>(x);
}

double number_at(const json& v, const std::string& at) {
  if (!v.is_number()) throw ConfigError(at, "expected a number");
  return v.get<double>();
}

bool bool_at(const json& v, const std::string& at) {
  if (!v.is_boolean()) throw ConfigError(at, "expected true or false");
  return v.get<bool>();
}

SupplierConfig parse_network(const json& j, const std::string& at) {
  object_at(j, at);
  only_keys(j, at, {"id", "wavelength_count", "nodes", "links", "supplier"});
  SupplierConfig s;
  Network& net = s.network;
  net.id = string_at(field(j, at, "id"), at + "/id");
  net.wavelength_count = int_at(field(j, at, "wavelength_count"), at + "/wavelength_count");
  const json& nodes = array_at(field(j, at, "nodes"), at + "/nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    net.nodes.push_back(string_at(nodes[i], at + "/nodes/" + std::to_string(i)));
  }
  const json& links = array_at(field(j, at, "links"), at + "/links");
  for (std::size_t i = 0; i < links.size(); ++i) {
    const std::string la = at + "/links/" + std::to_string(i);
    object_at(links[i], la);
    only_keys(links[i], la, {"a", "b", "capacity", "unit_cost"});
    Link link;
    link.a = string_at(field(links[i], la, "a"), la + "/a");
    link.b = string_at(field(links[i], la, "b"), la + "/b");
    link.capacity = int_at(field(links[i], la, "capacity"), la + "/capacity");
    link.unit_cost = integer_at(field(links[i], la, "unit_cost"), la + "/unit_cost");
    const std::string name = " (link " + link.a + "-" + link.b + ")";
    if (link.capacity < 0) throw ConfigError(la + "/capacity", "capacity must be >= 0" + name);
    if (link.unit_cost < 0) throw ConfigError(la + "/unit_cost", "unit_cost must be >= 0" + name);
    net.links.push_back(std::move(link));
  }
  if (j.contains("supplier")) {
    const std::string sa = at + "/supplier";
    const json& sup = object_at(j.at("supplier"), sa);
    only_keys(sup, sa, {"l_min", "l_max", "markup"});
    s.policy.l_min = integer_at(field(sup, sa, "l_min"), sa + "/l_min");
    s.policy.l_max = integer_at(field(sup, sa, "l_max"), sa + "/l_max");
    if (sup.contains("markup")) s.markup = number_at(sup.at("markup"), sa + "/markup");
  } else {
    throw ConfigError(at + "/supplier", "required field missing");
  }
  return s;
}

DemandFunction parse_demand(const json& j, const std::string& at) {
  object_at(j, at);
  const std::string type = string_at(field(j, at, "type"), at + "/type");
  if (type == "linear") {
    only_keys(j, at, {"type", "a", "b"});
    return LinearDemand{number_at(field(j, at, "a"), at + "/a"), number_at(field(j, at, "b"), at + "/b")};
  }
  if (type == "constant_elasticity") {
    only_keys(j, at, {"type", "a", "eps"});
    return ConstantElasticityDemand{number_at(field(j, at, "a"), at + "/a"), number_at(field(j, at, "eps"), at + "/eps")};
  }
  throw ConfigError(at + "/type", "expected \"linear\" or \"constant_elasticity\", got \"" + type + "\"");
}

std::pair<int, int> line_and_column(std::string_view text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ScenarioConfig parse_scenario(std::string_view text, std::optional<std::uint64_t> fallback_seed,
                              const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }

  const std::string root;
  object_at(doc, "/");
  only_keys(doc, root, {"name", "seed", "round_cap", "reject_partial", "emit_traces", "networks",
                        "virtual_channels", "schedule", "cost_curves", "description"});

  ScenarioConfig config;
  if (doc.contains("name")) config.name = string_at(doc.at("name"), "/name");
  if (doc.contains("seed")) {
    const json& seed = doc.at("seed");
    if (!seed.is_number_unsigned()) throw ConfigError("/seed", "seed must be a non-negative integer");
    config.seed = seed.get<std::uint64_t>();
  } else if (fallback_seed) {
    config.seed = *fallback_seed;
  } else {
    throw ConfigError("/seed", "seed required");
  }
  if (doc.contains("round_cap")) config.round_cap = int_at(doc.at("round_cap"), "/round_cap");
  if (doc.contains("reject_partial")) config.reject_partial = bool_at(doc.at("reject_partial"), "/reject_partial");
  if (doc.contains("emit_traces")) config.emit_traces = bool_at(doc.at("emit_traces"), "/emit_traces");
  if (doc.contains("description")) string_at(doc.at("description"), "/description");

  const json& networks = array_at(field(doc, root, "networks"), "/networks");
  for (std::size_t i = 0; i < networks.size(); ++i) {
    config.suppliers.push_back(parse_network(networks[i], "/networks/" + std::to_string(i)));
  }

  const json& channels = array_at(field(doc, root, "virtual_channels"), "/virtual_channels");
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const std::string at = "/virtual_channels/" + std::to_string(i);
    const json& c = object_at(channels[i], at);
    only_keys(c, at, {"label", "src", "dst", "demand", "reserve_price"});
    ChannelConfig ch;
    ch.vc.label = string_at(field(c, at, "label"), at + "/label");
    ch.vc.src = string_at(field(c, at, "src"), at + "/src");
    ch.vc.dst = string_at(field(c, at, "dst"), at + "/dst");
    ch.demand = parse_demand(field(c, at, "demand"), at + "/demand");
    if (c.contains("reserve_price")) ch.reserve_price = integer_at(c.at("reserve_price"), at + "/reserve_price");
    config.channels.push_back(std::move(ch));
  }

  if (doc.contains("schedule")) {
    const json& schedule = array_at(doc.at("schedule"), "/schedule");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      const std::string at = "/schedule/" + std::to_string(i);
      const json& r = object_at(schedule[i], at);
      only_keys(r, at, {"round", "vc", "count"});
      ScheduledRequest req;
      req.round = int_at(field(r, at, "round"), at + "/round");
      req.vc = string_at(field(r, at, "vc"), at + "/vc");
      const int count = r.contains("count") ? int_at(r.at("count"), at + "/count") : 1;
      if (count < 1) throw ConfigError(at + "/count", "must be >= 1");
      for (int k = 0; k < count; ++k) config.schedule.push_back(req);
    }
  }

  if (doc.contains("cost_curves")) {
    const json& curves = array_at(doc.at("cost_curves"), "/cost_curves");
    for (std::size_t i = 0; i < curves.size(); ++i) {
      const std::string at = "/cost_curves/" + std::to_string(i);
      const json& c = object_at(curves[i], at);
      only_keys(c, at, {"network", "vc", "q_cap"});
      config.cost_curves.push_back({string_at(field(c, at, "network"), at + "/network"),
                                    string_at(field(c, at, "vc"), at + "/vc"),
                                    int_at(field(c, at, "q_cap"), at + "/q_cap")});
    }
  }

  validate_config(config);
  return config;
}

ScenarioConfig load_scenario(const std::filesystem::path& path, std::optional<std::uint64_t> fallback_seed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), fallback_seed, path.string());
}

}  // namespace wavebroker
