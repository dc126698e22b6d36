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

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "wavebroker/errors.h"
#include "wavebroker/protocol.h"

namespace wavebroker {

namespace {

constexpr std::string_view kToSupplierTag = "b>s";
constexpr std::string_view kToBrokerTag = "s>b";

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

class Fields {
 public:
  explicit Fields(std::string_view text) {
    if (text.empty()) return;
    for (std::string_view kv : split(text, ',')) {
      const std::size_t eq = kv.find('=');
      if (eq == std::string_view::npos) throw ParseError("field without '=': '" + std::string(kv) + "'");
      values_.emplace(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1)));
    }
  }

  const std::string& text(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ParseError("missing field '" + key + "'");
    return it->second;
  }
  Money money(const std::string& key) const { return parse_number<Money>(text(key), key); }
  int count(const std::string& key) const { return parse_number<int>(text(key), key); }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace

std::string_view message_name(const Message& m) {
  return std::visit(Overloaded{
                        [](const Reqc&) { return std::string_view("Reqc"); },
                        [](const Offp&) { return std::string_view("Offp"); },
                        [](const Ocl&) { return std::string_view("Ocl"); },
                        [](const Nack&) { return std::string_view("Nack"); },
                        [](const Ack&) { return std::string_view("Ack"); },
                        [](const Exc1&) { return std::string_view("Exc1"); },
                        [](const Exc2&) { return std::string_view("Exc2"); },
                    },
                    m);
}

std::string format_event(const TraceEvent& e) {
  std::ostringstream os;
  os << e.round << '\t' << (e.direction == Direction::kBrokerToSupplier ? kToSupplierTag : kToBrokerTag) << '\t'
     << e.supplier << '\t' << message_name(e.message) << '\t';
  std::visit(Overloaded{
                 [&](const Reqc& m) { os << "x=" << m.x << ",y=" << m.y; },
                 [&](const Offp& m) { os << "p=" << m.p << ",x=" << m.x << ",y=" << m.y; },
                 [&](const Ocl& m) { os << "x=" << m.x << ",y=" << m.y << ",p=" << m.p; },
                 [&](const Nack& m) { os << "x=" << m.x << ",y=" << m.y; },
                 [&](const Ack& m) { os << "x=" << m.x << ",y=" << m.y << ",d=" << m.d; },
                 [&](const Exc1& m) { os << "d=" << m.d << ",p=" << m.p << ",x=" << m.x << ",y=" << m.y; },
                 [&](const Exc2& m) { os << "x=" << m.x << ",y=" << m.y << ",p=" << m.p; },
             },
             e.message);
  return os.str();
}

TraceEvent parse_event(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto cols = split(line, '\t');
  if (cols.size() != 5) throw ParseError("trace line needs 5 tab-separated columns: '" + std::string(line) + "'");
  TraceEvent e;
  e.round = parse_number<int>(cols[0], "round");
  if (cols[1] == kToSupplierTag) {
    e.direction = Direction::kBrokerToSupplier;
  } else if (cols[1] == kToBrokerTag) {
    e.direction = Direction::kSupplierToBroker;
  } else {
    throw ParseError("bad direction '" + std::string(cols[1]) + "'");
  }
  e.supplier = std::string(cols[2]);
  const Fields f(cols[4]);
  const std::string_view type = cols[3];
  if (type == "Reqc") {
    e.message = Reqc{f.text("x"), f.text("y")};
  } else if (type == "Offp") {
    e.message = Offp{f.money("p"), f.text("x"), f.text("y")};
  } else if (type == "Ocl") {
    e.message = Ocl{f.text("x"), f.text("y"), f.money("p")};
  } else if (type == "Nack") {
    e.message = Nack{f.text("x"), f.text("y")};
  } else if (type == "Ack") {
    e.message = Ack{f.text("x"), f.text("y"), f.count("d")};
  } else if (type == "Exc1") {
    e.message = Exc1{f.count("d"), f.money("p"), f.text("x"), f.text("y")};
  } else if (type == "Exc2") {
    e.message = Exc2{f.text("x"), f.text("y"), f.money("p")};
  } else {
    throw ParseError("unknown message type '" + std::string(type) + "'");
  }
  return e;
}

void write_trace(std::ostream& os, const CompetitionTrace& trace) {
  for (const TraceEvent& e : trace.events) os << format_event(e) << '\n';
}

CompetitionTrace read_trace(std::istream& is) {
  CompetitionTrace trace;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    trace.events.push_back(parse_event(line));
  }
  return trace;
}

}  // namespace wavebroker
