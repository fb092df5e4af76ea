// Copyright 2026 The pgsim Authors
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

// Reader for the plain-text airframe dataset.

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pgs/airframe.hpp"
#include "pgs/error.hpp"

namespace pgs {
namespace detail {
extern const std::string_view kDefaultAirframeText;
}  // namespace detail

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_number(std::string_view tok, int line) {
  double v = 0.0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("airframe dataset line " + std::to_string(line) +
                     ": '" + std::string(tok) + "' is not a number");
  }
  return v;
}

std::vector<double> split_numbers(std::string_view s, int line) {
  std::vector<double> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(to_number(s.substr(i, j - i), line));
    i = j;
  }
  return out;
}

}  // namespace

Airframe parse_airframe(std::string_view text) {
  std::map<std::string, double, std::less<>> keys;
  std::vector<double> times, thrusts;
  std::vector<AeroRow> rows;
  std::string section;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError("airframe dataset line " + std::to_string(line_no) +
                         ": unterminated section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "reference" && section != "mass" &&
          section != "thrust" && section != "aero") {
        throw ParseError("airframe dataset line " + std::to_string(line_no) +
                         ": unknown section [" + section + "]");
      }
      continue;
    }

    if (section == "reference" || section == "mass") {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("airframe dataset line " + std::to_string(line_no) +
                         ": expected key = value");
      }
      std::string key(trim(line.substr(0, eq)));
      keys[section + "." + key] = to_number(trim(line.substr(eq + 1)), line_no);
    } else if (section == "thrust") {
      const auto v = split_numbers(line, line_no);
      if (v.size() != 2) {
        throw ParseError("airframe dataset line " + std::to_string(line_no) +
                         ": thrust rows need 2 columns");
      }
      times.push_back(v[0]);
      thrusts.push_back(v[1]);
    } else if (section == "aero") {
      const auto v = split_numbers(line, line_no);
      if (v.size() != 7) {
        throw ParseError("airframe dataset line " + std::to_string(line_no) +
                         ": aero rows need 7 columns");
      }
      rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6]});
    } else {
      throw ParseError("airframe dataset line " + std::to_string(line_no) +
                       ": data outside of a section");
    }
  }

  auto require = [&](const std::string& key) {
    auto it = keys.find(key);
    if (it == keys.end()) {
      throw ParseError("airframe dataset: missing key " + key);
    }
    return it->second;
  };

  try {
    AeroTable aero(std::move(rows), require("reference.area"),
                   require("reference.length"));
    ThrustProfile thrust(std::move(times), std::move(thrusts),
                         require("mass.launch_mass"),
                         require("mass.propellant_mass"));
    const double inertia = require("reference.transverse_inertia");
    if (!(inertia > 0.0)) {
      throw InvalidArgument("transverse_inertia must be positive");
    }
    return Airframe{std::move(aero), std::move(thrust), inertia};
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("airframe dataset: ") + e.what());
  }
}

Airframe load_airframe(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open airframe dataset " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_airframe(ss.str());
}

std::string_view default_airframe_text() { return detail::kDefaultAirframeText; }

const Airframe& default_airframe() {
  static const Airframe airframe = parse_airframe(detail::kDefaultAirframeText);
  return airframe;
}

}  // namespace pgs
