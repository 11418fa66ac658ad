// Copyright 2026 The WDP Dispatch Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Renewable output profiles.
//
// CSV layout: `interval_index,g_mwh`, one interval per row, optional header
// row, blank lines ignored. Indices must strictly increase.

#pragma once

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdp::sim {

struct Interval {
  long index = 0;
  double g = 0.0;  // MWh

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct RenewableProfile {
  std::string label;
  std::vector<Interval> intervals;

  std::size_t size() const { return intervals.size(); }
};

class ProfileError : public std::runtime_error {
 public:
  enum class Kind { ParseError, NegativeGeneration };

  ProfileError(Kind kind, int line, const std::string& what)
      : std::runtime_error(describe(line, what)), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  int line() const { return line_; }  // 1-based; 0 when not tied to a line

 private:
  static std::string describe(int line, const std::string& what) {
    return line > 0 ? "line " + std::to_string(line) + ": " + what : what;
  }

  Kind kind_;
  int line_;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline bool parse_double(const std::string& text, double& out) {
  const std::string s = trim(text);
  if (s.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(s.c_str(), &end);
  return errno == 0 && end == s.c_str() + s.size() && std::isfinite(out);
}

inline bool parse_long(const std::string& text, long& out) {
  const std::string s = trim(text);
  if (s.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtol(s.c_str(), &end, 10);
  return errno == 0 && end == s.c_str() + s.size();
}

}  // namespace detail

inline RenewableProfile parse_profile(std::istream& in, std::string label = {}) {
  using Kind = ProfileError::Kind;
  RenewableProfile profile;
  profile.label = std::move(label);
  std::string line;
  int line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto comma = line.find(',');
    const std::string first = line.substr(0, comma);
    long index = 0;
    if (!detail::parse_long(first, index)) {
      if (!seen_content) {  // header row
        seen_content = true;
        continue;
      }
      throw ProfileError(Kind::ParseError, line_no,
                         "interval index is not an integer: '" +
                             detail::trim(first) + "'");
    }
    seen_content = true;
    if (comma == std::string::npos) {
      throw ProfileError(Kind::ParseError, line_no, "expected two columns");
    }
    const std::string rest = line.substr(comma + 1);
    if (rest.find(',') != std::string::npos) {
      throw ProfileError(Kind::ParseError, line_no, "expected two columns");
    }
    double g = 0.0;
    if (!detail::parse_double(rest, g)) {
      throw ProfileError(Kind::ParseError, line_no,
                         "g_mwh is not a finite number: '" + detail::trim(rest) + "'");
    }
    if (g < 0.0) {
      throw ProfileError(Kind::NegativeGeneration, line_no,
                         "renewable output must be >= 0");
    }
    if (!profile.intervals.empty() && index <= profile.intervals.back().index) {
      throw ProfileError(Kind::ParseError, line_no,
                         "interval indices must strictly increase");
    }
    profile.intervals.push_back({index, g});
  }
  if (profile.intervals.empty()) {
    throw ProfileError(Kind::ParseError, 0, "profile has no intervals");
  }
  return profile;
}

inline RenewableProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ProfileError(ProfileError::Kind::ParseError, 0,
                       "cannot open profile '" + path + "'");
  }
  auto label = path;
  if (const auto slash = label.find_last_of('/'); slash != std::string::npos) {
    label = label.substr(slash + 1);
  }
  if (const auto dot = label.rfind('.'); dot != std::string::npos && dot > 0) {
    label = label.substr(0, dot);
  }
  return parse_profile(in, label);
}

// `n` intervals indexed 0..n-1, all at output `g`.
inline RenewableProfile constant_profile(std::size_t n, double g,
                                         std::string label = "constant") {
  if (!(g >= 0.0)) {
    throw ProfileError(ProfileError::Kind::NegativeGeneration, 0,
                       "renewable output must be >= 0");
  }
  RenewableProfile p;
  p.label = std::move(label);
  for (std::size_t i = 0; i < n; ++i) p.intervals.push_back({static_cast<long>(i), g});
  return p;
}

}  // namespace wdp::sim
