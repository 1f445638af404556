#pragma once

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "mdastyl/error.hpp"
#include "mdastyl/rules.hpp"
#include "mdastyl/util.hpp"

namespace mdastyl::testing {

struct FeatureFixture {
  std::size_t line = 0;
  std::string code;
  double expected = 0;
  std::string text;
};

inline std::vector<FeatureFixture> load_feature_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open fixtures: " + path);
  std::vector<FeatureFixture> out;
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw FormatError("fixture line " + std::to_string(n) + ": missing '|'");
    const auto head = split(trim(line.substr(0, bar)), ' ');
    if (head.size() != 2) throw FormatError("fixture line " + std::to_string(n) + ": expected CODE COUNT");
    out.push_back({n, head[0], parse_double(head[1], "fixture count"), trim(line.substr(bar + 1))});
  }
  return out;
}

struct FixtureOutcome {
  bool passed = false;
  double actual = 0;
};

inline FixtureOutcome run_fixture(const FeatureFixture& f, const RuleTable& table = default_rules()) {
  const auto tokens = parse_tagged_text(f.text);
  const auto counts = tag_features(tokens, table);
  double actual = 0;
  if (f.code == "AWL") {
    actual = counts.awl;
  } else if (f.code == "TTR") {
    actual = static_cast<double>(counts.ttr);
  } else {
    actual = static_cast<double>(counts.count(f.code));
  }
  return {std::fabs(actual - f.expected) < 1e-9, actual};
}

}  // namespace mdastyl::testing
