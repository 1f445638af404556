#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mdastyl/corpus.hpp"
#include "mdastyl/text.hpp"

namespace mdastyl {

inline constexpr std::string_view kConfigEnv = "MDA_STYL_CONFIG";

struct ConfigKey {
  std::string_view name;
  std::string_view help;
};

/// Every key accepted in a config file and as a --flag.
const std::vector<ConfigKey>& config_keys();

using ConfigValues = std::map<std::string, std::string, std::less<>>;

/// `key = value` lines, `#` comments. Unknown keys and lines without `=`
/// throw ConfigError naming the line.
ConfigValues parse_config(std::istream& in, std::string_view origin = "<config>");
ConfigValues load_config(const std::filesystem::path& path);

struct RunConfig {
  std::filesystem::path registry;
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path corpus;  // empty: <output_dir>/<run_id>/corpus.jsonl
  std::vector<Topic> topics;     // empty: all
  std::size_t window = kDefaultWindowSize;
  bool balance = true;
  std::uint64_t seed = 0;
  std::filesystem::path model;
  std::filesystem::path treebank;
  int epochs = 5;
  std::filesystem::path norms;  // empty: embedded
  std::filesystem::path rules;  // empty: embedded
  double threshold = 0.30;
  double salience = 1.95;
  bool include_d6 = false;
  std::filesystem::path output_dir = "runs";
  std::string run_id = "run";
  int workers = 0;

  std::filesystem::path run_dir() const { return output_dir / run_id; }
  std::filesystem::path corpus_path() const;
};

/// Applies values over defaults, checking types and ranges (ConfigError).
RunConfig make_config(const ConfigValues& values);

/// Throws ConfigError when `path` does not exist; `what` names the key.
void require_file(const std::filesystem::path& path, std::string_view what);

}  // namespace mdastyl
