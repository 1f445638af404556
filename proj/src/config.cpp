#include "mdastyl/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "mdastyl/error.hpp"
#include "mdastyl/util.hpp"

namespace mdastyl {

const std::vector<ConfigKey>& config_keys() {
  static const std::vector<ConfigKey> keys = {
      {"registry", "source registry file (source,label[,notes])"},
      {"input", "comma-separated JSON Lines feeds to ingest"},
      {"corpus", "corpus file (default <output_dir>/<run_id>/corpus.jsonl)"},
      {"topics", "comma-separated topic filter (default all)"},
      {"window", "analysis window in tokens (default 400)"},
      {"balance", "balance labels within each topic (default true)"},
      {"seed", "seed for subsampling and training (default 0)"},
      {"model", "tagger model file"},
      {"treebank", "tagged training sentences for train-tagger"},
      {"epochs", "training epochs (default 5)"},
      {"norms", "reference data file overriding the embedded norms"},
      {"rules", "rule table file overriding the embedded rules"},
      {"threshold", "notable |d| threshold for tables (default 0.30)"},
      {"salience", "|z| salience threshold (default 1.95)"},
      {"include_d6", "include D6 in reports (default false)"},
      {"output_dir", "root of run directories (default runs)"},
      {"run_id", "run directory name (default run)"},
      {"workers", "worker threads, 0 for the OpenMP default"},
  };
  return keys;
}

namespace {

bool known(std::string_view key) {
  const auto& keys = config_keys();
  return std::any_of(keys.begin(), keys.end(), [&](const ConfigKey& k) { return k.name == key; });
}

template <typename T>
T integer(const std::string& key, const std::string& v) {
  T out{};
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw ConfigError("config key '" + key + "': expected an integer, got '" + v + "'");
  }
  return out;
}

double real(const std::string& key, const std::string& v) {
  try {
    return parse_double(v, key);
  } catch (const FormatError&) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + v + "'");
  }
}

bool boolean(const std::string& key, const std::string& v) {
  const auto s = fold_case(v);
  if (s == "true" || s == "yes" || s == "on" || s == "1") return true;
  if (s == "false" || s == "no" || s == "off" || s == "0") return false;
  throw ConfigError("config key '" + key + "': expected true or false, got '" + v + "'");
}

std::vector<std::string> list(const std::string& v) {
  std::vector<std::string> out;
  for (const auto& part : split(v, ',')) {
    auto t = trim(part);
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

ConfigValues parse_config(std::istream& in, std::string_view origin) {
  ConfigValues out;
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    const auto line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    const auto where = std::string(origin) + ":" + std::to_string(n);
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const auto key = trim(std::string_view(line).substr(0, eq));
    if (!known(key)) throw ConfigError(where + ": unknown key '" + key + "'");
    out[key] = trim(std::string_view(line).substr(eq + 1));
  }
  return out;
}

ConfigValues load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  return parse_config(in, path.string());
}

std::filesystem::path RunConfig::corpus_path() const {
  return corpus.empty() ? run_dir() / "corpus.jsonl" : corpus;
}

RunConfig make_config(const ConfigValues& values) {
  RunConfig c;
  for (const auto& [key, v] : values) {
    if (key == "registry") {
      c.registry = v;
    } else if (key == "input") {
      c.inputs.clear();
      for (const auto& p : list(v)) c.inputs.emplace_back(p);
    } else if (key == "corpus") {
      c.corpus = v;
    } else if (key == "topics") {
      c.topics.clear();
      for (const auto& t : list(v)) {
        const auto topic = parse_topic(t);
        if (!topic) throw ConfigError("config key 'topics': unknown topic '" + t + "'");
        c.topics.push_back(*topic);
      }
    } else if (key == "window") {
      c.window = integer<std::size_t>(key, v);
      if (c.window < 1) throw ConfigError("config key 'window': must be at least 1");
    } else if (key == "balance") {
      c.balance = boolean(key, v);
    } else if (key == "seed") {
      c.seed = integer<std::uint64_t>(key, v);
    } else if (key == "model") {
      c.model = v;
    } else if (key == "treebank") {
      c.treebank = v;
    } else if (key == "epochs") {
      c.epochs = integer<int>(key, v);
      if (c.epochs < 1) throw ConfigError("config key 'epochs': must be at least 1");
    } else if (key == "norms") {
      c.norms = v;
    } else if (key == "rules") {
      c.rules = v;
    } else if (key == "threshold") {
      c.threshold = real(key, v);
      if (!(c.threshold >= 0.0)) throw ConfigError("config key 'threshold': must be >= 0");
    } else if (key == "salience") {
      c.salience = real(key, v);
      if (!(c.salience >= 0.0)) throw ConfigError("config key 'salience': must be >= 0");
    } else if (key == "include_d6") {
      c.include_d6 = boolean(key, v);
    } else if (key == "output_dir") {
      if (v.empty()) throw ConfigError("config key 'output_dir': empty");
      c.output_dir = v;
    } else if (key == "run_id") {
      if (v.empty() || v.find('/') != std::string::npos || v == "." || v == "..") {
        throw ConfigError("config key 'run_id': must be a plain directory name");
      }
      c.run_id = v;
    } else if (key == "workers") {
      c.workers = integer<int>(key, v);
      if (c.workers < 0) throw ConfigError("config key 'workers': must be >= 0");
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return c;
}

void require_file(const std::filesystem::path& path, std::string_view what) {
  if (path.empty()) throw ConfigError("missing required setting '" + std::string(what) + "'");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw ConfigError(std::string(what) + " file not found: " + path.string());
  }
}

}  // namespace mdastyl
