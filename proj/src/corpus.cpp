#include "mdastyl/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mdastyl/error.hpp"
#include "mdastyl/text.hpp"
#include "mdastyl/util.hpp"

namespace mdastyl {
namespace {

using nlohmann::json;

std::string content_id(const RawArticle& a) {
  std::uint64_t h = fnv1a(a.source);
  h = fnv1a("\x1f", h);
  h = fnv1a(a.topic, h);
  h = fnv1a("\x1f", h);
  h = fnv1a(a.date.value_or(""), h);
  h = fnv1a("\x1f", h);
  h = fnv1a(a.text, h);
  return "doc-" + hex64(h);
}

bool canonical_less(const Document& a, const Document& b) {
  if (a.source != b.source) return a.source < b.source;
  const auto& da = a.published ? *a.published : std::string();
  const auto& db = b.published ? *b.published : std::string();
  if (da != db) return da < db;
  return a.id < b.id;
}

}  // namespace

std::string_view to_string(Topic t) {
  switch (t) {
    case Topic::kEconomy: return "economy";
    case Topic::kEntertainment: return "entertainment";
    case Topic::kHealth: return "health";
    case Topic::kScience: return "science";
    case Topic::kSports: return "sports";
    case Topic::kOther: return "other";
  }
  return "other";
}

std::string_view to_string(Label l) {
  return l == Label::kCredible ? "credible" : "non-credible";
}

std::optional<Topic> parse_topic(std::string_view s) {
  const std::string lower = fold_case(trim(s));
  for (Topic t : kAllTopics) {
    if (to_string(t) == lower) return t;
  }
  return std::nullopt;
}

std::optional<Label> parse_label(std::string_view s) {
  const std::string lower = fold_case(trim(s));
  if (lower == "credible") return Label::kCredible;
  if (lower == "non-credible") return Label::kNonCredible;
  return std::nullopt;
}

void SourceRegistry::add(SourceEntry entry) {
  std::string key = fold_case(entry.name);
  if (index_.contains(key)) {
    throw ConfigError("duplicate source in registry: " + entry.name);
  }
  index_.emplace(std::move(key), entries_.size());
  entries_.push_back(std::move(entry));
}

std::optional<Label> SourceRegistry::label_of(std::string_view source) const {
  const auto it = index_.find(fold_case(trim(source)));
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].label;
}

SourceRegistry parse_registry(std::istream& in, std::string_view origin) {
  SourceRegistry reg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto c1 = text.find(',');
    if (c1 == std::string::npos) {
      throw ConfigError(std::string(origin) + ":" + std::to_string(lineno) +
                        ": expected source,label[,notes]");
    }
    const auto c2 = text.find(',', c1 + 1);
    SourceEntry e;
    e.name = trim(std::string_view(text).substr(0, c1));
    const std::string label_token =
        trim(std::string_view(text).substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
    if (c2 != std::string::npos) e.notes = trim(std::string_view(text).substr(c2 + 1));
    if (e.name.empty()) {
      throw ConfigError(std::string(origin) + ":" + std::to_string(lineno) + ": empty source name");
    }
    const auto label = parse_label(label_token);
    if (!label) {
      throw ConfigError(std::string(origin) + ":" + std::to_string(lineno) +
                        ": unknown label '" + label_token + "'");
    }
    e.label = *label;
    reg.add(std::move(e));
  }
  return reg;
}

SourceRegistry load_registry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open registry file: " + path.string());
  return parse_registry(in, path.string());
}

bool Document::is_short() const { return token_count < kShortDocumentTokens; }

bool CorpusManifest::consistent() const {
  std::size_t sum = 0;
  for (const auto& [topic, counts] : per_topic) sum += counts.total();
  return sum == total;
}

bool CorpusManifest::balanced() const {
  return std::all_of(per_topic.begin(), per_topic.end(), [](const auto& kv) {
    return kv.second.credible == kv.second.non_credible;
  });
}

CorpusManifest build_manifest(const std::vector<Document>& docs) {
  CorpusManifest m;
  for (const auto& d : docs) {
    auto& c = m.per_topic[d.topic];
    if (d.label == Label::kCredible) ++c.credible;
    else ++c.non_credible;
    ++m.total;
    if (d.published) {
      if (!m.date_start || *d.published < *m.date_start) m.date_start = d.published;
      if (!m.date_end || *d.published > *m.date_end) m.date_end = d.published;
    }
  }
  return m;
}

bool is_iso_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  const int month = (s[5] - '0') * 10 + (s[6] - '0');
  const int day = (s[8] - '0') * 10 + (s[9] - '0');
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

IngestResult ingest(const std::vector<RawArticle>& articles,
                    const SourceRegistry& registry, const IngestOptions& options) {
  IngestResult result;
  std::vector<Document> accepted;
  accepted.reserve(articles.size());
  for (std::size_t i = 0; i < articles.size(); ++i) {
    const RawArticle& a = articles[i];
    auto reject = [&](std::string reason) {
      result.rejects.push_back({i, a.source, std::move(reason)});
    };
    const auto label = registry.label_of(a.source);
    if (!label) {
      reject("unknown source");
      continue;
    }
    const auto topic = parse_topic(a.topic);
    if (!topic) {
      reject("unknown topic '" + a.topic + "'");
      continue;
    }
    if (a.date && !is_iso_date(*a.date)) {
      reject("invalid date '" + *a.date + "'");
      continue;
    }
    if (!is_valid_utf8(a.text)) {
      reject("body is not valid UTF-8");
      continue;
    }
    if (trim(a.text).empty()) {
      reject("empty body");
      continue;
    }
    Document d;
    d.id = a.id ? *a.id : content_id(a);
    d.source = trim(a.source);
    d.topic = *topic;
    d.label = *label;
    d.published = a.date;
    d.body = a.text;
    accepted.push_back(std::move(d));
  }

  std::sort(accepted.begin(), accepted.end(), canonical_less);
  // Identical generated ids belong to identical articles; disambiguate in
  // canonical order so ids stay unique.
  {
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<Document> unique;
    unique.reserve(accepted.size());
    for (auto& d : accepted) {
      const std::size_t n = ++seen[d.id];
      if (n > 1) d.id += "-" + std::to_string(n);
      unique.push_back(std::move(d));
    }
    accepted = std::move(unique);
  }

  if (options.balance) {
    std::vector<Document> kept;
    for (Topic t : kAllTopics) {
      std::vector<std::size_t> cred;
      std::vector<std::size_t> non;
      for (std::size_t i = 0; i < accepted.size(); ++i) {
        if (accepted[i].topic != t) continue;
        (accepted[i].label == Label::kCredible ? cred : non).push_back(i);
      }
      const std::size_t k = std::min(cred.size(), non.size());
      auto& majority = cred.size() > non.size() ? cred : non;
      auto& minority = cred.size() > non.size() ? non : cred;
      const std::uint64_t topic_seed =
          options.seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(t) + 1));
      const auto perm = seeded_permutation(majority.size(), topic_seed);
      std::vector<std::size_t> chosen(minority);
      for (std::size_t j = 0; j < k; ++j) chosen.push_back(majority[perm[j]]);
      for (std::size_t idx : chosen) kept.push_back(accepted[idx]);
    }
    std::sort(kept.begin(), kept.end(), canonical_less);
    accepted = std::move(kept);
  }

  const auto n = static_cast<std::ptrdiff_t>(accepted.size());
  if (options.workers > 0) {
#pragma omp parallel for schedule(dynamic, 8) num_threads(options.workers)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      accepted[i].token_count = tokenize(accepted[i].body).size();
    }
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      accepted[i].token_count = tokenize(accepted[i].body).size();
    }
  }

  result.documents = std::move(accepted);
  result.manifest = build_manifest(result.documents);
  if (!result.manifest.consistent()) {
    throw std::logic_error("manifest total does not match per-topic counts");
  }
  if (options.balance && !result.manifest.balanced()) {
    throw std::logic_error("balanced ingest produced unequal label counts");
  }
  return result;
}

std::vector<RawArticle> read_feed(std::istream& in, std::string_view origin) {
  std::vector<RawArticle> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      const json j = json::parse(line);
      RawArticle a;
      if (j.contains("id") && !j["id"].is_null()) a.id = j["id"].get<std::string>();
      a.source = j.at("source").get<std::string>();
      a.topic = j.at("topic").get<std::string>();
      if (j.contains("date") && !j["date"].is_null()) a.date = j["date"].get<std::string>();
      a.text = j.at("text").get<std::string>();
      out.push_back(std::move(a));
    } catch (const json::exception& e) {
      throw FormatError(std::string(origin) + ": record " + std::to_string(lineno) +
                        ": " + e.what());
    }
  }
  return out;
}

std::vector<RawArticle> load_feed(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open feed file: " + path.string());
  return read_feed(in, path.string());
}

void write_corpus(std::ostream& out, const std::vector<Document>& docs) {
  for (const auto& d : docs) {
    json j;
    j["id"] = d.id;
    j["source"] = d.source;
    j["topic"] = std::string(to_string(d.topic));
    j["label"] = std::string(to_string(d.label));
    j["published"] = d.published ? json(*d.published) : json(nullptr);
    j["body"] = d.body;
    out << j.dump() << '\n';
  }
}

std::vector<Document> read_corpus(std::istream& in) {
  std::vector<Document> docs;
  std::string line;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    ++record;
    auto fail = [&](const std::string& why) {
      return FormatError("corpus record " + std::to_string(record) + ": " + why);
    };
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw fail(e.what());
    }
    try {
      Document d;
      d.id = j.at("id").get<std::string>();
      d.source = j.at("source").get<std::string>();
      const auto topic = parse_topic(j.at("topic").get<std::string>());
      const auto label = parse_label(j.at("label").get<std::string>());
      if (!topic) throw fail("unknown topic");
      if (!label) throw fail("unknown label");
      d.topic = *topic;
      d.label = *label;
      const auto& pub = j.at("published");
      if (!pub.is_null()) {
        d.published = pub.get<std::string>();
        if (!is_iso_date(*d.published)) throw fail("invalid published date");
      }
      d.body = j.at("body").get<std::string>();
      if (d.body.empty()) throw fail("empty body");
      d.token_count = tokenize(d.body).size();
      docs.push_back(std::move(d));
    } catch (const json::exception& e) {
      throw fail(e.what());
    }
  }
  return docs;
}

void persist(const std::vector<Document>& docs, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write corpus file: " + path.string());
  write_corpus(out, docs);
  if (!out) throw DataError("failed writing corpus file: " + path.string());
}

std::vector<Document> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file: " + path.string());
  return read_corpus(in);
}

void write_manifest(std::ostream& out, const CorpusManifest& m) {
  out << "topic\tcredible\tnon-credible\ttotal\n";
  for (const auto& [topic, c] : m.per_topic) {
    out << to_string(topic) << '\t' << c.credible << '\t' << c.non_credible << '\t'
        << c.total() << '\n';
  }
  out << "#date_range\t" << m.date_start.value_or("null") << '\t'
      << m.date_end.value_or("null") << '\n';
  out << "#total\t" << m.total << '\n';
}

CorpusManifest read_manifest(std::istream& in) {
  CorpusManifest m;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    if (header) {
      header = false;
      if (!line.starts_with("topic\t")) throw FormatError("manifest: missing header row");
      continue;
    }
    std::istringstream row(line);
    std::string key;
    std::getline(row, key, '\t');
    if (key == "#date_range") {
      std::string a, b;
      std::getline(row, a, '\t');
      std::getline(row, b, '\t');
      if (a != "null") m.date_start = a;
      if (b != "null") m.date_end = b;
    } else if (key == "#total") {
      row >> m.total;
    } else {
      const auto topic = parse_topic(key);
      if (!topic) throw FormatError("manifest: unknown topic '" + key + "'");
      LabelCounts c;
      std::size_t total = 0;
      if (!(row >> c.credible >> c.non_credible >> total) || total != c.total()) {
        throw FormatError("manifest: bad counts for topic '" + key + "'");
      }
      m.per_topic[*topic] = c;
    }
  }
  if (!m.consistent()) throw FormatError("manifest: total does not match topic counts");
  return m;
}

void write_rejects(std::ostream& out, const std::vector<Reject>& rejects) {
  for (const auto& r : rejects) {
    json j;
    j["index"] = r.index;
    j["source"] = r.source;
    j["reason"] = r.reason;
    out << j.dump() << '\n';
  }
}

}  // namespace mdastyl
