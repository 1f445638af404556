#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mdastyl {

enum class Topic { kEconomy, kEntertainment, kHealth, kScience, kSports, kOther };
enum class Label { kCredible, kNonCredible };

inline constexpr std::array<Topic, 6> kAllTopics = {
    Topic::kEconomy, Topic::kEntertainment, Topic::kHealth,
    Topic::kScience, Topic::kSports,        Topic::kOther};

std::string_view to_string(Topic t);
std::string_view to_string(Label l);
std::optional<Topic> parse_topic(std::string_view s);
std::optional<Label> parse_label(std::string_view s);

struct SourceEntry {
  std::string name;
  Label label = Label::kCredible;
  std::string notes;
};

/// Publisher -> credibility label. Names are matched case-insensitively.
class SourceRegistry {
 public:
  SourceRegistry() = default;

  /// Throws ConfigError on a case-insensitive duplicate.
  void add(SourceEntry entry);

  std::optional<Label> label_of(std::string_view source) const;
  const std::vector<SourceEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<SourceEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// `source,label[,notes]` per line, `#` comments and blank lines ignored.
SourceRegistry parse_registry(std::istream& in, std::string_view origin = "<registry>");
SourceRegistry load_registry(const std::filesystem::path& path);

struct Document {
  std::string id;
  std::string source;
  Topic topic = Topic::kOther;
  Label label = Label::kCredible;
  std::optional<std::string> published;  // ISO-8601 YYYY-MM-DD
  std::string body;
  std::size_t token_count = 0;

  /// Fewer tokens than kShortDocumentTokens; scores are less reliable.
  bool is_short() const;

  bool operator==(const Document&) const = default;
};

inline constexpr std::size_t kShortDocumentTokens = 50;

struct RawArticle {
  std::optional<std::string> id;
  std::string source;
  std::string topic;
  std::optional<std::string> date;
  std::string text;
};

struct LabelCounts {
  std::size_t credible = 0;
  std::size_t non_credible = 0;
  std::size_t total() const { return credible + non_credible; }
  bool operator==(const LabelCounts&) const = default;
};

struct CorpusManifest {
  std::map<Topic, LabelCounts> per_topic;
  std::optional<std::string> date_start;
  std::optional<std::string> date_end;
  std::size_t total = 0;

  /// total == sum of per-topic label counts.
  bool consistent() const;
  /// Credible == non-credible within every topic.
  bool balanced() const;

  bool operator==(const CorpusManifest&) const = default;
};

CorpusManifest build_manifest(const std::vector<Document>& docs);

struct Reject {
  std::size_t index = 0;  // position in the input feed
  std::string source;
  std::string reason;
};

struct IngestOptions {
  bool balance = true;
  std::uint64_t seed = 0;
  int workers = 0;  // 0: OpenMP default
};

struct IngestResult {
  std::vector<Document> documents;  // canonical order: source, date, id
  CorpusManifest manifest;
  std::vector<Reject> rejects;
};

/// Labels articles from the registry and, when balancing, subsamples the
/// majority label of each topic down to the minority count. Unknown sources,
/// unknown topics, bad dates, invalid UTF-8 and empty bodies are rejected
/// without stopping the ingest.
IngestResult ingest(const std::vector<RawArticle>& articles,
                    const SourceRegistry& registry,
                    const IngestOptions& options = {});

/// JSON Lines feed: {"id"?, "source", "topic", "date"?, "text"}.
std::vector<RawArticle> read_feed(std::istream& in, std::string_view origin = "<feed>");
std::vector<RawArticle> load_feed(const std::filesystem::path& path);

/// One JSON object per line: id, source, topic, label, published, body.
void write_corpus(std::ostream& out, const std::vector<Document>& docs);
std::vector<Document> read_corpus(std::istream& in);
void persist(const std::vector<Document>& docs, const std::filesystem::path& path);
std::vector<Document> load_corpus(const std::filesystem::path& path);

void write_manifest(std::ostream& out, const CorpusManifest& m);
CorpusManifest read_manifest(std::istream& in);

void write_rejects(std::ostream& out, const std::vector<Reject>& rejects);

bool is_iso_date(std::string_view s);

}  // namespace mdastyl
