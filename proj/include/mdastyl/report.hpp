#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mdastyl/corpus.hpp"
#include "mdastyl/mda.hpp"
#include "mdastyl/pipeline.hpp"
#include "mdastyl/stats.hpp"

namespace mdastyl {

struct ReportSpec {
  std::vector<Topic> topics;                           // empty: every topic with data
  std::vector<std::size_t> dimensions{0, 1, 2, 3, 4};  // D1-D5
  double threshold = kNotableThreshold;
  bool table_text = true;
  bool delimited = true;
  bool figure = true;

  /// Throws ConfigError for a negative threshold, no output format, or a
  /// dimension index out of range.
  void validate() const;
  bool wants(Topic t) const;
};

/// D1-D5, plus D6 when asked.
std::vector<std::size_t> report_dimensions(bool include_d6);

/// Plain-text table: Feature | Cohen's d | Credible Mean | Non-Credible Mean.
/// Rows are the notable effects by |d| descending, two decimals, |d| printed.
std::string render_feature_table(const std::vector<EffectSize>& effects, const ReportSpec& spec,
                                 const std::string& title);

/// Same rows, tab-separated, with the feature code in its own column.
std::string render_feature_table_tsv(const std::vector<EffectSize>& effects,
                                     const ReportSpec& spec);

/// Mean dimension scores of both labels for one topic.
struct TopicProfile {
  Topic topic = Topic::kOther;
  std::size_t n_credible = 0;
  std::size_t n_noncredible = 0;
  DimensionVector credible{};
  DimensionVector noncredible{};
  DimensionVector sd_credible{};
  DimensionVector sd_noncredible{};
  std::string type_credible;
  std::string type_noncredible;

  bool operator==(const TopicProfile&) const = default;
};

/// Grouped bar chart as standalone SVG: topics alphabetical, then the spec's
/// dimensions, credible bar before non-credible. Pure function of inputs.
std::string render_dimension_chart(const std::vector<TopicProfile>& profiles,
                                   const ReportSpec& spec);

/// Saved-profile format: one row per topic and label.
void write_profiles(std::ostream& out, const std::vector<TopicProfile>& profiles);
std::vector<TopicProfile> read_profiles(std::istream& in);

struct TopicSection {
  Topic topic = Topic::kOther;
  VersionStamp stamp;
  std::vector<EffectSize> features;
  std::vector<EffectSize> dimensions;
};

struct SummaryInput {
  std::string run_id;
  VersionStamp stamp;
  CorpusManifest manifest;
  std::uint64_t seed = 0;
  std::size_t window_size = kDefaultWindowSize;
  double salience = kSalienceThreshold;
  VersionStamp profile_stamp;
  std::vector<TopicProfile> profiles;
  std::vector<TopicSection> sections;
  std::string chart_file;
  std::vector<std::string> notes;
};

/// One text document with the reproducibility block, manifest, chart
/// reference and every topic table. Throws DataError when any section or
/// the profiles carry a different version stamp than the run.
std::string render_summary(const SummaryInput& input, const ReportSpec& spec);

}  // namespace mdastyl
