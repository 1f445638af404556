#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdastyl/corpus.hpp"
#include "mdastyl/mda.hpp"
#include "mdastyl/pos_tagger.hpp"
#include "mdastyl/rules.hpp"

namespace mdastyl {

/// Versions of everything that shapes a score.
struct VersionStamp {
  std::string inventory;
  std::string rules;
  std::string norms;
  std::string model;

  /// "inventory=... rules=... norms=... model=..."
  std::string str() const;
  bool operator==(const VersionStamp&) const = default;
};

/// Throws FormatError unless `s` has the str() layout.
VersionStamp parse_stamp(std::string_view s);

struct PipelineSettings {
  const TaggerModel* model = nullptr;
  const RuleTable* rules = nullptr;
  const ReferenceData* reference = nullptr;
  std::size_t window_size = kDefaultWindowSize;
  double salience = kSalienceThreshold;
  int workers = 0;  // 0: OpenMP default
};

VersionStamp stamp(const PipelineSettings& settings);

struct DocumentResult {
  std::string id;
  Topic topic = Topic::kOther;
  Label label = Label::kCredible;
  bool truncated = false;
  bool is_short = false;
  FeatureCounts counts;
  FeatureVector rates{};
  FeatureVector z{};
  DimensionScores scores;
};

/// tokenize -> window -> POS tag -> feature tag -> normalize -> standardize
/// -> dimension scores. Failures surface as DataError naming the stage and
/// the document id.
DocumentResult score_document(const Document& doc, const PipelineSettings& settings);

/// Same results as score_documents_serial, in input order.
std::vector<DocumentResult> score_documents(const std::vector<Document>& docs,
                                            const PipelineSettings& settings);
std::vector<DocumentResult> score_documents_serial(const std::vector<Document>& docs,
                                                   const PipelineSettings& settings);

}  // namespace mdastyl
