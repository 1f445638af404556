#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdastyl/features.hpp"

namespace mdastyl {

inline constexpr std::size_t kDimensionCount = 6;
inline constexpr double kSalienceThreshold = 1.95;

/// "D1" ... "D6".
std::string dimension_name(std::size_t d);

using FeatureVector = std::array<double, kFeatureCount>;
using DimensionVector = std::array<double, kDimensionCount>;

struct Norm {
  double mean = 0.0;
  double sd = 1.0;
};

struct ReferenceStats {
  std::map<std::string, Norm, std::less<>> norms;

  /// Throws DataError naming the feature when absent.
  const Norm& at(std::string_view code) const;
};

struct DimensionLoadings {
  std::array<std::vector<std::size_t>, kDimensionCount> positive;
  std::array<std::vector<std::size_t>, kDimensionCount> negative;
};

struct Centroid {
  std::string label;
  std::vector<double> scores;  // one per CentroidTable::dims entry
};

struct CentroidTable {
  std::vector<std::size_t> dims;
  std::vector<Centroid> centroids;
};

struct ReferenceData {
  std::string version;
  ReferenceStats stats;
  DimensionLoadings loadings;
  CentroidTable centroids;
};

/// Throws ConfigError on unknown feature codes, a feature on both sides of
/// a dimension, a non-positive SD or malformed lines.
ReferenceData parse_reference(std::istream& in);
ReferenceData load_reference(const std::filesystem::path& path);
std::string_view default_reference_source();
const ReferenceData& default_reference();

/// 100 x count / window tokens; AWL and TTR pass through.
/// Throws DataError for an empty window.
FeatureVector normalize(const FeatureCounts& counts);

/// (rate - mean) / sd per feature.
FeatureVector standardize(const FeatureVector& rates, const ReferenceStats& ref);

/// Sum of positive-side z minus sum of negative-side z.
DimensionVector score_dimensions(const FeatureVector& z, const DimensionLoadings& loadings);

/// Features with |z| >= threshold, in inventory order.
std::vector<std::pair<std::size_t, double>> salient_features(const FeatureVector& z,
                                                             double threshold = kSalienceThreshold);

/// Nearest centroid by Euclidean distance over the table's dimensions;
/// ties go to the lexicographically smaller label.
std::string assign_text_type(const DimensionVector& scores, const CentroidTable& centroids);

struct DimensionScores {
  std::string id;
  DimensionVector scores{};
  std::string text_type;
  std::vector<std::pair<std::size_t, double>> salient;
};

DimensionScores dimension_scores(const FeatureVector& z, const ReferenceData& ref,
                                 double threshold = kSalienceThreshold);

struct CorpusProfile {
  std::size_t documents = 0;
  DimensionVector dimension_mean{};
  DimensionVector dimension_sd{};
  FeatureVector feature_mean{};
  FeatureVector feature_sd{};
  std::string text_type;  // of the mean dimension vector
};

/// Means and sample SDs (n - 1) over documents, accumulated in input order.
/// Throws UndefinedStatistic for fewer than two documents.
CorpusProfile corpus_profile(const std::vector<DimensionScores>& scores,
                             const std::vector<FeatureVector>& z, const CentroidTable& centroids);

}  // namespace mdastyl
