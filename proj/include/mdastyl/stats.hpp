#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdastyl/mda.hpp"

namespace mdastyl {

enum class Band { kNegligible, kSmall, kMedium, kLarge };

std::string_view to_string(Band b);
std::optional<Band> parse_band(std::string_view s);

inline constexpr double kSmallD = 0.20;
inline constexpr double kMediumD = 0.50;
inline constexpr double kLargeD = 0.80;
inline constexpr double kSmallR = 0.10;
inline constexpr double kMediumR = 0.30;
inline constexpr double kLargeR = 0.50;
inline constexpr double kNotableThreshold = 0.30;

/// Band of |d|; thresholds are inclusive.
Band band_for_d(double d);
/// Band of |r|; thresholds are inclusive.
Band band_for_r(double r);

struct EffectSize {
  std::string id;  // feature code or dimension name
  double d = 0.0;  // signed, credible minus non-credible
  Band band = Band::kNegligible;
  double mean_credible = 0.0;
  double mean_noncredible = 0.0;
  double sd_credible = 0.0;
  double sd_noncredible = 0.0;
  std::size_t n_credible = 0;
  std::size_t n_noncredible = 0;

  bool operator==(const EffectSize&) const = default;
};

double mean(std::span<const double> xs);
/// Sample SD (n - 1). Throws UndefinedStatistic for fewer than two values.
double sample_sd(std::span<const double> xs);

/// Pooled-SD standardized mean difference of A over B. Both samples need two
/// or more values. A zero pooled SD gives d = 0 for equal means and throws
/// UndefinedStatistic otherwise.
EffectSize cohens_d(std::span<const double> a, std::span<const double> b,
                    std::string id = {});

/// Product-moment correlation. Needs equal lengths of at least three and
/// positive variance in both; throws UndefinedStatistic otherwise.
double pearson_r(std::span<const double> x, std::span<const double> y);

/// Symmetric feature x feature matrix; undefined entries stay empty.
struct CorrelationMatrix {
  std::string corpus;
  std::size_t size = 0;
  std::vector<std::optional<double>> entries;  // row-major size x size

  const std::optional<double>& at(std::size_t i, std::size_t j) const {
    return entries[i * size + j];
  }
  bool operator==(const CorrelationMatrix&) const = default;
};

/// Columns are features; OpenMP over column pairs.
CorrelationMatrix correlation_matrix(const std::vector<FeatureVector>& rows, std::string corpus,
                                     int workers = 0);
CorrelationMatrix correlation_matrix_serial(const std::vector<FeatureVector>& rows,
                                            std::string corpus);

/// Per-document z vectors and dimension scores for one labeled corpus.
struct CorpusSample {
  std::string name;
  std::string inventory_version;
  std::vector<FeatureVector> z;
  std::vector<DimensionVector> dimensions;
};

struct Comparison {
  std::vector<EffectSize> features;    // sorted by |d| descending, then id
  std::vector<EffectSize> dimensions;  // D1..D6 order
  CorrelationMatrix credible;
  CorrelationMatrix noncredible;
};

/// |d| descending; equal |d| ordered by id.
void sort_effects(std::vector<EffectSize>& effects);

/// Effects with |d| >= threshold, order kept.
std::vector<EffectSize> notable(const std::vector<EffectSize>& effects,
                                double threshold = kNotableThreshold);

/// Throws DataError on an inventory version mismatch. Features whose effect
/// is undefined (zero pooled SD, unequal means) are left out.
Comparison compare_corpora(const CorpusSample& credible, const CorpusSample& noncredible,
                           int workers = 0);

/// Tab-separated: feature, d_signed, d_abs, band, mean_credible,
/// mean_noncredible, sd_credible, sd_noncredible, n_credible, n_noncredible.
/// Values are written round-trip exact.
void write_effects(std::ostream& out, const std::vector<EffectSize>& effects);
std::vector<EffectSize> read_effects(std::istream& in);

/// Header row of codes, then one row per feature; blanks mark undefined r.
void write_correlations(std::ostream& out, const CorrelationMatrix& m);

}  // namespace mdastyl
