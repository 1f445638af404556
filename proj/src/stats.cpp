#include "mdastyl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include <omp.h>

#include "mdastyl/error.hpp"
#include "mdastyl/util.hpp"

namespace mdastyl {

std::string_view to_string(Band b) {
  switch (b) {
    case Band::kNegligible: return "negligible";
    case Band::kSmall: return "small";
    case Band::kMedium: return "medium";
    case Band::kLarge: return "large";
  }
  return "negligible";
}

std::optional<Band> parse_band(std::string_view s) {
  for (const auto b : {Band::kNegligible, Band::kSmall, Band::kMedium, Band::kLarge}) {
    if (s == to_string(b)) return b;
  }
  return std::nullopt;
}

namespace {

Band band(double magnitude, double small, double medium, double large) {
  if (magnitude >= large) return Band::kLarge;
  if (magnitude >= medium) return Band::kMedium;
  if (magnitude >= small) return Band::kSmall;
  return Band::kNegligible;
}

double sum_sq_dev(std::span<const double> xs, double m) {
  double s = 0.0;
  for (const double x : xs) s += (x - m) * (x - m);
  return s;
}

}  // namespace

Band band_for_d(double d) { return band(std::fabs(d), kSmallD, kMediumD, kLargeD); }
Band band_for_r(double r) { return band(std::fabs(r), kSmallR, kMediumR, kLargeR); }

double mean(std::span<const double> xs) {
  if (xs.empty()) throw UndefinedStatistic("mean of an empty sample");
  double s = 0.0;
  for (const double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_sd(std::span<const double> xs) {
  if (xs.size() < 2) throw UndefinedStatistic("sample SD needs at least two values");
  return std::sqrt(sum_sq_dev(xs, mean(xs)) / static_cast<double>(xs.size() - 1));
}

EffectSize cohens_d(std::span<const double> a, std::span<const double> b, std::string id) {
  if (a.size() < 2 || b.size() < 2) {
    throw UndefinedStatistic("Cohen's d needs two or more values per group" +
                             (id.empty() ? std::string() : " (" + id + ")"));
  }
  EffectSize e;
  e.id = std::move(id);
  e.n_credible = a.size();
  e.n_noncredible = b.size();
  e.mean_credible = mean(a);
  e.mean_noncredible = mean(b);
  const double ssa = sum_sq_dev(a, e.mean_credible);
  const double ssb = sum_sq_dev(b, e.mean_noncredible);
  e.sd_credible = std::sqrt(ssa / static_cast<double>(a.size() - 1));
  e.sd_noncredible = std::sqrt(ssb / static_cast<double>(b.size() - 1));
  const double pooled = std::sqrt((ssa + ssb) / static_cast<double>(a.size() + b.size() - 2));
  const double diff = e.mean_credible - e.mean_noncredible;
  if (pooled == 0.0) {
    if (diff != 0.0) {
      throw UndefinedStatistic("Cohen's d undefined: zero pooled SD with unequal means" +
                               (e.id.empty() ? std::string() : " (" + e.id + ")"));
    }
    e.d = 0.0;
  } else {
    e.d = diff / pooled;
  }
  e.band = band_for_d(e.d);
  return e;
}

double pearson_r(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DataError("pearson_r: samples differ in length");
  if (x.size() < 3) throw UndefinedStatistic("pearson_r needs at least three pairs");
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw UndefinedStatistic("pearson_r undefined: zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

namespace {

struct Columns {
  std::vector<std::vector<double>> values;
  std::vector<bool> varies;
};

Columns columns(const std::vector<FeatureVector>& rows) {
  Columns c;
  c.values.assign(kFeatureCount, std::vector<double>(rows.size()));
  c.varies.assign(kFeatureCount, false);
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    for (std::size_t i = 0; i < rows.size(); ++i) c.values[f][i] = rows[i][f];
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (c.values[f][i] != c.values[f][0]) {
        c.varies[f] = true;
        break;
      }
    }
  }
  return c;
}

std::optional<double> entry(const Columns& c, std::size_t i, std::size_t j) {
  if (!c.varies[i] || !c.varies[j] || c.values[i].size() < 3) return std::nullopt;
  if (i == j) return 1.0;
  try {
    return pearson_r(c.values[i], c.values[j]);
  } catch (const UndefinedStatistic&) {
    return std::nullopt;
  }
}

CorrelationMatrix empty_matrix(std::string corpus) {
  CorrelationMatrix m;
  m.corpus = std::move(corpus);
  m.size = kFeatureCount;
  m.entries.assign(kFeatureCount * kFeatureCount, std::nullopt);
  return m;
}

}  // namespace

CorrelationMatrix correlation_matrix(const std::vector<FeatureVector>& rows, std::string corpus,
                                     int workers) {
  const Columns c = columns(rows);
  CorrelationMatrix m = empty_matrix(std::move(corpus));
  const long n = static_cast<long>(kFeatureCount);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      const auto r = entry(c, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      m.entries[static_cast<std::size_t>(i * n + j)] = r;
      m.entries[static_cast<std::size_t>(j * n + i)] = r;
    }
  }
  return m;
}

CorrelationMatrix correlation_matrix_serial(const std::vector<FeatureVector>& rows,
                                            std::string corpus) {
  const Columns c = columns(rows);
  CorrelationMatrix m = empty_matrix(std::move(corpus));
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    for (std::size_t j = i; j < kFeatureCount; ++j) {
      const auto r = entry(c, i, j);
      m.entries[i * kFeatureCount + j] = r;
      m.entries[j * kFeatureCount + i] = r;
    }
  }
  return m;
}

void sort_effects(std::vector<EffectSize>& effects) {
  std::stable_sort(effects.begin(), effects.end(), [](const EffectSize& a, const EffectSize& b) {
    const double da = std::fabs(a.d);
    const double db = std::fabs(b.d);
    if (da != db) return da > db;
    return a.id < b.id;
  });
}

std::vector<EffectSize> notable(const std::vector<EffectSize>& effects, double threshold) {
  std::vector<EffectSize> out;
  for (const auto& e : effects) {
    if (std::fabs(e.d) >= threshold) out.push_back(e);
  }
  return out;
}

Comparison compare_corpora(const CorpusSample& credible, const CorpusSample& noncredible,
                           int workers) {
  if (credible.inventory_version != noncredible.inventory_version) {
    throw DataError("cannot compare corpora with different feature inventories (" +
                    credible.inventory_version + " vs " + noncredible.inventory_version + ")");
  }
  if (credible.z.empty() || noncredible.z.empty()) {
    throw DataError("cannot compare an empty corpus");
  }
  Comparison out;
  std::vector<double> a(credible.z.size());
  std::vector<double> b(noncredible.z.size());
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = credible.z[i][f];
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = noncredible.z[i][f];
    try {
      out.features.push_back(cohens_d(a, b, std::string(kInventory[f].code)));
    } catch (const UndefinedStatistic&) {
      if (a.size() < 2 || b.size() < 2) throw;
    }
  }
  sort_effects(out.features);
  a.resize(credible.dimensions.size());
  b.resize(noncredible.dimensions.size());
  for (std::size_t d = 0; d < kDimensionCount; ++d) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = credible.dimensions[i][d];
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = noncredible.dimensions[i][d];
    try {
      out.dimensions.push_back(cohens_d(a, b, dimension_name(d)));
    } catch (const UndefinedStatistic&) {
      if (a.size() < 2 || b.size() < 2) throw;
    }
  }
  out.credible = correlation_matrix(credible.z, credible.name, workers);
  out.noncredible = correlation_matrix(noncredible.z, noncredible.name, workers);
  return out;
}

namespace {

constexpr std::string_view kEffectHeader =
    "feature\td_signed\td_abs\tband\tmean_credible\tmean_noncredible\tsd_credible\t"
    "sd_noncredible\tn_credible\tn_noncredible";

std::size_t parse_count(const std::string& s, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') {
    throw FormatError("effects line " + std::to_string(line) + ": bad count '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

void write_effects(std::ostream& out, const std::vector<EffectSize>& effects) {
  out << kEffectHeader << '\n';
  for (const auto& e : effects) {
    out << e.id << '\t' << format_exact(e.d) << '\t' << format_exact(std::fabs(e.d)) << '\t'
        << to_string(e.band) << '\t' << format_exact(e.mean_credible) << '\t'
        << format_exact(e.mean_noncredible) << '\t' << format_exact(e.sd_credible) << '\t'
        << format_exact(e.sd_noncredible) << '\t' << e.n_credible << '\t' << e.n_noncredible
        << '\n';
  }
}

std::vector<EffectSize> read_effects(std::istream& in) {
  std::vector<EffectSize> out;
  std::string line;
  std::size_t n = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kEffectHeader) throw FormatError("effects file: unexpected header");
      header = true;
      continue;
    }
    const auto f = split(line, '\t');
    if (f.size() != 10) throw FormatError("effects line " + std::to_string(n) + ": expected 10 fields");
    EffectSize e;
    e.id = f[0];
    e.d = parse_double(f[1], "d_signed");
    const auto band = parse_band(f[3]);
    if (!band) throw FormatError("effects line " + std::to_string(n) + ": bad band '" + f[3] + "'");
    e.band = *band;
    e.mean_credible = parse_double(f[4], "mean_credible");
    e.mean_noncredible = parse_double(f[5], "mean_noncredible");
    e.sd_credible = parse_double(f[6], "sd_credible");
    e.sd_noncredible = parse_double(f[7], "sd_noncredible");
    e.n_credible = parse_count(f[8], n);
    e.n_noncredible = parse_count(f[9], n);
    out.push_back(std::move(e));
  }
  if (!header) throw FormatError("effects file: missing header");
  return out;
}

void write_correlations(std::ostream& out, const CorrelationMatrix& m) {
  out << "feature";
  for (std::size_t j = 0; j < m.size; ++j) out << '\t' << kInventory[j].code;
  out << '\n';
  for (std::size_t i = 0; i < m.size; ++i) {
    out << kInventory[i].code;
    for (std::size_t j = 0; j < m.size; ++j) {
      out << '\t';
      if (const auto& r = m.at(i, j)) out << format_exact(*r);
    }
    out << '\n';
  }
}

}  // namespace mdastyl
