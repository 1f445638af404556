#include "mdastyl/mda.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mdastyl/error.hpp"
#include "mdastyl/util.hpp"

namespace mdastyl {

std::string dimension_name(std::size_t d) { return "D" + std::to_string(d + 1); }

const Norm& ReferenceStats::at(std::string_view code) const {
  const auto it = norms.find(code);
  if (it == norms.end()) throw DataError("no reference norm for feature " + std::string(code));
  return it->second;
}

namespace {

[[noreturn]] void bad(std::size_t line, const std::string& what) {
  throw ConfigError("reference data line " + std::to_string(line) + ": " + what);
}

std::size_t parse_dimension(std::string_view s, std::size_t line) {
  for (std::size_t d = 0; d < kDimensionCount; ++d) {
    if (s == dimension_name(d)) return d;
  }
  bad(line, "unknown dimension '" + std::string(s) + "'");
}

std::size_t parse_feature(std::string_view s, std::size_t line) {
  const auto f = feature_index(s);
  if (!f) bad(line, "unknown feature '" + std::string(s) + "'");
  return *f;
}

double number(std::string_view s, std::size_t line) {
  try {
    return parse_double(s, "reference value");
  } catch (const FormatError&) {
    bad(line, "bad number '" + std::string(s) + "'");
  }
}

}  // namespace

ReferenceData parse_reference(std::istream& in) {
  ReferenceData ref;
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    std::vector<std::string> args;
    for (std::string a; fields >> a;) args.push_back(a);
    if (kind == "version") {
      if (args.size() != 1) bad(n, "version takes one name");
      ref.version = args[0];
    } else if (kind == "norm") {
      if (args.size() != 3) bad(n, "norm takes CODE MEAN SD");
      const auto f = parse_feature(args[0], n);
      const Norm norm{number(args[1], n), number(args[2], n)};
      if (!(norm.sd > 0) || !std::isfinite(norm.sd) || !std::isfinite(norm.mean)) {
        bad(n, "sd must be positive for " + args[0]);
      }
      if (!ref.stats.norms.emplace(std::string(kInventory[f].code), norm).second) {
        bad(n, "duplicate norm for " + args[0]);
      }
    } else if (kind == "load") {
      if (args.size() != 3 || (args[1] != "+" && args[1] != "-")) bad(n, "load takes DIMENSION +|- CODE");
      const auto d = parse_dimension(args[0], n);
      const auto f = parse_feature(args[2], n);
      auto& side = args[1] == "+" ? ref.loadings.positive[d] : ref.loadings.negative[d];
      const auto& other = args[1] == "+" ? ref.loadings.negative[d] : ref.loadings.positive[d];
      if (std::find(other.begin(), other.end(), f) != other.end()) {
        bad(n, args[2] + " loads on both sides of " + args[0]);
      }
      if (std::find(side.begin(), side.end(), f) != side.end()) bad(n, "duplicate loading " + args[2]);
      side.push_back(f);
    } else if (kind == "dims") {
      if (args.empty()) bad(n, "dims needs at least one dimension");
      ref.centroids.dims.clear();
      for (const auto& a : args) ref.centroids.dims.push_back(parse_dimension(a, n));
    } else if (kind == "centroid") {
      const auto bar = line.find('|');
      if (bar == std::string::npos) bad(n, "centroid needs '| LABEL'");
      Centroid c;
      c.label = trim(std::string_view(line).substr(bar + 1));
      std::istringstream values(line.substr(kind.size(), bar - kind.size()));
      for (std::string v; values >> v;) c.scores.push_back(number(v, n));
      if (c.label.empty()) bad(n, "centroid without a label");
      if (c.scores.size() != ref.centroids.dims.size()) bad(n, "centroid width does not match dims");
      ref.centroids.centroids.push_back(std::move(c));
    } else {
      bad(n, "unknown entry '" + kind + "'");
    }
  }
  for (std::size_t d = 0; d < kDimensionCount; ++d) {
    for (const auto* side : {&ref.loadings.positive[d], &ref.loadings.negative[d]}) {
      for (const auto f : *side) {
        if (!ref.stats.norms.contains(kInventory[f].code)) {
          throw ConfigError("reference data: " + dimension_name(d) + " loads " +
                            std::string(kInventory[f].code) + " which has no norm");
        }
      }
    }
  }
  if (ref.version.empty()) throw ConfigError("reference data: missing version line");
  return ref;
}

ReferenceData load_reference(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open reference data: " + path.string());
  return parse_reference(in);
}

const ReferenceData& default_reference() {
  static const ReferenceData ref = [] {
    std::istringstream in{std::string(default_reference_source())};
    return parse_reference(in);
  }();
  return ref;
}

FeatureVector normalize(const FeatureCounts& counts) {
  if (counts.window_tokens == 0) throw DataError("cannot normalize an empty window");
  FeatureVector rates{};
  const double tokens = static_cast<double>(counts.window_tokens);
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    rates[f] = 100.0 * static_cast<double>(counts.counts[f]) / tokens;
  }
  rates[kTTR] = static_cast<double>(counts.ttr);
  rates[kAWL] = counts.awl;
  return rates;
}

FeatureVector standardize(const FeatureVector& rates, const ReferenceStats& ref) {
  FeatureVector z{};
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    const Norm& n = ref.at(kInventory[f].code);
    z[f] = (rates[f] - n.mean) / n.sd;
  }
  return z;
}

DimensionVector score_dimensions(const FeatureVector& z, const DimensionLoadings& loadings) {
  DimensionVector out{};
  for (std::size_t d = 0; d < kDimensionCount; ++d) {
    double pos = 0.0;
    double neg = 0.0;
    for (const auto f : loadings.positive[d]) pos += z.at(f);
    for (const auto f : loadings.negative[d]) neg += z.at(f);
    out[d] = pos - neg;
  }
  return out;
}

std::vector<std::pair<std::size_t, double>> salient_features(const FeatureVector& z, double threshold) {
  std::vector<std::pair<std::size_t, double>> out;
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    if (std::fabs(z[f]) >= threshold) out.emplace_back(f, z[f]);
  }
  return out;
}

std::string assign_text_type(const DimensionVector& scores, const CentroidTable& table) {
  const Centroid* best = nullptr;
  double best_distance = 0.0;
  for (const auto& c : table.centroids) {
    double sq = 0.0;
    for (std::size_t k = 0; k < table.dims.size(); ++k) {
      const double diff = scores[table.dims[k]] - c.scores[k];
      sq += diff * diff;
    }
    if (best == nullptr || sq < best_distance || (sq == best_distance && c.label < best->label)) {
      best = &c;
      best_distance = sq;
    }
  }
  return best == nullptr ? std::string() : best->label;
}

DimensionScores dimension_scores(const FeatureVector& z, const ReferenceData& ref, double threshold) {
  DimensionScores out;
  out.scores = score_dimensions(z, ref.loadings);
  out.text_type = assign_text_type(out.scores, ref.centroids);
  out.salient = salient_features(z, threshold);
  return out;
}

namespace {

template <std::size_t N>
void mean_sd(const std::vector<std::array<double, N>>& rows, std::array<double, N>& mean,
             std::array<double, N>& sd) {
  const double n = static_cast<double>(rows.size());
  mean.fill(0.0);
  sd.fill(0.0);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < N; ++i) mean[i] += r[i];
  }
  for (std::size_t i = 0; i < N; ++i) mean[i] /= n;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < N; ++i) sd[i] += (r[i] - mean[i]) * (r[i] - mean[i]);
  }
  for (std::size_t i = 0; i < N; ++i) sd[i] = std::sqrt(sd[i] / (n - 1.0));
}

}  // namespace

CorpusProfile corpus_profile(const std::vector<DimensionScores>& scores,
                             const std::vector<FeatureVector>& z, const CentroidTable& centroids) {
  if (scores.size() != z.size()) throw DataError("corpus profile: scores and z vectors differ in length");
  if (scores.size() < 2) {
    throw UndefinedStatistic("corpus profile needs at least two documents (got " +
                             std::to_string(scores.size()) + ")");
  }
  CorpusProfile p;
  p.documents = scores.size();
  std::vector<DimensionVector> dims;
  dims.reserve(scores.size());
  for (const auto& s : scores) dims.push_back(s.scores);
  mean_sd(dims, p.dimension_mean, p.dimension_sd);
  mean_sd(z, p.feature_mean, p.feature_sd);
  p.text_type = assign_text_type(p.dimension_mean, centroids);
  return p;
}

}  // namespace mdastyl
