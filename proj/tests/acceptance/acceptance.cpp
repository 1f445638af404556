// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "mdastyl/cli.hpp"
#include "mdastyl/error.hpp"
#include "mdastyl/mda.hpp"
#include "mdastyl/stats.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/paths.hpp"

using namespace mdastyl;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

int run(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "mda-styl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o;
  std::ostringstream e;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str() + e.str();
  return code;
}

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[fs::relative(e.path(), root).string()] = s.str();
  }
  return files;
}

fs::path treebank() { return testing::data_dir() / "treebank" / "sample.txt"; }
fs::path fixture(const char* name) { return testing::data_dir() / "fixtures" / name; }

Verdict fixture_suite() {
  const auto t0 = Clock::now();
  const auto fixtures = testing::load_feature_fixtures(fixture("feature_fixtures.txt").string());
  std::map<std::string, std::pair<int, int>> per_code;
  std::size_t passed = 0;
  for (const auto& f : fixtures) {
    passed += testing::run_fixture(f).passed;
    auto& [pos, neg] = per_code[f.code];
    (f.expected > 0 ? pos : neg) += 1;
  }
  const double secs = seconds_since(t0);
  std::size_t thin = 0;
  for (const auto& f : kInventory) {
    const auto it = per_code.find(std::string(f.code));
    if (it == per_code.end() || it->second.first < 3 || it->second.second < 2) ++thin;
  }
  Verdict v;
  v.pass = fixtures.size() >= 300 && passed == fixtures.size() && thin == 0 && secs < 5.0;
  v.detail = std::to_string(passed) + "/" + std::to_string(fixtures.size()) + " fixtures pass, " +
             std::to_string(thin) + " features under 3+/2-, " + fixed(secs) + " s";
  return v;
}

Verdict tagger_accuracy() {
  const auto t0 = Clock::now();
  TrainOptions o;
  o.corpus_name = "sample";
  const auto model = train(load_treebank(treebank()), o);
  const double secs = seconds_since(t0);
  const double acc = model.metadata.heldout_accuracy;
  Verdict v;
  v.pass = acc >= 0.90 && acc >= 0.93 && secs < 120.0;
  v.detail = "held-out accuracy " + fixed(acc, 4) + " (floor 0.93), training " + fixed(secs) + " s";
  return v;
}

Verdict standardization_identity() {
  const auto& ref = default_reference();
  FeatureVector rates{};
  for (std::size_t f = 0; f < kFeatureCount; ++f) rates[f] = ref.stats.at(kInventory[f].code).mean;
  const auto z = standardize(rates, ref.stats);
  const auto scores = dimension_scores(z, ref).scores;
  double worst = 0;
  for (const double x : z) worst = std::max(worst, std::fabs(x));
  for (const double x : scores) worst = std::max(worst, std::fabs(x));
  Verdict v;
  v.pass = worst <= 1e-9;
  v.detail = "max |z|, |D| = " + std::to_string(worst);
  return v;
}

Verdict dimension_linearity() {
  const auto& l = default_reference().loadings;
  std::mt19937_64 rng(20240601);
  std::normal_distribution<double> nd(0.0, 2.0);
  std::uniform_int_distribution<std::size_t> pick(0, kFeatureCount - 1);
  std::size_t additivity_failures = 0;
  std::size_t attribution_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    FeatureVector a{};
    FeatureVector b{};
    FeatureVector ab{};
    double scale = 0;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      a[f] = nd(rng);
      b[f] = nd(rng);
      ab[f] = a[f] + b[f];
      scale += std::fabs(a[f]) + std::fabs(b[f]);
    }
    const auto sa = score_dimensions(a, l);
    const auto sb = score_dimensions(b, l);
    const auto sab = score_dimensions(ab, l);
    for (std::size_t d = 0; d < kDimensionCount; ++d) {
      if (std::fabs(sab[d] - (sa[d] + sb[d])) > 1e-12 * scale) ++additivity_failures;
    }
    const auto f = pick(rng);
    auto moved = a;
    moved[f] += 1.0 + std::fabs(nd(rng));
    const auto sm = score_dimensions(moved, l);
    for (std::size_t d = 0; d < kDimensionCount; ++d) {
      const bool contains = std::count(l.positive[d].begin(), l.positive[d].end(), f) +
                                std::count(l.negative[d].begin(), l.negative[d].end(), f) >
                            0;
      if (contains != (sm[d] != sa[d])) ++attribution_failures;
    }
  }
  Verdict v;
  v.pass = additivity_failures == 0 && attribution_failures == 0;
  v.detail = "1000 vectors, " + std::to_string(additivity_failures) + " additivity and " +
             std::to_string(attribution_failures) + " attribution failures";
  return v;
}

Verdict statistics_oracle() {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(2, 40);
  std::uniform_real_distribution<double> loc(-5.0, 5.0);
  std::uniform_real_distribution<double> spread(0.1, 10.0);
  double worst_d = 0;
  double worst_r = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::normal_distribution<double> ga(loc(rng), spread(rng));
    std::normal_distribution<double> gb(loc(rng), spread(rng));
    std::vector<double> a(size(rng));
    std::vector<double> b(size(rng));
    for (auto& x : a) x = ga(rng);
    for (auto& x : b) x = gb(rng);
    worst_d = std::max(worst_d, std::fabs(cohens_d(a, b).d - testing::oracle_d(a, b)));
    const std::size_t n = std::max<std::size_t>(3, a.size());
    std::vector<double> x(n);
    std::vector<double> y(n);
    const double rho = loc(rng) / 5.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = ga(rng);
      y[i] = rho * x[i] + gb(rng);
    }
    worst_r = std::max(worst_r, std::fabs(pearson_r(x, y) - testing::oracle_r(x, y)));
  }
  const auto below = [](double t) { return std::nextafter(t, 0.0); };
  bool bands = true;
  for (const double sign : {1.0, -1.0}) {
    bands = bands && band_for_d(sign * 0.20) == Band::kSmall && band_for_d(sign * below(0.20)) == Band::kNegligible &&
            band_for_d(sign * 0.50) == Band::kMedium && band_for_d(sign * below(0.50)) == Band::kSmall &&
            band_for_d(sign * 0.80) == Band::kLarge && band_for_d(sign * below(0.80)) == Band::kMedium;
    bands = bands && band_for_r(sign * 0.10) == Band::kSmall && band_for_r(sign * below(0.10)) == Band::kNegligible &&
            band_for_r(sign * 0.30) == Band::kMedium && band_for_r(sign * below(0.30)) == Band::kSmall &&
            band_for_r(sign * 0.50) == Band::kLarge && band_for_r(sign * below(0.50)) == Band::kMedium;
  }
  Verdict v;
  v.pass = worst_d <= 1e-12 && worst_r <= 1e-12 && bands;
  std::ostringstream s;
  s << "10000 pairs, max |d - oracle| " << worst_d << ", max |r - oracle| " << worst_r
    << ", band boundaries " << (bands ? "exact" : "wrong");
  v.detail = s.str();
  return v;
}

Verdict salience() {
  std::size_t failures = 0;
  FeatureVector z{};
  z[0] = kSalienceThreshold;
  z[1] = -kSalienceThreshold;
  z[2] = std::nextafter(kSalienceThreshold, 0.0);
  z[3] = -std::nextafter(kSalienceThreshold, 0.0);
  z[4] = 5.0;
  auto s = salient_features(z);
  std::vector<std::size_t> got;
  for (const auto& [f, _] : s) got.push_back(f);
  std::sort(got.begin(), got.end());
  if (got != std::vector<std::size_t>{0, 1, 4}) ++failures;

  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd(0.0, 1.5);
  for (int trial = 0; trial < 1000; ++trial) {
    for (auto& x : z) x = nd(rng);
    std::vector<std::size_t> expected;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      if (std::fabs(z[f]) >= 1.95) expected.push_back(f);
    }
    got.clear();
    for (const auto& [f, _] : salient_features(z)) got.push_back(f);
    std::sort(got.begin(), got.end());
    if (got != expected) ++failures;
  }
  Verdict v;
  v.pass = failures == 0 && kSalienceThreshold == 1.95;
  v.detail = "boundary vector plus 1000 random vectors, " + std::to_string(failures) + " mismatches";
  return v;
}

Verdict text_types() {
  const auto& t = default_reference().centroids;
  const auto vec = [&](const Centroid& c) {
    DimensionVector v{};
    for (std::size_t k = 0; k < t.dims.size(); ++k) v[t.dims[k]] = c.scores[k];
    return v;
  };
  double min_dist = INFINITY;
  for (std::size_t i = 0; i < t.centroids.size(); ++i) {
    for (std::size_t j = i + 1; j < t.centroids.size(); ++j) {
      double s = 0;
      for (std::size_t k = 0; k < t.dims.size(); ++k) {
        const double diff = t.centroids[i].scores[k] - t.centroids[j].scores[k];
        s += diff * diff;
      }
      min_dist = std::min(min_dist, std::sqrt(s));
    }
  }
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  std::size_t failures = 0;
  std::size_t checks = 0;
  for (const auto& c : t.centroids) {
    const auto centre = vec(c);
    failures += assign_text_type(centre, t) != c.label;
    ++checks;
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<double> dir(t.dims.size());
      double norm = 0;
      for (auto& x : dir) {
        x = nd(rng);
        norm += x * x;
      }
      norm = std::sqrt(norm);
      const double radius = 0.499 * min_dist * ud(rng);
      auto p = centre;
      for (std::size_t k = 0; k < t.dims.size(); ++k) p[t.dims[k]] += radius * dir[k] / norm;
      failures += assign_text_type(p, t) != c.label;
      ++checks;
    }
  }
  Verdict v;
  v.pass = failures == 0 && !t.centroids.empty();
  v.detail = std::to_string(t.centroids.size()) + " centroids, " + std::to_string(checks) +
             " points within half the minimum distance " + fixed(min_dist) + ", " + std::to_string(failures) +
             " relabeled";
  return v;
}

Verdict end_to_end() {
  const auto dir = testing::scratch_dir("acceptance-e2e");
  const auto model = dir / "model.txt";
  Verdict v;
  std::string log;
  if (run({"train-tagger", "--treebank", treebank().string(), "--model", model.string()}, &log) != kExitOk) {
    return {false, "train-tagger failed: " + log};
  }
  const std::vector<std::string> common{"--registry", fixture("registry.txt").string(),
                                        "--input", fixture("differentiation_feed.jsonl").string(),
                                        "--model", model.string(), "--output-dir", dir.string(), "--run-id", "e2e"};
  auto cmd = [&](const char* name) {
    std::vector<std::string> args{name};
    args.insert(args.end(), common.begin(), common.end());
    return run(args, &log);
  };
  if (cmd("ingest") != kExitOk) return {false, "ingest failed: " + log};
  const auto t0 = Clock::now();
  if (cmd("analyze") != kExitOk) return {false, "analyze failed: " + log};
  const double secs = seconds_since(t0);
  const auto first = tree(dir / "e2e");
  if (cmd("analyze") != kExitOk) return {false, "second analyze failed: " + log};
  const bool identical = tree(dir / "e2e") == first;

  const auto it = first.find("comparison_economy.tsv");
  if (it == first.end()) return {false, "no economy comparison written"};
  std::istringstream in(it->second);
  std::vector<EffectSize> features;
  for (auto& e : read_effects(in)) {
    if (feature_index(e.id)) features.push_back(std::move(e));
  }
  sort_effects(features);
  const auto manifest = first.at("manifest.tsv");
  bool pubv = false;
  bool vbd = false;
  std::string top;
  for (std::size_t i = 0; i < std::min<std::size_t>(3, features.size()); ++i) {
    const auto& e = features[i];
    const bool strong = e.band == Band::kMedium || e.band == Band::kLarge;
    pubv = pubv || (e.id == "PUBV" && strong);
    vbd = vbd || (e.id == "VBD" && strong);
    top += (i ? ", " : "") + e.id + " " + fixed(e.d, 2) + " " + std::string(to_string(e.band));
  }
  v.pass = pubv && vbd && secs < 60.0 && identical && features.size() > 3 &&
           features.front().n_credible == 50 && features.front().n_noncredible == 50;
  v.detail = "top 3: " + top + "; analyze " + fixed(secs) + " s; rerun " + (identical ? "identical" : "differs");
  return v;
}

bool balanced_arithmetic(const CorpusManifest& m) {
  std::size_t per_label = 0;
  for (const auto& [t, c] : m.per_topic) {
    if (c.credible != c.non_credible) return false;
    per_label += c.credible;
  }
  return m.consistent() && m.balanced() && m.total == 2 * per_label;
}

Verdict ingest_balance() {
  const auto registry = load_registry(fixture("registry.txt"));
  std::size_t manifests = 0;
  std::size_t failures = 0;
  for (const char* feed : {"mixed_feed.jsonl", "differentiation_feed.jsonl"}) {
    for (const std::uint64_t seed : {0, 1, 2}) {
      IngestOptions o;
      o.seed = seed;
      ++manifests;
      failures += !balanced_arithmetic(ingest(load_feed(fixture(feed)), registry, o).manifest);
    }
  }
  std::vector<std::string> sources;
  for (const auto& e : registry.entries()) sources.push_back(e.name);
  sources.push_back("Unlisted Daily");
  const std::vector<std::string> topics{"economy", "entertainment", "health", "science", "sports", "weather"};
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> count(0, 60);
    std::vector<RawArticle> feed(count(rng));
    for (std::size_t i = 0; i < feed.size(); ++i) {
      auto& a = feed[i];
      a.id = "r" + std::to_string(trial) + "-" + std::to_string(i);
      a.source = sources[rng() % sources.size()];
      a.topic = topics[rng() % topics.size()];
      a.date = "2017-0" + std::to_string(1 + rng() % 9) + "-1" + std::to_string(rng() % 10);
      a.text = (rng() % 20 == 0) ? "" : "Officials said the plan was approved on Monday.";
    }
    IngestOptions o;
    o.seed = rng();
    ++manifests;
    failures += !balanced_arithmetic(ingest(feed, registry, o).manifest);
    o.balance = false;
    const auto raw = ingest(feed, registry, o).manifest;
    ++manifests;
    failures += !raw.consistent();
  }
  CorpusManifest full;
  full.per_topic[Topic::kEconomy] = {7836, 7836};
  full.total = 15672;
  ++manifests;
  failures += !balanced_arithmetic(full);
  Verdict v;
  v.pass = failures == 0;
  v.detail = std::to_string(manifests) + " manifests, " + std::to_string(failures) + " violations";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"feature tagger oracle suite", fixture_suite},
      {"POS tagger held-out accuracy", tagger_accuracy},
      {"standardization identity", standardization_identity},
      {"dimension linearity and attribution", dimension_linearity},
      {"statistics oracle and bands", statistics_oracle},
      {"salience threshold", salience},
      {"text-type assignment", text_types},
      {"end-to-end differentiation", end_to_end},
      {"ingest balance", ingest_balance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << "criterion " << i + 1 << " " << (v.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << v.detail << '\n';
  }
  std::cout << (failed ? "FAILED " : "ALL PASS ") << criteria.size() - failed << "/" << criteria.size() << '\n';
  return failed ? 1 : 0;
}
