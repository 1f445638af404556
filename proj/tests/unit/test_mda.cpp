#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "mdastyl/error.hpp"
#include "mdastyl/mda.hpp"

using namespace mdastyl;

namespace {

const ReferenceData& ref() { return default_reference(); }

ReferenceData parse(const std::string& text) {
  std::istringstream in(text);
  return parse_reference(in);
}

FeatureVector mean_rates() {
  FeatureVector r{};
  for (std::size_t f = 0; f < kFeatureCount; ++f) r[f] = ref().stats.at(kInventory[f].code).mean;
  return r;
}

std::size_t idx(std::string_view code) { return feature_index_of(code); }

DimensionVector centroid_vector(const Centroid& c, const CentroidTable& t) {
  DimensionVector v{};
  for (std::size_t k = 0; k < t.dims.size(); ++k) v[t.dims[k]] = c.scores[k];
  return v;
}

}  // namespace

TEST_SUITE("mda") {
  TEST_CASE("embedded reference data is complete") {
    CHECK(ref().version == "mdastyl-norms-1");
    CHECK(ref().stats.norms.size() == kFeatureCount);
    for (const auto& [code, n] : ref().stats.norms) CHECK(n.sd > 0);
    CHECK(ref().centroids.centroids.size() == 8);
    for (std::size_t d = 0; d < kDimensionCount; ++d) {
      CHECK_FALSE(ref().loadings.positive[d].empty());
      for (const auto f : ref().loadings.positive[d]) {
        const auto& neg = ref().loadings.negative[d];
        CHECK(std::find(neg.begin(), neg.end(), f) == neg.end());
      }
    }
  }

  TEST_CASE("loadings follow the dimension semantics") {
    const auto has = [](const std::vector<std::size_t>& side, std::string_view code) {
      return std::find(side.begin(), side.end(), idx(code)) != side.end();
    };
    const auto& l = ref().loadings;
    CHECK(has(l.positive[0], "PRIV"));
    CHECK(has(l.positive[0], "FPP1"));
    CHECK(has(l.negative[0], "NN"));
    CHECK(has(l.negative[0], "JJ"));
    CHECK(has(l.positive[1], "VBD"));
    CHECK(has(l.positive[1], "PUBV"));
    CHECK(has(l.positive[4], "PASS"));
    CHECK(has(l.positive[4], "CONJ"));
  }

  TEST_CASE("reference data errors") {
    CHECK_THROWS_AS(parse("version x\nnorm NOPE 1 1\n"), ConfigError);
    CHECK_THROWS_AS(parse("version x\nnorm VBD 1 0\n"), ConfigError);
    CHECK_THROWS_AS(parse("version x\nnorm VBD 1 1\nload D1 + VBD\nload D1 - VBD\n"), ConfigError);
    CHECK_THROWS_AS(parse("version x\nload D1 + VBD\n"), ConfigError);
    CHECK_THROWS_AS(parse("version x\nload D9 + VBD\n"), ConfigError);
    CHECK_THROWS_AS(parse("version x\nbogus line\n"), ConfigError);
    CHECK_THROWS_AS(load_reference("/nonexistent/norms.txt"), ConfigError);
  }

  TEST_CASE("normalize") {
    FeatureCounts c;
    c.window_tokens = 400;
    c.counts[idx("PUBV")] = 8;
    c.ttr = 150;
    c.awl = 4.75;
    auto r = normalize(c);
    CHECK(r[idx("PUBV")] == doctest::Approx(2.0));
    CHECK(r[idx("VBD")] == 0.0);
    CHECK(r[kTTR] == 150.0);
    CHECK(r[kAWL] == 4.75);
    c.window_tokens = 250;
    c.counts[idx("PUBV")] = 3;
    CHECK(normalize(c)[idx("PUBV")] == doctest::Approx(1.2));
    c.window_tokens = 0;
    CHECK_THROWS_AS(normalize(c), DataError);
  }

  TEST_CASE("standardize") {
    auto rates = mean_rates();
    auto z = standardize(rates, ref().stats);
    for (const double v : z) CHECK(v == 0.0);
    const auto& n = ref().stats.at("PUBV");
    rates[idx("PUBV")] = n.mean + n.sd;
    z = standardize(rates, ref().stats);
    CHECK(z[idx("PUBV")] == doctest::Approx(1.0).epsilon(1e-12));
    ReferenceStats partial;
    partial.norms["VBD"] = {1, 1};
    try {
      standardize(rates, partial);
      FAIL("expected DataError");
    } catch (const DataError& e) {
      CHECK(std::string(e.what()).find("PEAS") != std::string::npos);
    }
  }

  TEST_CASE("reference means give zero scores") {
    const auto z = standardize(mean_rates(), ref().stats);
    const auto s = dimension_scores(z, ref());
    for (const double v : s.scores) CHECK(std::fabs(v) <= 1e-9);
    CHECK(s.salient.empty());
  }

  TEST_CASE("single feature attribution") {
    FeatureVector z{};
    z[idx("PASS")] = 1.0;
    const auto s = score_dimensions(z, ref().loadings);
    for (std::size_t d = 0; d < kDimensionCount; ++d) CHECK(s[d] == (d == 4 ? 1.0 : 0.0));
  }

  TEST_CASE("linearity on random vectors") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> nd(0.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
      FeatureVector a{};
      FeatureVector b{};
      FeatureVector ab{};
      for (std::size_t f = 0; f < kFeatureCount; ++f) {
        a[f] = nd(rng);
        b[f] = nd(rng);
        ab[f] = a[f] + b[f];
      }
      const auto sa = score_dimensions(a, ref().loadings);
      const auto sb = score_dimensions(b, ref().loadings);
      const auto sab = score_dimensions(ab, ref().loadings);
      for (std::size_t d = 0; d < kDimensionCount; ++d) {
        CHECK(sab[d] == doctest::Approx(sa[d] + sb[d]).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("salience threshold is inclusive") {
    FeatureVector z{};
    z[idx("VBD")] = 2.0;
    auto s = salient_features(z);
    REQUIRE(s.size() == 1);
    CHECK(s[0].first == idx("VBD"));
    z[idx("NN")] = -1.95;
    z[idx("RB")] = std::nextafter(1.95, 0.0);
    s = salient_features(z);
    REQUIRE(s.size() == 2);
    CHECK(s[0].first == idx("VBD"));
    CHECK(s[1].first == idx("NN"));
  }

  TEST_CASE("text type centroids") {
    const auto& t = ref().centroids;
    for (const auto& c : t.centroids) CHECK(assign_text_type(centroid_vector(c, t), t) == c.label);
    const auto gne = std::find_if(t.centroids.begin(), t.centroids.end(),
                                  [](const Centroid& c) { return c.label == "General Narrative Exposition"; });
    REQUIRE(gne != t.centroids.end());
    const auto sci = std::find_if(t.centroids.begin(), t.centroids.end(),
                                  [](const Centroid& c) { return c.label == "Scientific Exposition"; });
    REQUIRE(sci != t.centroids.end());
  }

  TEST_CASE("equidistant scores take the first label") {
    CentroidTable t;
    t.dims = {0};
    t.centroids = {{"Zeta", {1.0}}, {"Alpha", {-1.0}}};
    CHECK(assign_text_type(DimensionVector{}, t) == "Alpha");
    std::reverse(t.centroids.begin(), t.centroids.end());
    CHECK(assign_text_type(DimensionVector{}, t) == "Alpha");
  }

  TEST_CASE("text type ignores centroid order") {
    auto t = ref().centroids;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ud(-20.0, 20.0);
    for (int trial = 0; trial < 50; ++trial) {
      DimensionVector v{};
      for (auto& x : v) x = ud(rng);
      const auto expected = assign_text_type(v, ref().centroids);
      std::shuffle(t.centroids.begin(), t.centroids.end(), rng);
      CHECK(assign_text_type(v, t) == expected);
    }
  }

  TEST_CASE("corpus profile") {
    DimensionScores a;
    DimensionScores b;
    a.scores[0] = -1.0;
    b.scores[0] = 1.0;
    FeatureVector za{};
    FeatureVector zb{};
    za[3] = 2.0;
    zb[3] = 2.0;
    const auto p = corpus_profile({a, b}, {za, zb}, ref().centroids);
    CHECK(p.documents == 2);
    CHECK(p.dimension_mean[0] == 0.0);
    CHECK(p.dimension_sd[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    for (const double sd : p.feature_sd) CHECK(sd == 0.0);
    CHECK(p.feature_mean[3] == 2.0);
    CHECK_THROWS_AS(corpus_profile({a}, {za}, ref().centroids), UndefinedStatistic);
  }
}
