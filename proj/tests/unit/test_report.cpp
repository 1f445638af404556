#include <doctest.h>

#include <regex>
#include <sstream>

#include "mdastyl/error.hpp"
#include "mdastyl/report.hpp"

using namespace mdastyl;

namespace {

EffectSize effect(std::string id, double d, double mc, double mn) {
  EffectSize e;
  e.id = std::move(id);
  e.d = d;
  e.band = band_for_d(d);
  e.mean_credible = mc;
  e.mean_noncredible = mn;
  e.n_credible = e.n_noncredible = 10;
  return e;
}

struct Bar {
  std::string cls;
  std::string topic;
  std::string dim;
  double height = 0;
};

std::vector<Bar> bars(const std::string& svg) {
  static const std::regex re(
      "<rect class=\"([a-z-]+)\" data-topic=\"([a-z]+)\" data-dimension=\"(D[1-6])\" "
      "data-value=\"[^\"]*\" x=\"[^\"]*\" y=\"[^\"]*\" width=\"[^\"]*\" height=\"([0-9.]+)\"");
  std::vector<Bar> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back({(*it)[1], (*it)[2], (*it)[3], std::stod((*it)[4])});
  }
  return out;
}

TopicProfile profile(Topic t, double c2, double n2) {
  TopicProfile p;
  p.topic = t;
  p.n_credible = p.n_noncredible = 10;
  p.credible[1] = c2;
  p.noncredible[1] = n2;
  p.type_credible = p.type_noncredible = "General Narrative Exposition";
  return p;
}

VersionStamp stamp_of(std::string norms) {
  return {"inv", "rules", std::move(norms), "model"};
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("table row layout") {
    ReportSpec spec;
    const auto table = render_feature_table({effect("PUBV", 1.2, 1.24, -0.13)}, spec, "Economy");
    CHECK(table.find("Feature | Cohen's d | Credible Mean | Non-Credible Mean\n") != std::string::npos);
    CHECK(table.find("Public Verbs (PUBV) | 1.20 | 1.24 | -0.13\n") != std::string::npos);
  }

  TEST_CASE("table prints |d| and filters at the threshold") {
    ReportSpec spec;
    const auto table = render_feature_table(
        {effect("VBD", -1.0, 0.03, -0.48), effect("JJ", 0.29, 0, 0), effect("CONJ", 0.30, 0, 0)}, spec, "t");
    CHECK(table.find("Past Tense Verbs (VBD) | 1.00 |") != std::string::npos);
    CHECK(table.find("(CONJ) | 0.30") != std::string::npos);
    CHECK(table.find("(JJ)") == std::string::npos);
  }

  TEST_CASE("empty table gets a placeholder row") {
    ReportSpec spec;
    const auto table = render_feature_table({effect("VBD", 0.1, 0, 0)}, spec, "t");
    CHECK(table.find("no feature reaches |d| >= 0.30") != std::string::npos);
  }

  TEST_CASE("equal |d| rows follow code order") {
    ReportSpec spec;
    const auto table = render_feature_table(
        {effect("VBD", 0.5, 0, 0), effect("AMP", -0.5, 0, 0)}, spec, "t");
    CHECK(table.find("(AMP)") < table.find("(VBD)"));
  }

  TEST_CASE("zero chart has five flat bar pairs") {
    ReportSpec spec;
    const auto svg = render_dimension_chart({profile(Topic::kEconomy, 0, 0)}, spec);
    const auto b = bars(svg);
    REQUIRE(b.size() == 10);
    for (const auto& bar : b) CHECK(bar.height == 0.0);
    CHECK(b[0].cls == "credible");
    CHECK(b[1].cls == "non-credible");
    CHECK(svg.find("class=\"zero\"") != std::string::npos);
    CHECK(svg.starts_with("<?xml"));
  }

  TEST_CASE("chart is deterministic and ordered") {
    ReportSpec spec;
    const std::vector<TopicProfile> ps{profile(Topic::kSports, 1, 2), profile(Topic::kEconomy, 3.5, 1.25)};
    const auto svg = render_dimension_chart(ps, spec);
    CHECK(svg == render_dimension_chart(ps, spec));
    const auto b = bars(svg);
    REQUIRE(b.size() == 20);
    CHECK(b.front().topic == "economy");
    CHECK(b.back().topic == "sports");
    CHECK(b[2].dim == "D2");
    CHECK(b[2].cls == "credible");
    CHECK(b[2].height > b[3].height);
  }

  TEST_CASE("D6 flag adds a sixth group") {
    ReportSpec spec;
    spec.dimensions = report_dimensions(true);
    CHECK(bars(render_dimension_chart({profile(Topic::kHealth, 0, 0)}, spec)).size() == 12);
  }

  TEST_CASE("profiles round trip") {
    auto p = profile(Topic::kScience, 0.1, -2.5);
    p.sd_credible[3] = 0.7;
    std::stringstream s;
    write_profiles(s, {p, profile(Topic::kHealth, 1, 1)});
    const auto back = read_profiles(s);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == p);
  }

  TEST_CASE("summary covers every topic") {
    ReportSpec spec;
    SummaryInput in;
    in.run_id = "r";
    in.stamp = in.profile_stamp = stamp_of("n1");
    in.chart_file = "chart.svg";
    for (const auto t : {Topic::kEconomy, Topic::kEntertainment, Topic::kHealth, Topic::kScience, Topic::kSports}) {
      in.profiles.push_back(profile(t, 1, 0));
      in.sections.push_back({t, in.stamp, {effect("PUBV", 1.2, 1.24, -0.13)}, {effect("D2", 0.4, 1, 0)}});
      in.manifest.per_topic[t] = {10, 10};
    }
    in.manifest.total = 100;
    const auto text = render_summary(in, spec);
    std::size_t tables = 0;
    for (auto pos = text.find("[table "); pos != std::string::npos; pos = text.find("[table ", pos + 1)) ++tables;
    CHECK(tables == 5);
    CHECK(text.find("chart.svg") != std::string::npos);
    CHECK(text.find("versions: inventory=inv rules=rules norms=n1 model=model") != std::string::npos);
    CHECK(text.find("seed: 0") != std::string::npos);
    CHECK(text == render_summary(in, spec));

    in.sections[2].stamp = stamp_of("n2");
    CHECK_THROWS_AS(render_summary(in, spec), DataError);
    in.sections[2].stamp = in.stamp;
    in.profile_stamp = stamp_of("n2");
    CHECK_THROWS_AS(render_summary(in, spec), DataError);
  }

  TEST_CASE("spec validation") {
    ReportSpec spec;
    spec.threshold = -0.1;
    CHECK_THROWS_AS(spec.validate(), ConfigError);
    spec = {};
    spec.table_text = spec.delimited = spec.figure = false;
    CHECK_THROWS_AS(spec.validate(), ConfigError);
  }

  TEST_CASE("stamps parse back") {
    const auto s = stamp_of("n1");
    CHECK(parse_stamp(s.str()) == s);
    CHECK_THROWS_AS(parse_stamp("inventory=x"), FormatError);
  }
}
