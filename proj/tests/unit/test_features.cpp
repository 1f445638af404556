#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "mdastyl/error.hpp"
#include "mdastyl/features.hpp"
#include "mdastyl/rules.hpp"
#include "support/fixtures.hpp"
#include "support/paths.hpp"

using namespace mdastyl;

namespace {

FeatureCounts counts_of(std::string_view tagged) {
  return tag_features(parse_tagged_text(tagged));
}

RuleTable table_of(const std::string& text) {
  std::istringstream in(text);
  return parse_rules(in);
}

bool mentions(const std::vector<Diagnostic>& ds, std::string_view what) {
  return std::any_of(ds.begin(), ds.end(), [&](const Diagnostic& d) {
    return d.message.find(what) != std::string::npos;
  });
}

std::vector<TaggedToken> concat(std::vector<TaggedToken> a, const std::vector<TaggedToken>& b) {
  const std::size_t shift = a.empty() ? 0 : a.back().token.offset + a.back().token.surface.size() + 1;
  for (auto t : b) {
    t.token.offset += shift;
    a.push_back(t);
  }
  return a;
}

}  // namespace

TEST_SUITE("features") {
  TEST_CASE("inventory") {
    CHECK(kFeatureCount == 69);
    std::set<std::string_view> codes;
    for (const auto& f : kInventory) codes.insert(f.code);
    CHECK(codes.size() == kFeatureCount);
    for (const auto* code : {"INPR", "QUAN", "QUPR", "PUBV", "THATD", "WZPRES", "TTR", "AWL"}) {
      CHECK(feature_index(code).has_value());
    }
    CHECK(display_name(feature_index_of("PUBV")) == "Public Verbs (PUBV)");
    CHECK_THROWS(feature_index_of("NOPE"));
  }

  TEST_CASE("word lists") {
    const auto& lists = word_lists();
    CHECK(lists.at("pubv").contains("say"));
    CHECK(lists.at("pubv").contains("claim"));
    CHECK(lists.at("priv").contains("think"));
    CHECK(lists.at("priv").contains("feel"));
    CHECK(lists.at("time").contains("now"));
    CHECK(lists.at("time").contains("shortly"));
    for (const auto& w : lists.at("pubv")) CHECK_FALSE(lists.at("priv").contains(w));
    for (const auto& w : lists.at("suav")) {
      CHECK_FALSE(lists.at("pubv").contains(w));
      CHECK_FALSE(lists.at("priv").contains(w));
    }
  }

  TEST_CASE("that-deletion pair") {
    auto c = counts_of("She/PRP said/VBD that/IN he/PRP left/VBD ./.");
    CHECK(c.count("PUBV") == 1);
    CHECK(c.count("THATD") == 0);
    c = counts_of("She/PRP said/VBD he/PRP left/VBD ./.");
    CHECK(c.count("PUBV") == 1);
    CHECK(c.count("THATD") == 1);
  }

  TEST_CASE("agentless and by-passives") {
    auto c = counts_of("The/DT ball/NN was/VBD thrown/VBN ./.");
    CHECK(c.count("PASS") == 1);
    CHECK(c.count("BYPA") == 0);
    c = counts_of("The/DT ball/NN was/VBD thrown/VBN by/IN John/NNP ./.");
    CHECK(c.count("BYPA") == 1);
    CHECK(c.count("PASS") == 0);
  }

  TEST_CASE("whiz deletion and split auxiliary") {
    CHECK(counts_of("the/DT man/NN standing/VBG there/RB").count("WZPRES") == 1);
    const auto c = counts_of("He/PRP will/MD definitely/RB win/VB ./.");
    CHECK(c.count("SPAU") == 1);
    CHECK(c.count("EMPH") >= 1);
  }

  TEST_CASE("one token may carry several features") {
    const auto tokens = parse_tagged_text("She/PRP said/VBD he/PRP left/VBD ./.");
    const auto per_token = token_features(tokens, segment_sentences([&] {
      std::vector<Token> t;
      for (const auto& x : tokens) t.push_back(x.token);
      return t;
    }()));
    const auto& said = per_token[1];
    CHECK(std::find(said.begin(), said.end(), "VBD") != said.end());
    CHECK(std::find(said.begin(), said.end(), "PUBV") != said.end());
  }

  TEST_CASE("oracle fixture suite") {
    const auto fixtures =
        testing::load_feature_fixtures((testing::data_dir() / "fixtures" / "feature_fixtures.txt").string());
    CHECK(fixtures.size() >= 300);
    std::map<std::string, std::pair<int, int>> per_code;
    for (const auto& f : fixtures) {
      const auto outcome = testing::run_fixture(f);
      INFO("line " << f.line << ": " << f.code << " expected " << f.expected << " got " << outcome.actual);
      CHECK(outcome.passed);
      auto& [pos, neg] = per_code[f.code];
      (f.expected > 0 ? pos : neg) += 1;
    }
    for (const auto& f : kInventory) {
      INFO(f.code);
      REQUIRE(per_code.contains(std::string(f.code)));
      CHECK(per_code[std::string(f.code)].first >= 3);
      CHECK(per_code[std::string(f.code)].second >= 2);
    }
  }

  TEST_CASE("shipped rule table is well formed") {
    const auto ds = validate_rules(default_rules());
    for (const auto& d : ds) INFO(d.line << ": " << d.message);
    CHECK(ds.empty());
  }

  TEST_CASE("empty table lists every uncovered feature") {
    const auto ds = validate_rules(table_of(""));
    CHECK(ds.size() == kFeatureCount - 2);
    CHECK(mentions(ds, "no rule produces PUBV"));
    CHECK_FALSE(mentions(ds, "no rule produces TTR"));
  }

  TEST_CASE("rule diagnostics") {
    CHECK(mentions(validate_rules(table_of("VBD 50 @[t:VBD]\nVBD 50 @[t:VBD] [t:.]\n")), "shadowing"));
    CHECK(mentions(validate_rules(table_of("VBD 50 @[t:VBD]\nVBD 40 @[t:VBD]\n")), "unreachable"));
    CHECK(mentions(validate_rules(table_of("JJ 50 @[t:JJ] []*\n")), "unbounded"));
    CHECK(mentions(validate_rules(table_of("JJ 50 @[t:JJ] []{0,6}\n")), "exceeds"));
    CHECK(mentions(validate_rules(table_of("NN 50 @[t:NN !f:NOMZ]\n")), "NOMZ"));
  }

  TEST_CASE("rule syntax errors name the line") {
    CHECK_THROWS_AS(table_of("XYZZY\n"), FormatError);
    try {
      table_of("VBD 50 @[t:VBD]\nVBD 40 [t:VBD]\n");
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(table_of("VBD 50 @[l:nosuchlist]\n"), FormatError);
    CHECK_THROWS_AS(load_rules("/nonexistent/rules.txt"), ConfigError);
  }

  TEST_CASE("custom rules and lists parse") {
    const auto t = table_of("list mine: foo bar\nEMPH 50 @[l:mine]\n");
    CHECK(tag_features(parse_tagged_text("foo/NN and/CC bar/NN"), t).count("EMPH") == 2);
  }

  TEST_CASE("counts are complete, bounded and deterministic") {
    const auto fixtures =
        testing::load_feature_fixtures((testing::data_dir() / "fixtures" / "feature_fixtures.txt").string());
    for (std::size_t i = 0; i < fixtures.size(); i += 5) {
      const auto tokens = parse_tagged_text(fixtures[i].text);
      const auto a = tag_features(tokens);
      const auto b = tag_features(tokens);
      CHECK(a.counts == b.counts);
      CHECK(a.counts.size() == kFeatureCount);
      for (std::size_t f = 0; f < kFeatureCount; ++f) CHECK(a.counts[f] <= a.window_tokens);
    }
  }

  TEST_CASE("concatenation never removes features") {
    const auto fixtures =
        testing::load_feature_fixtures((testing::data_dir() / "fixtures" / "feature_fixtures.txt").string());
    for (std::size_t i = 0; i + 1 < fixtures.size(); i += 3) {
      const auto w1 = parse_tagged_text(fixtures[i].text);
      const auto w2 = parse_tagged_text(fixtures[i + 1].text);
      const auto alone = tag_features(w1);
      const auto joined = tag_features(concat(w1, w2));
      for (std::size_t f = 0; f < kFeatureCount; ++f) {
        if (f == kAWL) continue;
        INFO("fixture line " << fixtures[i].line << " feature " << kInventory[f].code);
        CHECK(joined.counts[f] >= alone.counts[f]);
      }
    }
  }

  TEST_CASE("feature matrix export") {
    auto c = counts_of("She/PRP said/VBD he/PRP left/VBD ./.");
    c.document_id = "doc1";
    std::ostringstream out;
    write_feature_matrix(out, {c});
    const auto text = out.str();
    CHECK(text.starts_with("id,tokens,"));
    CHECK(text.find("\ndoc1,5,") != std::string::npos);
  }
}
