#include <doctest.h>

#include "mdastyl/error.hpp"
#include "mdastyl/pipeline.hpp"
#include "support/paths.hpp"

using namespace mdastyl;

namespace {

const TaggerModel& model() {
  static const TaggerModel m = [] {
    TrainOptions o;
    o.corpus_name = "sample";
    return train(load_treebank(testing::data_dir() / "treebank" / "sample.txt"), o);
  }();
  return m;
}

const std::vector<Document>& docs() {
  static const auto d = [] {
    const auto registry = load_registry(testing::data_dir() / "fixtures" / "registry.txt");
    return ingest(load_feed(testing::data_dir() / "fixtures" / "mixed_feed.jsonl"), registry).documents;
  }();
  return d;
}

PipelineSettings settings() {
  PipelineSettings s;
  s.model = &model();
  s.rules = &default_rules();
  s.reference = &default_reference();
  return s;
}

void check_same(const DocumentResult& a, const DocumentResult& b) {
  CHECK(a.id == b.id);
  CHECK(a.truncated == b.truncated);
  CHECK(a.counts == b.counts);
  CHECK(a.rates == b.rates);
  CHECK(a.z == b.z);
  CHECK(a.scores.scores == b.scores.scores);
  CHECK(a.scores.text_type == b.scores.text_type);
  CHECK(a.scores.salient == b.scores.salient);
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("parallel scoring matches the serial reference") {
    REQUIRE(docs().size() >= 20);
    auto s = settings();
    const auto serial = score_documents_serial(docs(), s);
    for (const int workers : {0, 1, 4}) {
      s.workers = workers;
      const auto parallel = score_documents(docs(), s);
      REQUIRE(parallel.size() == serial.size());
      for (std::size_t i = 0; i < serial.size(); ++i) check_same(parallel[i], serial[i]);
    }
  }

  TEST_CASE("window size changes the counted span") {
    auto s = settings();
    s.window_size = 20;
    const auto r = score_document(docs().front(), s);
    CHECK(r.counts.window_tokens <= 20);
    CHECK(r.truncated);
  }

  TEST_CASE("stamp names every versioned input") {
    const auto v = stamp(settings());
    CHECK(v.inventory == "mdastyl-inventory-1");
    CHECK(v.rules == "mdastyl-rules-1");
    CHECK(v.norms == "mdastyl-norms-1");
    CHECK(v.model.starts_with("MDATAG1:sample:"));
    CHECK(parse_stamp(v.str()) == v);
  }

  TEST_CASE("missing inputs are configuration errors") {
    PipelineSettings s;
    CHECK_THROWS_AS(score_document(docs().front(), s), ConfigError);
  }

  TEST_CASE("stage failures name the stage and document") {
    ReferenceData partial = default_reference();
    partial.stats.norms.erase("PUBV");
    auto s = settings();
    s.reference = &partial;
    try {
      score_documents(docs(), s);
      FAIL("expected DataError");
    } catch (const DataError& e) {
      const std::string msg = e.what();
      CHECK(msg.starts_with("mda_engine failed for document " + docs().front().id + ":"));
      CHECK(msg.find("PUBV") != std::string::npos);
    }
  }
}
