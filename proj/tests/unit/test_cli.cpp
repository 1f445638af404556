#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mdastyl/cli.hpp"
#include "support/paths.hpp"

using namespace mdastyl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "mda-styl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string fixture(const char* name) { return (testing::data_dir() / "fixtures" / name).string(); }

const fs::path& trained_model() {
  static const fs::path path = [] {
    const auto dir = testing::scratch_dir("cli-model");
    const auto model = dir / "model.txt";
    const auto r = run({"train-tagger", "--treebank", (testing::data_dir() / "treebank" / "sample.txt").string(),
                        "--model", model.string()});
    REQUIRE(r.code == kExitOk);
    return model;
  }();
  return path;
}

std::map<std::string, std::string> tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), root).string()] = slurp(e.path());
  }
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("missing registry is a configuration error naming the path") {
    const auto r = run({"ingest", "--registry", "/nonexistent/registry.txt", "--input", fixture("mixed_feed.jsonl")});
    CHECK(r.code == kExitConfig);
    CHECK(r.err.find("/nonexistent/registry.txt") != std::string::npos);
  }

  TEST_CASE("bad settings are configuration errors") {
    const auto tb = (testing::data_dir() / "treebank" / "sample.txt").string();
    CHECK(run({"train-tagger", "--treebank", tb, "--model", "/tmp/x", "--epochs", "0"}).code == kExitConfig);
    CHECK(run({"analyze", "--window", "0"}).code == kExitConfig);
    CHECK(run({"analyze", "--threshold", "abc"}).code == kExitConfig);
    CHECK(run({"bogus"}).code == kExitConfig);
    CHECK(run({"--help"}).code == kExitOk);
  }

  TEST_CASE("unwritable model path is a data error") {
    const auto dir = testing::scratch_dir("cli-unwritable");
    std::ofstream(dir / "file") << "x";
    const auto r = run({"train-tagger", "--treebank", (testing::data_dir() / "treebank" / "sample.txt").string(),
                        "--model", (dir / "file" / "model.txt").string()});
    CHECK(r.code == kExitData);
  }

  TEST_CASE("train-tagger reports held-out accuracy") {
    const auto dir = testing::scratch_dir("cli-train");
    const auto r = run({"train-tagger", "--treebank", (testing::data_dir() / "treebank" / "sample.txt").string(),
                        "--model", (dir / "m.txt").string()});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("held-out accuracy: 0.") != std::string::npos);
    CHECK(fs::exists(dir / "m.txt"));
  }

  TEST_CASE("ingest rejects unknown sources without stopping") {
    const auto dir = testing::scratch_dir("cli-ingest");
    const auto r = run({"ingest", "--registry", fixture("registry.txt"), "--input", fixture("mixed_feed.jsonl"),
                        "--output-dir", dir.string(), "--run-id", "a"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("rejected: 3\n") != std::string::npos);
    std::istringstream rejects(slurp(dir / "a" / "rejects.tsv"));
    std::size_t lines = 0;
    for (std::string line; std::getline(rejects, line);) lines += !line.empty() && line[0] != '#';
    CHECK(lines == 3);
  }

  TEST_CASE("config file, environment and flag precedence") {
    const auto dir = testing::scratch_dir("cli-config");
    {
      std::ofstream cfg(dir / "run.cfg");
      cfg << "# test\nregistry = " << fixture("registry.txt") << "\ninput = " << fixture("mixed_feed.jsonl")
          << "\noutput_dir = " << dir.string() << "\nrun_id = fromfile\n";
    }
    CHECK(run({"ingest", "--config", (dir / "run.cfg").string()}).code == kExitOk);
    CHECK(fs::exists(dir / "fromfile" / "corpus.jsonl"));
    CHECK(run({"ingest", "--config", (dir / "run.cfg").string(), "--run-id", "fromflag"}).code == kExitOk);
    CHECK(fs::exists(dir / "fromflag" / "corpus.jsonl"));

    ::setenv("MDA_STYL_CONFIG", (dir / "run.cfg").string().c_str(), 1);
    CHECK(run({"ingest", "--run-id", "fromenv"}).code == kExitOk);
    ::unsetenv("MDA_STYL_CONFIG");
    CHECK(fs::exists(dir / "fromenv" / "corpus.jsonl"));

    std::ofstream(dir / "bad.cfg") << "colour = blue\n";
    CHECK(run({"ingest", "--config", (dir / "bad.cfg").string()}).code == kExitConfig);
  }

  TEST_CASE("analyze writes tables, chart and reproducible outputs") {
    const auto dir = testing::scratch_dir("cli-analyze");
    const std::vector<std::string> base{"--registry", fixture("registry.txt"), "--input", fixture("mixed_feed.jsonl"),
                                        "--output-dir", dir.string(), "--model", trained_model().string()};
    auto with = [&](std::vector<std::string> extra, const char* cmd) {
      extra.insert(extra.begin(), cmd);
      extra.insert(extra.end(), base.begin(), base.end());
      return run(extra);
    };
    REQUIRE(with({"--run-id", "a"}, "ingest").code == kExitOk);
    const auto r = with({"--run-id", "a"}, "analyze");
    REQUIRE(r.code == kExitOk);
    const auto first = tree(dir / "a");
    std::size_t tables = 0;
    std::size_t charts = 0;
    for (const auto& [name, body] : first) {
      tables += name.starts_with("report/table_") && name.ends_with(".txt");
      charts += name.ends_with(".svg");
    }
    CHECK(tables == 5);
    CHECK(charts == 1);
    CHECK(first.at("scores.tsv").starts_with("# versions: inventory=mdastyl-inventory-1 "));
    CHECK(first.at("run.txt").find("window\t400\n") != std::string::npos);

    REQUIRE(with({"--run-id", "a"}, "analyze").code == kExitOk);
    CHECK(tree(dir / "a") == first);

    REQUIRE(with({"--run-id", "a"}, "report").code == kExitOk);
    CHECK(tree(dir / "a") == first);

    REQUIRE(with({"--run-id", "b"}, "ingest").code == kExitOk);
    REQUIRE(with({"--run-id", "b", "--window", "200"}, "analyze").code == kExitOk);
    const auto second = tree(dir / "b");
    CHECK(second.at("run.txt").find("window\t200\n") != std::string::npos);
    CHECK(second.at("report/summary.txt").find("200") != std::string::npos);
    CHECK(second.at("scores.tsv") != first.at("scores.tsv"));
  }

  TEST_CASE("D6 and topic filter") {
    const auto dir = testing::scratch_dir("cli-d6");
    const std::vector<std::string> common{"--registry", fixture("registry.txt"), "--input", fixture("mixed_feed.jsonl"),
                                          "--output-dir", dir.string(), "--model", trained_model().string(),
                                          "--run-id", "x"};
    auto cmd = [&](const char* name, std::vector<std::string> extra) {
      extra.insert(extra.begin(), common.begin(), common.end());
      extra.insert(extra.begin(), name);
      return run(extra);
    };
    REQUIRE(cmd("ingest", {}).code == kExitOk);
    REQUIRE(cmd("analyze", {"--include-d6", "true", "--topics", "economy"}).code == kExitOk);
    const auto files = tree(dir / "x");
    CHECK(files.contains("report/table_economy.txt"));
    CHECK_FALSE(files.contains("report/table_health.txt"));
    CHECK(files.at("report/chart.svg").find("data-dimension=\"D6\"") != std::string::npos);
  }

  TEST_CASE("analyze without a corpus is a configuration error") {
    const auto dir = testing::scratch_dir("cli-nocorpus");
    const auto r = run({"analyze", "--output-dir", dir.string(), "--model", trained_model().string()});
    CHECK(r.code == kExitConfig);
    CHECK(r.err.find("corpus") != std::string::npos);
  }
}
