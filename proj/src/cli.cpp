#include "mdastyl/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "mdastyl/error.hpp"
#include "mdastyl/pipeline.hpp"
#include "mdastyl/report.hpp"
#include "mdastyl/util.hpp"

namespace mdastyl {

namespace fs = std::filesystem;

namespace {

using Files = std::map<fs::path, std::string>;

/// Writes every file only after all of them rendered.
void write_files(const fs::path& root, const Files& files) {
  try {
    fs::create_directories(root);
    for (const auto& [rel, body] : files) {
      const auto path = root / rel;
      fs::create_directories(path.parent_path());
      std::ofstream out(path, std::ios::binary);
      if (!out) throw DataError("cannot write " + path.string());
      out << body;
      out.flush();
      if (!out) throw DataError("failed writing " + path.string());
    }
  } catch (const fs::filesystem_error& e) {
    throw DataError(std::string("cannot create output: ") + e.what());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string versions_line(const VersionStamp& v) { return "# versions: " + v.str() + "\n"; }

VersionStamp versions_of(const std::string& body, const fs::path& path) {
  constexpr std::string_view prefix = "# versions: ";
  const auto end = body.find('\n');
  const std::string_view first = std::string_view(body).substr(0, end);
  if (!first.starts_with(prefix)) throw FormatError(path.string() + ": missing version stamp");
  return parse_stamp(first.substr(prefix.size()));
}

std::string topic_file(std::string_view stem, Topic t, std::string_view ext) {
  return std::string(stem) + "_" + std::string(to_string(t)) + std::string(ext);
}

ReportSpec spec_of(const RunConfig& c) {
  ReportSpec spec;
  spec.topics = c.topics;
  spec.dimensions = report_dimensions(c.include_d6);
  spec.threshold = c.threshold;
  spec.validate();
  return spec;
}

/// Report files under report/, from the same values as the machine outputs.
Files render_report(const SummaryInput& input, const ReportSpec& spec) {
  Files files;
  SummaryInput summary = input;
  if (spec.figure) {
    summary.chart_file = "chart.svg";
    files["report/chart.svg"] = render_dimension_chart(input.profiles, spec);
  }
  for (const auto& s : input.sections) {
    if (!spec.wants(s.topic)) continue;
    const std::string topic(to_string(s.topic));
    if (spec.table_text) {
      files["report/" + topic_file("table", s.topic, ".txt")] = render_feature_table(
          s.features, spec, "Features which have a notable effect in the " + topic + " news type");
    }
    if (spec.delimited) {
      files["report/" + topic_file("table", s.topic, ".tsv")] =
          render_feature_table_tsv(s.features, spec);
    }
  }
  files["report/summary.txt"] = render_summary(summary, spec);
  return files;
}

std::string manifest_text(const CorpusManifest& m) {
  std::ostringstream s;
  write_manifest(s, m);
  return s.str();
}

RuleTable rules_of(const RunConfig& c) {
  if (c.rules.empty()) return default_rules();
  require_file(c.rules, "rules");
  RuleTable table;
  try {
    table = load_rules(c.rules);
  } catch (const FormatError& e) {
    throw ConfigError(e.what());
  }
  const auto diagnostics = validate_rules(table);
  if (!diagnostics.empty()) {
    const auto& d = diagnostics.front();
    throw ConfigError("rule file " + c.rules.string() + " line " + std::to_string(d.line) + ": " +
                      d.message + " (" + std::to_string(diagnostics.size()) + " diagnostics)");
  }
  return table;
}

ReferenceData reference_of(const RunConfig& c) {
  if (c.norms.empty()) return default_reference();
  require_file(c.norms, "norms");
  return load_reference(c.norms);
}

std::string run_text(const RunConfig& c, const VersionStamp& stamp) {
  std::ostringstream s;
  s << "run_id\t" << c.run_id << '\n';
  s << "versions\t" << stamp.str() << '\n';
  s << "seed\t" << c.seed << '\n';
  s << "window\t" << c.window << '\n';
  s << "salience\t" << format_exact(c.salience) << '\n';
  return s.str();
}

std::map<std::string, std::string> read_run_text(const std::string& body) {
  std::map<std::string, std::string> out;
  std::istringstream in(body);
  for (std::string line; std::getline(in, line);) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    out[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return out;
}

std::string scores_text(const std::vector<DocumentResult>& results, const VersionStamp& stamp) {
  std::ostringstream s;
  s << versions_line(stamp);
  s << "id\ttopic\tlabel";
  for (std::size_t d = 0; d < kDimensionCount; ++d) s << '\t' << dimension_name(d);
  s << "\ttext_type\ttruncated\tshort\n";
  for (const auto& r : results) {
    s << r.id << '\t' << to_string(r.topic) << '\t' << to_string(r.label);
    for (const double v : r.scores.scores) s << '\t' << format_exact(v);
    s << '\t' << r.scores.text_type << '\t' << (r.truncated ? "true" : "false") << '\t'
      << (r.is_short ? "true" : "false") << '\n';
  }
  return s.str();
}

std::string salient_text(const std::vector<DocumentResult>& results, const VersionStamp& stamp) {
  std::ostringstream s;
  s << versions_line(stamp);
  s << "id\tfeature\tz\n";
  for (const auto& r : results) {
    for (const auto& [f, z] : r.scores.salient) {
      s << r.id << '\t' << kInventory[f].code << '\t' << format_exact(z) << '\n';
    }
  }
  return s.str();
}

}  // namespace

void cmd_ingest(const RunConfig& c, std::ostream& out) {
  require_file(c.registry, "registry");
  if (c.inputs.empty()) throw ConfigError("missing required setting 'input'");
  for (const auto& p : c.inputs) require_file(p, "input");
  const auto registry = load_registry(c.registry);
  std::vector<RawArticle> articles;
  for (const auto& p : c.inputs) {
    auto feed = load_feed(p);
    articles.insert(articles.end(), std::make_move_iterator(feed.begin()),
                    std::make_move_iterator(feed.end()));
  }
  IngestOptions options;
  options.balance = c.balance;
  options.seed = c.seed;
  options.workers = c.workers;
  const auto result = ingest(articles, registry, options);
  if (!result.manifest.consistent()) throw DataError("ingest produced an inconsistent manifest");

  Files files;
  std::ostringstream corpus;
  write_corpus(corpus, result.documents);
  files["corpus.jsonl"] = corpus.str();
  files["manifest.tsv"] = manifest_text(result.manifest);
  std::ostringstream rejects;
  write_rejects(rejects, result.rejects);
  files["rejects.tsv"] = rejects.str();
  write_files(c.run_dir(), files);

  out << manifest_text(result.manifest);
  out << "documents: " << result.documents.size() << '\n';
  out << "rejected: " << result.rejects.size() << '\n';
  out << "corpus: " << (c.run_dir() / "corpus.jsonl").string() << '\n';
}

void cmd_train_tagger(const RunConfig& c, std::ostream& out) {
  require_file(c.treebank, "treebank");
  if (c.model.empty()) throw ConfigError("missing required setting 'model'");
  const auto sentences = load_treebank(c.treebank);
  TrainOptions options;
  options.epochs = c.epochs;
  options.seed = c.seed;
  options.corpus_name = c.treebank.stem().string();
  const auto model = train(sentences, options);
  save_model(model, c.model);
  out << "sentences: " << model.metadata.train_sentences << " train, "
      << model.metadata.heldout_sentences << " held out\n";
  out << "held-out accuracy: " << format_fixed(model.metadata.heldout_accuracy, 4) << '\n';
  out << "model: " << c.model.string() << " (" << model_stamp(model) << ")\n";
}

void cmd_analyze(const RunConfig& c, std::ostream& out) {
  const auto corpus_path = c.corpus_path();
  require_file(corpus_path, "corpus");
  require_file(c.model, "model");
  const auto spec = spec_of(c);
  const auto rules = rules_of(c);
  const auto reference = reference_of(c);
  const auto model = load_model(c.model);

  auto docs = load_corpus(corpus_path);
  if (!c.topics.empty()) {
    std::erase_if(docs, [&](const Document& d) {
      return std::find(c.topics.begin(), c.topics.end(), d.topic) == c.topics.end();
    });
  }
  if (docs.empty()) throw DataError("no documents to analyze in " + corpus_path.string());

  PipelineSettings settings;
  settings.model = &model;
  settings.rules = &rules;
  settings.reference = &reference;
  settings.window_size = c.window;
  settings.salience = c.salience;
  settings.workers = c.workers;
  const auto stamp = mdastyl::stamp(settings);
  const auto results = score_documents(docs, settings);

  SummaryInput summary;
  summary.run_id = c.run_id;
  summary.stamp = stamp;
  summary.profile_stamp = stamp;
  summary.manifest = build_manifest(docs);
  summary.seed = c.seed;
  summary.window_size = c.window;
  summary.salience = c.salience;

  Files files;
  files["run.txt"] = run_text(c, stamp);
  files["manifest.tsv"] = manifest_text(summary.manifest);
  files["scores.tsv"] = scores_text(results, stamp);
  files["salient.tsv"] = salient_text(results, stamp);
  {
    std::vector<FeatureCounts> rows;
    for (const auto& r : results) rows.push_back(r.counts);
    std::ostringstream s;
    s << versions_line(stamp);
    write_feature_matrix(s, rows);
    files["features.csv"] = s.str();
  }

  std::vector<Topic> topics;
  for (const auto t : kAllTopics) topics.push_back(t);
  std::sort(topics.begin(), topics.end(),
            [](Topic a, Topic b) { return to_string(a) < to_string(b); });
  for (const auto topic : topics) {
    CorpusSample samples[2];
    std::vector<DimensionScores> scores[2];
    for (int k = 0; k < 2; ++k) {
      samples[k].name = std::string(to_string(topic)) + "/" +
                        std::string(to_string(k == 0 ? Label::kCredible : Label::kNonCredible));
      samples[k].inventory_version = stamp.inventory;
    }
    for (const auto& r : results) {
      if (r.topic != topic) continue;
      const int k = r.label == Label::kCredible ? 0 : 1;
      samples[k].z.push_back(r.z);
      samples[k].dimensions.push_back(r.scores.scores);
      scores[k].push_back(r.scores);
    }
    const auto n0 = samples[0].z.size();
    const auto n1 = samples[1].z.size();
    if (n0 == 0 && n1 == 0) continue;
    if (n0 < 2 || n1 < 2) {
      summary.notes.push_back(std::string(to_string(topic)) + ": not compared (" +
                              std::to_string(n0) + " credible, " + std::to_string(n1) +
                              " non-credible; need two of each)");
      continue;
    }
    const auto credible = corpus_profile(scores[0], samples[0].z, reference.centroids);
    const auto noncredible = corpus_profile(scores[1], samples[1].z, reference.centroids);
    TopicProfile profile;
    profile.topic = topic;
    profile.n_credible = n0;
    profile.n_noncredible = n1;
    profile.credible = credible.dimension_mean;
    profile.noncredible = noncredible.dimension_mean;
    profile.sd_credible = credible.dimension_sd;
    profile.sd_noncredible = noncredible.dimension_sd;
    profile.type_credible = credible.text_type;
    profile.type_noncredible = noncredible.text_type;
    summary.profiles.push_back(profile);

    const auto cmp = compare_corpora(samples[0], samples[1], c.workers);
    TopicSection section{topic, stamp, cmp.features, cmp.dimensions};
    summary.sections.push_back(section);

    std::vector<EffectSize> all = cmp.features;
    all.insert(all.end(), cmp.dimensions.begin(), cmp.dimensions.end());
    std::ostringstream effects;
    effects << versions_line(stamp);
    write_effects(effects, all);
    files[topic_file("comparison", topic, ".tsv")] = effects.str();
    for (int k = 0; k < 2; ++k) {
      std::ostringstream corr;
      corr << versions_line(stamp);
      write_correlations(corr, k == 0 ? cmp.credible : cmp.noncredible);
      files[topic_file("correlations", topic, k == 0 ? "_credible.tsv" : "_noncredible.tsv")] =
          corr.str();
    }
  }
  {
    std::ostringstream s;
    s << versions_line(stamp);
    write_profiles(s, summary.profiles);
    files["profiles.tsv"] = s.str();
  }
  files.merge(render_report(summary, spec));
  write_files(c.run_dir(), files);

  out << "documents: " << results.size() << '\n';
  out << "topics compared: " << summary.sections.size() << '\n';
  for (const auto& n : summary.notes) out << "note: " << n << '\n';
  out << "versions: " << stamp.str() << '\n';
  out << "run directory: " << c.run_dir().string() << '\n';
}

void cmd_report(const RunConfig& c, std::ostream& out) {
  const auto dir = c.run_dir();
  require_file(dir / "run.txt", "run");
  const auto spec = spec_of(c);
  const auto run = read_run_text(read_file(dir / "run.txt"));
  const auto field = [&](const std::string& key) {
    const auto it = run.find(key);
    if (it == run.end()) throw FormatError("run.txt: missing " + key);
    return it->second;
  };

  SummaryInput summary;
  summary.run_id = field("run_id");
  summary.stamp = parse_stamp(field("versions"));
  try {
    summary.seed = std::stoull(field("seed"));
    summary.window_size = std::stoull(field("window"));
  } catch (const std::logic_error&) {
    throw FormatError("run.txt: bad seed or window");
  }
  summary.salience = parse_double(field("salience"), "salience");
  {
    std::istringstream in(read_file(dir / "manifest.tsv"));
    summary.manifest = read_manifest(in);
  }
  {
    const auto body = read_file(dir / "profiles.tsv");
    summary.profile_stamp = versions_of(body, dir / "profiles.tsv");
    std::istringstream in(body);
    summary.profiles = read_profiles(in);
  }
  for (const auto& p : summary.profiles) {
    const auto path = dir / topic_file("comparison", p.topic, ".tsv");
    const auto body = read_file(path);
    TopicSection section;
    section.topic = p.topic;
    section.stamp = versions_of(body, path);
    std::istringstream in(body);
    for (auto& e : read_effects(in)) {
      (feature_index(e.id) ? section.features : section.dimensions).push_back(std::move(e));
    }
    summary.sections.push_back(std::move(section));
  }
  const auto files = render_report(summary, spec);
  write_files(dir, files);
  out << "report: " << (dir / "report" / "summary.txt").string() << '\n';
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-dimensional stylometry of labeled news corpora."};
  app.name("mda-styl");
  app.require_subcommand(1, 1);
  std::string config_path;
  app.add_option("--config", config_path, "key = value config file (default $MDA_STYL_CONFIG)");
  std::map<std::string, std::string> flag_values;
  std::map<std::string, CLI::Option*> flags;
  for (const auto& key : config_keys()) {
    const std::string name(key.name);
    std::string names = "--" + name;
    if (name.find('_') != std::string::npos) {
      std::string dashed = name;
      std::replace(dashed.begin(), dashed.end(), '_', '-');
      names += ",--" + dashed;
    }
    flags[name] = app.add_option(names, flag_values[name], std::string(key.help));
  }
  const struct {
    const char* name;
    const char* help;
    void (*run)(const RunConfig&, std::ostream&);
  } commands[] = {
      {"ingest", "label and balance raw feeds into a corpus", cmd_ingest},
      {"train-tagger", "train the part-of-speech tagger", cmd_train_tagger},
      {"analyze", "score a corpus and compare labels per topic", cmd_analyze},
      {"report", "re-render the report from saved outputs", cmd_report},
  };
  std::map<CLI::App*, void (*)(const RunConfig&, std::ostream&)> handlers;
  for (const auto& cmd : commands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->fallthrough();
    handlers[sub] = cmd.run;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    ConfigValues values;
    if (config_path.empty()) {
      if (const char* env = std::getenv(std::string(kConfigEnv).c_str()); env && *env) {
        config_path = env;
      }
    }
    if (!config_path.empty()) values = load_config(config_path);
    for (const auto& [name, opt] : flags) {
      if (opt->count() > 0) values[name] = flag_values[name];
    }
    const auto config = make_config(values);
    for (auto* sub : app.get_subcommands()) handlers.at(sub)(config, out);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "mda-styl: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DataError& e) {
    err << "mda-styl: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "mda-styl: error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace mdastyl
