#include "mdastyl/pipeline.hpp"

#include <exception>

#include <omp.h>

#include "mdastyl/error.hpp"
#include "mdastyl/util.hpp"

namespace mdastyl {

std::string VersionStamp::str() const {
  return "inventory=" + inventory + " rules=" + rules + " norms=" + norms + " model=" + model;
}

VersionStamp parse_stamp(std::string_view s) {
  VersionStamp v;
  std::string* slots[] = {&v.inventory, &v.rules, &v.norms, &v.model};
  const char* keys[] = {"inventory=", "rules=", "norms=", "model="};
  const auto parts = split(trim(s), ' ');
  if (parts.size() != 4) throw FormatError("bad version stamp '" + std::string(s) + "'");
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string_view key = keys[i];
    if (parts[i].rfind(key, 0) != 0 || parts[i].size() == key.size()) {
      throw FormatError("bad version stamp '" + std::string(s) + "'");
    }
    *slots[i] = parts[i].substr(key.size());
  }
  return v;
}

VersionStamp stamp(const PipelineSettings& settings) {
  VersionStamp v;
  v.inventory = std::string(kInventoryVersion);
  v.rules = settings.rules ? settings.rules->version : "none";
  v.norms = settings.reference ? settings.reference->version : "none";
  v.model = settings.model ? model_stamp(*settings.model) : "none";
  for (auto* f : {&v.inventory, &v.rules, &v.norms, &v.model}) {
    for (char& c : *f) {
      if (c == ' ' || c == '\t') c = '_';
    }
  }
  return v;
}

namespace {

[[noreturn]] void fail(const Document& doc, const char* stage, const std::exception& e) {
  throw DataError(std::string(stage) + " failed for document " + doc.id + ": " + e.what());
}

}  // namespace

DocumentResult score_document(const Document& doc, const PipelineSettings& settings) {
  if (!settings.model || !settings.rules || !settings.reference) {
    throw ConfigError("pipeline settings need a tagger model, rules and reference data");
  }
  DocumentResult r;
  r.id = doc.id;
  r.topic = doc.topic;
  r.label = doc.label;
  AnalysisWindow win;
  try {
    const auto tokens = tokenize(doc.body);
    r.is_short = tokens.size() < kShortDocumentTokens;
    win = window(tokens, settings.window_size);
    r.truncated = win.truncated;
    surface_stats(win.tokens);
  } catch (const std::exception& e) {
    fail(doc, "text_pipeline", e);
  }
  std::vector<TaggedToken> tagged;
  try {
    tagged = tag(win.tokens, *settings.model);
  } catch (const std::exception& e) {
    fail(doc, "pos_tagger", e);
  }
  try {
    r.counts = tag_features(tagged, *settings.rules);
    r.counts.document_id = doc.id;
  } catch (const std::exception& e) {
    fail(doc, "biber_tagger", e);
  }
  try {
    r.rates = normalize(r.counts);
    r.z = standardize(r.rates, settings.reference->stats);
    r.scores = dimension_scores(r.z, *settings.reference, settings.salience);
    r.scores.id = doc.id;
  } catch (const std::exception& e) {
    fail(doc, "mda_engine", e);
  }
  return r;
}

std::vector<DocumentResult> score_documents(const std::vector<Document>& docs,
                                            const PipelineSettings& settings) {
  std::vector<DocumentResult> out(docs.size());
  std::vector<std::exception_ptr> errors(docs.size());
  const long n = static_cast<long>(docs.size());
  const int threads = settings.workers > 0 ? settings.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = score_document(docs[k], settings);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<DocumentResult> score_documents_serial(const std::vector<Document>& docs,
                                                   const PipelineSettings& settings) {
  std::vector<DocumentResult> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(score_document(d, settings));
  return out;
}

}  // namespace mdastyl
