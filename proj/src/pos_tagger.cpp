#include "mdastyl/pos_tagger.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mdastyl/error.hpp"
#include "mdastyl/util.hpp"

namespace mdastyl {

PosTag::PosTag(std::string_view symbol) {
  const auto t = parse(symbol);
  if (!t) throw std::invalid_argument("not a Penn Treebank tag: " + std::string(symbol));
  *this = *t;
}

std::optional<PosTag> PosTag::parse(std::string_view symbol) {
  for (std::size_t i = 0; i < kPennTags.size(); ++i) {
    if (kPennTags[i] == symbol) return from_index(static_cast<std::uint8_t>(i));
  }
  return std::nullopt;
}

std::vector<TaggedSentence> read_treebank(std::istream& in) {
  std::vector<TaggedSentence> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    TaggedSentence s;
    std::istringstream row(text);
    std::string item;
    while (row >> item) {
      const auto slash = item.rfind('/');
      if (slash == std::string::npos || slash == 0 || slash + 1 == item.size()) {
        throw FormatError("treebank: malformed token '" + item + "' in sentence " +
                          std::to_string(out.size()));
      }
      s.words.push_back(item.substr(0, slash));
      s.tags.push_back(item.substr(slash + 1));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<TaggedSentence> load_treebank(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open treebank: " + path.string());
  return read_treebank(in);
}

std::vector<TaggedToken> parse_tagged_text(std::string_view text) {
  std::vector<TaggedToken> out;
  std::istringstream in{std::string(text)};
  std::string item;
  std::size_t offset = 0;
  while (in >> item) {
    const auto slash = item.rfind('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == item.size()) {
      throw FormatError("tagged text: malformed token '" + item + "'");
    }
    const auto tag = PosTag::parse(std::string_view(item).substr(slash + 1));
    if (!tag) throw FormatError("tagged text: unknown tag in '" + item + "'");
    Token t;
    t.surface = item.substr(0, slash);
    t.kind = classify_token(t.surface);
    t.offset = offset;
    offset += t.surface.size() + 1;
    out.push_back({std::move(t), *tag});
  }
  return out;
}

namespace {

constexpr std::string_view kRightSingle = "\xE2\x80\x99";

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string normalize(std::string_view word) {
  std::string s(word);
  for (std::size_t pos = s.find(kRightSingle); pos != std::string::npos;
       pos = s.find(kRightSingle, pos)) {
    s.replace(pos, kRightSingle.size(), "'");
  }
  if (s.size() == 4 && std::all_of(s.begin(), s.end(), is_digit)) return "!YEAR";
  if (!s.empty() && is_digit(s[0])) return "!DIGITS";
  return fold_case(s);
}

std::string_view suffix(std::string_view s, std::size_t n) {
  return s.size() <= n ? s : s.substr(s.size() - n);
}

std::string_view prefix(std::string_view s, std::size_t n) {
  return s.size() <= n ? s : s.substr(0, n);
}

// Feature template for position `i` of a sentence. `ctx` holds normalized
// words padded with two boundary markers on each side.
void extract_features(std::span<const std::string> words, std::span<const std::string> ctx,
                      std::size_t i, std::string_view prev, std::string_view prev2,
                      std::vector<std::string>& feats) {
  feats.clear();
  const std::string_view raw = words[i];
  const std::string& w = ctx[i + 2];
  auto add = [&](std::string_view a, std::string_view b) {
    std::string f;
    f.reserve(a.size() + b.size() + 1);
    f.append(a);
    f.push_back(' ');
    f.append(b);
    feats.push_back(std::move(f));
  };
  feats.emplace_back("bias");
  add("w", raw);
  add("l", w);
  for (std::size_t n = 1; n <= 4; ++n) {
    if (w.size() > n || n == 1) {
      add("s" + std::to_string(n), suffix(w, n));
      add("p" + std::to_string(n), prefix(w, n));
    }
  }
  const bool has_digit = std::any_of(raw.begin(), raw.end(), is_digit);
  const bool has_hyphen = raw.find('-') != std::string_view::npos && raw.size() > 1;
  const bool cap = !raw.empty() && is_upper(raw[0]);
  const bool all_caps = raw.size() > 1 && std::none_of(raw.begin(), raw.end(), is_lower) &&
                        std::any_of(raw.begin(), raw.end(), is_upper);
  if (has_digit) feats.emplace_back("f digit");
  if (has_hyphen) feats.emplace_back("f hyphen");
  if (cap) feats.emplace_back(i == 0 ? "f initcap" : "f cap");
  if (all_caps) feats.emplace_back("f allcaps");
  add("t-1", prev);
  add("t-2", prev2);
  add("t-1t-2", std::string(prev) + " " + std::string(prev2));
  add("t-1w", std::string(prev) + " " + w);
  add("w-1", ctx[i + 1]);
  add("s3-1", suffix(ctx[i + 1], 3));
  add("w-2", ctx[i]);
  add("w+1", ctx[i + 3]);
  add("s3+1", suffix(ctx[i + 3], 3));
  add("w+2", ctx[i + 4]);
}

std::vector<std::string> context_of(std::span<const std::string> words) {
  std::vector<std::string> ctx;
  ctx.reserve(words.size() + 4);
  ctx.emplace_back("-START2-");
  ctx.emplace_back("-START-");
  for (const auto& w : words) ctx.push_back(normalize(w));
  ctx.emplace_back("-END-");
  ctx.emplace_back("-END2-");
  return ctx;
}

std::uint8_t argmax(const std::array<double, kPennTags.size()>& scores,
                    std::span<const std::uint8_t> classes) {
  std::uint8_t best = classes.empty() ? 11 : classes.front();
  double best_score = -INFINITY;
  for (std::uint8_t c : classes) {
    if (scores[c] > best_score) {
      best_score = scores[c];
      best = c;
    }
  }
  return best;
}

class Trainer {
 public:
  struct Cell {
    std::uint8_t tag;
    double weight = 0;
    double total = 0;
    std::int64_t stamp = 0;
  };

  std::uint8_t predict(const std::vector<std::string>& feats,
                       std::span<const std::uint8_t> classes) const {
    std::array<double, kPennTags.size()> scores{};
    for (const auto& f : feats) {
      const auto it = cells_.find(f);
      if (it == cells_.end()) continue;
      for (const Cell& c : it->second) scores[c.tag] += c.weight;
    }
    return argmax(scores, classes);
  }

  void update(std::uint8_t truth, std::uint8_t guess, const std::vector<std::string>& feats) {
    ++instances_;
    if (truth == guess) return;
    for (const auto& f : feats) {
      auto& row = cells_[f];
      bump(row, truth, 1.0);
      bump(row, guess, -1.0);
    }
  }

  void average_into(TaggerModel& model) const {
    for (const auto& [feat, row] : cells_) {
      std::vector<TaggerModel::Weight> out;
      for (const Cell& c : row) {
        const double total = c.total + static_cast<double>(instances_ - c.stamp) * c.weight;
        const double avg = instances_ > 0 ? total / static_cast<double>(instances_) : 0.0;
        if (avg != 0.0) out.push_back({c.tag, avg});
      }
      if (out.empty()) continue;
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.tag < b.tag; });
      model.weights.emplace(feat, std::move(out));
    }
  }

 private:
  void bump(std::vector<Cell>& row, std::uint8_t tag, double v) {
    auto it = std::find_if(row.begin(), row.end(), [&](const Cell& c) { return c.tag == tag; });
    if (it == row.end()) {
      row.push_back(Cell{tag, 0.0, 0.0, instances_});
      it = row.end() - 1;
    }
    it->total += static_cast<double>(instances_ - it->stamp) * it->weight;
    it->stamp = instances_;
    it->weight += v;
  }

  std::unordered_map<std::string, std::vector<Cell>> cells_;
  std::int64_t instances_ = 0;
};

struct EncodedSentence {
  std::vector<std::string> words;
  std::vector<std::uint8_t> tags;
};

}  // namespace

TaggerModel train(const std::vector<TaggedSentence>& sentences, const TrainOptions& options) {
  if (sentences.empty()) throw DataError("tagger training needs at least one sentence");
  if (options.epochs < 1) throw std::invalid_argument("epochs must be positive");

  std::vector<EncodedSentence> encoded;
  encoded.reserve(sentences.size());
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    const auto& in = sentences[s];
    if (in.words.size() != in.tags.size()) {
      throw DataError("training sentence " + std::to_string(s) + ": word/tag count mismatch");
    }
    EncodedSentence e;
    e.words = in.words;
    for (const auto& t : in.tags) {
      const auto tag = PosTag::parse(t);
      if (!tag) {
        throw DataError("training sentence " + std::to_string(s) + ": unknown tag '" + t + "'");
      }
      e.tags.push_back(tag->index());
    }
    encoded.push_back(std::move(e));
  }

  const auto order = seeded_permutation(encoded.size(), options.seed);
  const auto heldout_n = static_cast<std::size_t>(
      std::floor(static_cast<double>(encoded.size()) * options.heldout_fraction));
  std::vector<std::size_t> train_idx(order.begin() + static_cast<std::ptrdiff_t>(heldout_n), order.end());
  std::vector<std::size_t> heldout_idx(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(heldout_n));
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(heldout_idx.begin(), heldout_idx.end());

  TaggerModel model;

  // Tag dictionary from the training part.
  std::map<std::string, std::array<std::size_t, kPennTags.size()>> counts;
  std::array<bool, kPennTags.size()> seen{};
  for (std::size_t idx : train_idx) {
    const auto& e = encoded[idx];
    for (std::size_t i = 0; i < e.words.size(); ++i) {
      counts[e.words[i]][e.tags[i]] += 1;
      seen[e.tags[i]] = true;
    }
  }
  for (std::size_t t = 0; t < seen.size(); ++t) {
    if (seen[t]) model.classes.push_back(static_cast<std::uint8_t>(t));
  }
  for (const auto& [word, c] : counts) {
    std::size_t total = 0;
    std::size_t best = 0;
    std::size_t best_tag = 0;
    for (std::size_t t = 0; t < c.size(); ++t) {
      total += c[t];
      if (c[t] > best) {
        best = c[t];
        best_tag = t;
      }
    }
    if (total >= options.dictionary_min_frequency &&
        static_cast<double>(best) / static_cast<double>(total) >= options.dictionary_min_purity) {
      model.dictionary.emplace(word, PosTag::from_index(static_cast<std::uint8_t>(best_tag)));
    }
  }

  Trainer trainer;
  std::vector<std::string> feats;
  std::vector<std::size_t> epoch_order = train_idx;
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    const auto perm = seeded_permutation(train_idx.size(),
                                         options.seed + 1 + static_cast<std::uint64_t>(epoch));
    for (std::size_t k = 0; k < perm.size(); ++k) epoch_order[k] = train_idx[perm[k]];
    for (std::size_t idx : epoch_order) {
      const auto& e = encoded[idx];
      const auto ctx = context_of(e.words);
      std::string prev = "-START-";
      std::string prev2 = "-START2-";
      for (std::size_t i = 0; i < e.words.size(); ++i) {
        std::uint8_t guess;
        if (const auto it = model.dictionary.find(e.words[i]); it != model.dictionary.end()) {
          guess = it->second.index();
        } else {
          extract_features(e.words, ctx, i, prev, prev2, feats);
          guess = trainer.predict(feats, model.classes);
          trainer.update(e.tags[i], guess, feats);
        }
        prev2 = std::move(prev);
        prev = std::string(kPennTags[guess]);
      }
    }
  }
  trainer.average_into(model);

  model.metadata.corpus = options.corpus_name;
  model.metadata.epochs = options.epochs;
  model.metadata.seed = options.seed;
  model.metadata.train_sentences = train_idx.size();
  model.metadata.heldout_sentences = heldout_idx.size();
  std::vector<TaggedSentence> eval;
  for (std::size_t idx : heldout_idx.empty() ? train_idx : heldout_idx) eval.push_back(sentences[idx]);
  model.metadata.heldout_accuracy = accuracy(eval, model);
  return model;
}

std::vector<PosTag> tag_words(std::span<const std::string> words, const TaggerModel& model) {
  std::vector<PosTag> out;
  out.reserve(words.size());
  if (words.empty()) return out;
  const auto ctx = context_of(words);
  std::vector<std::string> feats;
  std::string prev = "-START-";
  std::string prev2 = "-START2-";
  for (std::size_t i = 0; i < words.size(); ++i) {
    PosTag t;
    if (const auto it = model.dictionary.find(words[i]); it != model.dictionary.end()) {
      t = it->second;
    } else {
      extract_features(words, ctx, i, prev, prev2, feats);
      std::array<double, kPennTags.size()> scores{};
      for (const auto& f : feats) {
        const auto w = model.weights.find(f);
        if (w == model.weights.end()) continue;
        for (const auto& cell : w->second) scores[cell.tag] += cell.value;
      }
      t = PosTag::from_index(argmax(scores, model.classes));
    }
    out.push_back(t);
    prev2 = std::move(prev);
    prev = std::string(t.str());
  }
  return out;
}

std::vector<TaggedToken> tag(std::span<const Token> tokens, const TaggerModel& model) {
  std::vector<TaggedToken> out;
  out.reserve(tokens.size());
  std::vector<std::string> words;
  for (const auto& span : segment_sentences(tokens)) {
    words.clear();
    for (std::size_t i = span.begin; i < span.end; ++i) words.push_back(tokens[i].surface);
    const auto tags = tag_words(words, model);
    for (std::size_t i = span.begin; i < span.end; ++i) {
      out.push_back({tokens[i], tags[i - span.begin]});
    }
  }
  return out;
}

double accuracy(const std::vector<TaggedSentence>& gold, const TaggerModel& model) {
  std::size_t correct = 0;
  std::size_t total = 0;
  for (const auto& s : gold) {
    const auto predicted = tag_words(s.words, model);
    for (std::size_t i = 0; i < s.tags.size(); ++i) {
      ++total;
      if (predicted[i].str() == s.tags[i]) ++correct;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

double most_frequent_tag_baseline(const std::vector<TaggedSentence>& train,
                                  const std::vector<TaggedSentence>& eval) {
  std::unordered_map<std::string, std::map<std::string, std::size_t>> counts;
  std::map<std::string, std::size_t> overall;
  for (const auto& s : train) {
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      ++counts[s.words[i]][s.tags[i]];
      ++overall[s.tags[i]];
    }
  }
  auto best_of = [](const std::map<std::string, std::size_t>& m) {
    std::string best;
    std::size_t n = 0;
    for (const auto& [t, c] : m) {
      if (c > n) {
        n = c;
        best = t;
      }
    }
    return best;
  };
  const std::string fallback = best_of(overall);
  std::size_t correct = 0;
  std::size_t total = 0;
  for (const auto& s : eval) {
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      const auto it = counts.find(s.words[i]);
      const std::string guess = it == counts.end() ? fallback : best_of(it->second);
      ++total;
      if (guess == s.tags[i]) ++correct;
    }
  }
  return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
}

// Model file layout, one item per line:
//   MDATAG1
//   format <version>
//   corpus <name>
//   accuracy <%.17g>
//   epochs <n> / seed <n> / train_sentences <n> / heldout_sentences <n>
//   classes <n>, then one tag per line
//   dictionary <n>, then "word<TAB>tag" lines sorted by word
//   features <n>, then "feature<TAB>tag=hexfloat<TAB>..." sorted by feature
//   end
void write_model(std::ostream& out, const TaggerModel& model) {
  char buf[64];
  out << kModelMagic << '\n';
  out << "format " << kModelFormatVersion << '\n';
  out << "corpus " << model.metadata.corpus << '\n';
  out << "accuracy " << format_exact(model.metadata.heldout_accuracy) << '\n';
  out << "epochs " << model.metadata.epochs << '\n';
  out << "seed " << model.metadata.seed << '\n';
  out << "train_sentences " << model.metadata.train_sentences << '\n';
  out << "heldout_sentences " << model.metadata.heldout_sentences << '\n';
  out << "classes " << model.classes.size() << '\n';
  for (auto c : model.classes) out << kPennTags[c] << '\n';
  std::vector<std::pair<std::string, PosTag>> dict(model.dictionary.begin(), model.dictionary.end());
  std::sort(dict.begin(), dict.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  out << "dictionary " << dict.size() << '\n';
  for (const auto& [w, t] : dict) out << w << '\t' << t.str() << '\n';
  std::vector<const std::string*> feats;
  feats.reserve(model.weights.size());
  for (const auto& kv : model.weights) feats.push_back(&kv.first);
  std::sort(feats.begin(), feats.end(), [](auto a, auto b) { return *a < *b; });
  out << "features " << feats.size() << '\n';
  for (const auto* f : feats) {
    out << *f;
    for (const auto& w : model.weights.at(*f)) {
      std::snprintf(buf, sizeof buf, "%a", w.value);
      out << '\t' << kPennTags[w.tag] << '=' << buf;
    }
    out << '\n';
  }
  out << "end\n";
}

namespace {

class ModelReader {
 public:
  explicit ModelReader(std::istream& in) : in_(in) {}

  std::string line() {
    std::string l;
    if (!std::getline(in_, l)) throw FormatError("tagger model: unexpected end of file");
    ++lineno_;
    return l;
  }

  std::string keyed(std::string_view key) {
    const std::string l = line();
    if (!l.starts_with(std::string(key) + " ")) {
      throw FormatError("tagger model line " + std::to_string(lineno_) + ": expected '" +
                        std::string(key) + "'");
    }
    return l.substr(key.size() + 1);
  }

  std::size_t count(std::string_view key) {
    const std::string v = keyed(key);
    try {
      std::size_t pos = 0;
      const auto n = std::stoull(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return n;
    } catch (const std::exception&) {
      throw FormatError("tagger model: bad count for '" + std::string(key) + "'");
    }
  }

  PosTag tag(std::string_view s) const {
    const auto t = PosTag::parse(s);
    if (!t) throw FormatError("tagger model: unknown tag '" + std::string(s) + "'");
    return *t;
  }

 private:
  std::istream& in_;
  std::size_t lineno_ = 0;
};

}  // namespace

TaggerModel read_model(std::istream& in) {
  ModelReader r(in);
  std::string magic;
  if (!std::getline(in, magic) || magic != kModelMagic) {
    throw FormatError("not a tagger model (missing " + std::string(kModelMagic) + " header)");
  }
  const std::string format = r.keyed("format");
  if (format != std::to_string(kModelFormatVersion)) {
    throw FormatError("incompatible tagger model format version " + format + " (expected " +
                      std::to_string(kModelFormatVersion) + ")");
  }
  TaggerModel m;
  m.metadata.corpus = r.keyed("corpus");
  m.metadata.heldout_accuracy = parse_double(r.keyed("accuracy"), "accuracy");
  m.metadata.epochs = static_cast<int>(r.count("epochs"));
  m.metadata.seed = r.count("seed");
  m.metadata.train_sentences = r.count("train_sentences");
  m.metadata.heldout_sentences = r.count("heldout_sentences");
  const std::size_t nclasses = r.count("classes");
  for (std::size_t i = 0; i < nclasses; ++i) m.classes.push_back(r.tag(r.line()).index());
  const std::size_t ndict = r.count("dictionary");
  for (std::size_t i = 0; i < ndict; ++i) {
    const std::string l = r.line();
    const auto tab = l.find('\t');
    if (tab == std::string::npos) throw FormatError("tagger model: bad dictionary entry");
    m.dictionary.emplace(l.substr(0, tab), r.tag(std::string_view(l).substr(tab + 1)));
  }
  const std::size_t nfeat = r.count("features");
  m.weights.reserve(nfeat);
  for (std::size_t i = 0; i < nfeat; ++i) {
    const auto fields = split(r.line(), '\t');
    if (fields.size() < 2) throw FormatError("tagger model: feature without weights");
    std::vector<TaggerModel::Weight> row;
    for (std::size_t k = 1; k < fields.size(); ++k) {
      const auto eq = fields[k].find('=');
      if (eq == std::string::npos) throw FormatError("tagger model: bad weight entry");
      const double v = parse_double(std::string_view(fields[k]).substr(eq + 1), "weight");
      if (!std::isfinite(v)) throw FormatError("tagger model: non-finite weight");
      row.push_back({r.tag(std::string_view(fields[k]).substr(0, eq)).index(), v});
    }
    m.weights.emplace(fields[0], std::move(row));
  }
  if (r.line() != "end") throw FormatError("tagger model: missing end marker");
  return m;
}

void save_model(const TaggerModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write tagger model: " + path.string());
  write_model(out, model);
  out.flush();
  if (!out) throw DataError("failed writing tagger model: " + path.string());
}

TaggerModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open tagger model: " + path.string());
  return read_model(in);
}

std::string model_stamp(const TaggerModel& model) {
  std::ostringstream s;
  write_model(s, model);
  return std::string(kModelMagic) + ":" + model.metadata.corpus + ":" + hex64(fnv1a(s.str()));
}

}  // namespace mdastyl
