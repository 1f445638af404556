#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mdastyl/text.hpp"

namespace mdastyl {

/// The 45 Penn Treebank part-of-speech tags, in a fixed order.
inline constexpr std::array<std::string_view, 45> kPennTags = {
    "CC",  "CD",  "DT",  "EX",   "FW",  "IN",  "JJ",  "JJR", "JJS",
    "LS",  "MD",  "NN",  "NNS",  "NNP", "NNPS", "PDT", "POS", "PRP",
    "PRP$", "RB", "RBR", "RBS",  "RP",  "SYM", "TO",  "UH",  "VB",
    "VBD", "VBG", "VBN", "VBP",  "VBZ", "WDT", "WP",  "WP$", "WRB",
    "#",   "$",   ".",   ",",    ":",   "(",   ")",   "``",  "''"};

/// A tag from the closed Penn inventory.
class PosTag {
 public:
  constexpr PosTag() = default;

  /// Throws std::invalid_argument for symbols outside the inventory.
  explicit PosTag(std::string_view symbol);

  static std::optional<PosTag> parse(std::string_view symbol);
  static constexpr PosTag from_index(std::uint8_t i) { return PosTag(i, 0); }

  std::string_view str() const { return kPennTags[index_]; }
  std::uint8_t index() const { return index_; }

  bool operator==(const PosTag&) const = default;

 private:
  constexpr PosTag(std::uint8_t i, int) : index_(i) {}
  std::uint8_t index_ = 11;  // NN
};

struct TaggedToken {
  Token token;
  PosTag tag;
};

struct TaggedSentence {
  std::vector<std::string> words;
  std::vector<std::string> tags;
};

/// One sentence per line as space-separated word/TAG pairs (split on the
/// last '/'); `#` lines are comments.
std::vector<TaggedSentence> read_treebank(std::istream& in);
std::vector<TaggedSentence> load_treebank(const std::filesystem::path& path);

/// Parses inline `word/TAG word/TAG ...` text into tagged tokens whose
/// offsets reproduce the text with single spaces. Throws FormatError on a
/// missing or unknown tag.
std::vector<TaggedToken> parse_tagged_text(std::string_view text);

struct TaggerMetadata {
  std::string corpus;
  double heldout_accuracy = 0.0;
  std::size_t train_sentences = 0;
  std::size_t heldout_sentences = 0;
  int epochs = 0;
  std::uint64_t seed = 0;

  bool operator==(const TaggerMetadata&) const = default;
};

/// Averaged-perceptron weights plus a tag dictionary for frequent,
/// unambiguous words. Immutable once trained; safe to share across threads.
struct TaggerModel {
  struct Weight {
    std::uint8_t tag;
    double value;
    bool operator==(const Weight&) const = default;
  };
  std::unordered_map<std::string, std::vector<Weight>> weights;  // sorted by tag
  std::unordered_map<std::string, PosTag> dictionary;
  std::vector<std::uint8_t> classes;  // tags seen in training, ascending
  TaggerMetadata metadata;

  bool operator==(const TaggerModel&) const = default;
};

struct TrainOptions {
  int epochs = 5;
  std::uint64_t seed = 0;
  double heldout_fraction = 0.1;
  std::string corpus_name = "unnamed";
  std::size_t dictionary_min_frequency = 20;
  double dictionary_min_purity = 0.97;
};

/// Greedy left-to-right averaged perceptron. The sentences are split with a
/// seeded shuffle into training and held-out parts; the held-out accuracy is
/// recorded in the metadata. Throws DataError on empty input or an unknown
/// gold tag (naming the sentence index).
TaggerModel train(const std::vector<TaggedSentence>& sentences,
                  const TrainOptions& options = {});

/// Tags one sentence of words.
std::vector<PosTag> tag_words(std::span<const std::string> words, const TaggerModel& model);

/// Tags a token sequence, sentence by sentence.
std::vector<TaggedToken> tag(std::span<const Token> tokens, const TaggerModel& model);

/// Fraction of tokens whose predicted tag equals the gold tag.
double accuracy(const std::vector<TaggedSentence>& gold, const TaggerModel& model);

/// Accuracy of tagging each word with its most frequent training tag
/// (unknown words: the overall most frequent tag).
double most_frequent_tag_baseline(const std::vector<TaggedSentence>& train,
                                  const std::vector<TaggedSentence>& eval);

inline constexpr std::string_view kModelMagic = "MDATAG1";
inline constexpr int kModelFormatVersion = 1;

void write_model(std::ostream& out, const TaggerModel& model);
TaggerModel read_model(std::istream& in);
void save_model(const TaggerModel& model, const std::filesystem::path& path);
TaggerModel load_model(const std::filesystem::path& path);

/// Stable identifier for outputs: corpus name plus a content hash.
std::string model_stamp(const TaggerModel& model);

}  // namespace mdastyl
