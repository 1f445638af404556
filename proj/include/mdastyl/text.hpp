#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mdastyl {

enum class TokenKind { kWord, kPunctuation, kNumber, kSymbol };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::kWord;
  std::size_t offset = 0;  // byte offset into the source text

  bool operator==(const Token&) const = default;
};

/// Half-open token range [begin, end) forming one sentence.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const SentenceSpan&) const = default;
};

/// Splits text into word, number, punctuation and symbol tokens.
///
/// Every byte of `text` that is not whitespace ends up in exactly one token
/// surface, so the input is recoverable from surfaces plus offsets.
/// Clitics split PTB-style ("don't" -> "do" "n't", "it's" -> "it" "'s");
/// hyphenated compounds and known abbreviations ("U.S.", "Mr.") stay whole.
std::vector<Token> tokenize(std::string_view text);

/// Kind the tokenizer would assign to one surface.
TokenKind classify_token(std::string_view surface);

/// Rebuilds text from tokens using their offsets; gaps become spaces, so the
/// result equals the source text whenever its whitespace was plain spaces.
std::string detokenize(std::span<const Token> tokens);

/// Sentence boundaries. A sentence ends at `.`, `!`, `?` or `...` (optionally
/// followed by closing quotes/brackets) when the next token is separated by
/// whitespace and starts with a capital letter, digit or opening quote.
/// Abbreviation tokens never end a sentence.
std::vector<SentenceSpan> segment_sentences(std::span<const Token> tokens);

bool is_abbreviation(std::string_view surface);

bool is_valid_utf8(std::string_view text);

/// Number of Unicode code points (assumes valid UTF-8).
std::size_t utf8_length(std::string_view text);

/// ASCII lower-casing; non-ASCII bytes pass through.
std::string fold_case(std::string_view text);

inline constexpr std::size_t kDefaultWindowSize = 400;

struct AnalysisWindow {
  std::vector<Token> tokens;
  bool truncated = false;
  std::size_t window_size = kDefaultWindowSize;
};

/// First min(size, tokens.size()) tokens. Throws std::invalid_argument on size 0.
AnalysisWindow window(std::span<const Token> tokens,
                      std::size_t size = kDefaultWindowSize);

struct SurfaceStats {
  double awl = 0.0;      // mean code points per word token
  std::size_t ttr = 0;   // distinct case-folded word types
};

/// Throws DataError when the window holds no word tokens.
SurfaceStats surface_stats(std::span<const Token> tokens);

}  // namespace mdastyl
