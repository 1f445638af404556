#include "mdastyl/text.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

#include "mdastyl/error.hpp"

namespace mdastyl {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Three-byte UTF-8 punctuation we split like ASCII punctuation.
constexpr std::array<std::string_view, 7> kWidePunct = {
    "\xE2\x80\x9C",  // left double quote
    "\xE2\x80\x9D",  // right double quote
    "\xE2\x80\x98",  // left single quote
    "\xE2\x80\x99",  // right single quote / apostrophe
    "\xE2\x80\x94",  // em dash
    "\xE2\x80\x93",  // en dash
    "\xE2\x80\xA6",  // ellipsis
};
constexpr std::string_view kRightSingle = "\xE2\x80\x99";

bool is_ascii_punct(char c) {
  static constexpr std::string_view kSet = ".,;:!?'\"()[]{}-`";
  return kSet.find(c) != std::string_view::npos;
}

// Length of the punctuation unit starting at `pos`, 0 if none.
std::size_t punct_at(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return 0;
  if (is_ascii_punct(s[pos])) return 1;
  for (auto p : kWidePunct) {
    if (s.substr(pos, p.size()) == p) return p.size();
  }
  return 0;
}

// Length of the punctuation unit ending just before `end`, 0 if none.
std::size_t punct_before(std::string_view s, std::size_t end) {
  if (end == 0) return 0;
  if (is_ascii_punct(s[end - 1])) return 1;
  for (auto p : kWidePunct) {
    if (end >= p.size() && s.substr(end - p.size(), p.size()) == p) {
      return p.size();
    }
  }
  return 0;
}

bool is_opening(std::string_view unit) {
  return unit == "(" || unit == "[" || unit == "{" || unit == "\"" ||
         unit == "`" || unit == "'" || unit == "\xE2\x80\x9C" ||
         unit == "\xE2\x80\x98" || unit == kRightSingle;
}

bool is_closing(std::string_view unit) {
  return unit == ")" || unit == "]" || unit == "}" || unit == "\"" ||
         unit == "'" || unit == "\xE2\x80\x9D" || unit == kRightSingle ||
         unit == "." || unit == "," || unit == ";" || unit == ":" ||
         unit == "!" || unit == "?" || unit == "\xE2\x80\xA6";
}

bool is_leading_symbol(char c) { return c == '$' || c == '#'; }
bool is_trailing_symbol(char c) { return c == '%'; }

// "'s", "'m", "'d", "'re", "'ve", "'ll" with either apostrophe.
bool is_clitic(std::string_view piece) {
  std::size_t alen = 0;
  if (!piece.empty() && piece[0] == '\'') alen = 1;
  else if (piece.substr(0, kRightSingle.size()) == kRightSingle) alen = kRightSingle.size();
  if (alen == 0) return false;
  const std::string rest = fold_case(piece.substr(alen));
  return rest == "s" || rest == "m" || rest == "d" || rest == "re" ||
         rest == "ve" || rest == "ll";
}

bool all_punct(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t n = punct_at(s, i);
    if (n == 0) return false;
    i += n;
  }
  return !s.empty();
}

TokenKind classify(std::string_view s) {
  if (all_punct(s)) return TokenKind::kPunctuation;
  if (is_digit(s[0])) {
    const bool numeric = std::all_of(s.begin(), s.end(), [](char c) {
      return is_digit(c) || c == '.' || c == ',' || c == ':' || c == '/' ||
             c == '-';
    });
    if (numeric) return TokenKind::kNumber;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (is_ascii_alpha(s[i])) return TokenKind::kWord;
    if (c >= 0x80) {
      const std::size_t n = punct_at(s, i);
      if (n == 0) return TokenKind::kWord;
      i += n - 1;
    }
  }
  if (std::any_of(s.begin(), s.end(), is_digit)) return TokenKind::kNumber;
  return TokenKind::kSymbol;
}

class ChunkSplitter {
 public:
  ChunkSplitter(std::string_view text, std::vector<Token>& out)
      : text_(text), out_(out) {}

  void split(std::size_t b, std::size_t e) {
    // Peel closing punctuation from the right first so the clitic check
    // on the left sees the final core.
    std::vector<std::pair<std::size_t, std::size_t>> trailing;
    while (e > b) {
      const std::string_view core = text_.substr(b, e - b);
      if (text_[e - 1] == '.') {
        std::size_t dots = 0;
        while (dots < e - b && text_[e - 1 - dots] == '.') ++dots;
        if (dots >= 2) {
          trailing.emplace_back(e - dots, e);
          e -= dots;
          continue;
        }
        if (is_abbreviation(core)) break;
      }
      if (is_trailing_symbol(text_[e - 1]) && e - b > 1) {
        trailing.emplace_back(e - 1, e);
        --e;
        continue;
      }
      const std::size_t n = punct_before(text_, e);
      if (n == 0 || e - n < b) break;
      const std::string_view unit = text_.substr(e - n, n);
      if (!is_closing(unit)) break;
      trailing.emplace_back(e - n, e);
      e -= n;
    }

    while (b < e) {
      const std::string_view core = text_.substr(b, e - b);
      if (is_clitic(core)) break;
      if (is_leading_symbol(text_[b]) && e - b > 1) {
        emit(b, b + 1);
        ++b;
        continue;
      }
      const std::size_t n = punct_at(text_, b);
      if (n == 0 || b + n > e) break;
      const std::string_view unit = text_.substr(b, n);
      if (!is_opening(unit)) break;
      if (e - b == n) break;  // a lone unit is handled as the core
      emit(b, b + n);
      b += n;
    }

    if (b < e) split_core(b, e);
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
      emit(it->first, it->second);
    }
  }

 private:
  // Internal separators: dashes, ellipses and commas/colons not inside numbers.
  void split_core(std::size_t b, std::size_t e) {
    std::size_t start = b;
    std::size_t i = b;
    while (i < e) {
      std::size_t sep = 0;
      const std::string_view rest = text_.substr(i, e - i);
      if (rest.substr(0, 2) == "--") {
        sep = 2;
        while (i + sep < e && text_[i + sep] == '-') ++sep;
      } else if (rest.substr(0, 3) == "\xE2\x80\x94" ||
                 rest.substr(0, 3) == "\xE2\x80\x93" ||
                 rest.substr(0, 3) == "\xE2\x80\xA6") {
        sep = 3;
      } else if (rest.substr(0, 3) == "...") {
        sep = 3;
        while (i + sep < e && text_[i + sep] == '.') ++sep;
      } else if (text_[i] == ',' || text_[i] == ';' || text_[i] == ':' ||
                 text_[i] == '!' || text_[i] == '?' || text_[i] == '"' ||
                 text_[i] == '(' || text_[i] == ')') {
        const bool in_number = (text_[i] == ',' || text_[i] == ':') && i > b &&
                               i + 1 < e && is_digit(text_[i - 1]) &&
                               is_digit(text_[i + 1]);
        if (!in_number && e - b > 1) sep = 1;
      }
      if (sep == 0) {
        ++i;
        continue;
      }
      if (i > start) emit_word(start, i);
      emit(i, i + sep);
      i += sep;
      start = i;
    }
    if (start < e) emit_word(start, e);
  }

  void emit_word(std::size_t b, std::size_t e) {
    const std::string_view piece = text_.substr(b, e - b);
    const std::string lower = fold_case(piece);
    // n't
    for (std::string_view neg : {std::string_view("n't"), std::string_view("n\xE2\x80\x99t")}) {
      if (lower.size() > neg.size() && lower.ends_with(neg)) {
        emit(b, e - neg.size());
        emit(e - neg.size(), e);
        return;
      }
    }
    for (std::size_t k = 1; k < piece.size(); ++k) {
      std::size_t alen = 0;
      if (piece[k] == '\'') alen = 1;
      else if (piece.substr(k, kRightSingle.size()) == kRightSingle) alen = kRightSingle.size();
      if (alen == 0) continue;
      if (is_clitic(piece.substr(k))) {
        emit(b, b + k);
        emit(b + k, e);
        return;
      }
    }
    emit(b, e);
  }

  void emit(std::size_t b, std::size_t e) {
    Token t;
    t.surface = std::string(text_.substr(b, e - b));
    t.kind = classify(t.surface);
    t.offset = b;
    out_.push_back(std::move(t));
  }

  std::string_view text_;
  std::vector<Token>& out_;
};

const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> kList = {
      "mr",   "mrs", "ms",  "dr",   "prof", "sr",  "jr",  "st",
      "gen",  "gov", "sen", "rep",  "col",  "lt",  "sgt", "capt",
      "inc",  "corp", "co", "ltd",  "vs",   "etc", "jan", "feb",
      "mar",  "apr", "jun", "jul",  "aug",  "sep", "sept", "oct",
      "nov",  "dec", "mt",  "ave",  "dept", "est", "approx", "fig"};
  return kList;
}

bool is_sentence_terminal(std::string_view s) {
  return s == "." || s == "!" || s == "?" || s == "\xE2\x80\xA6" ||
         (s.size() >= 2 && s.find_first_not_of('.') == std::string_view::npos);
}

bool is_closer(std::string_view s) {
  return s == "\"" || s == "'" || s == ")" || s == "]" ||
         s == "\xE2\x80\x9D" || s == kRightSingle;
}

bool opens_sentence(std::string_view s) {
  if (s.empty()) return false;
  if ((s[0] >= 'A' && s[0] <= 'Z') || is_digit(s[0])) return true;
  return s == "\"" || s == "'" || s == "(" || s == "[" || s == "`" ||
         s == "\xE2\x80\x9C" || s == "\xE2\x80\x98";
}

}  // namespace

TokenKind classify_token(std::string_view surface) { return surface.empty() ? TokenKind::kSymbol : classify(surface); }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  ChunkSplitter splitter(text, out);
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    splitter.split(i, j);
    i = j;
  }
  return out;
}

std::string detokenize(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (out.size() < t.offset) {
      out.append(t.offset - out.size(), ' ');
    } else if (!out.empty() && out.size() > t.offset) {
      out.push_back(' ');
    }
    out += t.surface;
  }
  return out;
}

std::vector<SentenceSpan> segment_sentences(std::span<const Token> tokens) {
  std::vector<SentenceSpan> spans;
  std::size_t begin = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!is_sentence_terminal(tokens[i].surface)) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < tokens.size() && is_closer(tokens[end].surface) &&
           tokens[end].offset == tokens[end - 1].offset + tokens[end - 1].surface.size()) {
      ++end;
    }
    if (end < tokens.size()) {
      const Token& prev = tokens[end - 1];
      const bool gap = tokens[end].offset > prev.offset + prev.surface.size();
      if (gap && opens_sentence(tokens[end].surface)) {
        spans.push_back({begin, end});
        begin = end;
      }
    }
    i = end;
  }
  if (begin < tokens.size()) spans.push_back({begin, tokens.size()});
  return spans;
}

bool is_abbreviation(std::string_view surface) {
  if (surface.size() < 2 || surface.back() != '.') return false;
  const std::string lower = fold_case(surface.substr(0, surface.size() - 1));
  if (abbreviations().contains(lower)) return true;
  // Initialisms: "u.s.", "e.g.", "j."
  for (std::size_t i = 0; i < surface.size(); i += 2) {
    if (!is_ascii_alpha(surface[i])) return false;
    if (i + 1 >= surface.size() || surface[i + 1] != '.') return false;
  }
  return true;
}

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::size_t n = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      n = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      n = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      n = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + n >= text.size()) return false;
    for (std::size_t k = 1; k <= n; ++k) {
      const auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if ((n == 1 && cp < 0x80) || (n == 2 && cp < 0x800) ||
        (n == 3 && cp < 0x10000) || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += n + 1;
  }
  return true;
}

std::size_t utf8_length(std::string_view text) {
  return static_cast<std::size_t>(std::count_if(text.begin(), text.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string fold_case(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

AnalysisWindow window(std::span<const Token> tokens, std::size_t size) {
  if (size == 0) throw std::invalid_argument("window size must be at least 1");
  AnalysisWindow w;
  w.window_size = size;
  const std::size_t n = std::min(size, tokens.size());
  w.tokens.assign(tokens.begin(), tokens.begin() + static_cast<std::ptrdiff_t>(n));
  w.truncated = tokens.size() > size;
  return w;
}

SurfaceStats surface_stats(std::span<const Token> tokens) {
  std::size_t words = 0;
  std::size_t chars = 0;
  std::unordered_set<std::string> types;
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::kWord) continue;
    ++words;
    chars += utf8_length(t.surface);
    types.insert(fold_case(t.surface));
  }
  if (words == 0) throw DataError("surface statistics need at least one word token");
  return {static_cast<double>(chars) / static_cast<double>(words), types.size()};
}

}  // namespace mdastyl
