#include "mdastyl/rules.hpp"

#include <algorithm>
#include <bitset>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "mdastyl/error.hpp"
#include "mdastyl/util.hpp"

namespace mdastyl {

namespace {

[[noreturn]] void syntax(std::size_t line, const std::string& what) {
  throw FormatError("rule line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(const std::string& line) {
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] != '#') continue;
    const bool at_start = i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t';
    const bool ends_word = i + 1 == line.size() || line[i + 1] == ' ' || line[i + 1] == '\t';
    if (at_start && ends_word) return line.substr(0, i);
  }
  return line;
}

std::vector<std::string> words_of(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Predicate parse_predicate(std::string_view text, const WordLists& lists, std::size_t line) {
  Predicate p;
  if (text.starts_with("!")) {
    p.negated = true;
    text.remove_prefix(1);
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon + 1 == text.size()) {
    syntax(line, "bad predicate '" + std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  if (kind == "t") {
    p.kind = Predicate::Kind::kTag;
    p.values = split(arg, '|');
    for (const auto& v : p.values) {
      if (v.ends_with('*') && v.size() > 1) continue;
      if (!PosTag::parse(v)) syntax(line, "unknown tag '" + v + "'");
    }
  } else if (kind == "w") {
    p.kind = Predicate::Kind::kWord;
    p.values = split(arg, '|');
  } else if (kind == "l" || kind == "lem") {
    p.kind = kind == "l" ? Predicate::Kind::kList : Predicate::Kind::kLemma;
    p.values = {std::string(arg)};
    if (!lists.contains(arg)) syntax(line, "unknown word list '" + std::string(arg) + "'");
  } else if (kind == "sfx") {
    p.kind = Predicate::Kind::kSuffix;
    p.values = split(arg, '|');
  } else if (kind == "len") {
    p.kind = Predicate::Kind::kMinLength;
    try {
      p.number = std::stoul(std::string(arg));
    } catch (const std::exception&) {
      syntax(line, "bad length '" + std::string(arg) + "'");
    }
  } else if (kind == "f") {
    p.kind = Predicate::Kind::kFeature;
    const auto f = feature_index(arg);
    if (!f) syntax(line, "unknown feature in predicate '" + std::string(arg) + "'");
    p.number = *f;
    p.values = {std::string(arg)};
  } else {
    syntax(line, "unknown predicate kind '" + std::string(kind) + "'");
  }
  for (const auto& v : p.values) {
    if (v.empty()) syntax(line, "empty value in '" + std::string(text) + "'");
  }
  return p;
}

TokenTest parse_test(std::string_view body, const WordLists& lists, std::size_t line) {
  TokenTest t;
  if (trim(body).empty()) return t;
  std::size_t start = 0;
  while (true) {
    const auto bar = body.find("||", start);
    const auto part = body.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    std::vector<Predicate> conj;
    for (const auto& w : words_of(part)) conj.push_back(parse_predicate(w, lists, line));
    if (conj.empty()) syntax(line, "empty alternative");
    t.alternatives.push_back(std::move(conj));
    if (bar == std::string_view::npos) break;
    start = bar + 2;
  }
  return t;
}

std::vector<PatternElement> parse_pattern(std::string_view s, const WordLists& lists, std::size_t line) {
  std::vector<PatternElement> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  int anchors = 0;
  while (true) {
    skip_space();
    if (i >= s.size()) break;
    PatternElement el;
    if (s[i] == '@') {
      el.anchor = true;
      ++anchors;
      ++i;
    }
    if (s[i] == '^' || s[i] == '$') {
      el.kind = s[i] == '^' ? PatternElement::Kind::kStart : PatternElement::Kind::kEnd;
      if (el.anchor) syntax(line, "sentence edge cannot be the anchor");
      ++i;
      out.push_back(std::move(el));
      continue;
    }
    if (s[i] == '!') {
      el.kind = PatternElement::Kind::kNotToken;
      ++i;
    }
    if (i >= s.size() || s[i] != '[') syntax(line, "expected '[' at column " + std::to_string(i + 1));
    const auto close = s.find(']', i);
    if (close == std::string_view::npos) syntax(line, "unclosed '['");
    el.test = parse_test(s.substr(i + 1, close - i - 1), lists, line);
    i = close + 1;
    if (i < s.size()) {
      if (s[i] == '?') {
        el.min = 0;
        el.max = 1;
        ++i;
      } else if (s[i] == '*' || s[i] == '+') {
        el.min = s[i] == '*' ? 0 : 1;
        el.max = kMaxRepeat;
        el.unbounded = true;
        ++i;
      } else if (s[i] == '{') {
        const auto end = s.find('}', i);
        if (end == std::string_view::npos) syntax(line, "unclosed '{'");
        const auto parts = split(s.substr(i + 1, end - i - 1), ',');
        try {
          el.min = std::stoi(parts.at(0));
          el.max = parts.size() > 1 ? std::stoi(parts.at(1)) : el.min;
        } catch (const std::exception&) {
          syntax(line, "bad repeat bounds");
        }
        if (el.min < 0 || el.max < el.min || el.max == 0) syntax(line, "bad repeat bounds");
        i = end + 1;
      }
    }
    if (el.kind == PatternElement::Kind::kNotToken && (el.min != 1 || el.max != 1)) {
      syntax(line, "negated element cannot repeat");
    }
    if (el.kind == PatternElement::Kind::kNotToken && el.anchor) {
      syntax(line, "negated element cannot be the anchor");
    }
    if (el.anchor && (el.min != 1 || el.max != 1)) syntax(line, "anchor cannot repeat");
    out.push_back(std::move(el));
  }
  if (anchors != 1) syntax(line, "pattern needs exactly one '@' anchor");
  return out;
}

}  // namespace

RuleTable parse_rules(std::istream& in, std::string_view version) {
  RuleTable table;
  table.lists = word_lists();
  table.version = std::string(version);
  std::vector<std::pair<std::size_t, std::string>> rule_lines;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.starts_with("list ")) {
      const auto colon = line.find(':');
      if (colon == std::string::npos) syntax(lineno, "list needs 'list NAME: words'");
      const std::string name = trim(std::string_view(line).substr(5, colon - 5));
      if (name.empty()) syntax(lineno, "list without a name");
      WordList members;
      for (const auto& w : words_of(std::string_view(line).substr(colon + 1))) members.insert(fold_case(w));
      table.lists[name] = std::move(members);
      continue;
    }
    rule_lines.emplace_back(lineno, line);
  }
  for (const auto& [n, line] : rule_lines) {
    Rule r;
    r.line = n;
    std::istringstream fields(line);
    std::string priority;
    fields >> r.code >> priority;
    r.feature = feature_index(r.code);
    try {
      std::size_t used = 0;
      r.priority = std::stoi(priority, &used);
      if (used != priority.size()) throw std::invalid_argument(priority);
    } catch (const std::exception&) {
      syntax(n, "bad priority '" + priority + "'");
    }
    std::string rest;
    std::getline(fields, rest);
    rest = trim(rest);
    if (rest.starts_with("excl=")) {
      const auto sp = rest.find_first_of(" \t");
      r.group = rest.substr(5, sp == std::string::npos ? std::string::npos : sp - 5);
      if (r.group.empty()) syntax(n, "empty exclusivity group");
      rest = sp == std::string::npos ? std::string() : trim(rest.substr(sp));
    }
    if (rest.empty()) syntax(n, "rule without a pattern");
    r.pattern = parse_pattern(rest, table.lists, n);
    std::string normalized;
    for (const auto& w : words_of(rest)) {
      if (!normalized.empty()) normalized.push_back(' ');
      normalized += w;
    }
    r.text = std::move(normalized);
    table.rules.push_back(std::move(r));
  }
  return table;
}

RuleTable load_rules(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open rule file: " + path.string());
  return parse_rules(in, "file:" + path.filename().string());
}

const RuleTable& default_rules() {
  static const RuleTable table = [] {
    std::istringstream in{std::string(default_rule_source())};
    return parse_rules(in, "mdastyl-rules-1");
  }();
  return table;
}

std::vector<Diagnostic> validate_rules(const RuleTable& table) {
  std::vector<Diagnostic> out;
  auto report = [&](std::size_t line, std::string msg) { out.push_back({line, std::move(msg)}); };
  std::vector<bool> produced(kFeatureCount, false);
  std::map<std::string, int> group_priority;
  for (std::size_t j = 0; j < table.rules.size(); ++j) {
    const Rule& r = table.rules[j];
    if (!r.feature) {
      report(r.line, "unknown feature code '" + r.code + "'");
    }
    for (std::size_t i = 0; i < j; ++i) {
      const Rule& q = table.rules[i];
      if (r.feature && q.feature == r.feature && q.priority == r.priority) {
        report(r.line, "shadowing: " + r.code + " already has a rule at priority " +
                           std::to_string(r.priority) + " (line " + std::to_string(q.line) + ")");
      }
      const bool related = (r.feature && q.feature == r.feature) || (!r.group.empty() && q.group == r.group);
      if (related && q.text == r.text && q.priority >= r.priority) {
        report(r.line, "unreachable: same pattern as line " + std::to_string(q.line) +
                           " at higher or equal priority");
      }
    }
    for (const auto& el : r.pattern) {
      if (el.unbounded) {
        report(r.line, "unbounded repeat; use {m,n} with n <= " + std::to_string(kMaxRepeat));
      } else if (el.max > kMaxRepeat) {
        report(r.line, "repeat bound " + std::to_string(el.max) + " exceeds " + std::to_string(kMaxRepeat));
      }
      for (const auto& alt : el.test.alternatives) {
        for (const auto& p : alt) {
          if (p.kind == Predicate::Kind::kFeature && !produced[p.number]) {
            report(r.line, "f:" + p.values.front() + " refers to a feature no earlier rule produces");
          }
        }
      }
    }
    if (!r.group.empty()) {
      const auto it = group_priority.find(r.group);
      if (it != group_priority.end() && r.priority > it->second) {
        report(r.line, "priority rises within exclusivity group '" + r.group + "'");
      }
      group_priority[r.group] = r.priority;
    }
    if (r.feature) produced[*r.feature] = true;
  }
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    if (f == kTTR || f == kAWL || produced[f]) continue;
    report(0, "no rule produces " + std::string(kInventory[f].code));
  }
  return out;
}

namespace {

constexpr std::string_view kRightSingle = "\xE2\x80\x99";

struct TokenView {
  std::string lower;
  std::string_view tag;
  std::size_t length = 0;
  std::vector<std::string> lemmas;
};

std::string match_key(std::string_view surface) {
  std::string s = fold_case(surface);
  for (std::size_t pos = s.find(kRightSingle); pos != std::string::npos; pos = s.find(kRightSingle, pos)) {
    s.replace(pos, kRightSingle.size(), "'");
  }
  return s;
}

class Engine {
 public:
  Engine(std::span<const TaggedToken> window, const RuleTable& table)
      : table_(table), features_(window.size()) {
    views_.reserve(window.size());
    for (const auto& t : window) {
      TokenView v;
      v.lower = match_key(t.token.surface);
      v.tag = t.tag.str();
      v.length = utf8_length(t.token.surface);
      v.lemmas = lemma_candidates(v.lower);
      views_.push_back(std::move(v));
    }
    for (const auto& r : table.rules) {
      if (!r.group.empty() && !groups_.contains(r.group)) {
        const auto n = groups_.size();
        groups_[r.group] = n;
      }
    }
    claims_.assign(window.size(), std::vector<bool>(groups_.size(), false));
  }

  void run(std::span<const SentenceSpan> sentences) {
    for (const Rule& rule : table_.rules) {
      if (!rule.feature || *rule.feature == kTTR || *rule.feature == kAWL) continue;
      const std::size_t f = *rule.feature;
      const std::ptrdiff_t g = rule.group.empty() ? -1 : static_cast<std::ptrdiff_t>(groups_.at(rule.group));
      for (const auto& s : sentences) {
        for (std::size_t start = s.begin; start <= s.end; ++start) {
          std::size_t anchor = kNone;
          if (!match(rule.pattern, 0, start, s, anchor) || anchor == kNone) continue;
          if (features_[anchor].test(f)) continue;
          if (g >= 0) {
            if (claims_[anchor][static_cast<std::size_t>(g)]) continue;
            claims_[anchor][static_cast<std::size_t>(g)] = true;
          }
          features_[anchor].set(f);
        }
      }
    }
  }

  const std::vector<std::bitset<kFeatureCount>>& features() const { return features_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool holds(const Predicate& p, std::size_t i) const {
    const TokenView& v = views_[i];
    bool r = false;
    switch (p.kind) {
      case Predicate::Kind::kTag:
        r = std::any_of(p.values.begin(), p.values.end(), [&](const std::string& t) {
          return t.ends_with('*') ? v.tag.starts_with(std::string_view(t).substr(0, t.size() - 1)) : v.tag == t;
        });
        break;
      case Predicate::Kind::kWord:
        r = std::find(p.values.begin(), p.values.end(), v.lower) != p.values.end();
        break;
      case Predicate::Kind::kList: {
        const auto it = table_.lists.find(p.values.front());
        r = it != table_.lists.end() && it->second.contains(v.lower);
        break;
      }
      case Predicate::Kind::kLemma: {
        const auto it = table_.lists.find(p.values.front());
        r = it != table_.lists.end() &&
            std::any_of(v.lemmas.begin(), v.lemmas.end(), [&](const std::string& l) { return it->second.contains(l); });
        break;
      }
      case Predicate::Kind::kSuffix:
        r = std::any_of(p.values.begin(), p.values.end(),
                        [&](const std::string& s) { return v.lower.ends_with(s); });
        break;
      case Predicate::Kind::kMinLength:
        r = v.length >= p.number;
        break;
      case Predicate::Kind::kFeature:
        r = features_[i].test(p.number);
        break;
    }
    return r != p.negated;
  }

  bool passes(const TokenTest& t, std::size_t i) const {
    if (t.alternatives.empty()) return true;
    return std::any_of(t.alternatives.begin(), t.alternatives.end(), [&](const auto& conj) {
      return std::all_of(conj.begin(), conj.end(), [&](const Predicate& p) { return holds(p, i); });
    });
  }

  bool match(const std::vector<PatternElement>& p, std::size_t ei, std::size_t pos,
             const SentenceSpan& s, std::size_t& anchor) const {
    if (ei == p.size()) return true;
    const PatternElement& el = p[ei];
    switch (el.kind) {
      case PatternElement::Kind::kStart:
        return pos == s.begin && match(p, ei + 1, pos, s, anchor);
      case PatternElement::Kind::kEnd:
        return pos == s.end && match(p, ei + 1, pos, s, anchor);
      case PatternElement::Kind::kNotToken:
        if (pos == s.end) return match(p, ei + 1, pos, s, anchor);
        return !passes(el.test, pos) && match(p, ei + 1, pos + 1, s, anchor);
      case PatternElement::Kind::kToken:
        break;
    }
    std::size_t n = 0;
    while (n < static_cast<std::size_t>(el.max) && pos + n < s.end && passes(el.test, pos + n)) ++n;
    for (std::size_t k = n + 1; k-- > static_cast<std::size_t>(el.min);) {
      if (match(p, ei + 1, pos + k, s, anchor)) {
        if (el.anchor) anchor = pos;
        return true;
      }
    }
    return false;
  }

  const RuleTable& table_;
  std::vector<TokenView> views_;
  std::vector<std::bitset<kFeatureCount>> features_;
  std::map<std::string, std::size_t> groups_;
  std::vector<std::vector<bool>> claims_;
};

std::vector<SentenceSpan> sentences_of(std::span<const TaggedToken> window) {
  std::vector<Token> tokens;
  tokens.reserve(window.size());
  for (const auto& t : window) tokens.push_back(t.token);
  return segment_sentences(tokens);
}

}  // namespace

FeatureCounts tag_features(std::span<const TaggedToken> window,
                           std::span<const SentenceSpan> sentences, const RuleTable& table) {
  Engine engine(window, table);
  engine.run(sentences);
  FeatureCounts fc;
  fc.window_tokens = window.size();
  for (const auto& bits : engine.features()) {
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      if (bits.test(f)) ++fc.counts[f];
    }
  }
  std::set<std::string> types;
  std::size_t words = 0;
  std::size_t chars = 0;
  for (const auto& t : window) {
    if (t.token.kind != TokenKind::kWord) continue;
    ++words;
    chars += utf8_length(t.token.surface);
    types.insert(fold_case(t.token.surface));
  }
  fc.ttr = types.size();
  fc.awl = words == 0 ? 0.0 : static_cast<double>(chars) / static_cast<double>(words);
  fc.counts[kTTR] = fc.ttr;
  return fc;
}

FeatureCounts tag_features(std::span<const TaggedToken> window, const RuleTable& table) {
  const auto sentences = sentences_of(window);
  return tag_features(window, sentences, table);
}

std::vector<std::vector<std::string>> token_features(std::span<const TaggedToken> window,
                                                     std::span<const SentenceSpan> sentences,
                                                     const RuleTable& table) {
  Engine engine(window, table);
  engine.run(sentences);
  std::vector<std::vector<std::string>> out;
  for (const auto& bits : engine.features()) {
    std::vector<std::string> codes;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      if (bits.test(f)) codes.emplace_back(kInventory[f].code);
    }
    out.push_back(std::move(codes));
  }
  return out;
}

}  // namespace mdastyl
