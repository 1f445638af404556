#pragma once

#include <cstddef>
#include <optional>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdastyl/features.hpp"
#include "mdastyl/pos_tagger.hpp"
#include "mdastyl/text.hpp"

namespace mdastyl {

// Rule format, one rule per line:
//
//   CODE PRIORITY [excl=GROUP] PATTERN   # comment
//
// PATTERN is a sequence of elements:
//   [tests]      one token; `[]` matches any token
//   ![tests]     a token that fails the tests, or the sentence edge
//   ^  $         sentence start / end
// An element may be prefixed with `@` (exactly one anchor per rule: the
// token that receives the feature) and followed by `?` or `{m,n}`.
// Inside brackets, space-separated predicates are ANDed and `||` separates
// alternatives. Predicates, each optionally negated with `!`:
//   t:NN|NNS  t:VB*   POS tag (trailing * is a prefix match)
//   w:so|such         lower-cased surface
//   l:LIST            surface in word list
//   lem:LIST          surface or a base form in word list
//   sfx:tion|ment     surface suffix
//   len:N             at least N characters
//   f:CODE            token already carries the feature
//
// Word lists may be added or replaced with `list NAME: word word ...`.
//
// Rules run in table order; a token carries each feature at most once, and
// within an exclusivity group at most one feature, claimed by the earliest
// (highest-priority) rule. Matches never cross sentence boundaries.

inline constexpr int kMaxRepeat = 4;

struct Predicate {
  enum class Kind { kTag, kWord, kList, kLemma, kSuffix, kMinLength, kFeature };
  Kind kind = Kind::kWord;
  bool negated = false;
  std::vector<std::string> values;
  std::size_t number = 0;  // min length or feature index
};

struct TokenTest {
  std::vector<std::vector<Predicate>> alternatives;  // empty: any token
};

struct PatternElement {
  enum class Kind { kToken, kNotToken, kStart, kEnd };
  Kind kind = Kind::kToken;
  TokenTest test;
  int min = 1;
  int max = 1;
  bool anchor = false;
  bool unbounded = false;  // written with * or +
};

struct Rule {
  std::string code;
  std::optional<std::size_t> feature;  // unset: code not in inventory
  int priority = 0;
  std::string group;
  std::vector<PatternElement> pattern;
  std::string text;  // normalized pattern source
  std::size_t line = 0;
};

struct RuleTable {
  std::vector<Rule> rules;
  WordLists lists;
  std::string version;
};

/// Throws FormatError naming the line for syntax errors (bad element,
/// missing or repeated anchor, unknown word list, bad priority).
RuleTable parse_rules(std::istream& in, std::string_view version = "custom");
RuleTable load_rules(const std::filesystem::path& path);

/// Source text of the shipped table.
std::string_view default_rule_source();

/// Parsed shipped table (cached).
const RuleTable& default_rules();

struct Diagnostic {
  std::size_t line = 0;  // 0 for table-level findings
  std::string message;
};

/// Empty for a well-formed table. Reports unknown codes, equal-priority
/// rules for one feature, rules repeating an earlier pattern in the same
/// feature or group, unbounded or over-long repeats, group priorities that
/// rise in table order, feature references to later rules, and inventory
/// features no rule produces (TTR and AWL are computed, not matched).
std::vector<Diagnostic> validate_rules(const RuleTable& table);

/// Feature counts for one window. `sentences` partitions the window.
FeatureCounts tag_features(std::span<const TaggedToken> window,
                           std::span<const SentenceSpan> sentences,
                           const RuleTable& table = default_rules());

/// Same, segmenting sentences from the tokens.
FeatureCounts tag_features(std::span<const TaggedToken> window,
                           const RuleTable& table = default_rules());

/// Per-token feature sets, for inspection and tests.
std::vector<std::vector<std::string>> token_features(std::span<const TaggedToken> window,
                                                     std::span<const SentenceSpan> sentences,
                                                     const RuleTable& table = default_rules());

}  // namespace mdastyl
