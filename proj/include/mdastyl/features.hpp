#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mdastyl {

struct FeatureInfo {
  std::string_view code;
  std::string_view name;
};

/// Closed feature inventory: the Biber/MAT tags plus QUAN and QUPR.
/// Order is fixed; it is the column order of every feature matrix.
inline constexpr std::array<FeatureInfo, 69> kInventory = {{
    {"VBD", "Past Tense Verbs"},
    {"PEAS", "Perfect Aspect"},
    {"VPRT", "Present Tense"},
    {"PLACE", "Place Adverbials"},
    {"TIME", "Time Adverbials"},
    {"FPP1", "First Person Pronouns"},
    {"SPP2", "Second Person Pronouns"},
    {"TPP3", "Third Person Pronouns"},
    {"PIT", "Pronoun 'it'"},
    {"DEMP", "Demonstrative Pronouns"},
    {"INPR", "Indefinite Pronouns"},
    {"PROD", "Pro-verb 'do'"},
    {"WHQU", "Direct WH-questions"},
    {"NOMZ", "Nominalizations"},
    {"GER", "Gerunds"},
    {"NN", "Other Nouns"},
    {"PASS", "Agentless Passives"},
    {"BYPA", "By-passives"},
    {"BEMA", "'Be' as Main Verb"},
    {"EX", "Existential 'there'"},
    {"THVC", "'That' Verb Complements"},
    {"THAC", "'That' Adjective Complements"},
    {"WHCL", "WH-clauses"},
    {"TO", "Infinitives"},
    {"PRESP", "Present Participial Clauses"},
    {"PASTP", "Past Participial Clauses"},
    {"WZPAST", "Past Participle Whiz-Deletion"},
    {"WZPRES", "Present Participle Whiz-Deletion"},
    {"TSUB", "'That' Relatives, Subject Position"},
    {"TOBJ", "'That' Relatives, Object Position"},
    {"WHSUB", "WH Relatives, Subject Position"},
    {"WHOBJ", "WH Relatives, Object Position"},
    {"PIRE", "Pied-piping Relatives"},
    {"SERE", "Sentence Relatives"},
    {"CAUS", "Causative Subordinator 'because'"},
    {"CONC", "Concessive Subordinators"},
    {"COND", "Conditional Subordinators"},
    {"OSUB", "Other Adverbial Subordinators"},
    {"PIN", "Prepositional Phrases"},
    {"JJ", "Adjectives"},
    {"PRED", "Predicative Adjectives"},
    {"RB", "Adverbs"},
    {"TTR", "Type-Token Ratio"},
    {"AWL", "Average Word Length"},
    {"CONJ", "Conjuncts"},
    {"DWNT", "Downtoners"},
    {"HDG", "Hedges"},
    {"AMP", "Amplifiers"},
    {"EMPH", "Emphatics"},
    {"DPAR", "Discourse Particles"},
    {"DEMO", "Demonstratives"},
    {"POMD", "Possibility Modals"},
    {"NEMD", "Necessity Modals"},
    {"PRMD", "Predictive Modals"},
    {"PUBV", "Public Verbs"},
    {"PRIV", "Private Verbs"},
    {"SUAV", "Suasive Verbs"},
    {"SMP", "'Seem' and 'appear'"},
    {"CONT", "Contractions"},
    {"THATD", "Subordinator 'that' deletion"},
    {"STPR", "Stranded Prepositions"},
    {"SPIN", "Split Infinitives"},
    {"SPAU", "Split Auxiliaries"},
    {"PHC", "Phrasal Coordination"},
    {"ANDC", "Independent Clause Coordination"},
    {"SYNE", "Synthetic Negation"},
    {"XX0", "Analytic Negation"},
    {"QUAN", "Quantifiers"},
    {"QUPR", "Quantifier Pronouns"},
}};

inline constexpr std::size_t kFeatureCount = kInventory.size();
inline constexpr std::string_view kInventoryVersion = "mdastyl-inventory-1";

std::optional<std::size_t> feature_index(std::string_view code);

/// Index of a code known to be in the inventory; throws std::out_of_range otherwise.
std::size_t feature_index_of(std::string_view code);

/// "Public Verbs (PUBV)".
std::string display_name(std::size_t feature);

inline constexpr std::size_t kTTR = 42;
inline constexpr std::size_t kAWL = 43;

struct FeatureCounts {
  std::string document_id;
  std::vector<std::size_t> counts = std::vector<std::size_t>(kFeatureCount, 0);
  std::size_t window_tokens = 0;
  double awl = 0.0;
  std::size_t ttr = 0;

  std::size_t count(std::string_view code) const { return counts.at(feature_index_of(code)); }

  bool operator==(const FeatureCounts&) const = default;
};

/// Header row `id,tokens,<codes...>` then one row per document. The AWL
/// column carries the dedicated awl field, TTR the ttr field.
void write_feature_matrix(std::ostream& out, const std::vector<FeatureCounts>& rows);

using WordList = std::set<std::string, std::less<>>;
using WordLists = std::map<std::string, WordList, std::less<>>;

inline constexpr std::string_view kWordListVersion = "mdastyl-wordlists-1";

/// Embedded closed word lists keyed by name (pubv, priv, suav, emph, amp,
/// dwnt, time, place, conj, inpr, quan, prep, ...). Lower-case base forms.
const WordLists& word_lists();

/// Lower-cased form and plausible base forms of an inflected word
/// ("said" -> said, say; "claims" -> claims, claim).
std::vector<std::string> lemma_candidates(std::string_view lowered);

}  // namespace mdastyl
