#include "mdastyl/features.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "mdastyl/util.hpp"

namespace mdastyl {

static_assert(kInventory[kTTR].code == "TTR");
static_assert(kInventory[kAWL].code == "AWL");

std::optional<std::size_t> feature_index(std::string_view code) {
  for (std::size_t i = 0; i < kInventory.size(); ++i) {
    if (kInventory[i].code == code) return i;
  }
  return std::nullopt;
}

std::size_t feature_index_of(std::string_view code) {
  const auto i = feature_index(code);
  if (!i) throw std::out_of_range("unknown feature code: " + std::string(code));
  return *i;
}

std::string display_name(std::size_t feature) {
  const auto& f = kInventory.at(feature);
  return std::string(f.name) + " (" + std::string(f.code) + ")";
}

void write_feature_matrix(std::ostream& out, const std::vector<FeatureCounts>& rows) {
  out << "id,tokens";
  for (const auto& f : kInventory) out << ',' << f.code;
  out << '\n';
  for (const auto& r : rows) {
    out << r.document_id << ',' << r.window_tokens;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      out << ',';
      if (i == kAWL) {
        out << format_exact(r.awl);
      } else if (i == kTTR) {
        out << r.ttr;
      } else {
        out << r.counts[i];
      }
    }
    out << '\n';
  }
}

namespace {

// name, then space-separated members
constexpr std::pair<std::string_view, std::string_view> kListSource[] = {
    {"pubv",
     "acknowledge admit agree assert claim complain declare deny explain hint insist "
     "mention proclaim promise protest remark reply report say suggest swear write"},
    {"priv",
     "accept anticipate ascertain assume believe calculate check conclude conjecture "
     "consider decide deduce deem demonstrate determine discover doubt dream ensure "
     "establish estimate expect fancy fear feel find foresee forget gather guess hear "
     "hold hope imagine imply indicate infer insure judge know learn mean note notice "
     "observe perceive presume presuppose pretend prove realise realize reason recall "
     "reckon recognise recognize reflect remember reveal see sense show signify suppose "
     "suspect think understand"},
    {"suav",
     "arrange ask beg command demand grant instruct ordain pledge pronounce propose "
     "recommend request stipulate urge"},
    {"smp", "appear seem"},
    {"time",
     "afterwards again earlier early eventually formerly immediately initially instantly "
     "late lately later momentarily now nowadays once originally presently previously "
     "recently shortly simultaneously subsequently today to-day tomorrow to-morrow "
     "tonight to-night yesterday soon"},
    {"place",
     "aboard above abroad across ahead alongside around ashore astern away behind below "
     "beneath beside downhill downstairs downstream east far hereabouts indoors inland "
     "inshore inside locally near nearby north nowhere outdoors outside overboard "
     "overland overseas south underfoot underground underneath uphill upstairs upstream "
     "west"},
    {"fpp1", "i me we us my our myself ourselves mine ours"},
    {"spp2", "you your yourself yourselves yours thy thee thyself thou"},
    {"tpp3", "she he they her him them his their himself herself themselves hers theirs"},
    {"pit", "it its itself"},
    {"inpr",
     "anybody anyone anything everybody everyone everything nobody none nothing nowhere "
     "somebody someone something"},
    {"quan", "all any both each every few many much several some"},
    {"amp",
     "absolutely altogether completely enormously entirely extremely fully greatly highly "
     "intensely perfectly strongly thoroughly totally utterly very"},
    {"dwnt",
     "almost barely hardly merely mildly nearly only partially partly practically "
     "scarcely slightly somewhat"},
    {"emph", "just really definitely"},
    {"conj",
     "alternatively consequently conversely e.g. furthermore hence however i.e. instead "
     "likewise moreover namely nevertheless nonetheless notwithstanding otherwise "
     "similarly therefore thus viz."},
    {"prep",
     "against amid amidst among amongst at besides between by despite during except for "
     "from in into minus notwithstanding of off on onto opposite out per plus pro re "
     "than through throughout thru to toward towards upon versus via with within without"},
    {"be", "be am is are was were been being 's 're 'm"},
    {"have", "have has had having 've 'd"},
    {"do", "do does did doing done"},
    {"subjpro", "i we he she they"},
    {"wh", "what which who whom whose where when why how whether"},
    {"nomz_stop", "city cities pity entity entities"},
};

WordLists build_lists() {
  WordLists lists;
  for (const auto& [name, members] : kListSource) {
    WordList& l = lists[std::string(name)];
    for (const auto& w : split(members, ' ')) {
      if (!w.empty()) l.insert(w);
    }
  }
  return lists;
}

const std::unordered_map<std::string_view, std::string_view>& irregulars() {
  static const std::unordered_map<std::string_view, std::string_view> m = {
      {"said", "say"},         {"says", "say"},        {"wrote", "write"},
      {"written", "write"},    {"swore", "swear"},     {"sworn", "swear"},
      {"thought", "think"},    {"knew", "know"},       {"known", "know"},
      {"felt", "feel"},        {"found", "find"},      {"saw", "see"},
      {"seen", "see"},         {"heard", "hear"},      {"held", "hold"},
      {"meant", "mean"},       {"learnt", "learn"},    {"forgot", "forget"},
      {"forgotten", "forget"}, {"foresaw", "foresee"}, {"foreseen", "foresee"},
      {"dreamt", "dream"},     {"shown", "show"},      {"understood", "understand"},
      {"besought", "beg"},     {"proven", "prove"},    {"began", "begin"},
      {"did", "do"},           {"done", "do"},         {"does", "do"},
      {"had", "have"},         {"has", "have"},        {"was", "be"},
      {"were", "be"},          {"is", "be"},           {"are", "be"},
      {"been", "be"},          {"am", "be"},
  };
  return m;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

}  // namespace

const WordLists& word_lists() {
  static const WordLists lists = build_lists();
  return lists;
}

std::vector<std::string> lemma_candidates(std::string_view w) {
  std::vector<std::string> out{std::string(w)};
  auto add = [&](std::string s) {
    if (s.size() >= 2 && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  if (const auto it = irregulars().find(w); it != irregulars().end()) add(std::string(it->second));
  auto stem = [&](std::size_t cut) { return std::string(w.substr(0, w.size() - cut)); };
  if (w.ends_with("ies") && w.size() > 4) add(stem(3) + "y");
  if (w.ends_with("ied") && w.size() > 4) add(stem(3) + "y");
  if (w.ends_with("es") && w.size() > 3) add(stem(2));
  if (w.ends_with("s") && !w.ends_with("ss") && w.size() > 2) add(stem(1));
  for (std::string_view suf : {std::string_view("ed"), std::string_view("ing")}) {
    if (!w.ends_with(suf) || w.size() <= suf.size() + 2) continue;
    std::string base = stem(suf.size());
    add(base);
    add(base + "e");
    const std::size_t n = base.size();
    if (n >= 2 && base[n - 1] == base[n - 2] && !is_vowel(base[n - 1])) add(base.substr(0, n - 1));
  }
  return out;
}

}  // namespace mdastyl
