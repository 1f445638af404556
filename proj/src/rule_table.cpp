#include "mdastyl/rules.hpp"

namespace mdastyl {

namespace {

// Operational definitions after Biber (1988, appendix II) and the MAT
// documentation, restated over Penn tags. Multi-rule features use
// descending priorities so every rule stays distinct.
constexpr std::string_view kDefaultRules = R"RULES(
# tense and aspect
VBD     50 @[t:VBD]
PEAS    50 @[l:have t:VB*] [t:RB]{0,2} [t:VBN]
PEAS    49 @[l:have t:VB*] [t:PRP|NN*] [t:VBN]          # question order
VPRT    50 @[t:VBP|VBZ]

# place and time adverbials
PLACE   50 @[l:place !t:NNP !t:IN]
TIME    50 @[l:time !w:soon !t:NNP]
TIME    49 @[w:soon] ![w:as]                            # not "as soon as"

# pronouns and pro-verbs
FPP1    50 @[l:fpp1 t:PRP*]
SPP2    50 @[l:spp2 t:PRP*]
TPP3    50 @[l:tpp3 t:PRP*]
PIT     50 @[l:pit t:PRP*]
DEMP    50 @[w:this|that|these|those t:DT] [t:VB*|MD|.|,|:|WP|RB|IN|TO|CC]
DEMP    49 @[w:this|that|these|those t:DT] $
INPR    50 @[l:inpr]
PROD    50 ![t:WP|WRB|WDT|.|,|:|``] @[l:do t:VB*] ![t:VB|RB]
PROD    49 ![t:WP|WRB|WDT|.|,|:|``] @[l:do t:VB*] [t:RB] ![t:VB|RB]

# questions
WHQU    50 ^ @[l:wh !w:whether] [t:MD||l:do t:VB*||l:be t:VB*||l:have t:VB*]
WHQU    49 [t:``] @[l:wh !w:whether] [t:MD||l:do t:VB*||l:be t:VB*||l:have t:VB*]

# nominal forms
NOMZ    50 @[t:NN|NNS sfx:tion|tions|ment|ments|ness|nesses|ity|ities len:6 !l:nomz_stop]
GER     50 @[t:NN|NNS sfx:ing|ings len:10]
GER     49 [t:DT|IN|PRP$|POS] @[t:VBG]
NN      50 @[t:NN* !f:NOMZ !f:GER]

# passives
BYPA    50 excl=passive [l:be t:VB*] [t:RB]{0,2} @[t:VBN] [t:RB]? [w:by]
PASS    40 excl=passive [l:be t:VB*] [t:RB]{0,2} @[t:VBN]
PASS    39 excl=passive [l:be t:VB*] [t:PRP|NN*] @[t:VBN]  # question order

# stative forms
BEMA    50 @[l:be t:VB*] [t:RB]? [t:DT|PRP$|IN|JJ*|CD|PDT|PRP|NN*]
EX      50 @[t:EX]

# subordination
THAC    50 excl=that [t:JJ*] @[w:that t:IN]
THVC    45 excl=that [t:VB*] [t:RB|PRP]{0,2} @[w:that t:IN]
TSUB    40 excl=that [t:NN*] @[w:that t:WDT|IN] [t:RB]? [t:MD|VB*]
TOBJ    40 excl=that [t:NN*] @[w:that t:WDT|IN] [t:DT|PRP|PRP$|JJ*|NNS|NNP|NNPS|CD]
WHCL    50 [t:VB* lem:pubv||t:VB* lem:priv||t:VB* lem:suav] [t:PRP]? @[l:wh t:W*||w:whether]
TO      50 @[t:TO] [t:RB]{0,2} [t:VB]
PRESP   50 ^ @[t:VBG] [t:IN|DT|RB|PRP|PRP$|WP|WRB|TO|JJ*]
PRESP   49 [t:,|:] @[t:VBG] [t:IN|DT|RB|PRP|PRP$|WP|WRB|TO|NN*]
PASTP   50 ^ @[t:VBN] [t:IN|RB]
PASTP   49 [t:,|:] @[t:VBN] [t:IN|RB]
WZPAST  50 [t:NN*||l:quan] @[t:VBN] [t:IN|RB||l:be t:VB*]
WZPRES  50 [t:NN*] @[t:VBG]
WHSUB   50 [t:NN*] [t:,]? @[w:who|which t:WP|WDT] [t:RB]? [t:MD|VB*]
WHOBJ   50 [t:NN*] [t:,]? @[w:who|whom|which|whose t:WP|WDT|WP$] ![t:MD|VB*|RB]
PIRE    50 [t:IN|TO] @[w:who|whom|whose|which t:WP|WDT|WP$]
SERE    50 ![t:NN*] [t:,] @[w:which t:WDT|WP]
CAUS    50 @[w:because]
CONC    50 @[w:although|though|tho]
COND    50 @[w:if|unless]
OSUB    50 @[w:since|while|whilst|whereupon|whereas|whereby !t:NN*]
OSUB    49 @[w:such|so] [w:that] ![t:NN*|JJ*]
OSUB    48 @[w:inasmuch|forasmuch|insofar|insomuch] [w:as]
OSUB    47 @[w:as] [w:long|soon] [w:as]

# prepositions, adjectives, adverbs
PIN     50 @[l:prep t:IN|TO !f:TO]
JJ      50 @[t:JJ*] [t:JJ*|CC|,]{0,3} [t:NN*]
PRED    50 [l:be t:VB*] [t:RB]{0,2} @[t:JJ*] ![t:JJ*|NN*]
PRED    49 [lem:smp t:VB*] [t:RB]{0,2} @[t:JJ*] ![t:JJ*|NN*]
RB      50 @[t:RB|RBR|RBS !w:not|n't]

# stance and discourse
CONJ    50 @[l:conj !t:NNP]
CONJ    49 @[w:in] [w:comparison|contrast|particular|addition|conclusion|consequence|sum|summary]
CONJ    48 @[w:for] [w:example|instance]
CONJ    47 @[w:by] [w:contrast|comparison]
CONJ    46 @[w:in] [w:any] [w:event|case]
CONJ    45 @[w:in] [w:other] [w:words]
CONJ    44 @[w:as] [w:a] [w:result|consequence]
CONJ    43 @[w:on] [w:the] [w:contrary]
CONJ    42 @[w:on] [w:the] [w:other] [w:hand]
CONJ    41 @[w:rather|else|altogether] [t:,]
DWNT    50 @[l:dwnt]
HDG     50 @[w:maybe]
HDG     49 @[w:at] [w:about]
HDG     48 @[w:something] [w:like]
HDG     47 @[w:more] [w:or] [w:less]
HDG     46 ![t:DT|JJ*|PRP$||w:what] @[w:kind|sort] [w:of]
HDG     45 ^ @[w:kind|sort] [w:of]
AMP     50 @[l:amp]
EMPH    50 @[l:emph]
EMPH    49 @[w:for] [w:sure]
EMPH    48 @[w:a] [w:lot]
EMPH    47 @[w:such] [w:a|an]
EMPH    46 @[w:real|so] [t:JJ*]
EMPH    45 @[w:most|more] [t:JJ]
EMPH    44 @[l:do t:VBP|VBZ|VBD] [t:VB]                 # emphatic do
DPAR    50 ^ @[w:well|now|anyway|anyhow|anyways t:RB|UH]
DPAR    49 [t:,|:] @[w:well|now|anyway|anyhow|anyways t:RB|UH] [t:,]
DEMO    50 @[w:this|that|these|those t:DT !f:DEMP]

# modals
POMD    50 @[w:can|ca|may|might|could t:MD]
NEMD    50 @[w:ought|should|must t:MD]
PRMD    50 @[w:will|would|shall|'ll|'d|wo t:MD]

# verb classes
PUBV    50 excl=verbclass @[t:VB* lem:pubv]
PRIV    45 excl=verbclass @[t:VB* lem:priv]
SUAV    40 excl=verbclass @[t:VB* lem:suav]
SMP     50 @[t:VB* lem:smp]

# reduced forms
CONT    50 @[w:n't|'m|'re|'ve|'d|'ll]
CONT    49 @[w:'s !t:POS]
THATD   50 [t:VB* lem:pubv||t:VB* lem:priv||t:VB* lem:suav] @[l:subjpro t:PRP]
THATD   49 [t:VB* lem:pubv||t:VB* lem:priv||t:VB* lem:suav] @[t:PRP|NN*|EX] [t:MD|VB*]
THATD   48 [t:VB* lem:pubv||t:VB* lem:priv||t:VB* lem:suav] @[t:DT|JJ*|PRP$|CD !w:that] [t:JJ*]? [t:NN*]{1,2} [t:MD|VB*]
STPR    50 @[l:prep t:IN|TO !w:besides] [t:.|,|:]
SPIN    50 @[t:TO] [t:RB !w:not|n't]{1,2} [t:VB]
SPAU    50 @[t:MD||l:have t:VB*||l:be t:VB*||l:do t:VB*] [t:RB !w:not|n't]{1,2} [t:VB*]

# coordination
PHC     50 [t:RB] @[w:and] [t:RB]
PHC     49 [t:JJ*] @[w:and] [t:JJ*]
PHC     48 [t:NN*] @[w:and] [t:NN*]
PHC     47 [t:VB*] @[w:and] [t:VB*]
ANDC    50 [t:,] @[w:and] [t:PRP|EX||w:this|that|these|those|so|then]
ANDC    49 ^ @[w:and]

# negation
SYNE    50 @[w:no t:DT] [t:JJ*|NN*||l:quan]
SYNE    49 @[w:neither|nor]
XX0     50 @[w:not|n't]

# quantifiers
QUPR    50 @[l:quan !t:NNP] ![t:NN*|JJ*|CD|DT|PRP$]
QUAN    50 @[l:quan !f:QUPR]
)RULES";

}  // namespace

std::string_view default_rule_source() { return kDefaultRules; }

}  // namespace mdastyl
