#!/usr/bin/env python3
"""Deterministic synthetic English generator for bundled data.

Two outputs share one grammar and lexicon:

  treebank  Penn-Treebank-tagged sentences, one per line, tokens written as
            word/TAG separated by single spaces (split on the last '/').
  feed      JSON Lines article feed ({"source","topic","date","text"}) for
            the ingest command. Style knobs per label control how often
            reporting clauses, past tense and other constructions appear.

Everything is driven by random.Random(seed), so output is reproducible.
"""

import argparse
import json
import random
import sys

# --------------------------------------------------------------------------
# Lexicon

IRREGULAR_VERBS = {
    # lemma: (VBZ, VBD, VBN, VBG)
    "be": ("is", "was", "been", "being"),
    "have": ("has", "had", "had", "having"),
    "do": ("does", "did", "done", "doing"),
    "go": ("goes", "went", "gone", "going"),
    "say": ("says", "said", "said", "saying"),
    "tell": ("tells", "told", "told", "telling"),
    "think": ("thinks", "thought", "thought", "thinking"),
    "know": ("knows", "knew", "known", "knowing"),
    "feel": ("feels", "felt", "felt", "feeling"),
    "find": ("finds", "found", "found", "finding"),
    "see": ("sees", "saw", "seen", "seeing"),
    "show": ("shows", "showed", "shown", "showing"),
    "make": ("makes", "made", "made", "making"),
    "take": ("takes", "took", "taken", "taking"),
    "give": ("gives", "gave", "given", "giving"),
    "get": ("gets", "got", "gotten", "getting"),
    "win": ("wins", "won", "won", "winning"),
    "lose": ("loses", "lost", "lost", "losing"),
    "beat": ("beats", "beat", "beaten", "beating"),
    "hit": ("hits", "hit", "hit", "hitting"),
    "cut": ("cuts", "cut", "cut", "cutting"),
    "put": ("puts", "put", "put", "putting"),
    "set": ("sets", "set", "set", "setting"),
    "sell": ("sells", "sold", "sold", "selling"),
    "buy": ("buys", "bought", "bought", "buying"),
    "pay": ("pays", "paid", "paid", "paying"),
    "spend": ("spends", "spent", "spent", "spending"),
    "lead": ("leads", "led", "led", "leading"),
    "meet": ("meets", "met", "met", "meeting"),
    "build": ("builds", "built", "built", "building"),
    "leave": ("leaves", "left", "left", "leaving"),
    "rise": ("rises", "rose", "risen", "rising"),
    "fall": ("falls", "fell", "fallen", "falling"),
    "grow": ("grows", "grew", "grown", "growing"),
    "begin": ("begins", "began", "begun", "beginning"),
    "write": ("writes", "wrote", "written", "writing"),
    "run": ("runs", "ran", "run", "running"),
    "hold": ("holds", "held", "held", "holding"),
    "bring": ("brings", "brought", "brought", "bringing"),
    "keep": ("keeps", "kept", "kept", "keeping"),
    "hear": ("hears", "heard", "heard", "hearing"),
    "mean": ("means", "meant", "meant", "meaning"),
    "understand": ("understands", "understood", "understood", "understanding"),
    "sing": ("sings", "sang", "sung", "singing"),
    "swear": ("swears", "swore", "sworn", "swearing"),
    "stand": ("stands", "stood", "stood", "standing"),
    "come": ("comes", "came", "come", "coming"),
    "become": ("becomes", "became", "become", "becoming"),
    "speak": ("speaks", "spoke", "spoken", "speaking"),
    "break": ("breaks", "broke", "broken", "breaking"),
    "drive": ("drives", "drove", "driven", "driving"),
    "forget": ("forgets", "forgot", "forgotten", "forgetting"),
    "seek": ("seeks", "sought", "sought", "seeking"),
    "send": ("sends", "sent", "sent", "sending"),
    "draw": ("draws", "drew", "drawn", "drawing"),
    "throw": ("throws", "threw", "thrown", "throwing"),
    "shut": ("shuts", "shut", "shut", "shutting"),
    "plan": ("plans", "planned", "planned", "planning"),
    "stop": ("stops", "stopped", "stopped", "stopping"),
    "admit": ("admits", "admitted", "admitted", "admitting"),
    "ban": ("bans", "banned", "banned", "banning"),
    "commit": ("commits", "committed", "committed", "committing"),
    "submit": ("submits", "submitted", "submitted", "submitting"),
    "prefer": ("prefers", "preferred", "preferred", "preferring"),
    "occur": ("occurs", "occurred", "occurred", "occurring"),
    "star": ("stars", "starred", "starred", "starring"),
    "drop": ("drops", "dropped", "dropped", "dropping"),
    "ship": ("ships", "shipped", "shipped", "shipping"),
    "control": ("controls", "controlled", "controlled", "controlling"),
}


def verb_forms(lemma):
    if lemma in IRREGULAR_VERBS:
        vbz, vbd, vbn, vbg = IRREGULAR_VERBS[lemma]
    else:
        if lemma.endswith(("s", "x", "z", "ch", "sh", "o")):
            vbz = lemma + "es"
        elif lemma.endswith("y") and lemma[-2] not in "aeiou":
            vbz = lemma[:-1] + "ies"
        else:
            vbz = lemma + "s"
        if lemma.endswith("e"):
            vbd = lemma + "d"
        elif lemma.endswith("y") and lemma[-2] not in "aeiou":
            vbd = lemma[:-1] + "ied"
        else:
            vbd = lemma + "ed"
        vbn = vbd
        if lemma.endswith("ie"):
            vbg = lemma[:-2] + "ying"
        elif lemma.endswith("e") and not lemma.endswith(("ee", "ye", "oe")):
            vbg = lemma[:-1] + "ing"
        else:
            vbg = lemma + "ing"
    return {"VB": lemma, "VBP": lemma, "VBZ": vbz, "VBD": vbd, "VBN": vbn, "VBG": vbg}


PUBLIC_VERBS = ["say", "tell", "announce", "claim", "report", "explain", "add",
                "argue", "warn", "deny", "confirm", "admit", "state", "declare",
                "insist", "complain", "reply", "acknowledge", "predict", "promise",
                "write", "testify", "remark", "mention", "concede", "disclose"]
PRIVATE_VERBS = ["think", "believe", "know", "feel", "find", "expect", "hope",
                 "assume", "fear", "realize", "understand", "suspect", "doubt",
                 "estimate", "conclude", "discover", "notice", "remember",
                 "learn", "suppose", "show", "reveal", "indicate"]
SUASIVE_VERBS = ["ask", "urge", "demand", "recommend", "propose", "require",
                 "request", "order", "allow", "instruct"]
INTRANSITIVE_VERBS = ["rise", "fall", "grow", "increase", "decline", "arrive",
                      "die", "work", "happen", "continue", "improve", "recover",
                      "struggle", "compete", "perform", "travel", "succeed",
                      "fail", "return", "resign", "collapse", "occur", "vote"]
TRANSITIVE_VERBS = ["win", "lose", "beat", "launch", "release", "open", "close",
                    "build", "make", "take", "give", "use", "need", "start",
                    "reach", "hit", "cut", "raise", "sell", "buy", "pay",
                    "spend", "lead", "meet", "face", "create", "develop",
                    "produce", "approve", "reject", "sign", "pass", "treat",
                    "test", "study", "publish", "visit", "control", "support",
                    "oppose", "attack", "criticize", "receive", "hire", "fund",
                    "invest", "target", "ban", "review", "block", "change",
                    "destroy", "protect", "hold", "bring", "keep", "drive",
                    "score", "sing", "record", "film", "star", "seek", "send",
                    "draw", "throw", "break", "plan", "stop", "ship", "drop",
                    "cover", "track", "expand", "reduce", "boost", "share"]
CONTROL_VERBS = ["want", "plan", "hope", "try", "decide", "agree", "refuse",
                 "intend", "need", "expect", "seem", "appear", "fail", "continue",
                 "begin", "promise", "prepare", "threaten", "aim"]

NOUNS_BY_TOPIC = {
    "economy": ["market", "stock", "bank", "investor", "rate", "tax", "job",
                "worker", "company", "deal", "price", "trade", "budget", "debt",
                "economist", "dollar", "share", "profit", "loss", "factory",
                "tariff", "loan", "sector", "firm", "consumer", "wage",
                "inflation", "growth", "recession", "revenue", "industry",
                "investment", "payment", "agreement", "regulation", "forecast"],
    "entertainment": ["film", "actor", "actress", "star", "show", "album",
                      "singer", "song", "movie", "director", "fan", "series",
                      "festival", "award", "concert", "studio", "episode",
                      "audience", "celebrity", "band", "role", "premiere",
                      "performance", "production", "appearance", "tour",
                      "character", "network", "critic", "ticket"],
    "health": ["vaccine", "virus", "disease", "drug", "patient", "doctor",
               "hospital", "nurse", "treatment", "study", "trial", "symptom",
               "infection", "clinic", "diet", "cancer", "medicine", "outbreak",
               "condition", "illness", "health", "risk", "dose", "surgery",
               "pharmacy", "researcher", "therapy", "injury", "epidemic"],
    "science": ["researcher", "scientist", "planet", "study", "experiment",
                "species", "climate", "energy", "satellite", "telescope",
                "technology", "device", "phone", "robot", "software", "data",
                "discovery", "laboratory", "university", "mission", "rocket",
                "computer", "network", "system", "theory", "evidence",
                "observation", "development", "innovation", "algorithm"],
    "sports": ["team", "coach", "player", "game", "season", "league",
               "championship", "match", "goal", "fan", "stadium", "title",
               "victory", "defeat", "tournament", "quarterback", "pitcher",
               "injury", "contract", "draft", "playoff", "record", "score",
               "competition", "athlete", "club", "manager", "trade", "medal"],
}
COMMON_NOUNS = ["government", "official", "report", "plan", "policy", "law",
                "court", "judge", "city", "country", "state", "year", "week",
                "month", "day", "time", "percent", "statement", "interview",
                "article", "story", "source", "president", "minister", "party",
                "campaign", "election", "decision", "information", "problem",
                "question", "issue", "effort", "change", "group", "member",
                "leader", "community", "family", "child", "man", "woman",
                "person", "analysis", "crisis", "situation", "position",
                "organization", "administration", "majority", "security",
                "opportunity", "reality", "business", "announcement",
                "management", "awareness", "responsibility", "authority",
                "spokesman", "spokeswoman", "agency", "office", "claim",
                "evidence", "result", "number", "level", "area", "world",
                "money", "power", "news", "life", "way", "part", "case",
                "point", "fact", "idea", "lot", "rest", "kind", "side"]
MASS_NOUNS = {"information", "inflation", "growth", "revenue", "health",
              "energy", "software", "data", "evidence", "money", "power",
              "news", "security", "awareness", "responsibility", "management",
              "treatment", "therapy", "medicine", "technology", "development",
              "innovation", "investment", "regulation", "production",
              "competition", "reality", "majority", "authority", "business",
              "life", "rest", "climate", "debt", "trade"}
IRREGULAR_PLURALS = {"child": "children", "man": "men", "woman": "women",
                     "person": "people", "analysis": "analyses",
                     "crisis": "crises", "species": "species", "series": "series",
                     "spokesman": "spokesmen", "spokeswoman": "spokeswomen"}


def plural(noun):
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


ADJECTIVES = ["new", "big", "major", "economic", "political", "public",
              "federal", "high", "low", "strong", "weak", "important", "recent",
              "local", "national", "global", "financial", "medical",
              "scientific", "popular", "famous", "young", "old", "large",
              "small", "significant", "serious", "possible", "likely", "clear",
              "good", "bad", "great", "real", "true", "false", "fake",
              "dangerous", "safe", "healthy", "early", "late", "final",
              "former", "current", "key", "chief", "senior", "annual",
              "quarterly", "private", "international", "military", "legal",
              "critical", "massive", "huge", "shocking", "secret", "corrupt",
              "radical", "terrible", "incredible", "powerful", "independent",
              "modest", "stable", "volatile", "rapid", "slow", "effective",
              "controversial", "official", "previous", "similar", "different",
              "difficult", "easy", "free", "full", "open", "ready", "available",
              "natural", "human", "social", "digital", "professional"]
PRED_ADJECTIVES = ["likely", "clear", "possible", "important", "true", "safe",
                   "ready", "available", "difficult", "easy", "unclear",
                   "certain", "aware", "sure", "concerned", "happy", "confident",
                   "worried", "responsible", "necessary", "strong", "stable"]
COMPARATIVES = [("higher", "JJR"), ("lower", "JJR"), ("bigger", "JJR"),
                ("better", "JJR"), ("worse", "JJR"), ("larger", "JJR"),
                ("stronger", "JJR"), ("weaker", "JJR"), ("greater", "JJR")]
SUPERLATIVES = [("highest", "JJS"), ("biggest", "JJS"), ("best", "JJS"),
                ("worst", "JJS"), ("largest", "JJS"), ("lowest", "JJS"),
                ("strongest", "JJS"), ("latest", "JJS")]

FIRST_NAMES = ["John", "Maria", "David", "Sarah", "Michael", "Emily", "James",
               "Anna", "Robert", "Laura", "Daniel", "Karen", "Kevin", "Lisa",
               "Mark", "Susan", "Paul", "Julie", "Thomas", "Rachel", "Ahmed",
               "Chen", "Priya", "Luis"]
LAST_NAMES = ["Smith", "Lopez", "Johnson", "Brown", "Garcia", "Miller",
              "Davis", "Wilson", "Taylor", "Anderson", "Martin", "Lee",
              "Thompson", "White", "Harris", "Clark", "Lewis", "Walker",
              "Young", "King", "Wright", "Scott", "Green", "Baker"]
PLACES = [["Washington"], ["Canada"], ["Toronto"], ["New", "York"], ["Ottawa"],
          ["California"], ["Texas"], ["Chicago"], ["Vancouver"], ["Boston"],
          ["Ontario"], ["Florida"], ["China"], ["Europe"], ["Mexico"],
          ["U.S."], ["Los", "Angeles"], ["Montreal"], ["Ohio"]]
ORGS = [["Reuters"], ["Apple"], ["Google"], ["Tesla"], ["NASA"], ["Congress"],
        ["the", "Senate"], ["the", "Fed"], ["Amazon"], ["Netflix"], ["Pfizer"],
        ["the", "NFL"], ["the", "NBA"], ["Microsoft"], ["Facebook"],
        ["Parliament"], ["the", "White", "House"], ["the", "Pentagon"],
        ["Health", "Canada"], ["the", "FDA"]]
DAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday",
        "Sunday"]
MONTHS = ["January", "February", "March", "April", "June", "July", "August",
          "September", "October", "November", "December"]
TITLES = ["Mr.", "Mrs.", "Dr.", "Sen.", "Gov.", "Prof."]

TIME_ADVERBS = ["now", "recently", "soon", "already", "later", "earlier",
                "today", "yesterday", "tomorrow", "previously", "immediately",
                "shortly", "currently", "eventually", "initially", "again"]
PLACE_ADVERBS = ["here", "abroad", "nearby", "overseas", "outside", "inside",
                 "downtown", "everywhere", "elsewhere", "home"]
MANNER_ADVERBS = ["quickly", "slowly", "sharply", "steadily", "openly",
                  "publicly", "strongly", "largely", "widely", "carefully",
                  "directly", "easily", "heavily", "badly", "quietly",
                  "significantly", "repeatedly", "officially", "seriously"]
EMPHATICS = ["really", "definitely", "certainly", "clearly", "truly",
             "absolutely", "surely", "indeed", "just"]
AMPLIFIERS = ["very", "extremely", "completely", "totally", "highly",
              "entirely", "fully", "deeply", "greatly", "strongly"]
DOWNTONERS = ["almost", "barely", "hardly", "nearly", "partly", "slightly",
              "somewhat", "mainly", "merely", "only"]
HEDGE_ADVERBS = ["maybe", "perhaps", "possibly", "probably", "apparently",
                 "reportedly", "allegedly"]
CONJUNCTS = ["However", "Therefore", "Moreover", "Furthermore", "Meanwhile",
             "Nevertheless", "Instead", "Thus", "Consequently", "Otherwise",
             "Besides", "Hence", "Likewise", "Similarly"]
SUBORDINATORS = [("because", "IN"), ("although", "IN"), ("if", "IN"),
                 ("when", "WRB"), ("while", "IN"), ("though", "IN"),
                 ("unless", "IN"), ("since", "IN"), ("after", "IN"),
                 ("before", "IN"), ("until", "IN"), ("once", "IN")]
PREPOSITIONS = ["of", "in", "on", "at", "for", "with", "from", "about", "into",
                "over", "after", "during", "under", "against", "between",
                "through", "despite", "without", "within", "among", "across",
                "near", "around", "behind", "toward", "by"]

TOPIC_ADJ = {
    "economy": ["economic", "financial", "fiscal", "monetary", "quarterly"],
    "entertainment": ["musical", "artistic", "dramatic", "live", "animated"],
    "health": ["medical", "clinical", "mental", "public", "chronic"],
    "science": ["scientific", "digital", "technical", "experimental", "solar"],
    "sports": ["athletic", "defensive", "offensive", "regular", "final"],
}


# --------------------------------------------------------------------------
# Grammar


class Style:
    """Probabilities for constructions. Defaults give neutral news prose."""

    def __init__(self, **kw):
        self.report = 0.2          # sentence wrapped in a reporting clause
        self.past = 0.5            # past tense for finite verbs
        self.adjective = 0.35      # attributive adjective in an NP
        self.conjunct = 0.05       # sentence-initial conjunct
        self.emphatic = 0.05
        self.second_person = 0.03
        self.question = 0.03
        self.passive = 0.1
        self.relative = 0.1
        self.private = 0.08
        self.modal = 0.12
        self.negation = 0.08
        self.quote = 0.08
        for k, v in kw.items():
            if not hasattr(self, k):
                raise ValueError(k)
            setattr(self, k, v)


class Gen:
    def __init__(self, rng, topic, style):
        self.r = rng
        self.topic = topic
        self.style = style

    def p(self, prob):
        return self.r.random() < prob

    def pick(self, seq):
        return self.r.choice(seq)

    # -- noun phrases -------------------------------------------------------
    # Returns (tokens, person, number)

    def topic_noun(self):
        pool = NOUNS_BY_TOPIC.get(self.topic) or NOUNS_BY_TOPIC["economy"]
        if self.p(0.3):
            pool = COMMON_NOUNS
        return self.pick(pool)

    def noun_head(self, allow_plural=True):
        noun = self.topic_noun()
        if allow_plural and noun not in MASS_NOUNS and self.p(0.4):
            return [(plural(noun), "NNS")], "pl"
        return [(noun, "NN")], "sg"

    def adjectives(self):
        out = []
        if self.p(self.style.adjective):
            if self.p(0.15):
                out.append((self.pick(AMPLIFIERS[:4]), "RB"))
            pool = ADJECTIVES + TOPIC_ADJ.get(self.topic, [])
            out.append((self.pick(pool), "JJ"))
            if self.p(0.15):
                out.append((self.pick(ADJECTIVES), "JJ"))
        elif self.p(0.05):
            out.append(self.pick(SUPERLATIVES))
        elif self.p(0.04):
            out.append(self.pick(COMPARATIVES))
        return out

    def person_name(self):
        toks = []
        if self.p(0.2):
            toks.append((self.pick(TITLES), "NNP"))
        elif self.p(0.5):
            toks.append((self.pick(FIRST_NAMES), "NNP"))
        toks.append((self.pick(LAST_NAMES), "NNP"))
        return toks

    def org(self):
        return [(w, "DT" if w == "the" else "NNP") for w in self.pick(ORGS)]

    def place(self):
        return [(w, "NNP") for w in self.pick(PLACES)]

    def determiner(self, number):
        if number == "sg":
            return self.pick([("the", "DT"), ("the", "DT"), ("a", "DT"),
                              ("this", "DT"), ("that", "DT"), ("every", "DT"),
                              ("each", "DT"), ("another", "DT"), ("no", "DT")])
        return self.pick([("the", "DT"), ("the", "DT"), ("these", "DT"),
                          ("those", "DT"), ("some", "DT"), ("many", "JJ"),
                          ("several", "JJ"), ("all", "DT"), ("most", "JJS"),
                          ("both", "DT"), ("few", "JJ"), ("no", "DT")])

    def fix_article(self, toks):
        # a/an agreement
        for i, (w, t) in enumerate(toks[:-1]):
            if w.lower() == "a" and toks[i + 1][0][0].lower() in "aeiou":
                toks[i] = ("an" if w == "a" else "An", t)
        return toks

    def np(self, depth=0, role="subj", allow_pronoun=True):
        r = self.r.random()
        if allow_pronoun and r < 0.18:
            return self.pronoun(role)
        if r < 0.30:
            return self.person_name(), 3, "sg"
        if r < 0.36:
            return self.org(), 3, "sg"
        if r < 0.40:
            toks = [(self.pick(["two", "three", "four", "five", "10", "20",
                                "100", "1,000", "12", "3.5"]), "CD")]
            noun = self.topic_noun()
            if noun in MASS_NOUNS:
                noun = "person" if self.p(0.5) else "worker"
            toks += [(plural(noun), "NNS")]
            return toks, 3, "pl"
        if r < 0.45:
            owner = self.person_name() if self.p(0.5) else self.place()
            head, num = self.noun_head()
            return owner + [("'s", "POS")] + self.adjectives() + head, 3, num
        if r < 0.50:
            poss = self.pick([("his", "PRP$"), ("her", "PRP$"), ("their", "PRP$"),
                              ("its", "PRP$"), ("our", "PRP$"), ("my", "PRP$"),
                              ("your", "PRP$")])
            head, num = self.noun_head()
            return [poss] + self.adjectives() + head, 3, num
        head, num = self.noun_head()
        if head[0][0] in MASS_NOUNS and self.p(0.5):
            toks = self.adjectives() + head
        else:
            toks = [self.determiner(num)] + self.adjectives() + head
            if self.p(0.1) and num == "pl" and toks[0][0] in ("the",):
                toks = [("all", "PDT")] + toks
        toks = self.fix_article(toks)
        if depth < 1:
            if self.p(0.25):
                toks += self.pp(depth + 1)
            elif self.p(self.style.relative):
                toks += self.relative_clause(num, depth + 1)
            elif self.p(0.06):
                toks += self.whiz(depth + 1)
        return toks, 3, num

    def pronoun(self, role):
        subj = [("I", "PRP", 1, "sg"), ("we", "PRP", 1, "pl"),
                ("he", "PRP", 3, "sg"), ("she", "PRP", 3, "sg"),
                ("it", "PRP", 3, "sg"), ("they", "PRP", 3, "pl"),
                ("you", "PRP", 2, "pl")]
        obj = [("me", "PRP", 1, "sg"), ("us", "PRP", 1, "pl"),
               ("him", "PRP", 3, "sg"), ("her", "PRP", 3, "sg"),
               ("it", "PRP", 3, "sg"), ("them", "PRP", 3, "pl"),
               ("you", "PRP", 2, "pl")]
        if self.p(self.style.second_person):
            w, t, per, num = ("you", "PRP", 2, "pl")
        elif role == "subj" and self.p(0.08):
            w = self.pick(["someone", "everyone", "nobody", "anyone",
                           "something", "nothing", "everything", "somebody"])
            return [(w, "NN")], 3, "sg"
        elif role == "subj" and self.p(0.06):
            w = self.pick(["this", "that"])
            return [(w, "DT")], 3, "sg"
        else:
            w, t, per, num = self.pick(subj if role == "subj" else obj)
        return [(w, t)], per, num

    def pp(self, depth=1):
        prep = self.pick(PREPOSITIONS)
        obj, _, _ = self.np(depth + 1, role="obj")
        return [(prep, "IN")] + obj

    def relative_clause(self, num, depth):
        r = self.r.random()
        if r < 0.4:
            rel = [("who", "WP")] if self.p(0.5) else [("which", "WDT")]
            return rel + self.vp(3, num, depth=depth + 1, allow_clause=False)
        if r < 0.7:
            subj, per, snum = self.np(depth + 1, role="subj")
            rel = [("that", "WDT")] if self.p(0.6) else [("which", "WDT")]
            verb = self.pick(TRANSITIVE_VERBS)
            return rel + subj + self.finite_verb(verb, per, snum)
        if r < 0.85:
            noun, _ = self.noun_head(allow_plural=False)
            return ([("whose", "WP$")] + noun +
                    self.vp(3, "sg", depth=depth + 1, allow_clause=False))
        prep = self.pick(["in", "of", "with", "for", "on"])
        subj, per, snum = self.np(depth + 1, role="subj")
        verb = self.pick(INTRANSITIVE_VERBS)
        return ([(prep, "IN"), ("which", "WDT")] + subj +
                self.finite_verb(verb, per, snum))

    def whiz(self, depth):
        if self.p(0.5):
            verb = self.pick(TRANSITIVE_VERBS)
            obj, _, _ = self.np(depth + 1, role="obj")
            return [(verb_forms(verb)["VBG"], "VBG")] + obj
        verb = self.pick(TRANSITIVE_VERBS)
        out = [(verb_forms(verb)["VBN"], "VBN")]
        if self.p(0.5):
            out += [("by", "IN")] + self.np(depth + 1, role="obj")[0]
        else:
            out += self.pp(depth + 1)
        return out

    # -- verbs --------------------------------------------------------------

    def tense(self):
        return "past" if self.p(self.style.past) else "present"

    def finite_form(self, lemma, person, number, tense):
        forms = verb_forms(lemma)
        if lemma == "be":
            if tense == "past":
                return ("was", "VBD") if number == "sg" and person != 2 else ("were", "VBD")
            if person == 1 and number == "sg":
                return ("am", "VBP")
            if person == 3 and number == "sg":
                return ("is", "VBZ")
            return ("are", "VBP")
        if tense == "past":
            return (forms["VBD"], "VBD")
        if person == 3 and number == "sg":
            return (forms["VBZ"], "VBZ")
        return (forms["VBP"], "VBP")

    def finite_verb(self, lemma, person, number, tense=None):
        tense = tense or self.tense()
        return [self.finite_form(lemma, person, number, tense)]

    def maybe_adverb(self):
        r = self.r.random()
        if r < self.style.emphatic:
            return [(self.pick(EMPHATICS), "RB")]
        if r < self.style.emphatic + 0.06:
            return [(self.pick(MANNER_ADVERBS + HEDGE_ADVERBS + DOWNTONERS[:4]), "RB")]
        return []

    def object_and_tail(self, depth):
        out = self.np(depth + 1, role="obj")[0]
        if self.p(0.3):
            out += self.pp(depth + 1)
        return out

    def complement_clause(self, depth, lemma_pool):
        # public/private verb + (that) + clause
        out = []
        if self.p(0.55):
            out.append(("that", "IN"))
        subj, per, num = self.np(depth + 1, role="subj")
        out += subj + self.vp(per, num, depth=depth + 1, allow_clause=False)
        return out

    def vp(self, person, number, depth=0, allow_clause=True):
        r = self.r.random()
        s = self.style
        tense = self.tense()
        adv = self.maybe_adverb()
        # modal
        if self.p(s.modal):
            modal = self.pick(["will", "would", "could", "can", "may", "might",
                               "should", "must"])
            out = [(modal, "MD")]
            if self.p(s.negation):
                out.append(("not", "RB"))
            out += adv
            verb = self.pick(TRANSITIVE_VERBS)
            if self.p(0.2):
                out += [("be", "VB"), (verb_forms(verb)["VBN"], "VBN")]
                if self.p(0.4):
                    out += [("by", "IN")] + self.np(depth + 1, role="obj")[0]
                return out
            if self.p(0.15):
                out += [("have", "VB"), (verb_forms(verb)["VBN"], "VBN")]
            else:
                out.append((verb, "VB"))
            return out + self.object_and_tail(depth)
        # negation with do-support
        if self.p(s.negation):
            do = self.finite_form("do", person, number, tense)
            neg = ("n't", "RB") if self.p(0.5) else ("not", "RB")
            verb = self.pick(TRANSITIVE_VERBS)
            return [do, neg] + [(verb, "VB")] + self.object_and_tail(depth)
        # passive
        if self.p(s.passive):
            be = self.finite_form("be", person, number, tense)
            verb = self.pick(TRANSITIVE_VERBS)
            out = [be] + adv + [(verb_forms(verb)["VBN"], "VBN")]
            if self.p(0.35):
                out += [("by", "IN")] + self.np(depth + 1, role="obj")[0]
            elif self.p(0.4):
                out += self.pp(depth + 1)
            return out
        # reporting / cognition with clause complement
        if allow_clause and depth < 2 and r < 0.12 + s.private:
            pool = PRIVATE_VERBS if self.p(0.6) else PUBLIC_VERBS
            if r < s.private * 0.5:
                pool = PRIVATE_VERBS
            verb = self.pick(pool)
            return (self.finite_verb(verb, person, number, tense) + adv +
                    self.complement_clause(depth, pool))
        # suasive + object + to-infinitive
        if allow_clause and r < 0.2 + s.private:
            verb = self.pick(SUASIVE_VERBS)
            obj = self.np(depth + 1, role="obj")[0]
            inf = self.pick(TRANSITIVE_VERBS)
            return (self.finite_verb(verb, person, number, tense) + obj +
                    [("to", "TO"), (inf, "VB")] + self.object_and_tail(depth))
        # control verb + to-infinitive
        if r < 0.32:
            verb = self.pick(CONTROL_VERBS)
            out = self.finite_verb(verb, person, number, tense) + [("to", "TO")]
            if verb in ("seem", "appear") and self.p(0.5):
                return out + [("be", "VB"), (self.pick(PRED_ADJECTIVES), "JJ")]
            inf = self.pick(TRANSITIVE_VERBS)
            return out + [(inf, "VB")] + self.object_and_tail(depth)
        # be + predicate
        if r < 0.45:
            be = self.finite_form("be", person, number, tense)
            out = [be] + adv
            q = self.r.random()
            if q < 0.45:
                if self.p(0.2):
                    out.append((self.pick(AMPLIFIERS), "RB"))
                return out + [(self.pick(PRED_ADJECTIVES), "JJ")]
            if q < 0.75:
                return out + self.np(depth + 1, role="obj", allow_pronoun=False)[0]
            return out + self.pp(depth + 1)
        # perfect
        if r < 0.55:
            have = self.finite_form("have", person, number, tense)
            verb = self.pick(TRANSITIVE_VERBS)
            return [have] + adv + [(verb_forms(verb)["VBN"], "VBN")] + self.object_and_tail(depth)
        # progressive
        if r < 0.62:
            be = self.finite_form("be", person, number, tense)
            verb = self.pick(TRANSITIVE_VERBS)
            return [be] + adv + [(verb_forms(verb)["VBG"], "VBG")] + self.object_and_tail(depth)
        # intransitive
        if r < 0.75:
            verb = self.pick(INTRANSITIVE_VERBS)
            out = adv + self.finite_verb(verb, person, number, tense)
            if self.p(0.4):
                out += self.pp(depth + 1)
            elif self.p(0.3):
                out.append((self.pick(TIME_ADVERBS + PLACE_ADVERBS), "RB"))
                if out[-1][0] in ("today", "yesterday", "tomorrow"):
                    out[-1] = (out[-1][0], "NN")
            return out
        verb = self.pick(TRANSITIVE_VERBS)
        return adv + self.finite_verb(verb, person, number, tense) + self.object_and_tail(depth)

    # -- sentences ----------------------------------------------------------

    def clause(self, depth=0):
        if self.p(0.05):
            be = self.finite_form("be", 3, "pl" if self.p(0.5) else "sg", self.tense())
            num = "sg" if be[0] in ("is", "was") else "pl"
            head, _ = self.noun_head(allow_plural=False)
            if num == "pl":
                head = [(plural(head[0][0]) if head[0][0] not in MASS_NOUNS else head[0][0],
                         "NNS" if head[0][0] not in MASS_NOUNS else "NN")]
            det = self.determiner(num)
            toks = [("there", "EX"), be, det] + self.adjectives() + head + self.pp(1)
            return self.fix_article(toks)
        if self.p(0.04):
            be = self.finite_form("be", 3, "sg", self.tense())
            adj = self.pick(PRED_ADJECTIVES)
            if self.p(0.5):
                subj, per, num = self.np(1, role="subj")
                return ([("it", "PRP"), be, (adj, "JJ"), ("that", "IN")] + subj +
                        self.vp(per, num, depth=1, allow_clause=False))
            verb = self.pick(TRANSITIVE_VERBS)
            return [("it", "PRP"), be, (adj, "JJ"), ("to", "TO"), (verb, "VB")] + \
                self.object_and_tail(1)
        subj, per, num = self.np(depth, role="subj")
        return subj + self.vp(per, num, depth=depth)

    def report_frame(self, body):
        """Wrap a clause as reported speech."""
        verb = self.pick(["say", "say", "say", "say", "tell", "announce", "claim",
                          "report", "explain", "add", "warn", "state", "confirm",
                          "argue", "deny", "insist", "admit"])
        tense = self.tense()
        if verb == "tell":
            speaker, per, num = self.np(0, role="subj")
            return (speaker + self.finite_verb("tell", per, num, tense) +
                    self.np(1, role="obj")[0] +
                    ([("that", "IN")] if self.p(0.5) else []) + body)
        if self.p(self.style.quote):
            speaker, per, num = self.np(0, role="subj")
            form = self.finite_form(verb, per, num, tense)
            return [('"', "``")] + body + [(",", ","), ('"', "''")] + speaker + [form]
        speaker, per, num = self.np(0, role="subj")
        if self.p(0.2):
            return body + [(",", ",")] + speaker + self.finite_verb(verb, per, num, tense)
        out = speaker + self.finite_verb(verb, per, num, tense)
        if self.p(0.35):
            out.append(("that", "IN"))
        return out + body

    def question(self):
        r = self.r.random()
        subj, per, num = self.np(1, role="subj")
        verb = self.pick(TRANSITIVE_VERBS)
        if r < 0.5:
            wh = self.pick([("what", "WP"), ("why", "WRB"), ("how", "WRB"),
                            ("when", "WRB"), ("where", "WRB"), ("who", "WP")])
            do = self.finite_form("do", per, num, self.tense())
            if wh[0] in ("what", "who"):
                return [wh, do] + subj + [(verb, "VB")], "?"
            return [wh, do] + subj + [(verb, "VB")] + self.np(1, role="obj")[0], "?"
        do = self.finite_form("do", per, num, self.tense())
        return [do] + subj + [(verb, "VB")] + self.np(1, role="obj")[0], "?"

    def sentence(self):
        s = self.style
        if self.p(s.question):
            toks, end = self.question()
            return self.finish(toks, end)
        body = self.clause()
        r = self.r.random()
        if r < 0.12:
            sub, tag = self.pick(SUBORDINATORS)
            extra = self.clause(1)
            if self.p(0.5):
                body = [(sub, tag)] + extra + [(",", ",")] + body
            else:
                body = body + [(sub, tag)] + extra
        elif r < 0.2:
            body = body + [(",", ","), (self.pick(["and", "but", "or"]), "CC")] + self.clause(1)
        elif r < 0.25:
            body = body + [(self.pick(["and", "or"]), "CC")] + self.np(1, role="obj")[0]
        if self.p(s.report):
            body = self.report_frame(body)
        if self.p(0.12):
            lead = self.pick([[("In", "IN"), (self.pick(MONTHS), "NNP")],
                              [("On", "IN"), (self.pick(DAYS), "NNP")],
                              [("According", "VBG"), ("to", "TO")] + self.np(1, role="obj")[0],
                              [("In", "IN")] + self.place(),
                              [("Last", "JJ"), ("year", "NN")],
                              [("Earlier", "RBR"), ("this", "DT"), ("week", "NN")]])
            body = lead + [(",", ",")] + body
        elif self.p(s.conjunct):
            body = [(self.pick(CONJUNCTS), "RB"), (",", ",")] + body
        if self.p(0.08):
            body = body + [(self.pick(TIME_ADVERBS), "RB")]
            if body[-1][0] in ("today", "yesterday", "tomorrow"):
                body[-1] = (body[-1][0], "NN")
        return self.finish(body, ".")

    def finish(self, toks, end):
        toks = list(toks)
        toks = self.contract(toks)
        if toks and toks[0][1] not in ("NNP", "``"):
            w, t = toks[0]
            toks[0] = (w[0].upper() + w[1:], t)
        elif toks and toks[0][1] == "``" and len(toks) > 1 and toks[1][1] != "NNP":
            w, t = toks[1]
            toks[1] = (w[0].upper() + w[1:], t)
        return toks + [(end, ".")]

    def contract(self, toks):
        out = []
        i = 0
        while i < len(toks):
            w, t = toks[i]
            nxt = toks[i + 1] if i + 1 < len(toks) else None
            if nxt and nxt[0] == "not" and self.p(0.4):
                low = w.lower()
                if low in ("is", "are", "was", "were", "does", "do", "did",
                           "could", "would", "should", "has", "have", "had",
                           "must"):
                    out += [(w, t), ("n't", "RB")]
                    i += 2
                    continue
                if low == "can":
                    out += [("ca", "MD"), ("n't", "RB")]
                    i += 2
                    continue
                if low == "will":
                    out += [("wo", "MD"), ("n't", "RB")]
                    i += 2
                    continue
            if nxt and t == "PRP" and w.lower() in ("it", "he", "she") and \
                    nxt[0] == "is" and self.p(0.3):
                out += [(w, t), ("'s", "VBZ")]
                i += 2
                continue
            if nxt and t == "PRP" and w.lower() in ("they", "we", "you") and \
                    nxt[0] == "are" and self.p(0.3):
                out += [(w, t), ("'re", "VBP")]
                i += 2
                continue
            if nxt and t == "PRP" and nxt[0] == "will" and self.p(0.2):
                out += [(w, t), ("'ll", "MD")]
                i += 2
                continue
            if nxt and w == "I" and nxt[0] == "am" and self.p(0.5):
                out += [(w, t), ("'m", "VBP")]
                i += 2
                continue
            out.append((w, t))
            i += 1
        return out


def detokenize(tokens):
    out = ""
    open_quote = False
    prev = None
    for w in tokens:
        no_space_before = w in (".", ",", ";", ":", "?", "!", "%", ")") or \
            w in ("n't", "'s", "'re", "'ll", "'m", "'ve", "'d")
        if w == '"':
            no_space_before = open_quote
            open_quote = not open_quote
        if out and not no_space_before and prev not in ("$", "(") and \
                not (prev == '"' and open_quote):
            out += " "
        out += w
        prev = w
    return out


# --------------------------------------------------------------------------
# Commands

TOPICS = ["economy", "entertainment", "health", "science", "sports"]


def cmd_treebank(args):
    rng = random.Random(args.seed)
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    out.write("# Synthetic Penn-Treebank-tagged sample. Generated by tools/synth.py "
              f"treebank --seed {args.seed} --sentences {args.sentences}.\n")
    out.write("# Format: one sentence per line, word/TAG tokens split on the last '/'.\n")
    for i in range(args.sentences):
        topic = TOPICS[i % len(TOPICS)]
        style = Style(report=0.25, past=0.5, question=0.04, conjunct=0.06,
                      emphatic=0.08, second_person=0.05)
        g = Gen(rng, topic, style)
        sent = g.sentence()
        out.write(" ".join(f"{w}/{t}" for w, t in sent) + "\n")


CREDIBLE_SOURCES = ["Reuters", "New York Times", "Global News", "Business Insider",
                    "CBC", "New Yorker"]
NONCREDIBLE_SOURCES = ["The Beaverton", "Breitbart", "Global Research",
                       "If You Only News", "Your Newswire", "MadWorld News",
                       "Liberty Writers"]

PROFILES = {
    # Mirrors the direction of the published economy pattern: more reporting
    # clauses and past tense in credible text.
    "differentiation": {
        "credible": dict(report=0.55, past=0.8),
        "non-credible": dict(report=0.05, past=0.25),
    },
    "mixed": {
        "credible": dict(report=0.4, past=0.65, adjective=0.3, conjunct=0.03,
                         emphatic=0.06),
        "non-credible": dict(report=0.12, past=0.35, adjective=0.45,
                             conjunct=0.12, emphatic=0.03, second_person=0.08,
                             question=0.06, passive=0.16),
    },
}


def article(rng, topic, style, min_tokens):
    g = Gen(rng, topic, style)
    sentences = []
    count = 0
    while count < min_tokens:
        s = g.sentence()
        sentences.append(detokenize([w for w, _ in s]))
        count += len(s)
    # paragraphs of 3-5 sentences
    paras = []
    i = 0
    while i < len(sentences):
        n = rng.randint(3, 5)
        paras.append(" ".join(sentences[i:i + n]))
        i += n
    return "\n\n".join(paras)


def cmd_feed(args):
    rng = random.Random(args.seed)
    profile = PROFILES[args.profile]
    topics = args.topics.split(",") if args.topics else TOPICS
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    for topic in topics:
        for label in ("credible", "non-credible"):
            sources = CREDIBLE_SOURCES if label == "credible" else NONCREDIBLE_SOURCES
            for k in range(args.per_label):
                style = Style(**profile[label])
                text = article(rng, topic, style, rng.randint(args.min_tokens,
                                                              args.min_tokens + 250))
                year = rng.randint(2011, 2018)
                date = f"{year:04d}-{rng.randint(1, 12):02d}-{rng.randint(1, 28):02d}"
                rec = {"source": sources[k % len(sources)], "topic": topic,
                       "date": date, "text": text}
                out.write(json.dumps(rec, ensure_ascii=False, sort_keys=True) + "\n")
    for k in range(args.unknown):
        text = article(rng, "economy", Style(), 60)
        rec = {"source": f"unregistered{k}.example.com", "topic": "economy",
               "date": "2015-06-01", "text": text}
        out.write(json.dumps(rec, sort_keys=True) + "\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True)
    tb = sub.add_parser("treebank")
    tb.add_argument("--seed", type=int, default=0)
    tb.add_argument("--sentences", type=int, default=5000)
    tb.add_argument("--output")
    fd = sub.add_parser("feed")
    fd.add_argument("--seed", type=int, default=0)
    fd.add_argument("--profile", choices=sorted(PROFILES), default="mixed")
    fd.add_argument("--per-label", type=int, default=10)
    fd.add_argument("--topics")
    fd.add_argument("--min-tokens", type=int, default=300)
    fd.add_argument("--unknown", type=int, default=0)
    fd.add_argument("--output")
    args = ap.parse_args()
    {"treebank": cmd_treebank, "feed": cmd_feed}[args.cmd](args)


if __name__ == "__main__":
    main()
