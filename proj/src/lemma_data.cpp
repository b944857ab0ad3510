#include "svlight/lemmatizer.hpp"

// Built-in lemmatization table: irregular verb forms, irregular noun
// plurals, and ordered suffix rules.  Rule order matters: within a class the
// first matching suffix wins, so longer guards precede the shorter
// restoration rules they protect (e.g. "ooked"->"ook" before "ked"->"ke").
// Forms that no orthographic rule can recover (heated vs created) sit in the
// exception table instead.

namespace svlight {

namespace {

struct Entry {
    const char* surface;
    const char* lemma;
};

const Entry kVerbExceptions[] = {
    // be / have / do
    {"am", "be"}, {"is", "be"}, {"are", "be"}, {"was", "be"}, {"were", "be"},
    {"been", "be"}, {"being", "be"},
    {"has", "have"}, {"had", "have"},
    {"did", "do"}, {"done", "do"},
    // common irregular pasts and participles
    {"said", "say"}, {"went", "go"}, {"gone", "go"}, {"got", "get"}, {"gotten", "get"},
    {"made", "make"}, {"knew", "know"}, {"known", "know"}, {"thought", "think"},
    {"took", "take"}, {"taken", "take"}, {"came", "come"}, {"gave", "give"},
    {"given", "give"}, {"found", "find"}, {"told", "tell"}, {"became", "become"},
    {"shown", "show"}, {"left", "leave"}, {"felt", "feel"}, {"put", "put"},
    {"brought", "bring"}, {"began", "begin"}, {"begun", "begin"}, {"kept", "keep"},
    {"held", "hold"}, {"wrote", "write"}, {"written", "write"}, {"stood", "stand"},
    {"heard", "hear"}, {"let", "let"}, {"meant", "mean"}, {"set", "set"},
    {"sat", "sit"}, {"spoke", "speak"}, {"spoken", "speak"}, {"led", "lead"},
    {"read", "read"}, {"grew", "grow"}, {"grown", "grow"}, {"lost", "lose"},
    {"fell", "fall"}, {"fallen", "fall"}, {"sent", "send"}, {"built", "build"},
    {"understood", "understand"}, {"drew", "draw"}, {"drawn", "draw"},
    {"broke", "break"}, {"broken", "break"}, {"spent", "spend"}, {"cut", "cut"},
    {"rose", "rise"}, {"risen", "rise"}, {"drove", "drive"}, {"driven", "drive"},
    {"bought", "buy"}, {"wore", "wear"}, {"worn", "wear"}, {"chose", "choose"},
    {"chosen", "choose"}, {"sought", "seek"}, {"threw", "throw"}, {"thrown", "throw"},
    {"caught", "catch"}, {"dealt", "deal"}, {"won", "win"}, {"forgot", "forget"},
    {"forgotten", "forget"}, {"laid", "lay"}, {"sold", "sell"}, {"fought", "fight"},
    {"bore", "bear"}, {"borne", "bear"}, {"born", "bear"}, {"beaten", "beat"},
    {"beating", "beat"}, {"ate", "eat"}, {"eaten", "eat"}, {"eating", "eat"},
    {"met", "meet"}, {"paid", "pay"}, {"taught", "teach"}, {"flew", "fly"},
    {"flown", "fly"}, {"rode", "ride"}, {"ridden", "ride"}, {"shook", "shake"},
    {"shaken", "shake"}, {"sang", "sing"}, {"sung", "sing"}, {"swam", "swim"},
    {"swum", "swim"}, {"rang", "ring"}, {"rung", "ring"}, {"hung", "hang"},
    {"hanged", "hang"}, {"bit", "bite"}, {"bitten", "bite"}, {"hid", "hide"},
    {"hidden", "hide"}, {"struck", "strike"}, {"slept", "sleep"}, {"stole", "steal"},
    {"stolen", "steal"}, {"swept", "sweep"}, {"wept", "weep"}, {"crept", "creep"},
    {"sank", "sink"}, {"sunk", "sink"}, {"sprang", "spring"}, {"sprung", "spring"},
    {"swore", "swear"}, {"sworn", "swear"}, {"swung", "swing"}, {"tore", "tear"},
    {"torn", "tear"}, {"woke", "wake"}, {"woken", "wake"}, {"wound", "wind"},
    {"bent", "bend"}, {"bound", "bind"}, {"bled", "bleed"}, {"blew", "blow"},
    {"blown", "blow"}, {"bred", "breed"}, {"burst", "burst"}, {"cost", "cost"},
    {"dug", "dig"}, {"fed", "feed"}, {"fled", "flee"}, {"forbade", "forbid"},
    {"forbidden", "forbid"}, {"forgave", "forgive"}, {"forgiven", "forgive"},
    {"froze", "freeze"}, {"frozen", "freeze"}, {"hit", "hit"}, {"hurt", "hurt"},
    {"knelt", "kneel"}, {"lent", "lend"}, {"lit", "light"}, {"proven", "prove"},
    {"quit", "quit"}, {"ran", "run"}, {"shone", "shine"}, {"shot", "shoot"},
    {"shut", "shut"}, {"slid", "slide"}, {"spun", "spin"}, {"spread", "spread"},
    {"stuck", "stick"}, {"stung", "sting"}, {"underwent", "undergo"},
    {"undergone", "undergo"}, {"bet", "bet"}, {"burnt", "burn"}, {"dreamt", "dream"},
    {"leapt", "leap"}, {"learnt", "learn"}, {"spelt", "spell"}, {"spilt", "spill"},
    {"smelt", "smell"}, {"saw", "see"}, {"seen", "see"}, {"cast", "cast"},
    {"spat", "spit"}, {"trod", "tread"}, {"arose", "arise"}, {"arisen", "arise"},
    {"awoke", "awake"}, {"withdrew", "withdraw"}, {"withdrawn", "withdraw"},
    {"overcame", "overcome"}, {"upset", "upset"}, {"split", "split"},
    {"wove", "weave"}, {"woven", "weave"}, {"strode", "stride"}, {"spoilt", "spoil"},
    {"lain", "lie"}, {"lied", "lie"}, {"lies", "lie"}, {"lying", "lie"},
    {"died", "die"}, {"dies", "die"}, {"dying", "die"},
    {"tied", "tie"}, {"ties", "tie"}, {"tying", "tie"},
    // regular verbs the suffix rules would mangle
    {"heated", "heat"}, {"heating", "heat"}, {"treated", "treat"}, {"treating", "treat"},
    {"repeated", "repeat"}, {"repeating", "repeat"}, {"defeated", "defeat"},
    {"defeating", "defeat"}, {"cheated", "cheat"}, {"cheating", "cheat"},
    {"seated", "seat"}, {"seating", "seat"}, {"retreated", "retreat"},
    {"retreating", "retreat"},
    {"competed", "compete"}, {"competing", "compete"},
    {"visited", "visit"}, {"visiting", "visit"}, {"edited", "edit"},
    {"editing", "edit"}, {"limited", "limit"}, {"limiting", "limit"},
    {"exhibited", "exhibit"}, {"exhibiting", "exhibit"}, {"inhabited", "inhabit"},
    {"inhabiting", "inhabit"}, {"profited", "profit"}, {"profiting", "profit"},
    {"credited", "credit"}, {"crediting", "credit"}, {"benefited", "benefit"},
    {"benefiting", "benefit"}, {"audited", "audit"}, {"auditing", "audit"},
    {"merited", "merit"}, {"meriting", "merit"}, {"deposited", "deposit"},
    {"depositing", "deposit"}, {"inherited", "inherit"}, {"inheriting", "inherit"},
    {"prohibited", "prohibit"}, {"prohibiting", "prohibit"},
    {"piloted", "pilot"}, {"piloting", "pilot"}, {"pivoted", "pivot"},
    {"pivoting", "pivot"},
    {"developed", "develop"}, {"developing", "develop"},
    {"focused", "focus"}, {"focusing", "focus"}, {"focuses", "focus"},
    {"tasted", "taste"}, {"tasting", "taste"}, {"wasted", "waste"},
    {"wasting", "waste"}, {"pasted", "paste"}, {"pasting", "paste"},
    {"ached", "ache"}, {"aching", "ache"}, {"bathed", "bathe"}, {"bathing", "bathe"},
    {"breathed", "breathe"}, {"breathing", "breathe"}, {"soothed", "soothe"},
    {"soothing", "soothe"}, {"clothed", "clothe"}, {"clothing", "clothe"},
    {"owed", "owe"}, {"owing", "owe"},
    {"interfered", "interfere"}, {"interfering", "interfere"},
    {"adhered", "adhere"}, {"adhering", "adhere"},
    {"intervened", "intervene"}, {"intervening", "intervene"},
    {"convened", "convene"}, {"convening", "convene"},
    {"condoned", "condone"}, {"condoning", "condone"},
    {"colored", "color"}, {"coloring", "color"}, {"honored", "honor"},
    {"honoring", "honor"}, {"favored", "favor"}, {"favoring", "favor"},
    {"labored", "labor"}, {"laboring", "labor"}, {"monitored", "monitor"},
    {"monitoring", "monitor"}, {"authored", "author"}, {"authoring", "author"},
    {"anchored", "anchor"}, {"anchoring", "anchor"}, {"tailored", "tailor"},
    {"tailoring", "tailor"}, {"sponsored", "sponsor"}, {"sponsoring", "sponsor"},
    {"harbored", "harbor"}, {"harboring", "harbor"},
    {"signaled", "signal"}, {"signaling", "signal"}, {"totaled", "total"},
    {"totaling", "total"}, {"equaled", "equal"}, {"equaling", "equal"},
    {"rivaled", "rival"}, {"rivaling", "rival"},
    {"changing", "change"}, {"arranging", "arrange"}, {"exchanging", "exchange"},
    {"challenging", "challenge"}, {"ranging", "range"}, {"plunging", "plunge"},
    {"lunging", "lunge"}, {"hinging", "hinge"}, {"cringing", "cringe"},
};

const Entry kNounExceptions[] = {
    {"knives", "knife"}, {"wives", "wife"}, {"lives", "life"}, {"leaves", "leaf"},
    {"halves", "half"}, {"shelves", "shelf"}, {"thieves", "thief"},
    {"wolves", "wolf"}, {"calves", "calf"}, {"loaves", "loaf"},
    {"scarves", "scarf"}, {"selves", "self"}, {"elves", "elf"},
    {"children", "child"}, {"feet", "foot"}, {"teeth", "tooth"},
    {"geese", "goose"}, {"mice", "mouse"}, {"lice", "louse"}, {"oxen", "ox"},
    {"criteria", "criterion"}, {"phenomena", "phenomenon"},
    {"analyses", "analysis"}, {"crises", "crisis"}, {"theses", "thesis"},
    {"hypotheses", "hypothesis"}, {"indices", "index"},
    {"appendices", "appendix"}, {"matrices", "matrix"},
    {"species", "species"}, {"series", "series"}, {"means", "means"},
    {"news", "news"}, {"shoes", "shoe"}, {"toes", "toe"}, {"movies", "movie"},
    {"ties", "tie"}, {"lies", "lie"}, {"pies", "pie"}, {"buses", "bus"},
    {"gases", "gas"},
};

struct Rule {
    const char* suffix;
    const char* replacement;
};

// third-person -s family (VBZ)
const Rule kVerbS[] = {
    {"sses", "ss"}, {"shes", "sh"}, {"ches", "ch"}, {"xes", "x"}, {"zzes", "zz"},
    {"oes", "o"}, {"ies", "y"},
    {"ss", "ss"}, {"us", "us"}, {"is", "is"},  // guards: not inflection
    {"s", ""},
};

// -ed family (VBD, VBN)
const Rule kVerbEd[] = {
    // undouble final consonants
    {"bbed", "b"}, {"dded", "dd"}, {"gged", "g"}, {"mmed", "m"}, {"nned", "n"},
    {"pped", "p"}, {"rred", "r"}, {"tted", "t"},
    // k / c
    {"cked", "ck"}, {"nked", "nk"}, {"rked", "rk"}, {"lked", "lk"}, {"sked", "sk"},
    {"ooked", "ook"}, {"eaked", "eak"}, {"eeked", "eek"}, {"ked", "ke"}, {"ced", "ce"},
    // g
    {"onged", "ong"}, {"nged", "nge"}, {"ged", "ge"},
    // s / v / z / u
    {"ssed", "ss"}, {"sed", "se"}, {"ved", "ve"}, {"zzed", "zz"}, {"zed", "ze"},
    {"ued", "ue"},
    // b
    {"ibed", "ibe"}, {"obed", "obe"},
    // p
    {"aped", "ape"}, {"iped", "ipe"}, {"oped", "ope"},
    // d
    {"eeded", "eed"}, {"eaded", "ead"}, {"oaded", "oad"}, {"oided", "oid"},
    {"aided", "aid"}, {"wded", "wd"}, {"nded", "nd"}, {"rded", "rd"}, {"lded", "ld"},
    {"ded", "de"},
    // t
    {"uited", "uit"}, {"aited", "ait"}, {"outed", "out"}, {"oated", "oat"},
    {"leted", "lete"}, {"eted", "et"}, {"ited", "ite"}, {"oted", "ote"},
    {"uted", "ute"}, {"ated", "ate"},
    // m
    {"eemed", "eem"}, {"oomed", "oom"}, {"oamed", "oam"}, {"aimed", "aim"},
    {"emed", "eme"}, {"imed", "ime"}, {"omed", "ome"}, {"umed", "ume"},
    {"amed", "ame"},
    // n
    {"ained", "ain"}, {"oined", "oin"}, {"uined", "uin"}, {"eaned", "ean"},
    {"oaned", "oan"}, {"ened", "en"}, {"ioned", "ion"}, {"soned", "son"},
    {"doned", "don"}, {"moned", "mon"}, {"oned", "one"}, {"ined", "ine"},
    {"uned", "une"},
    // r
    {"eared", "ear"}, {"oared", "oar"}, {"oured", "our"}, {"aired", "air"},
    {"ured", "ure"}, {"ored", "ore"}, {"ared", "are"}, {"ired", "ire"},
    {"ered", "er"},
    // l
    {"pled", "ple"}, {"bled", "ble"}, {"gled", "gle"}, {"tled", "tle"},
    {"dled", "dle"}, {"fled", "fle"}, {"cled", "cle"}, {"kled", "kle"},
    {"zled", "zle"}, {"sled", "sle"}, {"auled", "aul"}, {"uled", "ule"},
    {"ooled", "ool"}, {"oiled", "oil"}, {"ailed", "ail"}, {"ealed", "eal"},
    {"aled", "ale"}, {"iled", "ile"}, {"oled", "ole"}, {"eled", "el"},
    // e / y, then bare strip
    {"eed", "ee"}, {"ied", "y"}, {"ed", ""},
};

// -ing family (VBG); mirrors the -ed family except where -ing verbs differ
// (all -ng verbs take -ing, so "nging" strips while "nged" restores)
const Rule kVerbIng[] = {
    {"bbing", "b"}, {"dding", "dd"}, {"gging", "g"}, {"mming", "m"},
    {"nning", "n"}, {"pping", "p"}, {"rring", "r"}, {"tting", "t"},
    {"cking", "ck"}, {"nking", "nk"}, {"rking", "rk"}, {"lking", "lk"},
    {"sking", "sk"}, {"ooking", "ook"}, {"eaking", "eak"}, {"eeking", "eek"},
    {"king", "ke"}, {"cing", "ce"},
    {"onging", "ong"}, {"nging", "ng"}, {"ging", "ge"},
    {"ssing", "ss"}, {"sing", "se"}, {"ving", "ve"}, {"zzing", "zz"},
    {"zing", "ze"}, {"uing", "ue"},
    {"ibing", "ibe"}, {"obing", "obe"},
    {"aping", "ape"}, {"iping", "ipe"}, {"oping", "ope"},
    {"eeding", "eed"}, {"eading", "ead"}, {"oading", "oad"}, {"oiding", "oid"},
    {"aiding", "aid"}, {"wding", "wd"}, {"nding", "nd"}, {"rding", "rd"},
    {"lding", "ld"}, {"ding", "de"},
    {"uiting", "uit"}, {"aiting", "ait"}, {"outing", "out"}, {"oating", "oat"},
    {"leting", "lete"}, {"eting", "et"}, {"iting", "ite"}, {"oting", "ote"},
    {"uting", "ute"}, {"ating", "ate"},
    {"eeming", "eem"}, {"ooming", "oom"}, {"oaming", "oam"}, {"aiming", "aim"},
    {"eming", "eme"}, {"iming", "ime"}, {"oming", "ome"}, {"uming", "ume"},
    {"aming", "ame"},
    {"aining", "ain"}, {"oining", "oin"}, {"uining", "uin"}, {"eaning", "ean"},
    {"oaning", "oan"}, {"ening", "en"}, {"ioning", "ion"}, {"soning", "son"},
    {"doning", "don"}, {"moning", "mon"}, {"oning", "one"}, {"ining", "ine"},
    {"uning", "une"},
    {"earing", "ear"}, {"oaring", "oar"}, {"ouring", "our"}, {"airing", "air"},
    {"uring", "ure"}, {"oring", "ore"}, {"aring", "are"}, {"iring", "ire"},
    {"ering", "er"},
    {"pling", "ple"}, {"bling", "ble"}, {"gling", "gle"}, {"tling", "tle"},
    {"dling", "dle"}, {"fling", "fle"}, {"cling", "cle"}, {"kling", "kle"},
    {"zling", "zle"}, {"sling", "sle"}, {"auling", "aul"}, {"uling", "ule"},
    {"ooling", "ool"}, {"oiling", "oil"}, {"ailing", "ail"}, {"ealing", "eal"},
    {"aling", "ale"}, {"iling", "ile"}, {"oling", "ole"}, {"eling", "el"},
    {"eeing", "ee"}, {"ing", ""},
};

// plural family (NNS, NNPS)
const Rule kNounPlural[] = {
    {"sses", "ss"}, {"shes", "sh"}, {"ches", "ch"}, {"xes", "x"}, {"zzes", "zz"},
    {"oes", "o"}, {"ies", "y"}, {"men", "man"}, {"ses", "se"}, {"zes", "ze"},
    {"ss", "ss"}, {"us", "us"}, {"is", "is"},
    {"s", ""},
};

LemmaRules build_defaults() {
    std::map<std::string, std::string> verb_exc;
    for (const auto& e : kVerbExceptions) verb_exc[e.surface] = e.lemma;
    std::map<std::string, std::string> noun_exc;
    for (const auto& e : kNounExceptions) noun_exc[e.surface] = e.lemma;
    std::vector<SuffixRule> rules;
    for (const auto& r : kVerbS) rules.push_back({SuffixClass::kVerbS, r.suffix, r.replacement});
    for (const auto& r : kVerbEd) rules.push_back({SuffixClass::kVerbEd, r.suffix, r.replacement});
    for (const auto& r : kVerbIng)
        rules.push_back({SuffixClass::kVerbIng, r.suffix, r.replacement});
    for (const auto& r : kNounPlural)
        rules.push_back({SuffixClass::kNounPlural, r.suffix, r.replacement});
    return LemmaRules(std::move(verb_exc), std::move(noun_exc), std::move(rules));
}

}  // namespace

const LemmaRules& LemmaRules::defaults() {
    static const LemmaRules instance = build_defaults();
    return instance;
}

}  // namespace svlight
