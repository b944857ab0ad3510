#include "svlight/lemmatizer.hpp"

#include <cctype>

#include "svlight/errors.hpp"
#include "svlight/tagset.hpp"

namespace svlight {

std::string to_lower_ascii(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

namespace {

bool ends_with(const std::string& word, const std::string& suffix) {
    return word.size() >= suffix.size() &&
           word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

const char* class_name(SuffixClass cls) {
    switch (cls) {
        case SuffixClass::kVerbS: return "verb-s";
        case SuffixClass::kVerbEd: return "verb-ed";
        case SuffixClass::kVerbIng: return "verb-ing";
        case SuffixClass::kNounPlural: return "noun-plural";
    }
    return "?";
}

bool parse_class(const std::string& name, SuffixClass& out) {
    if (name == "verb-s") out = SuffixClass::kVerbS;
    else if (name == "verb-ed") out = SuffixClass::kVerbEd;
    else if (name == "verb-ing") out = SuffixClass::kVerbIng;
    else if (name == "noun-plural") out = SuffixClass::kNounPlural;
    else return false;
    return true;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

}  // namespace

LemmaRules::LemmaRules(std::map<std::string, std::string> verb_exceptions,
                       std::map<std::string, std::string> noun_exceptions,
                       std::vector<SuffixRule> suffix_rules)
    : verb_exceptions_(std::move(verb_exceptions)),
      noun_exceptions_(std::move(noun_exceptions)),
      suffix_rules_(std::move(suffix_rules)) {}

std::string LemmaRules::apply(const std::string& lowered,
                              const std::map<std::string, std::string>& exceptions,
                              SuffixClass cls, bool run_rules) const {
    if (auto it = exceptions.find(lowered); it != exceptions.end()) return it->second;
    if (run_rules) {
        for (const auto& rule : suffix_rules_) {
            if (rule.cls != cls) continue;
            if (!ends_with(lowered, rule.suffix)) continue;
            std::string lemma =
                lowered.substr(0, lowered.size() - rule.suffix.size()) + rule.replacement;
            if (lemma.empty()) continue;  // a bare strip may not erase the whole word
            return lemma;
        }
    }
    return lowered;
}

std::string LemmaRules::lemmatize_verb(std::string_view surface, std::string_view pos) const {
    if (!tagset::is_verb(pos))
        throw ContractError("lemmatize_verb: '" + std::string(pos) + "' is not a verb tag");
    std::string lowered = to_lower_ascii(surface);
    if (pos == "VBZ") return apply(lowered, verb_exceptions_, SuffixClass::kVerbS, true);
    if (pos == "VBD" || pos == "VBN")
        return apply(lowered, verb_exceptions_, SuffixClass::kVerbEd, true);
    if (pos == "VBG") return apply(lowered, verb_exceptions_, SuffixClass::kVerbIng, true);
    return apply(lowered, verb_exceptions_, SuffixClass::kVerbS, false);  // VB, VBP
}

std::string LemmaRules::lemmatize_noun(std::string_view surface, std::string_view pos) const {
    if (!tagset::is_noun(pos))
        throw ContractError("lemmatize_noun: '" + std::string(pos) + "' is not a noun tag");
    std::string lowered = to_lower_ascii(surface);
    return apply(lowered, noun_exceptions_, SuffixClass::kNounPlural, tagset::is_plural_noun(pos));
}

LemmaRules LemmaRules::load(std::istream& in, const std::string& source_name) {
    std::map<std::string, std::string> verb_exc;
    std::map<std::string, std::string> noun_exc;
    std::vector<SuffixRule> rules;
    enum Section { kNone, kVerbExc, kNounExc, kRules } section = kNone;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (line == "[verb-exceptions]") { section = kVerbExc; continue; }
        if (line == "[noun-exceptions]") { section = kNounExc; continue; }
        if (line == "[suffix-rules]") { section = kRules; continue; }
        auto fields = split_tabs(line);
        switch (section) {
            case kNone:
                throw DataError("entry before any section header", source_name, line_no);
            case kVerbExc:
            case kNounExc: {
                if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
                    throw DataError("expected `surface<TAB>lemma`", source_name, line_no);
                auto& table = section == kVerbExc ? verb_exc : noun_exc;
                table[fields[0]] = fields[1];
                break;
            }
            case kRules: {
                if (fields.size() != 3 || fields[1].empty())
                    throw DataError("expected `class<TAB>suffix<TAB>replacement`", source_name,
                                    line_no);
                SuffixClass cls;
                if (!parse_class(fields[0], cls))
                    throw DataError("unknown rule class '" + fields[0] + "'", source_name, line_no);
                rules.push_back({cls, fields[1], fields[2]});
                break;
            }
        }
    }
    return LemmaRules(std::move(verb_exc), std::move(noun_exc), std::move(rules));
}

void LemmaRules::save(std::ostream& out) const {
    out << "[verb-exceptions]\n";
    for (const auto& [surface, lemma] : verb_exceptions_) out << surface << '\t' << lemma << '\n';
    out << "[noun-exceptions]\n";
    for (const auto& [surface, lemma] : noun_exceptions_) out << surface << '\t' << lemma << '\n';
    out << "[suffix-rules]\n";
    for (const auto& rule : suffix_rules_)
        out << class_name(rule.cls) << '\t' << rule.suffix << '\t' << rule.replacement << '\n';
}

}  // namespace svlight
