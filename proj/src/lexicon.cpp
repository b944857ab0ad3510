#include "svlight/lexicon.hpp"

#include <algorithm>

#include "svlight/errors.hpp"

namespace svlight {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::kBuiltin: return "builtin";
        case Provenance::kGenerated: return "generated";
        case Provenance::kManual: return "manual";
    }
    return "?";
}

namespace {

bool parse_provenance(const std::string& name, Provenance& out) {
    if (name == "builtin") out = Provenance::kBuiltin;
    else if (name == "generated") out = Provenance::kGenerated;
    else if (name == "manual") out = Provenance::kManual;
    else return false;
    return true;
}

bool ends_with(const std::string& word, const std::string& suffix) {
    return word.size() > suffix.size() &&
           word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

const std::vector<LexiconSuffixRule>& default_lexicon_rules() {
    static const std::vector<LexiconSuffixRule> rules = {
        {"ation", {"ate", "e", ""}},    // creation, continuation, formation
        {"ition", {"e"}},               // definition
        {"ssion", {"de", "ss"}},        // concession, discussion
        {"sion", {"de", "se", ""}},     // decision, expansion
        {"tion", {"te", ""}},           // completion, assertion
        {"ment", {"", "e"}},            // adjustment, judgment
        {"ance", {"", "e"}},            // resemblance, acceptance
        {"ence", {"", "e"}},            // occurrence, insistence
        {"ure", {"e", ""}},             // failure, closure
        {"age", {"", "e"}},             // usage, storage
        {"al", {"e", ""}},              // proposal, arrival
        {"ing", {""}},                  // feeling, drawing
    };
    return rules;
}

std::vector<LexiconEntry> generate_candidates(const std::set<std::string>& nouns,
                                              const std::set<std::string>& verbs,
                                              const std::vector<LexiconSuffixRule>& rules) {
    std::vector<LexiconEntry> out;
    for (const auto& noun : nouns) {
        std::set<std::string> seen;
        auto emit = [&](const std::string& verb) {
            if (verbs.count(verb) && seen.insert(verb).second)
                out.push_back({noun, verb, Provenance::kGenerated});
        };
        emit(noun);  // zero derivation
        for (const auto& rule : rules) {
            if (!ends_with(noun, rule.noun_suffix)) continue;
            std::string stem = noun.substr(0, noun.size() - rule.noun_suffix.size());
            for (const auto& replacement : rule.verb_replacements) {
                std::string candidate = stem + replacement;
                if (!candidate.empty()) emit(candidate);
            }
        }
    }
    return out;
}

FilterResult apply_manual_filter(const std::vector<LexiconEntry>& candidates,
                                 const std::map<std::string, bool>& decisions) {
    FilterResult result;
    std::set<std::string> candidate_nouns;
    for (const auto& entry : candidates) candidate_nouns.insert(entry.noun);
    for (const auto& [noun, accepted] : decisions) {
        if (!candidate_nouns.count(noun))
            result.warnings.push_back("decision for unknown noun '" + noun + "'");
    }
    for (const auto& entry : candidates) {
        auto it = decisions.find(entry.noun);
        if (it == decisions.end()) {
            result.pending.push_back(entry);
        } else if (it->second) {
            result.accepted.push_back({entry.noun, entry.stem_verb, Provenance::kManual});
        }
        // rejected entries are dropped
    }
    return result;
}

namespace {

// noun -> entry, erroring on same-noun different-stem conflicts
std::map<std::string, LexiconEntry> index_by_noun(const std::vector<LexiconEntry>& entries,
                                                  std::vector<std::string>& conflicts) {
    std::map<std::string, LexiconEntry> out;
    for (const auto& entry : entries) {
        auto [it, inserted] = out.emplace(entry.noun, entry);
        if (!inserted && it->second.stem_verb != entry.stem_verb)
            conflicts.push_back(entry.noun + " -> {" + it->second.stem_verb + ", " +
                                entry.stem_verb + "}");
    }
    return out;
}

}  // namespace

std::vector<LexiconEntry> merge_lexicons(const std::vector<LexiconEntry>& builtin,
                                         const std::vector<LexiconEntry>& generated,
                                         const std::vector<LexiconEntry>& manual) {
    std::vector<std::string> conflicts;
    auto by_manual = index_by_noun(manual, conflicts);
    auto by_builtin = index_by_noun(builtin, conflicts);
    auto by_generated = index_by_noun(generated, conflicts);
    if (!conflicts.empty()) {
        std::string message = "conflicting stem verbs:";
        for (const auto& c : conflicts) message += " " + c;
        throw DataError(message);
    }
    std::map<std::string, LexiconEntry> merged = std::move(by_generated);
    for (const auto& [noun, entry] : by_builtin) merged[noun] = entry;
    for (const auto& [noun, entry] : by_manual) merged[noun] = entry;
    std::vector<LexiconEntry> out;
    out.reserve(merged.size());
    for (auto& [noun, entry] : merged) out.push_back(std::move(entry));
    return out;
}

std::vector<LexiconEntry> load_lexicon(std::istream& in, const std::string& source_name) {
    std::vector<LexiconEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() != 3 || fields[0].empty() || fields[1].empty())
            throw DataError("expected `noun<TAB>stem_verb<TAB>provenance`", source_name, line_no);
        LexiconEntry entry{fields[0], fields[1], Provenance::kGenerated};
        if (!parse_provenance(fields[2], entry.provenance))
            throw DataError("unknown provenance '" + fields[2] + "'", source_name, line_no);
        entries.push_back(std::move(entry));
    }
    return entries;
}

void save_lexicon(const std::vector<LexiconEntry>& entries, std::ostream& out) {
    for (const auto& entry : entries)
        out << entry.noun << '\t' << entry.stem_verb << '\t' << provenance_name(entry.provenance)
            << '\n';
}

std::map<std::string, bool> load_decisions(std::istream& in, const std::string& source_name) {
    std::map<std::string, bool> decisions;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() != 2 || fields[0].empty())
            throw DataError("expected `noun<TAB>accept|reject`", source_name, line_no);
        if (fields[1] == "accept") decisions[fields[0]] = true;
        else if (fields[1] == "reject") decisions[fields[0]] = false;
        else throw DataError("decision must be accept or reject", source_name, line_no);
    }
    return decisions;
}

std::vector<LexiconSuffixRule> load_lexicon_rules(std::istream& in,
                                                  const std::string& source_name) {
    std::vector<LexiconSuffixRule> rules;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() != 2 || fields[0].empty())
            throw DataError("expected `suffix<TAB>repl1|repl2|...`", source_name, line_no);
        rules.push_back({fields[0], split(fields[1], '|')});
    }
    return rules;
}

}  // namespace svlight
