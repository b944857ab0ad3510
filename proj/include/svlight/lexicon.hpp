#ifndef SVLIGHT_LEXICON_HPP
#define SVLIGHT_LEXICON_HPP

#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace svlight {

enum class Provenance { kBuiltin, kGenerated, kManual };

const char* provenance_name(Provenance p);

// One nominalization with its stem verb (decision -> decide).
struct LexiconEntry {
    std::string noun;
    std::string stem_verb;
    Provenance provenance = Provenance::kGenerated;

    bool operator==(const LexiconEntry&) const = default;
};

// Orthographic noun->verb rule: strip noun_suffix, try each replacement.
struct LexiconSuffixRule {
    std::string noun_suffix;
    std::vector<std::string> verb_replacements;  // non-empty; items may be ""
};

// Rules sufficient to recover the stem verbs of common deverbal suffixes
// (-ation, -sion, -ment, -al, -ance, ...); zero derivation is always tried
// by generate_candidates itself.
const std::vector<LexiconSuffixRule>& default_lexicon_rules();

// For every noun, propose (noun, verb) pairs: zero derivation when the noun
// itself is a known verb, then every rule whose suffix matches, keeping only
// candidates found in `verbs`.  Deterministic order, duplicates removed.
std::vector<LexiconEntry> generate_candidates(const std::set<std::string>& nouns,
                                              const std::set<std::string>& verbs,
                                              const std::vector<LexiconSuffixRule>& rules);

struct FilterResult {
    std::vector<LexiconEntry> accepted;  // provenance kManual
    std::vector<LexiconEntry> pending;   // no decision recorded
    std::vector<std::string> warnings;   // decisions naming unknown nouns
};

// Applies an accept/reject decision table to generated candidates.
FilterResult apply_manual_filter(const std::vector<LexiconEntry>& candidates,
                                 const std::map<std::string, bool>& decisions);

// Combines sources with precedence manual > builtin > generated per noun.
// Entries with the same noun but different stems at equal precedence are an
// error.
std::vector<LexiconEntry> merge_lexicons(const std::vector<LexiconEntry>& builtin,
                                         const std::vector<LexiconEntry>& generated,
                                         const std::vector<LexiconEntry>& manual);

// TSV `noun<TAB>stem_verb<TAB>provenance`.
std::vector<LexiconEntry> load_lexicon(std::istream& in,
                                       const std::string& source_name = "<stream>");
void save_lexicon(const std::vector<LexiconEntry>& entries, std::ostream& out);

// TSV `noun<TAB>accept|reject`.
std::map<std::string, bool> load_decisions(std::istream& in,
                                           const std::string& source_name = "<stream>");

// TSV `noun_suffix<TAB>repl1|repl2|...` (empty item = bare strip).
std::vector<LexiconSuffixRule> load_lexicon_rules(std::istream& in,
                                                  const std::string& source_name = "<stream>");

}  // namespace svlight

#endif
