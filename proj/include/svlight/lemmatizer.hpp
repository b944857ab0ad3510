#ifndef SVLIGHT_LEMMATIZER_HPP
#define SVLIGHT_LEMMATIZER_HPP

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace svlight {

// Which inflection family a suffix rule belongs to.  Rules only fire for
// tokens whose POS tag selects their class; base forms (VB, VBP, NN, NNP)
// get exception lookup and case folding only.
enum class SuffixClass { kVerbS, kVerbEd, kVerbIng, kNounPlural };

struct SuffixRule {
    SuffixClass cls;
    std::string suffix;       // non-empty match at end of word
    std::string replacement;  // may be empty (bare strip)
};

// Rule-table lemmatizer: exception lookup first, then the first matching
// suffix rule for the tag's class, else identity.  All output is lowercase.
// The shipped default table is constructed so that re-lemmatizing any lemma
// it produces is a no-op.
class LemmaRules {
  public:
    LemmaRules(std::map<std::string, std::string> verb_exceptions,
               std::map<std::string, std::string> noun_exceptions,
               std::vector<SuffixRule> suffix_rules);

    // Built-in table: ~150 irregular verbs (all forms), irregular noun
    // plurals, and the ordered suffix rules for -s/-ed/-ing/plural families.
    static const LemmaRules& defaults();

    // pos must be one of VB VBD VBG VBN VBP VBZ; throws ContractError otherwise.
    std::string lemmatize_verb(std::string_view surface, std::string_view pos) const;

    // pos must be one of NN NNS NNP NNPS; throws ContractError otherwise.
    std::string lemmatize_noun(std::string_view surface, std::string_view pos) const;

    // TSV sections [verb-exceptions], [noun-exceptions], [suffix-rules].
    static LemmaRules load(std::istream& in, const std::string& source_name = "<stream>");
    void save(std::ostream& out) const;

    const std::map<std::string, std::string>& verb_exceptions() const {
        return verb_exceptions_;
    }
    const std::map<std::string, std::string>& noun_exceptions() const {
        return noun_exceptions_;
    }
    const std::vector<SuffixRule>& suffix_rules() const { return suffix_rules_; }

  private:
    std::string apply(const std::string& lowered,
                      const std::map<std::string, std::string>& exceptions,
                      SuffixClass cls, bool run_rules) const;

    std::map<std::string, std::string> verb_exceptions_;
    std::map<std::string, std::string> noun_exceptions_;
    std::vector<SuffixRule> suffix_rules_;
};

std::string to_lower_ascii(std::string_view s);

}  // namespace svlight

#endif
