#ifndef SVLIGHT_EXTRACTOR_HPP
#define SVLIGHT_EXTRACTOR_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "svlight/cooc_matrix.hpp"
#include "svlight/lemmatizer.hpp"
#include "svlight/tagged_corpus.hpp"

namespace svlight {

// One observation of a verb governing a noun as its direct object.
struct GovernanceEvent {
    std::string verb_lemma;
    std::string noun_lemma;
    std::string source_id;

    bool operator==(const GovernanceEvent&) const = default;
};

struct ExtractionConfig {
    std::optional<std::set<std::string>> noun_filter;  // restrict to these lemmas
    std::size_t max_np_span = 6;                       // >= 1
    bool exclude_passive = true;                       // skip be + VBN

    // canonical string used for the counts-file config hash
    std::string describe() const;
};

// Scans one sentence for verb tokens whose first following noun phrase has a
// recoverable head noun.  After the verb an optional particle (RP) is
// skipped; then at most max_np_span tokens from the NP tag set are scanned
// and the last noun-tagged token seen becomes the head.  Any tag outside the
// NP set (verbs, punctuation, IN/TO, ...) stops the scan.  A VBN whose
// nearest preceding verb is a form of "be" is a passive and yields nothing
// when exclude_passive is set.
std::vector<GovernanceEvent> extract_governance(const TaggedSentence& sentence,
                                                const ExtractionConfig& config,
                                                const LemmaRules& rules = LemmaRules::defaults());

// Folds extract_governance over a sentence stream into a count matrix.
CoocMatrix count_corpus(const std::vector<TaggedSentence>& sentences,
                        const ExtractionConfig& config,
                        const LemmaRules& rules = LemmaRules::defaults());

// Streaming form: consumes the reader; memory stays bounded by one sentence.
CoocMatrix count_corpus(TaggedCorpusReader& reader, const ExtractionConfig& config,
                        const LemmaRules& rules = LemmaRules::defaults());

}  // namespace svlight

#endif
