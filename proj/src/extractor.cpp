#include "svlight/extractor.hpp"

#include "svlight/errors.hpp"
#include "svlight/tagset.hpp"

namespace svlight {

std::string ExtractionConfig::describe() const {
    std::string out = "np_span=" + std::to_string(max_np_span);
    out += ";passive=";
    out += exclude_passive ? "exclude" : "include";
    out += ";nouns=";
    if (!noun_filter) {
        out += "all";
    } else {
        bool first = true;
        for (const auto& noun : *noun_filter) {
            if (!first) out += ',';
            out += noun;
            first = false;
        }
    }
    return out;
}

namespace {

// nearest verb token strictly before position `at`, or npos
std::size_t preceding_verb(const TaggedSentence& sentence, std::size_t at) {
    for (std::size_t i = at; i > 0; --i)
        if (tagset::is_verb(sentence.tokens[i - 1].pos)) return i - 1;
    return std::string::npos;
}

}  // namespace

std::vector<GovernanceEvent> extract_governance(const TaggedSentence& sentence,
                                                const ExtractionConfig& config,
                                                const LemmaRules& rules) {
    if (config.max_np_span < 1) throw ContractError("max_np_span must be >= 1");
    std::vector<GovernanceEvent> events;
    const auto& tokens = sentence.tokens;
    for (std::size_t v = 0; v < tokens.size(); ++v) {
        if (!tagset::is_verb(tokens[v].pos)) continue;
        if (config.exclude_passive && tokens[v].pos == "VBN") {
            auto prev = preceding_verb(sentence, v);
            if (prev != std::string::npos &&
                rules.lemmatize_verb(tokens[prev].surface, tokens[prev].pos) == "be")
                continue;
        }
        std::size_t pos = v + 1;
        if (pos < tokens.size() && tagset::is_particle(tokens[pos].pos)) ++pos;
        // scan the NP window; remember the last noun-tagged token
        std::size_t head = std::string::npos;
        for (std::size_t span = 0; span < config.max_np_span && pos < tokens.size();
             ++span, ++pos) {
            if (!tagset::is_np_internal(tokens[pos].pos)) break;
            if (tagset::is_noun(tokens[pos].pos)) head = pos;
        }
        if (head == std::string::npos) continue;
        std::string noun = rules.lemmatize_noun(tokens[head].surface, tokens[head].pos);
        if (config.noun_filter && !config.noun_filter->count(noun)) continue;
        events.push_back({rules.lemmatize_verb(tokens[v].surface, tokens[v].pos), std::move(noun),
                          sentence.source_id});
    }
    return events;
}

CoocMatrix count_corpus(const std::vector<TaggedSentence>& sentences,
                        const ExtractionConfig& config, const LemmaRules& rules) {
    CoocMatrix::Builder builder;
    for (const auto& sentence : sentences)
        for (const auto& event : extract_governance(sentence, config, rules))
            builder.add(event.verb_lemma, event.noun_lemma);
    return std::move(builder).build();
}

CoocMatrix count_corpus(TaggedCorpusReader& reader, const ExtractionConfig& config,
                        const LemmaRules& rules) {
    CoocMatrix::Builder builder;
    while (auto sentence = reader.next())
        for (const auto& event : extract_governance(*sentence, config, rules))
            builder.add(event.verb_lemma, event.noun_lemma);
    return std::move(builder).build();
}

}  // namespace svlight
