#ifndef SVLIGHT_TAGSET_HPP
#define SVLIGHT_TAGSET_HPP

#include <string_view>

// Penn Treebank tag classification used by the extractor and lemmatizer.
namespace svlight::tagset {

inline bool is_verb(std::string_view pos) {
    return pos == "VB" || pos == "VBD" || pos == "VBG" || pos == "VBN" ||
           pos == "VBP" || pos == "VBZ";
}

inline bool is_noun(std::string_view pos) {
    return pos == "NN" || pos == "NNS" || pos == "NNP" || pos == "NNPS";
}

inline bool is_plural_noun(std::string_view pos) {
    return pos == "NNS" || pos == "NNPS";
}

inline bool is_particle(std::string_view pos) { return pos == "RP"; }

// Tags admitted inside the object noun-phrase window.
inline bool is_np_internal(std::string_view pos) {
    return pos == "DT" || pos == "PDT" || pos == "PRP$" || pos == "JJ" ||
           pos == "JJR" || pos == "JJS" || pos == "CD" || is_noun(pos);
}

}  // namespace svlight::tagset

#endif
