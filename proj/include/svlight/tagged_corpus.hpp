#ifndef SVLIGHT_TAGGED_CORPUS_HPP
#define SVLIGHT_TAGGED_CORPUS_HPP

#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace svlight {

struct TaggedToken {
    std::string surface;  // non-empty, no whitespace
    std::string pos;      // Penn Treebank tag, non-empty

    bool operator==(const TaggedToken&) const = default;
};

struct TaggedSentence {
    std::vector<TaggedToken> tokens;  // non-empty
    std::string source_id;            // "file:first_line-last_line"

    bool operator==(const TaggedSentence&) const = default;
};

// Streaming reader for the tagged-corpus format: one `surface<TAB>tag` per
// line, blank line ends a sentence, `#` lines are comments.  Memory use is
// bounded by a single sentence.
//
// next() throws DataError on a malformed line; the reader stays usable and
// resumes after the offending line, so callers may recover or abort.
class TaggedCorpusReader {
  public:
    TaggedCorpusReader(std::istream& in, std::string source_name);

    std::optional<TaggedSentence> next();

    std::size_t sentences_read() const { return sentences_read_; }

  private:
    std::istream& in_;
    std::string source_name_;
    std::size_t line_no_ = 0;
    std::size_t sentences_read_ = 0;
};

// Strict whole-stream parse: throws DataError on the first malformed line.
std::vector<TaggedSentence> parse_tagged_corpus(std::istream& in,
                                                const std::string& source_name = "<stream>");

// Inverse of parsing: emits the corpus format (one sentence per block,
// blank-line separated, trailing blank line omitted after the last one).
void serialize_tagged_corpus(const std::vector<TaggedSentence>& sentences, std::ostream& out);

}  // namespace svlight

#endif
