#include "svlight/tagged_corpus.hpp"

#include <cctype>

#include "svlight/errors.hpp"

namespace svlight {

namespace {

bool blank(const std::string& line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

bool has_space(const std::string& s) {
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c))) return true;
    return false;
}

}  // namespace

TaggedCorpusReader::TaggedCorpusReader(std::istream& in, std::string source_name)
    : in_(in), source_name_(std::move(source_name)) {}

std::optional<TaggedSentence> TaggedCorpusReader::next() {
    TaggedSentence sentence;
    std::size_t first_line = 0;
    std::size_t last_line = 0;
    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') continue;
        if (blank(line)) {
            if (!sentence.tokens.empty()) break;
            continue;  // leading or repeated separators yield no sentence
        }
        auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
            throw DataError("expected exactly two tab-separated fields", source_name_, line_no_);
        std::string surface = line.substr(0, tab);
        std::string pos = line.substr(tab + 1);
        if (surface.empty() || has_space(surface))
            throw DataError("bad surface form '" + surface + "'", source_name_, line_no_);
        if (pos.empty() || has_space(pos))
            throw DataError("bad POS tag '" + pos + "'", source_name_, line_no_);
        if (sentence.tokens.empty()) first_line = line_no_;
        last_line = line_no_;
        sentence.tokens.push_back({std::move(surface), std::move(pos)});
    }
    if (sentence.tokens.empty()) return std::nullopt;
    sentence.source_id =
        source_name_ + ":" + std::to_string(first_line) + "-" + std::to_string(last_line);
    ++sentences_read_;
    return sentence;
}

std::vector<TaggedSentence> parse_tagged_corpus(std::istream& in, const std::string& source_name) {
    TaggedCorpusReader reader(in, source_name);
    std::vector<TaggedSentence> sentences;
    while (auto s = reader.next()) sentences.push_back(std::move(*s));
    return sentences;
}

void serialize_tagged_corpus(const std::vector<TaggedSentence>& sentences, std::ostream& out) {
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        if (i > 0) out << '\n';
        for (const auto& tok : sentences[i].tokens) out << tok.surface << '\t' << tok.pos << '\n';
    }
}

}  // namespace svlight
