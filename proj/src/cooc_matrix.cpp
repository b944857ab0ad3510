#include "svlight/cooc_matrix.hpp"

#include <limits>

#include "svlight/errors.hpp"

namespace svlight {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw DataError("count overflow in merge");
    return out;
}

const std::map<std::string, std::int64_t> kEmptyColumn;

}  // namespace

void CoocMatrix::Builder::add(const std::string& verb, const std::string& noun, std::int64_t n) {
    if (n < 1) throw ContractError("CoocMatrix::Builder::add: increment must be >= 1");
    if (verb.empty() || noun.empty())
        throw ContractError("CoocMatrix::Builder::add: empty lemma");
    auto& cell = by_noun_[noun][verb];
    cell = checked_add(cell, n);
}

CoocMatrix CoocMatrix::Builder::build() && { return CoocMatrix(std::move(by_noun_)); }

CoocMatrix::CoocMatrix(std::map<std::string, std::map<std::string, std::int64_t>> by_noun)
    : by_noun_(std::move(by_noun)) {
    for (const auto& [noun, column] : by_noun_) {
        for (const auto& [verb, count] : column) {
            row_sums_[verb] = checked_add(row_sums_[verb], count);
            col_sums_[noun] = checked_add(col_sums_[noun], count);
            total_ = checked_add(total_, count);
        }
    }
}

CoocMatrix CoocMatrix::merge(const CoocMatrix& a, const CoocMatrix& b) {
    auto by_noun = a.by_noun_;
    for (const auto& [noun, column] : b.by_noun_) {
        auto& target = by_noun[noun];
        for (const auto& [verb, count] : column) {
            auto& cell = target[verb];
            cell = checked_add(cell, count);
        }
    }
    return CoocMatrix(std::move(by_noun));
}

std::int64_t CoocMatrix::count(const std::string& verb, const std::string& noun) const {
    auto col = by_noun_.find(noun);
    if (col == by_noun_.end()) return 0;
    auto cell = col->second.find(verb);
    return cell == col->second.end() ? 0 : cell->second;
}

const std::map<std::string, std::int64_t>& CoocMatrix::column(const std::string& noun) const {
    auto col = by_noun_.find(noun);
    return col == by_noun_.end() ? kEmptyColumn : col->second;
}

std::int64_t CoocMatrix::row_sum(const std::string& verb) const {
    auto it = row_sums_.find(verb);
    return it == row_sums_.end() ? 0 : it->second;
}

std::size_t CoocMatrix::entry_count() const {
    std::size_t n = 0;
    for (const auto& [noun, column] : by_noun_) n += column.size();
    return n;
}

std::vector<std::string> CoocMatrix::nouns() const {
    std::vector<std::string> out;
    out.reserve(by_noun_.size());
    for (const auto& [noun, column] : by_noun_) out.push_back(noun);
    return out;
}

std::vector<std::tuple<std::string, std::string, std::int64_t>> CoocMatrix::rows() const {
    std::map<std::string, std::map<std::string, std::int64_t>> by_verb;
    for (const auto& [noun, column] : by_noun_)
        for (const auto& [verb, count] : column) by_verb[verb][noun] = count;
    std::vector<std::tuple<std::string, std::string, std::int64_t>> out;
    for (const auto& [verb, row] : by_verb)
        for (const auto& [noun, count] : row) out.emplace_back(verb, noun, count);
    return out;
}

bool CoocMatrix::verify() const {
    std::map<std::string, std::int64_t> rows, cols;
    std::int64_t total = 0;
    for (const auto& [noun, column] : by_noun_) {
        if (column.empty()) return false;
        for (const auto& [verb, count] : column) {
            if (count <= 0) return false;
            rows[verb] += count;
            cols[noun] += count;
            total += count;
        }
    }
    return rows == row_sums_ && cols == col_sums_ && total == total_;
}

void CoocMatrix::save(std::ostream& out, const std::vector<std::string>& comments) const {
    out << "# svlight counts v1\n";
    for (const auto& line : comments) out << "# " << line << '\n';
    for (const auto& [verb, noun, count] : rows())
        out << verb << '\t' << noun << '\t' << count << '\n';
}

CoocMatrix CoocMatrix::load(std::istream& in, const std::string& source_name) {
    std::map<std::string, std::map<std::string, std::int64_t>> by_noun;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto tab1 = line.find('\t');
        auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos)
            throw DataError("expected `verb<TAB>noun<TAB>count`", source_name, line_no);
        std::string verb = line.substr(0, tab1);
        std::string noun = line.substr(tab1 + 1, tab2 - tab1 - 1);
        std::string count_text = line.substr(tab2 + 1);
        if (verb.empty() || noun.empty())
            throw DataError("empty lemma field", source_name, line_no);
        std::int64_t count = 0;
        try {
            std::size_t used = 0;
            count = std::stoll(count_text, &used);
            if (used != count_text.size()) throw std::invalid_argument(count_text);
        } catch (const std::exception&) {
            throw DataError("bad count '" + count_text + "'", source_name, line_no);
        }
        if (count < 0) throw DataError("negative count", source_name, line_no);
        if (count == 0) throw DataError("zero count not allowed", source_name, line_no);
        auto [it, inserted] = by_noun[noun].emplace(verb, count);
        if (!inserted)
            throw DataError("duplicate entry (" + verb + ", " + noun + ")", source_name, line_no);
    }
    return CoocMatrix(std::move(by_noun));
}

}  // namespace svlight
