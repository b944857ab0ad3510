#ifndef SVLIGHT_COOC_MATRIX_HPP
#define SVLIGHT_COOC_MATRIX_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace svlight {

// Sparse verb x noun co-occurrence counts with cached marginals.  Immutable
// after construction; merge builds a new value.  Counts are strictly
// positive in the map (zero cells are absent) and additions are overflow
// checked.
class CoocMatrix {
  public:
    CoocMatrix() = default;  // empty matrix

    class Builder {
      public:
        // n must be >= 1
        void add(const std::string& verb, const std::string& noun, std::int64_t n = 1);
        CoocMatrix build() &&;

      private:
        std::map<std::string, std::map<std::string, std::int64_t>> by_noun_;
    };

    static CoocMatrix merge(const CoocMatrix& a, const CoocMatrix& b);

    std::int64_t count(const std::string& verb, const std::string& noun) const;

    // All verbs governing `noun` with their counts; empty map if unseen.
    const std::map<std::string, std::int64_t>& column(const std::string& noun) const;

    const std::map<std::string, std::int64_t>& row_sums() const { return row_sums_; }
    const std::map<std::string, std::int64_t>& col_sums() const { return col_sums_; }
    std::int64_t row_sum(const std::string& verb) const;
    std::int64_t total() const { return total_; }
    std::size_t entry_count() const;
    bool empty() const { return total_ == 0; }

    std::vector<std::string> nouns() const;

    // Entries sorted by (verb, noun); the canonical row order of save().
    std::vector<std::tuple<std::string, std::string, std::int64_t>> rows() const;

    // Recomputes marginals from entries and checks consistency.
    bool verify() const;

    // Canonical TSV: `# svlight counts v1`, optional caller comment lines,
    // then `verb<TAB>noun<TAB>count` rows sorted by (verb, noun).  Bytes
    // depend only on the abstract value and the comments passed in.
    void save(std::ostream& out, const std::vector<std::string>& comments = {}) const;
    static CoocMatrix load(std::istream& in, const std::string& source_name = "<stream>");

    bool operator==(const CoocMatrix& other) const { return by_noun_ == other.by_noun_; }

  private:
    explicit CoocMatrix(std::map<std::string, std::map<std::string, std::int64_t>> by_noun);

    std::map<std::string, std::map<std::string, std::int64_t>> by_noun_;
    std::map<std::string, std::int64_t> row_sums_;
    std::map<std::string, std::int64_t> col_sums_;
    std::int64_t total_ = 0;
};

}  // namespace svlight

#endif
