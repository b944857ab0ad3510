#ifndef SVLIGHT_SV_MODELS_HPP
#define SVLIGHT_SV_MODELS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svlight/cooc_matrix.hpp"

// Support-verb selection from governance counts.  How often a verb is
// genuinely light with a given noun is unobservable from tags alone, so the
// models differ in what they substitute for it: the basic model takes every
// governance event at face value (rank by the raw count), while the global
// model discounts each count by the verb's corpus-wide share of governance
// events, so that a generally productive light verb outranks an incidental
// frequent collocate.

namespace svlight {

enum class SvModel { kBasic, kGlobal };

// Per-verb lightness weights as an exact rational num/den with a shared
// denominator, so rankings that multiply by a weight stay in integer
// arithmetic.  From a matrix the weight of verb i is rowsum(i)/total.
struct GlobalWeights {
    std::map<std::string, std::int64_t> numerators;
    std::int64_t denominator = 0;

    double p(const std::string& verb) const;
    std::map<std::string, double> p_prime() const;

    bool operator==(const GlobalWeights&) const = default;
};

struct RankedCandidate {
    std::string verb;
    std::int64_t raw_count;  // m_ij, >= 1
    double score;            // m_ij (basic) | m_ij * rowsum_i (global) | m_ij * p_i

    bool operator==(const RankedCandidate&) const = default;
};

// Candidates are exactly the verbs observed with the noun, ordered by
// (score desc, raw count desc, verb asc); comparisons happen in exact
// integer arithmetic, the stored score is for display.  An empty candidate
// list is the NoData outcome (nominal unseen as a direct object).
struct Ranking {
    std::string noun;
    SvModel model = SvModel::kBasic;
    std::vector<RankedCandidate> candidates;

    bool no_data() const { return candidates.empty(); }
    const RankedCandidate* first() const { return candidates.empty() ? nullptr : &candidates[0]; }
    const RankedCandidate* second() const {
        return candidates.size() < 2 ? nullptr : &candidates[1];
    }
};

// Local-frequency model: score is the raw co-occurrence count.
Ranking sv_basic(const CoocMatrix& m, const std::string& noun);

// Weight of each verb over all nominalizations; throws on an empty matrix.
GlobalWeights global_weights(const CoocMatrix& m);

// Globally weighted model: score m_ij * rowsum_i, the argmax of which equals
// the argmax of m_ij * p'_i (the constant total factor drops out).
Ranking sv_global(const CoocMatrix& m, const std::string& noun);

// Ranking of a column under explicit weights (used by the iterated model).
Ranking rank_with_weights(const CoocMatrix& m, const std::string& noun,
                          const GlobalWeights& weights);

// score(C1) / score(C2); empty when fewer than two candidates.
std::optional<double> choice_ratio(const Ranking& r);

// Reestimates weights by assigning every nominalization to its top verb
// under the current weights and recounting only the chosen cells, `rounds`
// times.  Round 0 is global_weights(m).
GlobalWeights iterate_global(const CoocMatrix& m, int rounds);

}  // namespace svlight

#endif
