#include "svlight/sv_models.hpp"

#include <algorithm>

#include "svlight/errors.hpp"

namespace svlight {

double GlobalWeights::p(const std::string& verb) const {
    auto it = numerators.find(verb);
    if (it == numerators.end() || denominator == 0) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(denominator);
}

std::map<std::string, double> GlobalWeights::p_prime() const {
    std::map<std::string, double> out;
    for (const auto& [verb, num] : numerators)
        out[verb] = static_cast<double>(num) / static_cast<double>(denominator);
    return out;
}

namespace {

using ExactScore = unsigned __int128;

struct Scored {
    RankedCandidate candidate;
    ExactScore key;
};

// (score desc, raw count desc, verb asc)
Ranking build_ranking(const std::string& noun, SvModel model, std::vector<Scored> scored) {
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.key != b.key) return a.key > b.key;
        if (a.candidate.raw_count != b.candidate.raw_count)
            return a.candidate.raw_count > b.candidate.raw_count;
        return a.candidate.verb < b.candidate.verb;
    });
    Ranking ranking{noun, model, {}};
    ranking.candidates.reserve(scored.size());
    for (auto& s : scored) ranking.candidates.push_back(std::move(s.candidate));
    return ranking;
}

}  // namespace

Ranking sv_basic(const CoocMatrix& m, const std::string& noun) {
    std::vector<Scored> scored;
    for (const auto& [verb, count] : m.column(noun))
        scored.push_back({{verb, count, static_cast<double>(count)},
                          static_cast<ExactScore>(count)});
    return build_ranking(noun, SvModel::kBasic, std::move(scored));
}

GlobalWeights global_weights(const CoocMatrix& m) {
    if (m.total() == 0) throw ContractError("global_weights: empty matrix");
    return {m.row_sums(), m.total()};
}

Ranking sv_global(const CoocMatrix& m, const std::string& noun) {
    std::vector<Scored> scored;
    for (const auto& [verb, count] : m.column(noun)) {
        ExactScore key = static_cast<ExactScore>(count) * static_cast<ExactScore>(m.row_sum(verb));
        scored.push_back({{verb, count, static_cast<double>(key)}, key});
    }
    return build_ranking(noun, SvModel::kGlobal, std::move(scored));
}

Ranking rank_with_weights(const CoocMatrix& m, const std::string& noun,
                          const GlobalWeights& weights) {
    std::vector<Scored> scored;
    for (const auto& [verb, count] : m.column(noun)) {
        auto it = weights.numerators.find(verb);
        std::int64_t numerator = it == weights.numerators.end() ? 0 : it->second;
        ExactScore key = static_cast<ExactScore>(count) * static_cast<ExactScore>(numerator);
        scored.push_back({{verb, count, static_cast<double>(count) * weights.p(verb)}, key});
    }
    return build_ranking(noun, SvModel::kGlobal, std::move(scored));
}

std::optional<double> choice_ratio(const Ranking& r) {
    if (r.candidates.size() < 2) return std::nullopt;
    return r.candidates[0].score / r.candidates[1].score;
}

GlobalWeights iterate_global(const CoocMatrix& m, int rounds) {
    if (rounds < 1) throw ContractError("iterate_global: rounds must be >= 1");
    GlobalWeights weights = global_weights(m);
    for (int round = 0; round < rounds; ++round) {
        std::map<std::string, std::int64_t> chosen;
        std::int64_t denominator = 0;
        for (const auto& noun : m.nouns()) {
            Ranking ranking = rank_with_weights(m, noun, weights);
            if (ranking.no_data()) continue;
            const auto& top = ranking.candidates.front();
            chosen[top.verb] += top.raw_count;
            denominator += top.raw_count;
        }
        if (denominator == 0) throw DataError("iterate_global: no column has data");
        weights = {std::move(chosen), denominator};
    }
    return weights;
}

}  // namespace svlight
