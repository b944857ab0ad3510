#include <doctest.h>

#include <cmath>
#include <fstream>

#include "svlight/errors.hpp"
#include "svlight/sv_models.hpp"
#include "test_support.hpp"

using namespace svlight;

namespace {

CoocMatrix demand_fixture() {
    std::ifstream in("tests/fixtures/demand.tsv");
    REQUIRE(in.good());
    return CoocMatrix::load(in, "demand.tsv");
}

std::vector<std::string> order(const Ranking& r) {
    std::vector<std::string> verbs;
    for (const auto& c : r.candidates) verbs.push_back(c.verb);
    return verbs;
}

CoocMatrix scaled(const CoocMatrix& m, std::int64_t k) {
    CoocMatrix::Builder builder;
    for (const auto& [verb, noun, count] : m.rows()) builder.add(verb, noun, count * k);
    return std::move(builder).build();
}

}  // namespace

TEST_CASE("demand fixture: basic picks meet, global inverts to make") {
    CoocMatrix m = demand_fixture();
    Ranking basic = sv_basic(m, "demand");
    REQUIRE(!basic.no_data());
    CHECK(basic.first()->verb == "meet");
    CHECK(basic.first()->raw_count == 5);

    Ranking global = sv_global(m, "demand");
    REQUIRE(global.candidates.size() == 2);
    CHECK(global.first()->verb == "make");
    CHECK(global.first()->score == 400.0);
    CHECK(global.second()->verb == "meet");
    CHECK(global.second()->score == 50.0);
}

TEST_CASE("single-candidate column: C1 set, C2 absent") {
    CoocMatrix::Builder builder;
    builder.add("become", "drink", 1);
    CoocMatrix m = std::move(builder).build();
    Ranking r = sv_basic(m, "drink");
    REQUIRE(r.candidates.size() == 1);
    CHECK(r.first()->verb == "become");
    CHECK(r.second() == nullptr);
    CHECK(!choice_ratio(r).has_value());
}

TEST_CASE("empty column: NoData for both models") {
    CoocMatrix m = demand_fixture();
    CHECK(sv_basic(m, "snooze").no_data());
    CHECK(sv_global(m, "snooze").no_data());
}

TEST_CASE("global_weights: row shares of the total") {
    CoocMatrix::Builder builder;
    builder.add("make", "x", 30);
    builder.add("have", "x", 23);
    builder.add("take", "x", 47);
    CoocMatrix m = std::move(builder).build();
    GlobalWeights w = global_weights(m);
    CHECK(w.p("make") == doctest::Approx(0.30).epsilon(1e-12));
    CHECK(w.p("have") == doctest::Approx(0.23).epsilon(1e-12));
    CHECK(w.p("take") == doctest::Approx(0.47).epsilon(1e-12));
    CHECK(w.denominator == 100);
}

TEST_CASE("global_weights: single verb gets weight one, empty matrix throws") {
    CoocMatrix::Builder builder;
    builder.add("make", "x", 5);
    builder.add("make", "y", 2);
    GlobalWeights w = global_weights(std::move(builder).build());
    CHECK(w.p("make") == 1.0);
    CHECK_THROWS_AS(global_weights(CoocMatrix()), ContractError);
}

TEST_CASE("global_weights: sums to one on random matrices") {
    for (std::uint32_t seed = 0; seed < 200; ++seed) {
        GlobalWeights w = global_weights(svtest::random_matrix(seed));
        double sum = 0;
        for (const auto& [verb, p] : w.p_prime()) sum += p;
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("equal row sums: global order equals basic order") {
    CoocMatrix::Builder builder;
    builder.add("a", "x", 3);
    builder.add("a", "y", 7);
    builder.add("b", "x", 6);
    builder.add("b", "y", 4);
    builder.add("c", "x", 1);
    builder.add("c", "y", 9);  // all row sums 10
    CoocMatrix m = std::move(builder).build();
    for (const auto& noun : m.nouns()) CHECK(order(sv_global(m, noun)) == order(sv_basic(m, noun)));
}

TEST_CASE("choice_ratio: demand ratio, equal scores, no data") {
    CoocMatrix m = demand_fixture();
    auto ratio = choice_ratio(sv_global(m, "demand"));
    REQUIRE(ratio.has_value());
    CHECK(*ratio == 8.0);
    CHECK(!choice_ratio(sv_global(m, "unseen")).has_value());

    CoocMatrix::Builder tie;
    tie.add("a", "x", 2);
    tie.add("b", "x", 2);
    auto equal_ratio = choice_ratio(sv_basic(std::move(tie).build(), "x"));
    REQUIRE(equal_ratio.has_value());
    CHECK(*equal_ratio == 1.0);
}

TEST_CASE("tie-break: score desc, then raw count desc, then verb asc") {
    CoocMatrix::Builder builder;
    // equal global scores 6: raw 1 * rowsum 6 vs raw 2 * rowsum 3
    builder.add("alpha", "x", 1);
    builder.add("alpha", "pad", 5);
    builder.add("beta", "x", 2);
    builder.add("beta", "pad2", 1);
    CoocMatrix m = std::move(builder).build();
    Ranking r = sv_global(m, "x");
    REQUIRE(r.candidates.size() == 2);
    CHECK(r.first()->verb == "beta");  // higher raw count wins the tie

    CoocMatrix::Builder lex;
    lex.add("delta", "x", 2);
    lex.add("carol", "x", 2);
    Ranking alpha_first = sv_basic(std::move(lex).build(), "x");
    CHECK(alpha_first.first()->verb == "carol");  // full tie: lexicographic
}

TEST_CASE("scale invariance: candidate order unchanged under k-fold counts") {
    for (std::uint32_t seed = 300; seed < 330; ++seed) {
        CoocMatrix m = svtest::random_matrix(seed);
        for (std::int64_t k : {2, 7, 100}) {
            CoocMatrix mk = scaled(m, k);
            for (const auto& noun : m.nouns()) {
                CHECK(order(sv_basic(mk, noun)) == order(sv_basic(m, noun)));
                CHECK(order(sv_global(mk, noun)) == order(sv_global(m, noun)));
            }
        }
    }
}

TEST_CASE("dropping the total factor is sound: weight path equals row-sum path") {
    for (std::uint32_t seed = 400; seed < 500; ++seed) {
        CoocMatrix m = svtest::random_matrix(seed);
        GlobalWeights w = global_weights(m);
        for (const auto& noun : m.nouns())
            CHECK(order(rank_with_weights(m, noun, w)) == order(sv_global(m, noun)));
    }
}

TEST_CASE("dropping the total factor is sound: floating-point p' agrees where unique") {
    // wherever the integer products have a strict maximum, the argmax of
    // m_ij * p'_i computed in doubles must land on the same verb
    int checked = 0;
    for (std::uint32_t seed = 500; seed < 600; ++seed) {
        CoocMatrix m = svtest::random_matrix(seed);
        auto p_prime = global_weights(m).p_prime();
        for (const auto& noun : m.nouns()) {
            unsigned __int128 best = 0, runner_up = 0;
            for (const auto& [verb, count] : m.column(noun)) {
                auto product = (unsigned __int128)count * (unsigned __int128)m.row_sum(verb);
                if (product > best) {
                    runner_up = best;
                    best = product;
                } else if (product > runner_up) {
                    runner_up = product;
                }
            }
            if (best == runner_up) continue;  // tied maxima are broken by convention
            std::string float_argmax;
            double float_best = -1.0;
            for (const auto& [verb, count] : m.column(noun)) {
                double score = double(count) * p_prime.at(verb);
                if (score > float_best) {
                    float_best = score;
                    float_argmax = verb;
                }
            }
            CHECK(float_argmax == sv_global(m, noun).first()->verb);
            ++checked;
        }
    }
    CHECK(checked > 300);
}

TEST_CASE("idiomatic construction survives a low global weight") {
    std::ifstream in("tests/fixtures/eval_counts.tsv");
    REQUIRE(in.good());
    CoocMatrix m = CoocMatrix::load(in, "eval_counts.tsv");
    // bear has a small row sum but dominates the resemblance column
    CHECK(m.row_sum("bear") == 30);
    CHECK(m.row_sum("have") == 300);
    Ranking r = sv_global(m, "resemblance");
    REQUIRE(r.candidates.size() == 2);
    CHECK(r.first()->verb == "bear");
    for (const auto& c : r.candidates)
        if (c.verb != "bear") CHECK(c.raw_count * m.row_sum(c.verb) < 11 * m.row_sum("bear"));
}

TEST_CASE("sv_global matches a brute-force argmax on small random matrices") {
    for (std::uint32_t seed = 600; seed < 650; ++seed) {
        CoocMatrix m = svtest::random_matrix(seed, 8, 5, 20);
        for (const auto& noun : m.nouns()) {
            const auto& column = m.column(noun);
            std::string best;
            unsigned __int128 best_key = 0;
            std::int64_t best_raw = 0;
            for (const auto& [verb, count] : column) {
                unsigned __int128 key =
                    (unsigned __int128)count * (unsigned __int128)m.row_sum(verb);
                if (best.empty() || key > best_key || (key == best_key && count > best_raw) ||
                    (key == best_key && count == best_raw && verb < best)) {
                    best = verb;
                    best_key = key;
                    best_raw = count;
                }
            }
            CHECK(sv_global(m, noun).first()->verb == best);
        }
    }
}

TEST_CASE("iterate_global: single governing verb per noun is a fixed point") {
    CoocMatrix::Builder builder;
    builder.add("make", "decision", 6);
    builder.add("take", "walk", 2);
    builder.add("have", "drink", 1);
    CoocMatrix m = std::move(builder).build();
    GlobalWeights w0 = global_weights(m);
    for (int rounds = 1; rounds <= 3; ++rounds) {
        GlobalWeights w = iterate_global(m, rounds);
        CHECK(w.numerators == w0.numerators);
        CHECK(w.denominator == w0.denominator);
    }
}

TEST_CASE("iterate_global: losing verbs shed weight after reassignment") {
    CoocMatrix::Builder builder;
    builder.add("meet", "demand", 5);
    builder.add("make", "demand", 4);
    builder.add("meet", "deal", 5);
    builder.add("make", "decision", 96);
    CoocMatrix m = std::move(builder).build();
    double round0 = global_weights(m).p("meet");  // 10/110
    double round1 = iterate_global(m, 1).p("meet");  // 5/105: demand reassigned to make
    CHECK(round0 == doctest::Approx(10.0 / 110.0).epsilon(1e-12));
    CHECK(round1 == doctest::Approx(5.0 / 105.0).epsilon(1e-12));
    CHECK(round1 < round0);
}

TEST_CASE("iterate_global: stable assignment makes further rounds no-ops") {
    CoocMatrix::Builder builder;
    builder.add("meet", "demand", 5);
    builder.add("make", "demand", 4);
    builder.add("meet", "deal", 5);
    builder.add("make", "decision", 96);
    CoocMatrix m = std::move(builder).build();
    CHECK(iterate_global(m, 1) == iterate_global(m, 2));
    CHECK_THROWS_AS(iterate_global(m, 0), ContractError);
    CHECK_THROWS_AS(iterate_global(CoocMatrix(), 1), ContractError);
}

TEST_CASE("rankings list exactly the verbs observed with the noun") {
    for (std::uint32_t seed = 700; seed < 720; ++seed) {
        CoocMatrix m = svtest::random_matrix(seed);
        for (const auto& noun : m.nouns()) {
            const auto& column = m.column(noun);
            Ranking r = sv_global(m, noun);
            CHECK(r.candidates.size() == column.size());
            for (const auto& c : r.candidates) {
                CHECK(column.count(c.verb) == 1);
                CHECK(c.raw_count == column.at(c.verb));
                CHECK(c.raw_count >= 1);
            }
        }
    }
}
