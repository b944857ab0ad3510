#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "svlight/errors.hpp"
#include "svlight/standardization.hpp"

using namespace svlight;

namespace {

// young-skewed target with worse rates in every category yet a lower crude
// rate than the standard
PopulationTable simpson_target() {
    return PopulationTable({{"young", 900, 2}, {"old", 100, 2}});
}

PopulationTable simpson_standard() {
    return PopulationTable({{"young", 1000, 2}, {"old", 1000, 19}});
}

PopulationTable random_table(std::uint32_t seed) {
    std::mt19937 gen(seed);
    int n = 1 + int(gen() % 6);
    std::vector<PopulationCategory> categories;
    for (int i = 0; i < n; ++i)
        categories.push_back({"c" + std::to_string(i), double(1 + gen() % 10000),
                              double(gen() % 500)});
    return PopulationTable(std::move(categories));
}

}  // namespace

TEST_CASE("crude_rate: totals over totals") {
    CHECK(crude_rate(simpson_target()) == doctest::Approx(0.004).epsilon(1e-12));
    CHECK(crude_rate(simpson_standard()) == doctest::Approx(0.0105).epsilon(1e-12));
    CHECK(crude_rate(PopulationTable({{"only", 250, 5}})) == doctest::Approx(0.02).epsilon(1e-12));
}

TEST_CASE("category_rates: per-category, zero events allowed") {
    auto rates = category_rates(simpson_target());
    CHECK(rates.at("young") == doctest::Approx(2.0 / 900.0).epsilon(1e-12));
    CHECK(rates.at("old") == doctest::Approx(0.02).epsilon(1e-12));
    auto zero = category_rates(PopulationTable({{"a", 10, 0}}));
    CHECK(zero.at("a") == 0.0);
    PopulationTable one({{"x", 77, 3}});
    CHECK(category_rates(one).at("x") == doctest::Approx(crude_rate(one)).epsilon(1e-15));
}

TEST_CASE("expected_events: rates applied to target exposures") {
    std::map<std::string, double> rates{{"young", 0.002}, {"old", 0.019}};
    CHECK(expected_events(rates, simpson_target()) == doctest::Approx(3.7).epsilon(1e-12));

    // standard == target reproduces the actual events
    auto self = simpson_standard();
    CHECK(expected_events(category_rates(self), self) ==
          doctest::Approx(self.total_events()).epsilon(1e-12));

    std::map<std::string, double> zero{{"young", 0.0}, {"old", 0.0}};
    CHECK(expected_events(zero, simpson_target()) == 0.0);

    std::map<std::string, double> missing{{"young", 0.002}};
    CHECK_THROWS_WITH_AS(expected_events(missing, simpson_target()),
                         "no standard rate for category 'old'", DataError);
}

TEST_CASE("expected_events: linear in target exposures") {
    std::map<std::string, double> rates{{"a", 0.01}, {"b", 0.2}};
    PopulationTable t1({{"a", 100, 1}, {"b", 50, 1}});
    PopulationTable t3({{"a", 300, 1}, {"b", 150, 1}});
    CHECK(expected_events(rates, t3) ==
          doctest::Approx(3.0 * expected_events(rates, t1)).epsilon(1e-12));
}

TEST_CASE("smr: Simpson fixture and linearity in actual events") {
    double value = smr(simpson_target(), simpson_standard());
    CHECK(value == doctest::Approx(4.0 / 3.7).epsilon(1e-12));
    CHECK(value == doctest::Approx(1.0811).epsilon(1e-4));

    PopulationTable doubled({{"young", 900, 4}, {"old", 100, 4}});
    CHECK(smr(doubled, simpson_standard()) == doctest::Approx(2.0 * value).epsilon(1e-12));
}

TEST_CASE("smr: self-standardization is exactly one") {
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
        PopulationTable p = random_table(seed);
        if (p.total_events() == 0) continue;
        CHECK(smr(p, p) == 1.0);
    }
}

TEST_CASE("smr: scale invariance of the target") {
    PopulationTable target = simpson_target();
    for (double k : {2.0, 7.0, 100.0}) {
        PopulationTable scaled({{"young", 900 * k, 2 * k}, {"old", 100 * k, 2 * k}});
        CHECK(smr(scaled, simpson_standard()) ==
              doctest::Approx(smr(target, simpson_standard())).epsilon(1e-12));
    }
}

TEST_CASE("smr: zero expected events is an error") {
    PopulationTable dead_standard({{"young", 1000, 0}, {"old", 1000, 0}});
    CHECK_THROWS_AS(smr(simpson_target(), dead_standard), DataError);
}

TEST_CASE("isdr: smr times the standard crude rate") {
    double value = isdr(simpson_target(), simpson_standard());
    CHECK(value == doctest::Approx((4.0 / 3.7) * 0.0105).epsilon(1e-12));
    CHECK(value == doctest::Approx(0.011351).epsilon(1e-4));
    auto p = simpson_standard();
    CHECK(isdr(p, p) == doctest::Approx(crude_rate(p)).epsilon(1e-12));
}

TEST_CASE("Simpson inversion: worse category rates, better crude rate") {
    auto target_rates = category_rates(simpson_target());
    auto standard_rates = category_rates(simpson_standard());
    for (const auto& [label, rate] : target_rates) CHECK(rate > standard_rates.at(label));
    CHECK(crude_rate(simpson_target()) < crude_rate(simpson_standard()));
}

TEST_CASE("union_standard: categorical sum") {
    PopulationTable u = PopulationTable::union_standard(simpson_target(), simpson_standard());
    REQUIRE(u.categories().size() == 2);
    CHECK(u.categories()[0].label == "young");
    CHECK(u.categories()[0].exposure == 1900);
    CHECK(u.categories()[0].events == 4);
    CHECK(u.categories()[1].exposure == 1100);
    CHECK(u.categories()[1].events == 21);

    PopulationTable other({{"ancient", 10, 1}});
    PopulationTable mixed = PopulationTable::union_standard(simpson_target(), other);
    CHECK(mixed.categories().size() == 3);
}

TEST_CASE("population table: validation and file round trip") {
    CHECK_THROWS_AS(PopulationTable({{"a", 0, 1}}), ContractError);
    CHECK_THROWS_AS(PopulationTable({{"a", 10, -1}}), ContractError);
    CHECK_THROWS_AS(PopulationTable({{"a", 10, 1}, {"a", 5, 0}}), ContractError);

    PopulationTable p = simpson_standard();
    std::ostringstream out;
    p.save(out);
    std::istringstream in(out.str());
    PopulationTable back = PopulationTable::load(in, "roundtrip");
    CHECK(back.categories() == p.categories());

    std::istringstream bad("young\tmany\t2\n");
    CHECK_THROWS_AS(PopulationTable::load(bad, "bad"), DataError);
}
