#include "common.hpp"

#include <modhom/semiring.hpp>

#include <doctest.h>

#include <stdexcept>

using namespace modhom;

TEST_CASE("counting in the zoo") {
    auto b = Semiring::booleans();
    auto nat = Semiring::naturals();
    CHECK(b.render(count_in(b, 0)) == "0");
    CHECK(b.render(count_in(b, 3)) == "1");
    CHECK(nat.render(count_in(nat, 5)) == "5");
    auto m3 = Semiring::mod(3);
    CHECK(m3.render(count_in(m3, 10)) == "1");
    auto mp = Semiring::min_plus(3);
    CHECK(mp.render(count_in(mp, 0)) == "inf");
    CHECK(mp.render(count_in(mp, 1)) == "0");
    CHECK(mp.render(count_in(mp, 7)) == "0");
    CHECK(nat.render(count_in(nat, BigCount("123456789123456789123456789"))) ==
          "123456789123456789123456789");
}

TEST_CASE("counting is additive") {
    for (const auto& s : {Semiring::booleans(), Semiring::mod(5), Semiring::min_plus(4),
                          testutil::parity_semiring(), testutil::saturating_semiring()}) {
        for (int a = 0; a <= 20; ++a)
            for (int b = 0; b <= 20; ++b)
                CHECK(s.count(a + b) == s.add(s.count(a), s.count(b)));
    }
}

TEST_CASE("zoo members satisfy the axioms") {
    CHECK_FALSE(Semiring::booleans().check_axioms().has_value());
    CHECK_FALSE(Semiring::mod(7).check_axioms().has_value());
    CHECK_FALSE(Semiring::min_plus(5).check_axioms().has_value());
    CHECK_FALSE(Semiring::naturals().check_axioms().has_value());
    // from_table rejects non-semirings outright: swap one in the boolean
    // multiplication table so zero stops annihilating.
    CHECK_THROWS_AS(Semiring::from_table("broken", {"0", "1"}, {{0, 1}, {1, 1}},
                                         {{0, 1}, {0, 1}}, 0, 1),
                    std::invalid_argument);
}

TEST_CASE("periodicity of boolean counting") {
    auto r = analyze_periodicity(Semiring::booleans(), 10);
    CHECK_FALSE(r.injective_up_to_probe);
    CHECK(r.preperiod_length == 1);
    CHECK(r.period == 1);
    CHECK(r.preperiod == std::vector<std::string>{"0"});
    CHECK(r.segment == std::vector<std::string>{"1"});
}

TEST_CASE("periodicity of modular counting") {
    auto r = analyze_periodicity(Semiring::mod(3), 10);
    CHECK(r.preperiod_length == 0);
    CHECK(r.period == 3);
    CHECK(r.preperiod.empty());
    CHECK(r.segment == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("natural counting is injective") {
    auto r = analyze_periodicity(Semiring::naturals(), 10);
    CHECK(r.injective_up_to_probe);
}

TEST_CASE("clipped min-plus counting collapses to the unit") {
    auto mp = Semiring::min_plus(3);
    auto r = analyze_periodicity(mp, default_probe(mp));
    CHECK(r.preperiod_length == 1);
    CHECK(r.period == 1);
    CHECK(r.preperiod == std::vector<std::string>{"inf"});
    CHECK(r.segment == std::vector<std::string>{"0"});
}

TEST_CASE("custom carriers cover the remaining periodicity shapes") {
    auto parity = testutil::parity_semiring();
    auto rp = analyze_periodicity(parity, default_probe(parity));
    CHECK(rp.preperiod_length == 1);
    CHECK(rp.period == 2);
    CHECK(rp.segment == std::vector<std::string>{"1", "2"});

    auto sat = testutil::saturating_semiring();
    auto rs = analyze_periodicity(sat, default_probe(sat));
    CHECK(rs.preperiod_length == 2);
    CHECK(rs.period == 1);
    CHECK(rs.segment == std::vector<std::string>{"top"});
    // The segment misses the unit, unlike every other finite carrier above.
    CHECK(std::find(rs.segment.begin(), rs.segment.end(), "1") == rs.segment.end());
}

TEST_CASE("preperiod and segment are disjoint and duplicate free") {
    for (const auto& s : {Semiring::booleans(), Semiring::mod(5), Semiring::min_plus(4),
                          testutil::parity_semiring(), testutil::saturating_semiring()}) {
        auto r = analyze_periodicity(s, default_probe(s));
        REQUIRE_FALSE(r.injective_up_to_probe);
        auto all = r.preperiod;
        all.insert(all.end(), r.segment.begin(), r.segment.end());
        auto sorted = all;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        CHECK(static_cast<int>(r.preperiod.size()) == r.preperiod_length);
        CHECK(static_cast<int>(r.segment.size()) == r.period);
    }
}

TEST_CASE("semiring selector strings") {
    CHECK(Semiring::from_selector("bool").name == "bool");
    CHECK(Semiring::from_selector("nat").kind == Semiring::Kind::Naturals);
    CHECK(Semiring::from_selector("modp:5").carrier_size() == 5);
    CHECK(Semiring::from_selector("minplus:3").carrier_size() == 5);
    CHECK_THROWS_AS(Semiring::from_selector("tropical"), std::invalid_argument);
    CHECK_THROWS_AS(Semiring::from_selector("modp:1"), std::invalid_argument);
}
