#include <doctest.h>

#include <random>

#include "wildram/ramification.hpp"
#include "wildram/series.hpp"

using namespace wildram;

namespace {

FpSeries make_poly(Prime p, std::initializer_list<long> cs) {
    std::vector<FieldElement> v;
    for (long c : cs) v.push_back(field_element(c, p));
    return FpSeries::polynomial(std::move(v));
}

RamificationReport exact_report(std::uint64_t p, std::initializer_list<long long> levels) {
    RamificationReport r;
    r.p = p;
    r.identity = false;
    long long n = 0;
    for (long long i : levels) r.levels.push_back({n++, i, Exactness::exact});
    return r;
}

} // namespace

TEST_CASE("working precision defaults") {
    CHECK(default_precision(Prime(3), 0) == 4);
    CHECK(default_precision(Prime(3), 1) == 10);
    CHECK(default_precision(Prime(3), 2) == 28);
    CHECK(default_precision(Prime(5), 1) == 14);
    CHECK(default_precision(Prime(11), 1) == 26);
    CHECK_THROWS_AS(default_precision(Prime(5), 12), std::invalid_argument);
    CHECK_THROWS_AS(default_precision(Prime(3), -1), std::invalid_argument);
}

TEST_CASE("first levels of z + z^3") {
    Prime p5(5);
    FpSeries g5 = make_poly(p5, {0, 1, 0, 1});
    LevelResult l0 = lower_ramification(g5, 0);
    CHECK(l0.i == 2);
    CHECK(l0.exactness == Exactness::exact);
    LevelResult l1 = lower_ramification(g5, 1);
    CHECK(l1.n == 1);
    CHECK(l1.i == 12); // 2(1 + 5)
    CHECK(l1.exactness == Exactness::exact);

    // over F_3 the same series is not 2-ramified: at the default precision
    // the level-1 number is only bounded below, and the bound beats 8
    Prime p3(3);
    FpSeries g3 = make_poly(p3, {0, 1, 0, 1});
    LevelResult b = lower_ramification(g3, 1);
    CHECK(b.exactness == Exactness::lower_bound);
    CHECK(b.i > 8);
}

TEST_CASE("the identity is flagged, not measured") {
    Prime p(3);
    FpSeries id = FpSeries::identity(field_element(1, p));
    LevelResult l = lower_ramification(id, 2);
    CHECK(l.exactness == Exactness::identity);
    RamificationReport r = ramification_sequence(id, 2);
    CHECK(r.identity);
    CHECK(r.levels.size() == 3);
    for (const auto& level : r.levels) CHECK(level.exactness == Exactness::identity);
    CHECK_FALSE(r.two_ramified_pattern);
}

TEST_CASE("a multiple of p as the first level forces i1 = p * i0") {
    Prime p(3);
    FpSeries g = make_poly(p, {0, 1, 0, 0, 1}); // z + z^4, i0 = 3
    CHECK(lower_ramification(g, 0).i == 3);
    LevelResult l1 = lower_ramification(g, 1);
    CHECK(l1.i == 9);
    CHECK(l1.exactness == Exactness::exact);

    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coeff(0, 2);
    std::uniform_int_distribution<int> nonzero(1, 2);
    for (int trial = 0; trial < 10; ++trial) {
        FpSeries h = make_poly(p, {0, 1, 0, 0, nonzero(rng), coeff(rng), coeff(rng)});
        CHECK(lower_ramification(h, 0).i == 3);
        LevelResult r = lower_ramification(h, 1);
        CHECK(r.exactness == Exactness::exact);
        CHECK(r.i == 9);
    }
}

TEST_CASE("sequence of the squared involution") {
    Prime p(3);
    FpSeries f = make_poly(p, {0, -1, 1}); // -z + z^2
    FpSeries g = compose(f, f);
    RamificationReport r = ramification_sequence(g, 2, 28, "square");
    REQUIRE(r.levels.size() == 3);
    CHECK(r.levels[0].i == 2);
    CHECK(r.levels[1].i == 8);
    CHECK(r.levels[2].i == 26);
    for (const auto& level : r.levels) CHECK(level.exactness == Exactness::exact);
    REQUIRE(r.sen_ok.size() == 3);
    CHECK_FALSE(r.sen_ok[0].has_value());
    CHECK(r.sen_ok[1] == true);
    CHECK(r.sen_ok[2] == true);
    CHECK(r.two_ramified_pattern);
    CHECK(r.series_description == "square");
    CHECK(r.p == 3);
}

TEST_CASE("the squared involution stalls at p = 11") {
    Prime p(11);
    FpSeries f = make_poly(p, {0, -1, 1});
    FpSeries g = compose(f, f);
    CHECK(lower_ramification(g, 0).i == 2);
    LevelResult l1 = lower_ramification(g, 1); // default precision 26
    CHECK(l1.exactness == Exactness::lower_bound);
    CHECK(l1.i >= 25); // strictly beyond the 2-ramified value 24
    RamificationReport r = ramification_sequence(g, 1);
    CHECK_FALSE(r.two_ramified_pattern);
    CHECK_FALSE(r.sen_ok[1].has_value());
}

TEST_CASE("congruence checks on synthetic reports") {
    CHECK(sen_check(exact_report(3, {2, 8}))[1] == true);
    CHECK(sen_check(exact_report(5, {2, 12}))[1] == true);
    CHECK(sen_check(exact_report(3, {2, 9}))[1] == false);
    auto deep = sen_check(exact_report(3, {2, 8, 26}));
    CHECK_FALSE(deep[0].has_value());
    CHECK(deep[1] == true);
    CHECK(deep[2] == true);                                    // 26 - 8 = 18 = 0 mod 9
    CHECK(sen_check(exact_report(3, {2, 8, 20}))[2] == false); // 20 - 8 = 12 != 0 mod 9

    RamificationReport mixed = exact_report(3, {2, 8});
    mixed.levels[1].exactness = Exactness::lower_bound;
    CHECK_FALSE(sen_check(mixed)[1].has_value());
}

TEST_CASE("congruence holds on random series") {
    for (std::uint64_t pv : {3, 5, 7}) {
        Prime p(pv);
        std::mt19937_64 rng(pv * 1000 + 7);
        std::uniform_int_distribution<std::uint64_t> coeff(0, pv - 1);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<FieldElement> cs{field_element(0, p), field_element(1, p)};
            for (int d = 2; d <= 6; ++d)
                cs.push_back(field_element(static_cast<long long>(coeff(rng)), p));
            RamificationReport r = ramification_sequence(FpSeries::polynomial(std::move(cs)), 1);
            if (r.sen_ok[1].has_value()) CHECK(*r.sen_ok[1]);
        }
    }
}

TEST_CASE("difference recurrence route gives the same level-1 number") {
    for (std::uint64_t pv : {3, 5}) {
        Prime p(pv);
        std::mt19937_64 rng(pv);
        std::uniform_int_distribution<std::uint64_t> coeff(0, pv - 1);
        std::uniform_int_distribution<std::uint64_t> unit(1, pv - 1);
        long long w = default_precision(p, 1);
        for (int trial = 0; trial < 10; ++trial) {
            FpSeries g = make_poly(p, {0, 1, 0,
                                       static_cast<long>(unit(rng)),
                                       static_cast<long>(coeff(rng)),
                                       static_cast<long>(coeff(rng))});
            FpSeries dp = delta(g, static_cast<long long>(pv), w);
            LevelResult l1 = lower_ramification(g, 1, w);
            SeriesOrder o = order(dp);
            if (l1.exactness == Exactness::exact) {
                REQUIRE(o.is_finite());
                CHECK(o.value - 1 == l1.i);
            } else {
                CHECK(o.kind == OrderKind::lower_bound);
                CHECK(o.value - 1 == l1.i);
            }
        }
    }
}

TEST_CASE("series with a2 != 0 have first level 2") {
    Prime p(7);
    for (long a3 = 0; a3 < 7; ++a3) {
        FpSeries g = make_poly(p, {0, 1, 0, 3, a3});
        CHECK(lower_ramification(g, 0).i == 2);
        CHECK(lower_ramification(g, 0).exactness == Exactness::exact);
    }
}

TEST_CASE("validation") {
    Prime p(5);
    CHECK_THROWS_AS(lower_ramification(make_poly(p, {0, 2, 1}), 0), std::domain_error);
    CHECK_THROWS_AS(lower_ramification(make_poly(p, {1, 1}), 0), std::domain_error);
    CHECK_THROWS_AS(lower_ramification(make_poly(p, {0, 1, 1}), -1), std::invalid_argument);
    // truncated input clamps the working precision to what it knows
    FpSeries t = make_poly(p, {0, 1, 1}).at_precision(6);
    LevelResult l = lower_ramification(t, 1);
    CHECK(l.exactness == Exactness::lower_bound);
    CHECK(l.i == 6);
}

TEST_CASE("extrapolation from the first two levels") {
    CHECK(laubie_saine_extrapolate(2, 8, Prime(3), 2) == 26);
    CHECK(laubie_saine_extrapolate(2, 8, Prime(3), 3) == 80);
    CHECK(laubie_saine_extrapolate(2, 12, Prime(5), 2) == 62);
    CHECK(laubie_saine_extrapolate(1, 6, Prime(5), 2) == 31); // 1 + p + p^2
    CHECK(laubie_saine_extrapolate(2, 8, Prime(3), 0) == 2);
    CHECK(laubie_saine_extrapolate(2, 8, Prime(3), 1) == 8);

    CHECK_THROWS_WITH_AS(laubie_saine_extrapolate(3, 9, Prime(3), 2),
                         "laubie_saine_extrapolate: hypothesis violated: p divides i0",
                         std::domain_error);
    CHECK_THROWS_WITH_AS(laubie_saine_extrapolate(2, 14, Prime(3), 2),
                         "laubie_saine_extrapolate: hypothesis violated: i1 >= (p^2-p+1)*i0",
                         std::domain_error);
    CHECK_THROWS_AS(laubie_saine_extrapolate(0, 8, Prime(3), 2), std::invalid_argument);
    CHECK_THROWS_AS(laubie_saine_extrapolate(2, 8, Prime(3), -1), std::invalid_argument);
}
