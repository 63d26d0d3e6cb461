#include "doldmap/dold.hpp"

#include <doctest.h>

#include <random>

using namespace doldmap;

namespace {

DoldCoefficients random_coefficients(std::mt19937_64& rng, int max_period, int max_abs) {
    std::uniform_int_distribution<int> count_dist(0, max_period);
    std::uniform_int_distribution<int> period_dist(1, max_period);
    std::uniform_int_distribution<int> value_dist(-max_abs, max_abs);
    DoldCoefficients coeffs;
    int entries = count_dist(rng);
    for (int i = 0; i < entries; ++i) coeffs.set(period_dist(rng), value_dist(rng));
    return coeffs;
}

}  // namespace

TEST_CASE("mobius by trial factorization") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(3) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(210) == 1);
    CHECK_THROWS_AS(mobius(0), std::invalid_argument);
}

TEST_CASE("normalized sequences") {
    CHECK(normalized_sequence(3, 7) == IndexSequence{0, 0, 3, 0, 0, 3, 0});
    CHECK(normalized_sequence(1, 4) == IndexSequence{1, 1, 1, 1});
    CHECK(normalized_sequence(5, 4) == IndexSequence{0, 0, 0, 0});
    CHECK_THROWS_AS(normalized_sequence(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(normalized_sequence(3, 0), std::invalid_argument);
}

TEST_CASE("expand divisor sums") {
    CHECK(expand(DoldCoefficients{{{1, 2}}}, 3) == IndexSequence{2, 2, 2});
    CHECK(expand(DoldCoefficients{}, 3) == IndexSequence{0, 0, 0});

    // cross-check {1:1, 2:-3} against the pointwise combination sigma^1 - 3 sigma^2
    DoldCoefficients coeffs{{{1, 1}, {2, -3}}};
    IndexSequence expected(4);
    IndexSequence s1 = normalized_sequence(1, 4), s2 = normalized_sequence(2, 4);
    for (int i = 0; i < 4; ++i) expected[i] = s1[i] - 3 * s2[i];
    CHECK(expected == IndexSequence{1, -5, 1, -5});
    CHECK(expand(coeffs, 4) == expected);
}

TEST_CASE("coefficients drop zeros and reject bad periods") {
    DoldCoefficients coeffs{{{1, 0}, {2, -3}}};
    CHECK(coeffs.at(1) == 0);
    CHECK(coeffs.entries().size() == 1);
    coeffs.set(2, 0);
    CHECK(coeffs.empty());
    CHECK_THROWS_AS(coeffs.set(0, 1), std::invalid_argument);
}

TEST_CASE("invert recovers coefficients") {
    CHECK(invert({1, 1, 1, 1}) == DoldCoefficients{{{1, 1}}});
    CHECK(invert({0, 2, 0, 2}) == DoldCoefficients{{{2, 1}}});
    CHECK_THROWS_AS(invert({}), std::invalid_argument);

    try {
        invert({1, 2});
        FAIL("expected congruence_error");
    } catch (const congruence_error& e) {
        CHECK(e.n == 2);
        CHECK(e.residue == 1);  // I_2 - I_1 = 1, not divisible by 2
    }
}

TEST_CASE("congruence verdicts") {
    CHECK(check_congruences({2, 2, 2, 2}).pass);
    CHECK(check_congruences({1, 3}).pass);

    CongruenceVerdict verdict = check_congruences({0, 1});
    CHECK_FALSE(verdict.pass);
    CHECK(verdict.failing_n == 2);
    CHECK(verdict.residue == 1);
}

TEST_CASE("support periods rule") {
    CHECK(support_periods(DoldCoefficients{{{1, 1}}}) == PeriodSet{});
    CHECK(support_periods(DoldCoefficients{{{2, -3}}}) == PeriodSet{1, 2});
    CHECK(support_periods(DoldCoefficients{{{1, 2}, {3, 1}}}) == PeriodSet{1, 3});
    CHECK(support_periods(DoldCoefficients{}) == PeriodSet{1});
}

TEST_CASE("round trip expand/invert on random coefficients") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 500; ++trial) {
        DoldCoefficients coeffs = random_coefficients(rng, 12, 5);
        IndexSequence seq = expand(coeffs, 12);
        CHECK(check_congruences(seq).pass);
        CHECK(invert(seq) == coeffs);
    }
}

TEST_CASE("normalized sequence equals singleton expansion") {
    for (int k = 1; k <= 12; ++k)
        CHECK(normalized_sequence(k, 30) == expand(DoldCoefficients{{{k, 1}}}, 30));
}

TEST_CASE("congruences are linear") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        IndexSequence a = expand(random_coefficients(rng, 10, 4), 10);
        IndexSequence b = expand(random_coefficients(rng, 10, 4), 10);
        IndexSequence sum(10);
        for (int i = 0; i < 10; ++i) sum[i] = a[i] + b[i];
        CHECK(check_congruences(sum).pass);
    }
}
