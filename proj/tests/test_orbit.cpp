#include "doldmap/orbit.hpp"

#include <doctest.h>

#include <random>

using namespace doldmap;

namespace {

Rational rat(long long p, long long q) { return Rational(BigInt(p), BigInt(q)); }

// Partial binary sum of the periodic stream of w, plus an error bound: the
// true angle differs from the partial sum by less than 2^-terms.
Rational partial_binary_sum(const Word& w, int terms) {
    Rational sum = 0;
    Rational weight(1, 2);
    for (int i = 0; i < terms; ++i) {
        if (w[i % w.size()] == '1') sum += weight;
        weight /= 2;
    }
    return sum;
}

Word rotate_left(const Word& w, int k) {
    const int len = static_cast<int>(w.size());
    k %= len;
    return w.substr(k) + w.substr(0, k);
}

}  // namespace

TEST_CASE("angles normalize into [0,1)") {
    CHECK(Angle(rat(5, 4)).value() == rat(1, 4));
    CHECK(Angle(rat(-1, 3)).value() == rat(2, 3));
    CHECK(Angle(Rational(7)).value() == 0);
}

TEST_CASE("word angles") {
    CHECK(word_to_angle("100").value() == rat(4, 7));
    CHECK(word_to_angle("0").value() == 0);
    CHECK(word_to_angle("01").value() == rat(1, 3));

    // geometric-series oracle: the angle is the limit of partial binary sums
    for (const Word& w : {Word("100"), Word("0110"), Word("01101")}) {
        Rational angle = word_to_angle(w).value();
        Rational partial = partial_binary_sum(w, 60);
        Rational err = angle - partial;
        if (err < 0) err = -err;
        CHECK(err < Rational(BigInt(1), BigInt(1) << 60));
    }
}

TEST_CASE("doubling") {
    CHECK(doubling(Angle(rat(4, 7))).value() == rat(1, 7));
    CHECK(doubling(Angle(Rational(0))).value() == 0);
    CHECK(doubling(Angle(rat(1, 3))).value() == rat(2, 3));
}

TEST_CASE("orbits of periodic angles") {
    PeriodicOrbit orbit = orbit_of(Angle(rat(1, 3)));
    CHECK(orbit.period == 2);
    CHECK(orbit.points == std::vector<Angle>{Angle(rat(1, 3)), Angle(rat(2, 3))});

    CHECK(orbit_of(Angle(Rational(0))).period == 1);

    PeriodicOrbit three = orbit_of(Angle(rat(3, 7)));
    CHECK(three.period == 3);
    CHECK(three.points ==
          std::vector<Angle>{Angle(rat(3, 7)), Angle(rat(6, 7)), Angle(rat(5, 7))});

    CHECK_THROWS_AS(orbit_of(Angle(rat(1, 2))), std::invalid_argument);
    CHECK_THROWS_AS(orbit_of(Angle(rat(1, 6))), std::invalid_argument);
}

TEST_CASE("semiconjugation with the shift, exhaustive to length 12") {
    for (int len = 1; len <= 12; ++len) {
        for (unsigned bits = 0; bits < (1u << len); ++bits) {
            Word w(len, '0');
            for (int i = 0; i < len; ++i)
                if (bits & (1u << i)) w[i] = '1';
            CHECK(doubling(word_to_angle(w)) == word_to_angle(rotate_left(w, 1)));
        }
    }
}

TEST_CASE("orbit period equals least period of the generating word") {
    for (const Word& w : {Word("0"), Word("01"), Word("011"), Word("0110"),
                          Word("010101"), Word("001001"), Word("0110110")}) {
        CHECK(orbit_of(word_to_angle(w)).period == least_period(w));
    }
}

TEST_CASE("orbit set per support period") {
    OrbitSet empty = build_orbit_set({}, 4);
    CHECK(empty.empty());

    OrbitSet one = build_orbit_set({1}, 4);
    CHECK(one.orbits.at(1).points == std::vector<Angle>{Angle(Rational(0))});

    OrbitSet two = build_orbit_set({1, 2}, 4);
    CHECK(two.total_points() == 3);
    CHECK(two.orbits.at(2).points.front().value() == rat(1, 3));

    CHECK_THROWS_AS(build_orbit_set({5}, 4), std::invalid_argument);
}

TEST_CASE("minimum circular gap") {
    CHECK(min_gap(build_orbit_set({1, 2}, 2)) == rat(1, 3));
    CHECK(min_gap(build_orbit_set({1}, 1)) == 1);
    CHECK_THROWS_AS(min_gap(OrbitSet{}), std::invalid_argument);

    // brute-force pairwise oracle over {1,2,3}: points 0, 1/3, 2/3, 3/7, 5/7, 6/7
    OrbitSet set = build_orbit_set({1, 2, 3}, 3);
    std::vector<Angle> points = set.all_points();
    Rational best = 1;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j) {
            Rational d = circular_distance(points[i], points[j]);
            if (d < best) best = d;
        }
    CHECK(best == rat(1, 21));  // 5/7 - 2/3
    CHECK(min_gap(set) == best);
}

TEST_CASE("min gap equals brute force on random orbit sets") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        PeriodSet periods;
        for (int k = 1; k <= 8; ++k)
            if (rng() % 2) periods.insert(k);
        if (periods.empty()) periods.insert(1);
        OrbitSet set = build_orbit_set(periods, 8);
        std::vector<Angle> points = set.all_points();
        Rational best = 1;
        for (size_t i = 0; i < points.size(); ++i)
            for (size_t j = i + 1; j < points.size(); ++j) {
                Rational d = circular_distance(points[i], points[j]);
                if (d < best) best = d;
            }
        CHECK(min_gap(set) == best);
    }
}

TEST_CASE("separation scan") {
    SeparationReport trivial = separation_scan(4, 0);
    CHECK(trivial.rows.empty());
    CHECK_FALSE(trivial.any_flagged);
    CHECK(trivial.global_min == 1);

    SeparationReport tiny = separation_scan(1, 1);
    REQUIRE(tiny.rows.size() == 1);  // only beta = 0 has period 1
    CHECK(tiny.rows[0].probe == Angle(Rational(0)));
    CHECK(tiny.rows[0].distances == std::vector<Rational>{1});  // own orbit excluded

    SeparationReport report = separation_scan(32, 3, 1e-6);
    CHECK(report.rows.size() == 1 + 2 + 6);  // least periods 1, 2, 3
    CHECK_FALSE(report.any_flagged);
    CHECK(report.global_min > 0);
    for (const SeparationRow& row : report.rows) {
        CHECK(row.min_distance > 0);
        CHECK(row.min_at >= 1);
        CHECK(static_cast<int>(row.distances.size()) == 32);
    }

    CHECK_THROWS_AS(separation_scan(4, 9), std::invalid_argument);
    CHECK_THROWS_AS(separation_scan(0, 2), std::invalid_argument);
}
