#include "doldmap/words.hpp"

#include <doctest.h>

#include <bit>
#include <random>

using namespace doldmap;

namespace {

// Independent Thue-Morse oracle: symbol i is the bit-count parity of i.
char ptm_symbol(unsigned i) { return (std::popcount(i) % 2) ? '1' : '0'; }

// Dumb circular-power oracle: materialize each rotation and every candidate
// prefix power as strings.
bool circular_power_free_oracle(const Word& w, int k) {
    const int len = static_cast<int>(w.size());
    for (const Word& rot : conjugates(w)) {
        for (int b = 1; k * b <= len; ++b) {
            Word unit = rot.substr(0, b);
            Word power;
            for (int copy = 0; copy < k; ++copy) power += unit;
            if (rot.substr(0, k * b) == power) return false;
        }
    }
    return true;
}

Word word_from_bits(unsigned bits, int len) {
    Word w(len, '0');
    for (int i = 0; i < len; ++i)
        if (bits & (1u << i)) w[i] = '1';
    return w;
}

}  // namespace

TEST_CASE("thue-morse prefixes match the morphism stages") {
    CHECK(ptm_prefix(1) == "0");
    CHECK(ptm_prefix(2) == "01");
    CHECK(ptm_prefix(4) == "0110");
    CHECK(ptm_prefix(8) == "01101001");
    CHECK(ptm_prefix(16) == "0110100110010110");
    CHECK_THROWS_AS(ptm_prefix(0), std::invalid_argument);
}

TEST_CASE("thue-morse prefixes match the bit-parity oracle") {
    Word w = ptm_prefix(2048);
    for (unsigned i = 0; i < 2048; ++i) CHECK(w[i] == ptm_symbol(i));
}

TEST_CASE("prefix property of the morphism fixed point") {
    Word big = ptm_prefix(512);
    for (int n : {1, 2, 3, 5, 17, 100, 511})
        CHECK(big.compare(0, n, ptm_prefix(n)) == 0);
}

TEST_CASE("power freeness scans") {
    CHECK(is_k_power_free(ptm_prefix(16), 3));
    CHECK_FALSE(is_k_power_free("00", 2));
    CHECK_FALSE(is_k_power_free("1001010110100110", 3));   // contains 010101
    CHECK_FALSE(is_k_power_free("010110100100100101100110", 3));  // contains 100100100
    CHECK_THROWS_AS(is_k_power_free("01", 1), std::invalid_argument);
    CHECK_THROWS_AS(is_k_power_free("01a", 2), std::invalid_argument);

    PowerHit hit = find_k_power("1001010110100110", 3);
    REQUIRE(hit.found());
    CHECK(hit.position == 2);
    CHECK(hit.block == 2);  // (01)^3 starting at index 2
}

TEST_CASE("power freeness is monotone in the exponent") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<unsigned> bits;
    for (int trial = 0; trial < 200; ++trial) {
        int len = 1 + static_cast<int>(rng() % 20);
        Word w = word_from_bits(bits(rng), len);
        for (int k = 2; k < 6; ++k) {
            if (is_k_power_free(w, k)) CHECK(is_k_power_free(w, k + 1));
        }
    }
}

TEST_CASE("conjugates in rotation order") {
    CHECK(conjugates("100") == std::vector<Word>{"100", "001", "010"});
    CHECK(conjugates("0") == std::vector<Word>{"0"});
    CHECK(conjugates("0101") == std::vector<Word>{"0101", "1010", "0101", "1010"});
}

TEST_CASE("primitivity and least periods") {
    CHECK(is_primitive("0110"));
    CHECK_FALSE(is_primitive("0101"));
    CHECK(is_primitive("0"));
    CHECK(least_period("0101") == 2);
    CHECK(least_period("000") == 1);
    CHECK(least_period("011") == 3);
}

TEST_CASE("circular power freeness") {
    CHECK(circular_k_power_free(ptm_prefix(32), 6));
    CHECK_FALSE(circular_k_power_free("0101", 2));
    CHECK(circular_k_power_free("0", 6));

    CircularPowerHit hit = find_circular_k_power("0011", 2);
    REQUIRE(hit.found());  // rotation 1100...? prefix square exists somewhere
}

TEST_CASE("circular scan agrees with the materializing oracle") {
    for (int len = 1; len <= 16; ++len) {
        for (unsigned bits = 0; bits < (1u << len); ++bits) {
            Word w = word_from_bits(bits, len);
            for (int k : {2, 3, 6}) {
                bool fast = circular_k_power_free(w, k);
                bool slow = circular_power_free_oracle(w, k);
                if (fast != slow) {
                    CAPTURE(w);
                    CAPTURE(k);
                    CHECK(fast == slow);
                }
            }
        }
    }
}

TEST_CASE("prefix power scan agrees with per-prefix rescans") {
    // squares appear early ("11" ends at position 3), cubes never do
    PrefixPowerHit squares = first_power_in_prefixes(200, 2);
    REQUIRE(squares.found());
    CHECK(squares.n == 3);
    CHECK(squares.position == 1);
    CHECK(squares.block == 1);
    CHECK_FALSE(first_power_in_prefixes(200, 3).found());

    for (int k : {2, 3}) {
        PrefixPowerHit hit = first_power_in_prefixes(200, k);
        for (int n = 1; n <= 200; ++n) {
            bool free_by_rescan = is_k_power_free(ptm_prefix(n), k);
            bool free_by_scan = !hit.found() || n < hit.n;
            CHECK(free_by_rescan == free_by_scan);
        }
    }
}

TEST_CASE("stream family groups conjugate streams by prefix length") {
    auto family = build_stream_family(3);
    REQUIRE(family.size() == 3);
    CHECK(family[1] == std::vector<PeriodicStream>{{"0", 1}});
    CHECK(family[2] == std::vector<PeriodicStream>{{"01", 2}, {"10", 2}});
    CHECK(family[3] ==
          std::vector<PeriodicStream>{{"011", 3}, {"110", 3}, {"101", 3}});

    auto bigger = build_stream_family(64);
    for (const auto& [n, streams] : bigger) {
        CHECK(static_cast<int>(streams.size()) == n);
        for (const PeriodicStream& stream : streams) CHECK(stream.least_period == n);
    }
    CHECK_THROWS_AS(build_stream_family(0), std::invalid_argument);
}
