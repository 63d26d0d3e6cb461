#ifndef DOLDMAP_WORDS_HPP
#define DOLDMAP_WORDS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace doldmap {

// Finite word over {0,1}, stored as a string of '0'/'1' characters.
using Word = std::string;

// Infinite periodic 0/1 stream, given by the block it repeats.
struct PeriodicStream {
    Word generator;
    int least_period = 0;  // least period of the infinite repetition

    bool operator==(const PeriodicStream&) const = default;
};

class primitivity_error : public std::runtime_error {
public:
    primitivity_error(int n, Word word);
    int n;         // prefix length whose word failed to be primitive
    Word word;
};

void validate_word(const Word& w);

// First n symbols of the Thue-Morse sequence, built by iterating the
// morphism 0 -> 01, 1 -> 10 from "0" and truncating.
Word ptm_prefix(int n);

// True iff no nonempty block u occurs k times in a row as a factor of w.
bool is_k_power_free(const Word& w, int k);

// Position/length of the first k-power factor, or {-1, 0} when none.
struct PowerHit {
    int position = -1;  // start index of the k-power occurrence
    int block = 0;      // |u|
    bool found() const { return position >= 0; }
};
PowerHit find_k_power(const Word& w, int k);

// All rotations of w in rotation order (left rotation by 0, 1, ...).
std::vector<Word> conjugates(const Word& w);

// True iff w is not u^j for any j >= 2.
bool is_primitive(const Word& w);

// Least period of the infinite repetition of w (divides |w|).
int least_period(const Word& w);

// True iff no conjugate of the stream of w starts with u^k for a nonempty u
// with k*|u| <= |w|.
bool circular_k_power_free(const Word& w, int k);

// First conjugate (by rotation index) starting with a k-power, or not found.
struct CircularPowerHit {
    int rotation = -1;
    int block = 0;
    bool found() const { return rotation >= 0; }
};
CircularPowerHit find_circular_k_power(const Word& w, int k);

// Smallest n <= n_max whose Thue-Morse prefix contains a k-power. Scans
// occurrence end positions once instead of rescanning every prefix: a
// k-power inside ptm_prefix(n) is exactly an occurrence ending at e <= n.
struct PrefixPowerHit {
    int n = 0;          // failing prefix length, 0 when all prefixes are free
    int position = -1;  // start of the occurrence
    int block = 0;      // |u|
    bool found() const { return n > 0; }
};
PrefixPowerHit first_power_in_prefixes(int n_max, int k);

// For each n <= n_max, the streams generated by all rotations of
// ptm_prefix(n), keyed by n. Throws primitivity_error if some prefix is a
// proper power (its stream would not have least period n).
std::map<int, std::vector<PeriodicStream>> build_stream_family(int n_max);

}  // namespace doldmap

#endif
