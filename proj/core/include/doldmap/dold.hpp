#ifndef DOLDMAP_DOLD_HPP
#define DOLDMAP_DOLD_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace doldmap {

// Finitely supported integer coefficients (a_k), k >= 1. Zero entries are
// never stored; `set` with value 0 erases the key.
class DoldCoefficients {
public:
    DoldCoefficients() = default;
    explicit DoldCoefficients(std::map<int, std::int64_t> entries);

    void set(int k, std::int64_t a);
    std::int64_t at(int k) const;  // 0 when absent
    const std::map<int, std::int64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int max_period() const;  // 0 when empty

    bool operator==(const DoldCoefficients&) const = default;

private:
    std::map<int, std::int64_t> entries_;
};

// Index values I_1..I_N.
using IndexSequence = std::vector<std::int64_t>;

using PeriodSet = std::set<int>;

struct CongruenceVerdict {
    bool pass = true;
    int failing_n = 0;        // first n with sum_{d|n} mu(n/d) I_d != 0 mod n
    std::int64_t residue = 0; // that sum reduced mod n, in [1, n)
};

// Thrown by invert() when the sequence violates a Dold congruence.
class congruence_error : public std::runtime_error {
public:
    congruence_error(int n, std::int64_t residue);
    int n;
    std::int64_t residue;
};

// Moebius function by trial factorization.
int mobius(int n);

// sigma^k truncated to length N: entry n is k if k | n, else 0.
IndexSequence normalized_sequence(int k, int N);

// I_n = sum over stored k dividing n of k * a_k.
IndexSequence expand(const DoldCoefficients& coeffs, int N);

// a_k = (1/k) sum_{d|k} mu(k/d) I_d. Throws congruence_error at the first n
// where the division is not exact.
DoldCoefficients invert(const IndexSequence& seq);

CongruenceVerdict check_congruences(const IndexSequence& seq);

// 1 is a member iff a_1 != 1; k >= 2 is a member iff a_k != 0.
PeriodSet support_periods(const DoldCoefficients& coeffs);

}  // namespace doldmap

#endif
