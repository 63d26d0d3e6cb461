#include "doldmap/dold.hpp"

#include <string>

namespace doldmap {

DoldCoefficients::DoldCoefficients(std::map<int, std::int64_t> entries) {
    for (const auto& [k, a] : entries) set(k, a);
}

void DoldCoefficients::set(int k, std::int64_t a) {
    if (k < 1) throw std::invalid_argument("coefficient period must be >= 1");
    if (a == 0)
        entries_.erase(k);
    else
        entries_[k] = a;
}

std::int64_t DoldCoefficients::at(int k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? 0 : it->second;
}

int DoldCoefficients::max_period() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first;
}

congruence_error::congruence_error(int n_, std::int64_t residue_)
    : std::runtime_error("Dold congruence fails at n=" + std::to_string(n_) +
                         " (residue " + std::to_string(residue_) + ")"),
      n(n_),
      residue(residue_) {}

int mobius(int n) {
    if (n < 1) throw std::invalid_argument("mobius requires n >= 1");
    int result = 1;
    for (int p = 2; static_cast<std::int64_t>(p) * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;  // square factor
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

IndexSequence normalized_sequence(int k, int N) {
    if (k < 1) throw std::invalid_argument("normalized_sequence requires k >= 1");
    if (N < 1) throw std::invalid_argument("normalized_sequence requires N >= 1");
    IndexSequence seq(N, 0);
    for (int n = k; n <= N; n += k) seq[n - 1] = k;
    return seq;
}

IndexSequence expand(const DoldCoefficients& coeffs, int N) {
    if (N < 1) throw std::invalid_argument("expand requires N >= 1");
    IndexSequence seq(N, 0);
    for (const auto& [k, a] : coeffs.entries()) {
        for (int n = k; n <= N; n += k) seq[n - 1] += k * a;
    }
    return seq;
}

namespace {

// sum_{d|n} mu(n/d) I_d
std::int64_t mobius_sum(const IndexSequence& seq, int n) {
    std::int64_t sum = 0;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        sum += static_cast<std::int64_t>(mobius(n / d)) * seq[d - 1];
        int e = n / d;
        if (e != d) sum += static_cast<std::int64_t>(mobius(n / e)) * seq[e - 1];
    }
    return sum;
}

std::int64_t positive_mod(std::int64_t v, int n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

}  // namespace

DoldCoefficients invert(const IndexSequence& seq) {
    if (seq.empty()) throw std::invalid_argument("invert requires a nonempty sequence");
    DoldCoefficients coeffs;
    for (int n = 1; n <= static_cast<int>(seq.size()); ++n) {
        std::int64_t sum = mobius_sum(seq, n);
        if (sum % n != 0) throw congruence_error(n, positive_mod(sum, n));
        coeffs.set(n, sum / n);
    }
    return coeffs;
}

CongruenceVerdict check_congruences(const IndexSequence& seq) {
    for (int n = 1; n <= static_cast<int>(seq.size()); ++n) {
        std::int64_t sum = mobius_sum(seq, n);
        if (sum % n != 0) return {false, n, positive_mod(sum, n)};
    }
    return {};
}

PeriodSet support_periods(const DoldCoefficients& coeffs) {
    PeriodSet periods;
    if (coeffs.at(1) != 1) periods.insert(1);
    for (const auto& [k, a] : coeffs.entries()) {
        if (k > 1 && a != 0) periods.insert(k);
    }
    return periods;
}

}  // namespace doldmap
