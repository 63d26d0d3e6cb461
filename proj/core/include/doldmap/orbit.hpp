#ifndef DOLDMAP_ORBIT_HPP
#define DOLDMAP_ORBIT_HPP

#include "doldmap/dold.hpp"
#include "doldmap/rational.hpp"
#include "doldmap/words.hpp"

#include <compare>
#include <map>
#include <vector>

namespace doldmap {

// Exact rational point of the circle, reduced into [0, 1).
class Angle {
public:
    Angle() : value_(0) {}
    explicit Angle(Rational v) : value_(mod1(std::move(v))) {}

    const Rational& value() const { return value_; }
    auto operator<=>(const Angle& other) const { return value_.compare(other.value_); }
    bool operator==(const Angle&) const = default;

private:
    Rational value_;
};

// theta -> 2*theta mod 1
Angle doubling(const Angle& a);

// min(|a-b|, 1-|a-b|), exact
Rational circular_distance(const Angle& a, const Angle& b);

// Angle with binary expansion equal to the infinite repetition of w:
// (value of w as a binary integer) / (2^|w| - 1).
Angle word_to_angle(const Word& w);

// Full doubling orbit of a periodic angle, in dynamical order
// (points[i+1] = doubling(points[i])).
struct PeriodicOrbit {
    std::vector<Angle> points;
    int period = 0;
};

// Requires an angle with odd denominator (otherwise not doubling-periodic).
PeriodicOrbit orbit_of(const Angle& a);

// One Thue-Morse prefix orbit per requested period, keyed by period.
struct OrbitSet {
    std::map<int, PeriodicOrbit> orbits;

    bool empty() const { return orbits.empty(); }
    int total_points() const;
    std::vector<Angle> all_points() const;  // unsorted union
};

// For each k in periods, the orbit of word_to_angle(ptm_prefix(k)).
// Propagates primitivity_error; throws std::invalid_argument when
// max(periods) > n_max or when orbits overlap (cannot happen for least
// periods, asserted defensively).
OrbitSet build_orbit_set(const PeriodSet& periods, int n_max);

// Minimum circular distance between distinct points; 1 for a single point.
Rational min_gap(const OrbitSet& set);

// Distance table probing whether high-period prefix orbits approach
// low-period points of the doubling map.
struct SeparationRow {
    Angle probe;
    int probe_period = 0;              // least period of the probe
    std::vector<Rational> distances;   // index n-1: distance to orbit n (probe excluded)
    Rational min_distance;             // min over n
    int min_at = 0;                    // n achieving the min
    bool flagged = false;              // min_distance < floor
};

struct SeparationReport {
    int n_max = 0;
    int probe_period = 0;
    double floor = 0.0;
    std::vector<SeparationRow> rows;
    bool any_flagged = false;
    Rational global_min;               // min over probes (1 when no probes)
};

// For every doubling-periodic angle beta of least period <= probe_period
// (probe_period <= 8), distances from beta to the period-n prefix orbit for
// n = 1..n_max, with beta itself excluded from its own orbit. A row is
// flagged when its minimum drops below `floor`.
SeparationReport separation_scan(int n_max, int probe_period, double floor = 1e-6);

}  // namespace doldmap

#endif
