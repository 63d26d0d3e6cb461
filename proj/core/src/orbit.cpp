#include "doldmap/orbit.hpp"

#include <algorithm>
#include <set>

namespace doldmap {

Angle doubling(const Angle& a) { return Angle(2 * a.value()); }

Rational circular_distance(const Angle& a, const Angle& b) {
    Rational d = a.value() - b.value();
    if (d < 0) d = -d;
    Rational wrap = 1 - d;
    return d < wrap ? d : wrap;
}

Angle word_to_angle(const Word& w) {
    validate_word(w);
    BigInt value = 0;
    for (char c : w) value = 2 * value + (c == '1' ? 1 : 0);
    BigInt denom = (BigInt(1) << w.size()) - 1;
    return Angle(Rational(value, denom));
}

PeriodicOrbit orbit_of(const Angle& a) {
    if (den(a.value()) % 2 == 0)
        throw std::invalid_argument("angle with even denominator is not doubling-periodic");
    PeriodicOrbit orbit;
    Angle x = a;
    do {
        orbit.points.push_back(x);
        x = doubling(x);
    } while (!(x == a));
    orbit.period = static_cast<int>(orbit.points.size());
    return orbit;
}

int OrbitSet::total_points() const {
    int total = 0;
    for (const auto& [k, orbit] : orbits) total += orbit.period;
    return total;
}

std::vector<Angle> OrbitSet::all_points() const {
    std::vector<Angle> points;
    for (const auto& [k, orbit] : orbits)
        points.insert(points.end(), orbit.points.begin(), orbit.points.end());
    return points;
}

OrbitSet build_orbit_set(const PeriodSet& periods, int n_max) {
    if (!periods.empty() && *periods.rbegin() > n_max)
        throw std::invalid_argument("period set exceeds n_max");
    OrbitSet set;
    std::set<Angle> seen;
    for (int k : periods) {
        Word s = ptm_prefix(k);
        if (!is_primitive(s)) throw primitivity_error(k, s);
        PeriodicOrbit orbit = orbit_of(word_to_angle(s));
        if (orbit.period != k)
            throw std::invalid_argument("prefix orbit period mismatch at k=" + std::to_string(k));
        for (const Angle& p : orbit.points) {
            if (!seen.insert(p).second)
                throw std::invalid_argument("overlapping orbits at k=" + std::to_string(k));
        }
        set.orbits.emplace(k, std::move(orbit));
    }
    return set;
}

Rational min_gap(const OrbitSet& set) {
    if (set.empty()) throw std::invalid_argument("min_gap requires a nonempty set");
    std::vector<Angle> points = set.all_points();
    if (points.size() == 1) return Rational(1);
    std::sort(points.begin(), points.end());
    Rational best = 1 - points.back().value() + points.front().value();
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        Rational gap = points[i + 1].value() - points[i].value();
        if (gap < best) best = gap;
    }
    return best;
}

namespace {

// All doubling-periodic angles of least period <= max_period, with periods.
std::vector<std::pair<Angle, int>> periodic_probes(int max_period) {
    std::map<Angle, int> least;
    for (int p = 1; p <= max_period; ++p) {
        BigInt denom = (BigInt(1) << p) - 1;
        for (BigInt j = 0; j < denom; ++j) {
            Angle a{Rational(j, denom)};
            least.try_emplace(a, p);  // p ascending, so first insert is least
        }
    }
    return {least.begin(), least.end()};
}

}  // namespace

SeparationReport separation_scan(int n_max, int probe_period, double floor) {
    if (n_max < 1) throw std::invalid_argument("separation_scan requires n_max >= 1");
    if (probe_period < 0 || probe_period > 8)
        throw std::invalid_argument("probe_period must be in [0, 8]");

    SeparationReport report;
    report.n_max = n_max;
    report.probe_period = probe_period;
    report.floor = floor;
    report.global_min = 1;
    if (probe_period == 0) return report;  // empty probe set, trivially passing

    std::vector<PeriodicOrbit> orbits;
    orbits.reserve(n_max);
    for (int n = 1; n <= n_max; ++n)
        orbits.push_back(orbit_of(word_to_angle(ptm_prefix(n))));

    for (const auto& [beta, p] : periodic_probes(probe_period)) {
        SeparationRow row;
        row.probe = beta;
        row.probe_period = p;
        row.min_distance = 1;
        row.min_at = 0;
        for (int n = 1; n <= n_max; ++n) {
            Rational d = 1;  // whole-circle convention when nothing remains
            for (const Angle& x : orbits[n - 1].points) {
                if (x == beta) continue;  // beta's own membership says nothing
                Rational dx = circular_distance(beta, x);
                if (dx < d) d = dx;
            }
            if (d < row.min_distance || row.min_at == 0) {
                row.min_distance = d;
                row.min_at = n;
            }
            row.distances.push_back(std::move(d));
        }
        row.flagged = to_double(row.min_distance) < floor;
        report.any_flagged |= row.flagged;
        if (row.min_distance < report.global_min) report.global_min = row.min_distance;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace doldmap
