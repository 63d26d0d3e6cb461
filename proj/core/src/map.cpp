#include "doldmap/map.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace doldmap {

SectorParams assign_sector_params(const DoldCoefficients& coeffs) {
    SectorParams params;
    const std::int64_t a1 = coeffs.at(1);
    if (a1 >= 2)
        params.by_period[1] = {static_cast<int>(a1 - 1), Sign::plus};
    else if (a1 <= 0)
        params.by_period[1] = {static_cast<int>(1 - a1), Sign::minus};
    for (const auto& [k, a] : coeffs.entries()) {
        if (k < 2) continue;
        if (a > 0)
            params.by_period[k] = {static_cast<int>(a), Sign::plus};
        else
            params.by_period[k] = {static_cast<int>(-a), Sign::minus};
    }
    return params;
}

Rational sector_angular_exact(Sign sign, const Rational& x) {
    Rational x2 = x * x;
    Rational bump = x2 * (1 - x2) / 2;
    Rational c = sign == Sign::minus ? Rational(1 - bump) : Rational(1 + bump);
    return x * c;
}

double sector_angular(Sign sign, double x) {
    double x2 = x * x;
    double bump = x2 * (1 - x2) / 2;
    return x * (sign == Sign::minus ? 1 - bump : 1 + bump);
}

Rational sector_radial_exact(const Rational& x) { return 2 * x * x - 1; }

bool SkewProductMap::operator==(const SkewProductMap& other) const {
    auto piece_eq = [](const AngularPiece& a, const AngularPiece& b) {
        return a.x_lo == b.x_lo && a.x_hi == b.x_hi && a.y_lo == b.y_lo &&
               a.y_hi == b.y_hi && a.is_sector == b.is_sector &&
               a.orbit_period == b.orbit_period && a.orbit_pos == b.orbit_pos &&
               a.subsectors == b.subsectors && a.sign == b.sign && a.slope == b.slope;
    };
    if (!(coeffs == other.coeffs) || periods != other.periods ||
        params.by_period != other.params.by_period ||
        domain_start != other.domain_start || pieces.size() != other.pieces.size())
        return false;
    for (size_t i = 0; i < pieces.size(); ++i)
        if (!piece_eq(pieces[i], other.pieces[i])) return false;
    return true;
}

namespace {

// lifted base points alpha_j + t (t >= 0) falling in [0, u)
BigInt lifted_count(const std::vector<Rational>& alphas, const Rational& u) {
    BigInt count = 0;
    for (const Rational& a : alphas) {
        Rational diff = u - a;
        if (diff > 0) count += -floor_int(-diff);  // ceil(diff)
    }
    return count;
}

void cache_piece(AngularPiece& piece) {
    piece.x_lo_d = to_double(piece.x_lo);
    piece.width_d = to_double(piece.x_hi - piece.x_lo);
    piece.y_lo_d = to_double(piece.y_lo);
    piece.slope_d = piece.is_sector ? 0.0 : to_double(piece.slope);
    piece.lookup_lo = std::nextafter(piece.x_lo_d, -HUGE_VAL);
    piece.lookup_hi = std::nextafter(to_double(piece.x_hi), HUGE_VAL);
}

void check_structure(const SkewProductMap& map) {
    const auto& pieces = map.pieces;
    if (pieces.empty()) throw std::logic_error("map has no pieces");
    if (pieces.front().x_lo != map.domain_start)
        throw std::logic_error("domain does not start at domain_start");
    Rational total_domain = 0;
    for (size_t i = 0; i < pieces.size(); ++i) {
        const AngularPiece& piece = pieces[i];
        if (!(piece.x_hi > piece.x_lo)) throw std::logic_error("empty piece domain");
        if (!(piece.y_hi > piece.y_lo)) throw std::logic_error("non-increasing piece image");
        total_domain += piece.x_hi - piece.x_lo;
        if (i + 1 < pieces.size()) {
            if (pieces[i + 1].x_lo != piece.x_hi)
                throw std::logic_error("piece domains not adjacent");
            if (pieces[i + 1].y_lo != piece.y_hi)
                throw std::logic_error("lift not continuous at breakpoint");
        }
    }
    if (total_domain != 1) throw std::logic_error("piece domains do not cover one turn");
    if (pieces.back().y_hi - pieces.front().y_lo != 2)
        throw std::logic_error("angular lift degree is not 2");
}

}  // namespace

SkewProductMap build_map(const DoldCoefficients& coeffs) {
    SkewProductMap map;
    map.coeffs = coeffs;
    map.periods = support_periods(coeffs);
    map.params = assign_sector_params(coeffs);

    if (map.periods.empty()) {
        // pure doubling with unit radial drop
        map.blowup.width_base = 0;
        map.blowup.scale = 1;
        AngularPiece piece;
        piece.x_lo = 0;
        piece.x_hi = 1;
        piece.y_lo = 0;
        piece.y_hi = 2;
        piece.slope = 2;
        cache_piece(piece);
        map.pieces.push_back(std::move(piece));
        map.domain_start = 0;
        check_structure(map);
        return map;
    }

    map.blowup.base_points = build_orbit_set(map.periods, *map.periods.rbegin());
    const OrbitSet& lambda = map.blowup.base_points;
    const int M = lambda.total_points();
    const Rational w = min_gap(lambda) / 4;
    const Rational s = Rational(1) / (1 + M * w);
    const Rational W = w * s;  // blown interval width
    map.blowup.width_base = w;
    map.blowup.scale = s;

    struct BasePoint {
        Angle angle;
        int period;
        int pos;
    };
    std::vector<BasePoint> base;
    base.reserve(M);
    for (const auto& [k, orbit] : lambda.orbits)
        for (int pos = 0; pos < orbit.period; ++pos)
            base.push_back({orbit.points[pos], k, pos});
    std::sort(base.begin(), base.end(),
              [](const BasePoint& a, const BasePoint& b) { return a.angle < b.angle; });

    std::vector<Rational> alphas;
    alphas.reserve(M);
    for (const BasePoint& b : base) alphas.push_back(b.angle.value());

    map.blowup.intervals.reserve(M);
    for (int i = 0; i < M; ++i) {
        BlownInterval interval;
        interval.base = base[i].angle;
        interval.orbit_period = base[i].period;
        interval.orbit_pos = base[i].pos;
        interval.left = (alphas[i] + i * w) * s;
        interval.right = (alphas[i] + (i + 1) * w) * s;
        map.blowup.intervals.push_back(std::move(interval));
    }

    auto interval_index_of = [&](const Angle& a) {
        auto it = std::lower_bound(alphas.begin(), alphas.end(), a.value());
        if (it == alphas.end() || *it != a.value())
            throw std::logic_error("image angle is not a blown base point");
        return static_cast<int>(it - alphas.begin());
    };

    // image lift of the interval endpoints over the lifted base point u
    auto left_lift = [&](const Rational& u) { return (u + w * Rational(lifted_count(alphas, u))) * s; };
    auto right_lift = [&](const Rational& u) { return (u + w * Rational(lifted_count(alphas, u) + 1)) * s; };

    map.domain_start = map.blowup.intervals[0].left;
    for (int i = 0; i < M; ++i) {
        const BlownInterval& J = map.blowup.intervals[i];
        const auto& [m, sgn] = map.params.by_period.at(J.orbit_period);
        const int img = interval_index_of(doubling(J.base));
        const Rational u = 2 * J.base.value();  // lifted image base point

        AngularPiece sector;
        sector.is_sector = true;
        sector.orbit_period = J.orbit_period;
        sector.orbit_pos = J.orbit_pos;
        sector.subsectors = m;
        sector.sign = sgn;
        sector.x_lo = J.left;
        sector.x_hi = J.right;
        sector.y_lo = left_lift(u);
        sector.y_hi = right_lift(u);
        if (sector.y_hi - sector.y_lo != W)
            throw std::logic_error("sector image width mismatch");
        if (mod1(sector.y_lo) != map.blowup.intervals[img].left)
            throw std::logic_error("sector image does not start its target interval");
        map.total_subsectors += m;
        cache_piece(sector);
        map.pieces.push_back(std::move(sector));

        // gap up to the next interval (wrapping to intervals[0] after the last)
        const bool last = (i + 1 == M);
        AngularPiece gap;
        gap.x_lo = J.right;
        gap.x_hi = last ? map.blowup.intervals[0].left + 1 : map.blowup.intervals[i + 1].left;
        const Rational next_u = last ? Rational(2 * (map.blowup.intervals[0].base.value() + 1))
                                     : Rational(2 * map.blowup.intervals[i + 1].base.value());
        gap.y_lo = right_lift(u);
        gap.y_hi = left_lift(next_u);
        gap.slope = (gap.y_hi - gap.y_lo) / (gap.x_hi - gap.x_lo);
        cache_piece(gap);
        map.pieces.push_back(std::move(gap));
    }

    check_structure(map);
    return map;
}

SkewProductMap assemble_map(DoldCoefficients coeffs, SectorParams params,
                            BlowupSchedule blowup, std::vector<AngularPiece> pieces) {
    SkewProductMap map;
    map.coeffs = std::move(coeffs);
    map.periods = support_periods(map.coeffs);
    map.params = std::move(params);
    map.blowup = std::move(blowup);
    map.pieces = std::move(pieces);
    if (map.pieces.empty()) throw std::invalid_argument("map dump has no pieces");
    map.domain_start = map.pieces.front().x_lo;
    for (AngularPiece& piece : map.pieces) {
        if (piece.is_sector) map.total_subsectors += piece.subsectors;
        cache_piece(piece);
    }
    check_structure(map);
    return map;
}

namespace {

const AngularPiece& locate(const SkewProductMap& map, double& t) {
    t -= std::floor(t);
    if (t < map.pieces.front().lookup_lo) t += 1.0;
    auto it = std::upper_bound(map.pieces.begin(), map.pieces.end(), t,
                               [](double v, const AngularPiece& piece) { return v < piece.lookup_lo; });
    if (it != map.pieces.begin()) --it;
    return *it;
}

}  // namespace

PlanePoint evaluate(const SkewProductMap& map, PlanePoint p) {
    double t = p.theta;
    const AngularPiece& piece = locate(map, t);
    double y, g;
    if (!piece.is_sector) {
        y = piece.y_lo_d + piece.slope_d * (t - piece.x_lo_d);
        g = 1.0;
    } else {
        double u = (t - piece.x_lo_d) / piece.width_d * piece.subsectors;
        int j = std::clamp(static_cast<int>(std::floor(u)), 0, piece.subsectors - 1);
        double local = std::clamp(2.0 * (u - j) - 1.0, -1.0, 1.0);
        double img = sector_angular(piece.sign, local);
        y = piece.y_lo_d + (j + (img + 1.0) / 2.0) * (piece.width_d / piece.subsectors);
        g = 2.0 * local * local - 1.0;
    }
    return {y - std::floor(y), p.r - g};
}

PlanePoint iterate(const SkewProductMap& map, PlanePoint p, int n) {
    if (n < 1) throw std::invalid_argument("iterate requires n >= 1");
    for (int i = 0; i < n; ++i) p = evaluate(map, p);
    return p;
}

namespace {

void require_in_domain(const AngularPiece& piece, const Rational& x) {
    if (x < piece.x_lo || x > piece.x_hi)
        throw std::invalid_argument("point outside piece domain");
}

}  // namespace

Rational piece_image_exact(const AngularPiece& piece, const Rational& x) {
    require_in_domain(piece, x);
    if (!piece.is_sector) return piece.y_lo + piece.slope * (x - piece.x_lo);
    const Rational width = piece.x_hi - piece.x_lo;
    Rational u = (x - piece.x_lo) * piece.subsectors / width;
    BigInt j = floor_int(u);
    if (j >= piece.subsectors) j = piece.subsectors - 1;
    Rational local = 2 * (u - Rational(j)) - 1;
    Rational img = sector_angular_exact(piece.sign, local);
    return piece.y_lo + (Rational(j) + (img + 1) / 2) * (width / piece.subsectors);
}

Rational piece_radial_exact(const AngularPiece& piece, const Rational& x) {
    require_in_domain(piece, x);
    if (!piece.is_sector) return 1;
    const Rational width = piece.x_hi - piece.x_lo;
    Rational u = (x - piece.x_lo) * piece.subsectors / width;
    BigInt j = floor_int(u);
    if (j >= piece.subsectors) j = piece.subsectors - 1;
    Rational local = 2 * (u - Rational(j)) - 1;
    return sector_radial_exact(local);
}

std::map<int, std::vector<int>> sectors_fixed_by(const SkewProductMap& map, int n) {
    if (n < 1) throw std::invalid_argument("sectors_fixed_by requires n >= 1");
    std::map<int, std::vector<int>> fixed;
    for (size_t i = 0; i < map.pieces.size(); ++i) {
        const AngularPiece& piece = map.pieces[i];
        if (piece.is_sector && n % piece.orbit_period == 0)
            fixed[piece.orbit_period].push_back(static_cast<int>(i));
    }
    return fixed;
}

EscapeReport escape_scan(const SkewProductMap& map, int samples, int steps,
                         double band, std::uint64_t seed) {
    if (samples < 1 || steps < 1)
        throw std::invalid_argument("escape_scan requires samples >= 1 and steps >= 1");
    EscapeReport report;
    report.samples = samples;
    report.steps = steps;
    report.band = band;

    std::mt19937_64 rng(seed);
    const double offset = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    constexpr double kGolden = 0.6180339887498949;

    for (int i = 0; i < samples; ++i) {
        double theta0 = offset + i * kGolden;
        theta0 -= std::floor(theta0);
        PlanePoint p{theta0, 0.0};
        bool escaped = false;
        for (int step = 1; step <= steps; ++step) {
            p = evaluate(map, p);
            if (std::abs(p.r) > band) escaped = true;
            double dt = std::abs(p.theta - theta0);
            dt = std::min(dt, 1.0 - dt);
            if (dt < 1e-9 && std::abs(p.r) < 1e-9)
                report.suspects.push_back({theta0, step});
        }
        if (escaped) ++report.escaped;
    }
    report.escaped_fraction = static_cast<double>(report.escaped) / samples;
    return report;
}

}  // namespace doldmap
