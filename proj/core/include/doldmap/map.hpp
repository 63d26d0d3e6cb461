#ifndef DOLDMAP_MAP_HPP
#define DOLDMAP_MAP_HPP

#include "doldmap/dold.hpp"
#include "doldmap/orbit.hpp"
#include "doldmap/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace doldmap {

enum class Sign { minus, plus };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }

// Per orbit period: number m of sub-sectors and the twist sign.
struct SectorParams {
    std::map<int, std::pair<int, Sign>> by_period;
};

// m and sign realizing coefficient a_k on the period-k sectors:
//   k = 1: (a_1 - 1, +) if a_1 >= 2; (1 - a_1, -) if a_1 <= 0; none if a_1 = 1
//   k >= 2: (a_k, +) if a_k > 0; (-a_k, -) if a_k < 0; none if a_k = 0
SectorParams assign_sector_params(const DoldCoefficients& coeffs);

// Local sub-sector model on [-1, 1]: x -> x * c(x) with
//   c_minus(x) = 1 - x^2 (1 - x^2) / 2   (range in [7/8, 1], fixes -1, 0, 1)
//   c_plus(x)  = 1 + x^2 (1 - x^2) / 2   (range in [1, 9/8], fixes -1, 0, 1)
Rational sector_angular_exact(Sign sign, const Rational& x);
double sector_angular(Sign sign, double x);

// Radial displacement on a sub-sector: g = 2 x^2 - 1 (local coordinate).
Rational sector_radial_exact(const Rational& x);

// One blown interval replacing a base angle.
struct BlownInterval {
    Angle base;
    int orbit_period = 0;
    int orbit_pos = 0;       // index in the orbit's dynamical order
    Rational left, right;    // on the blown circle, width = width_base * scale
};

struct BlowupSchedule {
    OrbitSet base_points;
    Rational width_base;     // interval width in base-circle units (min_gap / 4)
    Rational scale;          // 1 / (1 + M * width_base), renormalizes to circumference 1
    std::vector<BlownInterval> intervals;  // circular order of base angles
};

// One monotone piece of the angular lift. Domains partition
// [domain_start, domain_start + 1); y values continue the lift, total
// increase 2 per turn.
struct AngularPiece {
    Rational x_lo, x_hi;
    Rational y_lo, y_hi;
    bool is_sector = false;
    int orbit_period = 0;    // sector only
    int orbit_pos = 0;       // sector only
    int subsectors = 0;      // sector only: m
    Sign sign = Sign::minus; // sector only
    Rational slope;          // gap only

    // cached doubles; domain bounds rounded outward for lookup
    double lookup_lo = 0, lookup_hi = 0;
    double x_lo_d = 0, width_d = 0, y_lo_d = 0, slope_d = 0;
};

struct PlanePoint {
    double theta = 0;  // blown angle mod 1
    double r = 0;      // log-radius, origin at r = -infinity
};

struct SkewProductMap {
    DoldCoefficients coeffs;
    PeriodSet periods;
    SectorParams params;
    BlowupSchedule blowup;
    std::vector<AngularPiece> pieces;  // ordered by x_lo
    Rational domain_start;             // x_lo of the first piece
    int total_subsectors = 0;

    bool operator==(const SkewProductMap& other) const;
};

// Constructs the skew product realizing `coeffs`: blow up one Thue-Morse
// prefix orbit per support period, sector pieces on the blown intervals,
// affine lift pieces on the gaps, radial rule g = 1 off sectors. An empty
// support-period set yields the sector-free pure-doubling map.
SkewProductMap build_map(const DoldCoefficients& coeffs);

// Rebuilds a map from previously dumped parts, recomputing caches and
// re-running the construction consistency checks.
SkewProductMap assemble_map(DoldCoefficients coeffs, SectorParams params,
                            BlowupSchedule blowup, std::vector<AngularPiece> pieces);

PlanePoint evaluate(const SkewProductMap& map, PlanePoint p);
PlanePoint iterate(const SkewProductMap& map, PlanePoint p, int n);

// Exact angular-lift image and radial displacement of a piece at a rational
// point of its domain; rejects x outside [x_lo, x_hi].
Rational piece_image_exact(const AngularPiece& piece, const Rational& x);
Rational piece_radial_exact(const AngularPiece& piece, const Rational& x);

// Indices of sector pieces whose orbit period divides n, keyed by period.
std::map<int, std::vector<int>> sectors_fixed_by(const SkewProductMap& map, int n);

struct EscapeReport {
    int samples = 0;
    int steps = 0;
    double band = 0;
    int escaped = 0;           // |r| exceeded the band at some step
    double escaped_fraction = 0;
    struct Suspect {
        double theta0 = 0;
        int step = 0;
    };
    std::vector<Suspect> suspects;  // returned within 1e-9 of start, both coordinates
};

// Iterates `samples` low-discrepancy starts on r = 0 for `steps` steps.
EscapeReport escape_scan(const SkewProductMap& map, int samples, int steps,
                         double band, std::uint64_t seed = 0);

}  // namespace doldmap

#endif
