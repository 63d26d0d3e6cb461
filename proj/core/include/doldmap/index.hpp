#ifndef DOLDMAP_INDEX_HPP
#define DOLDMAP_INDEX_HPP

#include "doldmap/dold.hpp"
#include "doldmap/map.hpp"

#include <stdexcept>
#include <vector>

namespace doldmap {

struct Vec2 {
    double x = 0;
    double y = 0;
};

// (theta, r) -> (rho cos 2 pi theta, rho sin 2 pi theta), rho = exp(r) with
// r clamped to [-r_clamp, r_clamp].
Vec2 embed(PlanePoint p, double r_clamp = 50.0);

struct WindingOptions {
    int initial_samples = 0;   // 0 = automatic: 64 * (1 + total sub-sectors)
    int max_depth = 20;        // bisection rounds
    double curve_r = 0.0;      // log-radius of the sampling circle
    double r_clamp = 50.0;
    bool record_curve = false;
};

struct CurveSample {
    double theta = 0;
    Vec2 v;
};

struct WindingResult {
    int winding = 0;
    int samples = 0;
    int depth_used = 0;
    double residual = 0;  // |sum of increments / 2 pi - winding|
    std::vector<CurveSample> curve;  // populated when record_curve
};

class winding_refinement_error : public std::runtime_error {
public:
    winding_refinement_error(int n, double theta_lo, double theta_hi, double increment);
    int n;
    double theta_lo, theta_hi, increment;
};

// Winding number of v(theta) = embed(theta, r) - embed(f^n(theta, r)) as
// theta runs once around the circle r = curve_r. Samples uniformly, then
// bisects every adjacent pair whose turning increment reaches pi/2; the
// final sum of increments must land on an integer multiple of 2 pi within
// 1e-6 of a turn.
WindingResult winding_index(const SkewProductMap& map, int n,
                            const WindingOptions& opts = {});

// 1 + sum over sectors fixed by f^n of (sign * m).
std::int64_t combinatorial_index(const SkewProductMap& map, int n);

struct IndexRow {
    int n = 0;
    std::int64_t numeric = 0;
    std::int64_t combinatorial = 0;
    std::int64_t target = 0;
    bool agree = false;
    int samples = 0;
};

struct IndexReport {
    DoldCoefficients coeffs;
    int max_n = 0;
    std::vector<IndexRow> rows;
    bool all_agree = true;
    std::vector<std::vector<CurveSample>> curves;  // per n, when recorded
};

// Builds the map once and compares, for every n <= N: the numeric winding
// index, the combinatorial sector count, and the divisor sum
// sum_{k|n} k a_k.
IndexReport verify_indices(const DoldCoefficients& coeffs, int N,
                           const WindingOptions& opts = {});

}  // namespace doldmap

#endif
