#include "doldmap/index.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace doldmap {

Vec2 embed(PlanePoint p, double r_clamp) {
    const double r = std::clamp(p.r, -r_clamp, r_clamp);
    const double rho = std::exp(r);
    const double phi = 2.0 * std::numbers::pi * p.theta;
    return {rho * std::cos(phi), rho * std::sin(phi)};
}

winding_refinement_error::winding_refinement_error(int n_, double lo, double hi, double inc)
    : std::runtime_error("winding refinement failed for n=" + std::to_string(n_) +
                         " on theta in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "], increment " + std::to_string(inc)),
      n(n_),
      theta_lo(lo),
      theta_hi(hi),
      increment(inc) {}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double turning(const Vec2& a, const Vec2& b) {
    return std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y);
}

struct Node {
    double theta;
    Vec2 v;
};

}  // namespace

WindingResult winding_index(const SkewProductMap& map, int n, const WindingOptions& opts) {
    if (n < 1) throw std::invalid_argument("winding_index requires n >= 1");

    auto displacement = [&](double theta) -> Vec2 {
        PlanePoint start{theta, opts.curve_r};
        PlanePoint image = iterate(map, start, n);
        Vec2 a = embed(start, opts.r_clamp);
        Vec2 b = embed(image, opts.r_clamp);
        Vec2 v{a.x - b.x, a.y - b.y};
        if (std::hypot(v.x, v.y) < 1e-12)
            throw winding_refinement_error(n, theta, theta, 0.0);  // fixed point on curve
        return v;
    };

    const int initial = opts.initial_samples > 0 ? opts.initial_samples
                                                 : 64 * (1 + map.total_subsectors);
    std::vector<Node> nodes;
    nodes.reserve(initial);
    for (int i = 0; i < initial; ++i) {
        double theta = static_cast<double>(i) / initial;
        nodes.push_back({theta, displacement(theta)});
    }

    int depth = 0;
    for (;; ++depth) {
        std::vector<double> midpoints;
        double worst_lo = 0, worst_hi = 0, worst_inc = 0;
        for (size_t i = 0; i < nodes.size(); ++i) {
            const Node& a = nodes[i];
            const Node& b = nodes[(i + 1) % nodes.size()];
            double inc = turning(a.v, b.v);
            if (std::abs(inc) < kHalfPi) continue;
            double hi = (i + 1 == nodes.size()) ? b.theta + 1.0 : b.theta;
            double mid = (a.theta + hi) / 2.0;
            mid -= std::floor(mid);
            if (mid != a.theta && mid != b.theta) midpoints.push_back(mid);
            if (std::abs(inc) > std::abs(worst_inc)) {
                worst_lo = a.theta;
                worst_hi = hi;
                worst_inc = inc;
            }
        }
        if (midpoints.empty() && worst_inc == 0) break;
        if (depth >= opts.max_depth || midpoints.empty())
            throw winding_refinement_error(n, worst_lo, worst_hi, worst_inc);
        for (double mid : midpoints) nodes.push_back({mid, displacement(mid)});
        std::sort(nodes.begin(), nodes.end(),
                  [](const Node& a, const Node& b) { return a.theta < b.theta; });
    }

    double total = 0;
    for (size_t i = 0; i < nodes.size(); ++i)
        total += turning(nodes[i].v, nodes[(i + 1) % nodes.size()].v);

    WindingResult result;
    const double raw = total / kTwoPi;
    result.winding = static_cast<int>(std::lround(raw));
    result.residual = std::abs(raw - result.winding);
    result.samples = static_cast<int>(nodes.size());
    result.depth_used = depth;
    if (result.residual > 1e-6)
        throw winding_refinement_error(n, 0.0, 1.0, result.residual * kTwoPi);
    if (opts.record_curve) {
        result.curve.reserve(nodes.size());
        for (const Node& node : nodes) result.curve.push_back({node.theta, node.v});
    }
    return result;
}

std::int64_t combinatorial_index(const SkewProductMap& map, int n) {
    std::int64_t index = 1;
    for (const auto& [k, piece_ids] : sectors_fixed_by(map, n)) {
        for (int id : piece_ids) {
            const AngularPiece& piece = map.pieces[id];
            index += static_cast<std::int64_t>(sign_value(piece.sign)) * piece.subsectors;
        }
    }
    return index;
}

IndexReport verify_indices(const DoldCoefficients& coeffs, int N, const WindingOptions& opts) {
    if (N < 1) throw std::invalid_argument("verify_indices requires N >= 1");
    SkewProductMap map = build_map(coeffs);
    IndexSequence target = expand(coeffs, N);

    IndexReport report;
    report.coeffs = coeffs;
    report.max_n = N;
    for (int n = 1; n <= N; ++n) {
        WindingResult wr = winding_index(map, n, opts);
        IndexRow row;
        row.n = n;
        row.numeric = wr.winding;
        row.combinatorial = combinatorial_index(map, n);
        row.target = target[n - 1];
        row.agree = row.numeric == row.combinatorial && row.combinatorial == row.target;
        row.samples = wr.samples;
        report.all_agree &= row.agree;
        report.rows.push_back(row);
        if (opts.record_curve) report.curves.push_back(std::move(wr.curve));
    }
    return report;
}

}  // namespace doldmap
