// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nrange/errors.hpp"

namespace nrange {

namespace {

constexpr double kEmptyWidthThreshold = -1e-12;
// Slack added to every clipping constraint so width-zero regions (points,
// segments) survive as tiny polygons. Stays under the 1e-9 vertex
// feasibility bound.
constexpr double kClipSlack = 1e-10;
constexpr double kVertexDedupe = 1e-12;

double normalize_angle(double theta) {
    const double two_pi = 2.0 * M_PI;
    double t = std::fmod(theta, two_pi);
    if (t < 0) t += two_pi;
    return t;
}

struct Point {
    double x, y;
};

// Clips a convex CCW polygon by {p : p.x*nx + p.y*ny <= c}.
std::vector<Point> clip_half_plane(const std::vector<Point>& poly, double nx, double ny, double c) {
    std::vector<Point> out;
    const std::size_t n = poly.size();
    if (n == 0) return out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        const double da = a.x * nx + a.y * ny - c;
        const double db = b.x * nx + b.y * ny - c;
        if (da <= 0) out.push_back(a);
        if ((da < 0 && db > 0) || (da > 0 && db < 0)) {
            const double t = da / (da - db);
            out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return out;
}

std::vector<Point> clip_all(const std::vector<double>& thetas, const std::vector<double>& supports,
                            double slack) {
    double r = 1.0;
    for (double s : supports) r = std::max(r, std::abs(s));
    r = 2.0 * r + 1.0;
    std::vector<Point> poly = {{-r, -r}, {r, -r}, {r, r}, {-r, r}}; // CCW
    for (std::size_t i = 0; i < thetas.size() && !poly.empty(); ++i) {
        // Re(e^{i theta} mu) = x cos(theta) - y sin(theta)
        poly = clip_half_plane(poly, std::cos(thetas[i]), -std::sin(thetas[i]),
                               supports[i] + slack);
    }
    return poly;
}

std::vector<Complex> dedupe(const std::vector<Point>& poly) {
    std::vector<Complex> out;
    out.reserve(poly.size());
    for (const Point& p : poly) {
        const Complex z(p.x, p.y);
        if (!out.empty() && std::abs(z - out.back()) <= kVertexDedupe) continue;
        out.push_back(z);
    }
    while (out.size() > 1 && std::abs(out.front() - out.back()) <= kVertexDedupe) out.pop_back();
    return out;
}

} // namespace

HalfPlane make_half_plane(double direction, double support) {
    return HalfPlane{normalize_angle(direction), support};
}

std::vector<double> direction_grid(int grid_size) {
    if (grid_size < 2) throw Error(ErrorCode::InvalidArgument, "grid size must be >= 2");
    if (grid_size % 2 != 0) ++grid_size; // antipodal pairs must exist exactly
    std::vector<double> thetas(grid_size);
    for (int i = 0; i < grid_size; ++i) thetas[i] = 2.0 * M_PI * i / grid_size;
    return thetas;
}

ConvexRegion region_from_supports(std::vector<double> thetas, std::vector<double> supports) {
    if (thetas.size() != supports.size())
        throw Error(ErrorCode::InvalidArgument, "theta/support sample count mismatch");
    if (thetas.empty()) return vacuous_region();
    for (double s : supports)
        if (!std::isfinite(s)) throw Error(ErrorCode::NonFinite, "non-finite support sample");

    ConvexRegion region;
    region.thetas = std::move(thetas);
    region.supports = std::move(supports);

    const std::size_t g = region.thetas.size();
    const std::size_t half = g / 2;
    region.empty = false;
    for (std::size_t i = 0; i < half; ++i) {
        if (region.supports[i] + region.supports[i + half] < kEmptyWidthThreshold) {
            region.empty = true;
            break;
        }
    }
    if (region.empty) return region;

    std::vector<Point> poly = clip_all(region.thetas, region.supports, kClipSlack);
    if (poly.empty()) poly = clip_all(region.thetas, region.supports, 100 * kClipSlack);
    if (poly.empty()) {
        // All sampled antipodal widths are above the threshold yet the full
        // intersection is infeasible (width dips between grid directions).
        region.empty = true;
        return region;
    }
    region.vertices = dedupe(poly);
    return region;
}

ConvexRegion region_from_support_fn(const std::function<double(double)>& support, int grid_size) {
    std::vector<double> thetas = direction_grid(grid_size);
    std::vector<double> supports(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) supports[i] = support(thetas[i]);
    return region_from_supports(std::move(thetas), std::move(supports));
}

ConvexRegion disk_region(double radius, int grid_size) {
    return region_from_support_fn([radius](double) { return radius; }, grid_size);
}

ConvexRegion vacuous_region() {
    ConvexRegion region;
    region.empty = true;
    return region;
}

double hausdorff(const ConvexRegion& a, const ConvexRegion& b) {
    if (a.empty && b.empty) return 0.0;
    if (a.empty != b.empty) return std::numeric_limits<double>::infinity();
    if (a.supports.size() != b.supports.size())
        throw Error(ErrorCode::InvalidArgument, "hausdorff needs matching direction grids");
    double d = 0.0;
    for (std::size_t i = 0; i < a.supports.size(); ++i)
        d = std::max(d, std::abs(a.supports[i] - b.supports[i]));
    return d;
}

double point_margin(const ConvexRegion& region, Complex mu) {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < region.thetas.size(); ++i) {
        const double proj =
            mu.real() * std::cos(region.thetas[i]) - mu.imag() * std::sin(region.thetas[i]);
        worst = std::max(worst, proj - region.supports[i]);
    }
    return worst;
}

Membership classify_point(const ConvexRegion& region, Complex mu, double tol) {
    if (region.empty || region.thetas.empty()) return Membership::Outside;
    const double margin = point_margin(region, mu);
    if (margin > tol) return Membership::Outside;
    if (margin >= -tol) return Membership::Boundary;
    return Membership::Inside;
}

} // namespace nrange
