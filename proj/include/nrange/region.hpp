// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_REGION_HPP
#define NRANGE_REGION_HPP

#include <complex>
#include <functional>
#include <vector>

#include "nrange/matrix.hpp"

namespace nrange {

/// Closed half plane {mu : Re(e^{i direction} mu) <= support}, with the
/// direction normalized into [0, 2pi).
struct HalfPlane {
    double direction = 0.0;
    double support = 0.0;
};

HalfPlane make_half_plane(double direction, double support);

/// Convex region described by support samples on a uniform direction grid,
/// i.e. the intersection of the half planes {Re(e^{i theta_i} mu) <= s_i}.
/// `vertices` is the counterclockwise outer polygon of that intersection;
/// `empty` is decided by the antipodal width test
/// s(theta) + s(theta + pi) < -1e-12.
struct ConvexRegion {
    std::vector<double> thetas;
    std::vector<double> supports;
    std::vector<Complex> vertices;
    bool empty = true;
};

/// Uniform direction grid theta_i = 2 pi i / n. Odd sizes are rounded up so
/// every sample has an exact antipodal partner.
std::vector<double> direction_grid(int grid_size);

/// Builds the region for a sampled support table (thetas must be the
/// direction_grid of their size).
ConvexRegion region_from_supports(std::vector<double> thetas, std::vector<double> supports);

/// Samples a support function over a uniform grid and builds the region.
ConvexRegion region_from_support_fn(const std::function<double(double)>& support, int grid_size);

/// Disk of radius r centered at the origin (negative r yields an empty
/// region).
ConvexRegion disk_region(double radius, int grid_size);

/// A region with no samples at all; used when no direction admits a finite
/// support.
ConvexRegion vacuous_region();

/// Support-sample Hausdorff distance max_i |s1_i - s2_i| (exact for convex
/// bodies on matching grids). Empty-vs-nonempty is +infinity; empty-empty
/// is 0.
double hausdorff(const ConvexRegion& a, const ConvexRegion& b);

enum class Membership { Inside, Boundary, Outside };

/// Classifies a point against the sampled half planes: the worst margin
/// max_i (Re(e^{i theta_i} mu) - s_i) is compared against +-tol.
Membership classify_point(const ConvexRegion& region, Complex mu, double tol);

/// Worst constraint margin of mu (<= 0 means feasible for all samples).
double point_margin(const ConvexRegion& region, Complex mu);

} // namespace nrange

#endif // NRANGE_REGION_HPP
