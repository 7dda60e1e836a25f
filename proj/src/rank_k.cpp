// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/rank_k.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nrange/errors.hpp"
#include "nrange/linalg.hpp"

namespace nrange {

namespace {

void require_k_in_range(int k, Eigen::Index n) {
    if (k < 1 || k > n)
        throw Error(ErrorCode::KOutOfRange,
                    "k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
}

// k-th largest projection Re(e^{i theta} atom) counted with multiplicity;
// an infinite atom saturates the count immediately. Returns nothing when
// the total multiplicity never reaches k.
std::optional<double> spectral_support_at(const SpectralModel& model, long long k, double theta) {
    std::vector<std::pair<double, const SpectralAtom*>> projected;
    projected.reserve(model.atoms.size());
    const double c = std::cos(theta), s = std::sin(theta);
    for (const SpectralAtom& atom : model.atoms)
        projected.push_back({atom.point.real() * c - atom.point.imag() * s, &atom});
    std::sort(projected.begin(), projected.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    long long count = 0;
    for (const auto& [value, atom] : projected) {
        if (atom->infinite) return value;
        count += atom->multiplicity;
        if (count >= k) return value;
    }
    return std::nullopt;
}

ConvexRegion spectral_region_at(const SpectralModel& model, long long k, int grid_size) {
    std::vector<double> thetas = direction_grid(grid_size);
    std::vector<double> supports(thetas.size());
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const auto s = spectral_support_at(model, k, thetas[i]);
        if (!s) return vacuous_region();
        supports[i] = *s;
    }
    return region_from_supports(std::move(thetas), std::move(supports));
}

} // namespace

void SpectralModel::normalize(double merge_tol) {
    std::vector<SpectralAtom> merged;
    for (const SpectralAtom& atom : atoms) {
        if (!atom.infinite && atom.multiplicity < 1)
            throw Error(ErrorCode::InvalidArgument, "atom multiplicity must be positive");
        bool absorbed = false;
        for (SpectralAtom& existing : merged) {
            if (std::abs(existing.point - atom.point) <= merge_tol) {
                if (atom.infinite || existing.infinite) {
                    existing.infinite = true;
                } else {
                    existing.multiplicity += atom.multiplicity;
                }
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(atom);
    }
    atoms = std::move(merged);
}

long long SpectralModel::total_finite_multiplicity() const {
    long long total = 0;
    for (const SpectralAtom& atom : atoms)
        if (!atom.infinite) total += atom.multiplicity;
    return total;
}

bool SpectralModel::has_infinite_atom() const {
    for (const SpectralAtom& atom : atoms)
        if (atom.infinite) return true;
    return false;
}

double support_value(const ComplexMatrix& A, int k, double theta) {
    require_k_in_range(k, A.rows());
    return lambda_k(rotated_real_part(A, theta), k);
}

std::vector<double> omega_supports(const ComplexMatrix& A, int k, int grid_size, Exec exec) {
    require_k_in_range(k, A.rows());
    const std::vector<double> thetas = direction_grid(grid_size);
    std::vector<double> supports(thetas.size());
    for_index(
        thetas.size(),
        [&](std::size_t i) { supports[i] = support_value(A, k, thetas[i]); }, exec);
    return supports;
}

ConvexRegion omega_region(const ComplexMatrix& A, int k, int grid_size, Exec exec) {
    if (grid_size < 16) throw Error(ErrorCode::InvalidArgument, "grid size must be >= 16");
    std::vector<double> thetas = direction_grid(grid_size);
    std::vector<double> supports = omega_supports(A, k, grid_size, exec);
    return region_from_supports(std::move(thetas), std::move(supports));
}

Membership membership(const ComplexMatrix& A, int k, Complex mu, double tol, int grid_size) {
    const std::vector<double> thetas = direction_grid(grid_size);
    double worst = -std::numeric_limits<double>::infinity();
    for (double theta : thetas) {
        const double proj = mu.real() * std::cos(theta) - mu.imag() * std::sin(theta);
        worst = std::max(worst, proj - support_value(A, k, theta));
    }
    if (worst > tol) return Membership::Outside;
    if (worst >= -tol) return Membership::Boundary;
    return Membership::Inside;
}

ConvexRegion normal_region(const std::vector<Complex>& eigs, int k, int grid_size) {
    const int n = static_cast<int>(eigs.size());
    require_k_in_range(k, n);
    const int subset_size = n - k + 1;

    double subset_count = 1.0;
    for (int i = 0; i < subset_size; ++i) subset_count *= double(n - i) / double(i + 1);
    if (n > 22 || subset_count > 1e6)
        throw Error(ErrorCode::TooLarge, "subset enumeration budget exceeded");

    const std::vector<double> thetas = direction_grid(grid_size);
    std::vector<std::vector<double>> projections(thetas.size(), std::vector<double>(n));
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const double c = std::cos(thetas[i]), s = std::sin(thetas[i]);
        for (int j = 0; j < n; ++j)
            projections[i][j] = eigs[j].real() * c - eigs[j].imag() * s;
    }

    std::vector<double> supports(thetas.size(), std::numeric_limits<double>::infinity());

    // Per direction: min over subsets of the subset hull's support (the
    // hull support is the max over its points).
    for_index(thetas.size(), [&](std::size_t i) {
        std::vector<int> idx(subset_size);
        for (int j = 0; j < subset_size; ++j) idx[j] = j;
        double best = std::numeric_limits<double>::infinity();
        while (true) {
            double hull_support = -std::numeric_limits<double>::infinity();
            for (int j : idx) hull_support = std::max(hull_support, projections[i][j]);
            best = std::min(best, hull_support);
            int pos = subset_size - 1;
            while (pos >= 0 && idx[pos] == n - subset_size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
        }
        supports[i] = best;
    });
    return region_from_supports(thetas, std::move(supports));
}

ConvexRegion shift_oracle(int n, int k, int grid_size) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "shift dimension must be >= 2");
    require_k_in_range(k, n);
    // cos(k pi / (n+1)) is negative exactly when k > floor((n+1)/2), and a
    // negative-radius disk trips the antipodal emptiness test.
    return disk_region(std::cos(double(k) * M_PI / (n + 1)), grid_size);
}

ConvexRegion spectral_V_k(const SpectralModel& model, RankIndex k, int grid_size) {
    if (model.atoms.empty()) throw Error(ErrorCode::EmptyModel, "spectral model has no atoms");
    SpectralModel m = model;
    m.normalize();
    if (k.infinite) {
        // The finite-k regions stabilize once k exceeds the total finite
        // multiplicity: only infinite atoms can still carry the support.
        return spectral_region_at(m, m.total_finite_multiplicity() + 1, grid_size);
    }
    if (k.k < 1) throw Error(ErrorCode::KOutOfRange, "k must be positive");
    return spectral_region_at(m, k.k, grid_size);
}

ConvexRegion omega_inf(const ComplexMatrix& A, int grid_size) {
    return omega_region(A, static_cast<int>(A.rows()), grid_size);
}

ConvexRegion omega_inf(const SpectralModel& model, int grid_size) {
    if (model.atoms.empty()) throw Error(ErrorCode::EmptyModel, "spectral model has no atoms");
    SpectralModel m = model;
    m.normalize();
    const long long k_max = m.total_finite_multiplicity() + 1;
    std::vector<double> thetas = direction_grid(grid_size);
    std::vector<double> supports(thetas.size(), std::numeric_limits<double>::infinity());
    for (long long k = 1; k <= k_max; ++k) {
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            const auto s = spectral_support_at(m, k, thetas[i]);
            if (!s) return vacuous_region();
            supports[i] = std::min(supports[i], *s);
        }
    }
    return region_from_supports(std::move(thetas), std::move(supports));
}

} // namespace nrange
