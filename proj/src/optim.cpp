// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace nrange {

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& options) {
    const int n = static_cast<int>(x0.size());
    NelderMeadResult result;
    result.x = x0;

    if (n == 0) {
        result.fval = f(x0);
        result.evals = 1;
        result.reached_target = result.fval <= options.target;
        return result;
    }

    // Gao-Han adaptive coefficients; plain NM stalls in higher dimensions.
    const double alpha = 1.0;
    const double beta = 1.0 + 2.0 / n;
    const double gamma = 0.75 - 0.5 / n;
    const double delta = 1.0 - 1.0 / n;

    std::vector<Eigen::VectorXd> simplex(n + 1, x0);
    std::vector<double> fvals(n + 1);
    int evals = 0;

    for (int i = 1; i <= n; ++i) simplex[i](i - 1) += options.initial_step;
    for (int i = 0; i <= n; ++i) {
        fvals[i] = f(simplex[i]);
        ++evals;
    }

    std::vector<int> order(n + 1);
    auto sort_simplex = [&]() {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return fvals[a] < fvals[b]; });
    };

    while (evals < options.max_evals) {
        sort_simplex();
        const int best = order[0], worst = order[n], second_worst = order[n - 1];

        if (fvals[best] <= options.target) {
            result.reached_target = true;
            break;
        }
        if (fvals[worst] - fvals[best] < options.f_tol) break;

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i <= n; ++i)
            if (i != worst) centroid += simplex[i];
        centroid /= n;

        const Eigen::VectorXd reflected = centroid + alpha * (centroid - simplex[worst]);
        const double f_reflected = f(reflected);
        ++evals;

        if (f_reflected < fvals[best]) {
            const Eigen::VectorXd expanded = centroid + beta * (reflected - centroid);
            const double f_expanded = f(expanded);
            ++evals;
            if (f_expanded < f_reflected) {
                simplex[worst] = expanded;
                fvals[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                fvals[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < fvals[second_worst]) {
            simplex[worst] = reflected;
            fvals[worst] = f_reflected;
            continue;
        }

        const bool outside = f_reflected < fvals[worst];
        const Eigen::VectorXd contracted =
            outside ? Eigen::VectorXd(centroid + gamma * (reflected - centroid))
                    : Eigen::VectorXd(centroid - gamma * (centroid - simplex[worst]));
        const double f_contracted = f(contracted);
        ++evals;
        if (f_contracted < std::min(f_reflected, fvals[worst])) {
            simplex[worst] = contracted;
            fvals[worst] = f_contracted;
            continue;
        }

        // Shrink toward the best vertex.
        for (int i = 0; i <= n; ++i) {
            if (i == best) continue;
            simplex[i] = simplex[best] + delta * (simplex[i] - simplex[best]);
            fvals[i] = f(simplex[i]);
            ++evals;
        }
    }

    sort_simplex();
    result.x = simplex[order[0]];
    result.fval = fvals[order[0]];
    result.evals = evals;
    result.reached_target = result.reached_target || result.fval <= options.target;
    return result;
}

NelderMeadResult nelder_mead_polished(const std::function<double(const Eigen::VectorXd&)>& f,
                                      const Eigen::VectorXd& x0,
                                      const NelderMeadOptions& options, int polish_rounds) {
    NelderMeadResult best = nelder_mead(f, x0, options);
    NelderMeadOptions current = options;
    for (int round = 0; round < polish_rounds && !best.reached_target; ++round) {
        current.initial_step *= 0.05;
        NelderMeadResult next = nelder_mead(f, best.x, current);
        next.evals += best.evals;
        if (next.fval < best.fval) {
            best = next;
        } else {
            best.evals = next.evals;
        }
    }
    return best;
}

} // namespace nrange
