// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_OPTIM_HPP
#define NRANGE_OPTIM_HPP

#include <functional>
#include <limits>

#include <Eigen/Dense>

namespace nrange {

struct NelderMeadOptions {
    int max_evals = 20000;
    double initial_step = 0.3;
    // Stop when the simplex function spread drops below f_tol or the best
    // value reaches target.
    double f_tol = 1e-13;
    double target = -std::numeric_limits<double>::infinity();
};

struct NelderMeadResult {
    Eigen::VectorXd x;
    double fval = std::numeric_limits<double>::infinity();
    int evals = 0;
    bool reached_target = false;
};

/// Downhill simplex with dimension-adaptive expansion/contraction
/// coefficients. Deterministic for a fixed starting point.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& options = {});

/// nelder_mead restarted from its own best point with shrinking initial
/// steps; cheap way to squeeze out the last few digits.
NelderMeadResult nelder_mead_polished(const std::function<double(const Eigen::VectorXd&)>& f,
                                      const Eigen::VectorXd& x0,
                                      const NelderMeadOptions& options = {}, int polish_rounds = 2);

} // namespace nrange

#endif // NRANGE_OPTIM_HPP
