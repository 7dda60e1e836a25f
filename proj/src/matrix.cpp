// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/matrix.hpp"

#include <cmath>

#include "nrange/errors.hpp"

namespace nrange {

bool all_finite(const ComplexMatrix& M) {
    for (Eigen::Index j = 0; j < M.cols(); ++j)
        for (Eigen::Index i = 0; i < M.rows(); ++i) {
            const Complex& z = M(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    return true;
}

void require_finite(const ComplexMatrix& M, const char* what) {
    if (!all_finite(M)) throw Error(ErrorCode::NonFinite, std::string(what) + " has NaN/Inf entries");
}

double operator_norm(const ComplexMatrix& M) {
    if (M.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(M);
    return svd.singularValues()(0);
}

ComplexMatrix shift_matrix(int n) {
    ComplexMatrix S = ComplexMatrix::Zero(n, n);
    for (int j = 0; j + 1 < n; ++j) S(j + 1, j) = 1.0;
    return S;
}

} // namespace nrange
