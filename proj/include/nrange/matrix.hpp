// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_MATRIX_HPP
#define NRANGE_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>

namespace nrange {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// True iff every entry is finite (no NaN/Inf in either component).
bool all_finite(const ComplexMatrix& M);

/// Throws Error{NonFinite} when a non-finite entry is present.
void require_finite(const ComplexMatrix& M, const char* what);

/// Largest singular value.
double operator_norm(const ComplexMatrix& M);

/// n-dimensional unilateral shift: S e_j = e_{j+1}, last column zero.
ComplexMatrix shift_matrix(int n);

} // namespace nrange

#endif // NRANGE_MATRIX_HPP
