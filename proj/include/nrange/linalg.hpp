// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#ifndef NRANGE_LINALG_HPP
#define NRANGE_LINALG_HPP

#include "nrange/errors.hpp"
#include "nrange/matrix.hpp"

namespace nrange {

/// Full spectrum of a Hermitian matrix, eigenvalues sorted descending,
/// eigenvector columns orthonormal and ordered to match.
struct HermitianSpectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Defect data of a contraction A: the operators (I - A*A)^{1/2} and
/// (I - AA*)^{1/2}, their numerical ranks, and orthonormal bases of their
/// ranges (columns, ordered by decreasing singular value).
struct DefectData {
    ComplexMatrix defect_op;       // (I - A*A)^{1/2}
    ComplexMatrix defect_op_adj;   // (I - AA*)^{1/2}
    int defect_rank = 0;
    int defect_rank_adj = 0;
    ComplexMatrix defect_basis;     // n x defect_rank
    ComplexMatrix defect_basis_adj; // n x defect_rank_adj
};

/// Diagonalizes (M + M*)/2 after checking ||M - M*|| <= tol * ||M||
/// (Frobenius). Symmetrizing first keeps downstream eigenvalue order
/// questions well-defined; ties come back in the solver's stable order.
HermitianSpectrum hermitian_spectrum(const ComplexMatrix& M, double tol = 1e-10);

/// (e^{i theta} A + e^{-i theta} A*) / 2, Hermitian by construction.
ComplexMatrix rotated_real_part(const ComplexMatrix& A, double theta);

/// Hermitian PSD square root. Eigenvalues in [-clamp_tol * scale, 0) are
/// clamped to zero, where scale = max(||M||, 1) so that a defect operator
/// of an exact isometry (M numerically zero) never aborts; anything lower
/// throws NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& M, double clamp_tol = 1e-8);

/// psd_sqrt with the clamp widened to 1e-7: I - A*A for a contraction
/// within the 1e-8 norm slack can dip to -2e-8.
ComplexMatrix defect_sqrt(const ComplexMatrix& M);

/// Defect operators, ranks and range bases of a contraction. A singular
/// value of the defect operator counts toward the rank when it exceeds
/// rank_tol * max(largest singular value, 1).
DefectData defect_data(const ComplexMatrix& A, double rank_tol = 1e-10);

/// Cayley transform (I - X)(I + X)^{-1} of the skew-Hermitian part of X;
/// always unitary since I + skew has singular values >= 1.
ComplexMatrix cayley_unitary(const ComplexMatrix& X);

bool is_contraction(const ComplexMatrix& A, double tol = 1e-8);
bool is_unitary(const ComplexMatrix& A, double tol = 1e-9);

/// True when the top-left dim(A) block of B equals A (to tol, relative to
/// max(1, ||A||_F)) and B is at least as large as A.
bool is_dilation_of(const ComplexMatrix& B, const ComplexMatrix& A, double tol = 1e-9);

/// k-th largest eigenvalue of a Hermitian matrix, 1-based.
double lambda_k(const ComplexMatrix& M, int k);

/// k-th smallest-from-the-top dual: nu_k(M) = -lambda_k(-M).
double nu_k(const ComplexMatrix& M, int k);

} // namespace nrange

#endif // NRANGE_LINALG_HPP
