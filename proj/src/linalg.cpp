// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace nrange {

namespace {

void require_square(const ComplexMatrix& M, const char* what) {
    if (M.rows() != M.cols())
        throw Error(ErrorCode::ShapeError, std::string(what) + " must be square");
    if (M.rows() == 0)
        throw Error(ErrorCode::ShapeError, std::string(what) + " must be non-empty");
}

// Descending eigen-decomposition of an exactly Hermitian matrix.
HermitianSpectrum eig_descending(const ComplexMatrix& H) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(H);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::NonFinite, "eigensolver failed to converge");
    const Eigen::Index n = H.rows();
    HermitianSpectrum out;
    out.eigenvalues = RealVector(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        out.eigenvalues(j) = solver.eigenvalues()(n - 1 - j);
        out.eigenvectors.col(j) = solver.eigenvectors().col(n - 1 - j);
    }
    return out;
}

} // namespace

HermitianSpectrum hermitian_spectrum(const ComplexMatrix& M, double tol) {
    require_square(M, "matrix");
    require_finite(M, "matrix");
    const double scale = M.norm();
    const double asym = (M - M.adjoint()).norm();
    if (asym > tol * scale)
        throw Error(ErrorCode::NotHermitian,
                    "||M - M*|| = " + std::to_string(asym) + " exceeds " +
                        std::to_string(tol) + " * ||M||");
    const ComplexMatrix H = 0.5 * (M + M.adjoint());
    return eig_descending(H);
}

ComplexMatrix rotated_real_part(const ComplexMatrix& A, double theta) {
    require_square(A, "matrix");
    require_finite(A, "matrix");
    const Complex phase = std::polar(1.0, theta);
    const ComplexMatrix R = phase * A;
    return 0.5 * (R + R.adjoint());
}

ComplexMatrix psd_sqrt(const ComplexMatrix& M, double clamp_tol) {
    require_square(M, "matrix");
    require_finite(M, "matrix");
    const ComplexMatrix H = 0.5 * (M + M.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(H);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::NonFinite, "eigensolver failed to converge");
    const RealVector& evals = solver.eigenvalues();
    const double scale =
        std::max({std::abs(evals(0)), std::abs(evals(evals.size() - 1)), 1.0});
    RealVector roots(evals.size());
    for (Eigen::Index j = 0; j < evals.size(); ++j) {
        double v = evals(j);
        if (v < -clamp_tol * scale)
            throw Error(ErrorCode::NotPSD,
                        "eigenvalue " + std::to_string(v) + " below PSD tolerance");
        // Numerically-null eigenvalues go to exactly zero; sqrt would
        // otherwise turn 1e-16 roundoff into 1e-8 entries and fake rank.
        roots(j) = v > 1e-13 * scale ? std::sqrt(v) : 0.0;
    }
    const ComplexMatrix R =
        solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
    return 0.5 * (R + R.adjoint());
}

ComplexMatrix defect_sqrt(const ComplexMatrix& M) { return psd_sqrt(M, 1e-7); }

DefectData defect_data(const ComplexMatrix& A, double rank_tol) {
    require_square(A, "matrix");
    require_finite(A, "matrix");
    if (!is_contraction(A, 1e-8))
        throw Error(ErrorCode::NotContraction, "largest singular value exceeds 1 + 1e-8");
    const Eigen::Index n = A.rows();
    const ComplexMatrix I = ComplexMatrix::Identity(n, n);

    DefectData out;
    out.defect_op = defect_sqrt(I - A.adjoint() * A);
    out.defect_op_adj = defect_sqrt(I - A * A.adjoint());

    auto rank_and_basis = [&](const ComplexMatrix& D, int& rank, ComplexMatrix& basis) {
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(D);
        const RealVector& evals = solver.eigenvalues(); // ascending, all >= 0 up to roundoff
        const double top = std::max(evals(evals.size() - 1), 0.0);
        const double threshold = rank_tol * std::max(top, 1.0);
        rank = 0;
        for (Eigen::Index j = 0; j < evals.size(); ++j)
            if (evals(j) > threshold) ++rank;
        basis = ComplexMatrix(n, rank);
        for (int c = 0; c < rank; ++c)
            basis.col(c) = solver.eigenvectors().col(n - 1 - c);
    };
    rank_and_basis(out.defect_op, out.defect_rank, out.defect_basis);
    rank_and_basis(out.defect_op_adj, out.defect_rank_adj, out.defect_basis_adj);
    return out;
}

ComplexMatrix cayley_unitary(const ComplexMatrix& X) {
    require_square(X, "matrix");
    require_finite(X, "matrix");
    const Eigen::Index n = X.rows();
    const ComplexMatrix S = 0.5 * (X - X.adjoint());
    const ComplexMatrix I = ComplexMatrix::Identity(n, n);
    ComplexMatrix U = (I + S).partialPivLu().solve(I - S);
    if (!all_finite(U))
        throw Error(ErrorCode::SingularChart, "Cayley chart is numerically degenerate here");
    if ((U.adjoint() * U - I).norm() > 1e-11 * n) {
        // Far out on the chart the solve loses accuracy (condition grows
        // with ||X||); snap back to the nearest unitary.
        Eigen::JacobiSVD<ComplexMatrix> svd(U, Eigen::ComputeFullU | Eigen::ComputeFullV);
        U = svd.matrixU() * svd.matrixV().adjoint();
        if (!all_finite(U) || (U.adjoint() * U - I).norm() > 1e-10 * n)
            throw Error(ErrorCode::SingularChart, "Cayley chart is numerically degenerate here");
    }
    return U;
}

bool is_contraction(const ComplexMatrix& A, double tol) {
    if (A.size() == 0 || !all_finite(A)) return false;
    return operator_norm(A) <= 1.0 + tol;
}

bool is_unitary(const ComplexMatrix& A, double tol) {
    if (A.rows() != A.cols() || A.size() == 0 || !all_finite(A)) return false;
    const Eigen::Index n = A.rows();
    return (A.adjoint() * A - ComplexMatrix::Identity(n, n)).norm() <= tol * std::sqrt(double(n));
}

bool is_dilation_of(const ComplexMatrix& B, const ComplexMatrix& A, double tol) {
    if (A.rows() != A.cols() || B.rows() != B.cols()) return false;
    if (B.rows() < A.rows() || A.rows() == 0) return false;
    const double scale = std::max(1.0, A.norm());
    return (B.topLeftCorner(A.rows(), A.cols()) - A).norm() <= tol * scale;
}

double lambda_k(const ComplexMatrix& M, int k) {
    if (k < 1 || k > M.rows())
        throw Error(ErrorCode::KOutOfRange,
                    "k = " + std::to_string(k) + " outside [1, " + std::to_string(M.rows()) + "]");
    return hermitian_spectrum(M).eigenvalues(k - 1);
}

double nu_k(const ComplexMatrix& M, int k) { return -lambda_k(-M, k); }

} // namespace nrange
