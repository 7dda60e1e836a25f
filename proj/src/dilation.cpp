// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/dilation.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "nrange/errors.hpp"
#include "nrange/optim.hpp"
#include "nrange/rank_k.hpp"

namespace nrange {

namespace {

struct MinimalBlocks {
    ComplexMatrix A;
    ComplexMatrix B0; // n x d, Db Bb
    ComplexMatrix C0; // d x n, Ba* Da
    ComplexMatrix D0; // d x d, -Ba* A* Bb
    int n = 0;
    int d = 0;
};

MinimalBlocks minimal_blocks(const ComplexMatrix& A) {
    const DefectData dd = defect_data(A);
    if (dd.defect_rank != dd.defect_rank_adj)
        throw Error(ErrorCode::DefectMismatch,
                    "defect ranks differ: " + std::to_string(dd.defect_rank) + " vs " +
                        std::to_string(dd.defect_rank_adj));
    MinimalBlocks blocks;
    blocks.A = A;
    blocks.n = static_cast<int>(A.rows());
    blocks.d = dd.defect_rank;
    blocks.B0 = dd.defect_op_adj * dd.defect_basis_adj;
    blocks.C0 = dd.defect_basis.adjoint() * dd.defect_op;
    blocks.D0 = -(dd.defect_basis.adjoint() * A.adjoint() * dd.defect_basis_adj);
    return blocks;
}

ComplexMatrix assemble_minimal(const MinimalBlocks& blocks, const ComplexMatrix& V,
                               const ComplexMatrix& W) {
    const int n = blocks.n, d = blocks.d;
    ComplexMatrix U(n + d, n + d);
    U.topLeftCorner(n, n) = blocks.A;
    U.topRightCorner(n, d) = blocks.B0 * V;
    U.bottomLeftCorner(d, n) = W * blocks.C0;
    U.bottomRightCorner(d, d) = W * blocks.D0 * V;
    return U;
}

// d*d real parameters <-> skew-Hermitian d x d matrix: imaginary diagonal
// first, then re/im pairs above the diagonal.
ComplexMatrix skew_from_params(const Eigen::VectorXd& x, int offset, int d) {
    ComplexMatrix X = ComplexMatrix::Zero(d, d);
    int p = offset;
    for (int j = 0; j < d; ++j) X(j, j) = Complex(0.0, x(p++));
    for (int j = 0; j < d; ++j)
        for (int l = j + 1; l < d; ++l) {
            const Complex z(x(p), x(p + 1));
            p += 2;
            X(j, l) = z;
            X(l, j) = -std::conj(z);
        }
    return X;
}

double lambda_k_of(const ComplexMatrix& H, int k) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(H, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(H.rows() - k);
}

ComplexMatrix pinv_psd(const ComplexMatrix& D, double rank_tol = 1e-10) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(D);
    const RealVector& evals = solver.eigenvalues();
    const double top = std::max(evals(evals.size() - 1), 0.0);
    const double threshold = rank_tol * std::max(top, 1.0);
    RealVector inv(evals.size());
    for (Eigen::Index j = 0; j < evals.size(); ++j)
        inv(j) = evals(j) > threshold ? 1.0 / evals(j) : 0.0;
    return solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().adjoint();
}

void require_unitary_parameter(const ComplexMatrix& U, int dim, const char* name) {
    if (U.rows() != dim || U.cols() != dim)
        throw Error(ErrorCode::ShapeError, std::string(name) + " has the wrong shape");
    if (!is_unitary(U, 1e-10))
        throw Error(ErrorCode::NotUnitaryParameter, std::string(name) + " is not unitary");
}

} // namespace

const char* dilation_kind_name(DilationKind kind) {
    switch (kind) {
        case DilationKind::Halmos: return "halmos";
        case DilationKind::FamilyUo: return "family_Uo";
        case DilationKind::MinimalVW: return "minimal_VW";
    }
    return "unknown";
}

int EigenvaluePrescription::total_multiplicity() const {
    int total = 0;
    for (const auto& [lambda, mult] : targets) total += mult;
    return total;
}

ComplexMatrix halmos_dilation(const ComplexMatrix& A) {
    if (!is_contraction(A))
        throw Error(ErrorCode::NotContraction, "Halmos dilation needs a contraction");
    const Eigen::Index n = A.rows();
    const ComplexMatrix I = ComplexMatrix::Identity(n, n);
    ComplexMatrix U(2 * n, 2 * n);
    U.topLeftCorner(n, n) = A;
    U.topRightCorner(n, n) = -defect_sqrt(I - A * A.adjoint());
    U.bottomLeftCorner(n, n) = defect_sqrt(I - A.adjoint() * A);
    U.bottomRightCorner(n, n) = A.adjoint();
    return U;
}

ComplexMatrix dilation_from_parameter(const ComplexMatrix& A, const ComplexMatrix& Uo) {
    if (!is_contraction(A))
        throw Error(ErrorCode::NotContraction, "dilation family needs a contraction");
    require_unitary_parameter(Uo, static_cast<int>(A.rows()), "Uo");
    const Eigen::Index n = A.rows();
    const ComplexMatrix I = ComplexMatrix::Identity(n, n);
    ComplexMatrix U(2 * n, 2 * n);
    U.topLeftCorner(n, n) = A;
    U.topRightCorner(n, n) = -defect_sqrt(I - A * A.adjoint()) * Uo;
    U.bottomLeftCorner(n, n) = defect_sqrt(I - A.adjoint() * A);
    U.bottomRightCorner(n, n) = A.adjoint() * Uo;
    return U;
}

ComplexMatrix minimal_dilation(const ComplexMatrix& A, const ComplexMatrix& V,
                               const ComplexMatrix& W) {
    const MinimalBlocks blocks = minimal_blocks(A);
    if (blocks.d == 0) return A; // defect-free contractions are unitary
    require_unitary_parameter(V, blocks.d, "V");
    require_unitary_parameter(W, blocks.d, "W");
    return assemble_minimal(blocks, V, W);
}

ComplexMatrix build_dilation(const ComplexMatrix& A, const DilationParameter& parameter) {
    switch (parameter.kind) {
        case DilationKind::Halmos: return halmos_dilation(A);
        case DilationKind::FamilyUo:
            if (!parameter.Uo)
                throw Error(ErrorCode::InvalidArgument, "family_Uo parameter needs Uo");
            return dilation_from_parameter(A, *parameter.Uo);
        case DilationKind::MinimalVW:
            if (!parameter.V || !parameter.W)
                throw Error(ErrorCode::InvalidArgument, "minimal_VW parameter needs V and W");
            return minimal_dilation(A, *parameter.V, *parameter.W);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown dilation kind");
}

ComplexMatrix sample_dilation(const ComplexMatrix& A, DilationKind kind, Rng& rng) {
    DilationParameter parameter;
    parameter.kind = kind;
    if (kind == DilationKind::FamilyUo) {
        parameter.Uo = haar_unitary(static_cast<int>(A.rows()), rng);
    } else if (kind == DilationKind::MinimalVW) {
        const int d = defect_data(A).defect_rank;
        if (d == 0) return A;
        parameter.V = haar_unitary(d, rng);
        parameter.W = haar_unitary(d, rng);
    }
    return build_dilation(A, parameter);
}

ExtremalResult extremal_dilation(const ComplexMatrix& A, int k, double theta,
                                 const ExtremalOptions& options) {
    if (!is_contraction(A))
        throw Error(ErrorCode::NotContraction, "extremal dilation needs a contraction");
    if (k < 1 || k > A.rows())
        throw Error(ErrorCode::KOutOfRange, "k outside [1, dim(A)]");

    const MinimalBlocks blocks = minimal_blocks(A);
    const double target = support_value(A, k, theta);
    const Complex phase = std::polar(1.0, theta);

    ExtremalResult result;
    if (blocks.d == 0) {
        result.U = A;
        result.V = ComplexMatrix(0, 0);
        result.W = ComplexMatrix(0, 0);
        result.gap = 0.0;
        result.converged = true;
        result.restarts_used = 0;
        return result;
    }

    // (V, W) and (I, VW) give unitarily equivalent dilations (conjugate by
    // I + G on the defect summand), so the search runs over the single
    // product unitary P = VW: half the dimensions and no flat optimum
    // manifold for the simplex to wander along.
    const int d = blocks.d;
    const int params = d * d;
    const double nm_target = std::min(1e-8, 0.1 * options.success_gap);
    const ComplexMatrix I_d = ComplexMatrix::Identity(d, d);

    double best_gap = std::numeric_limits<double>::infinity();
    ComplexMatrix best_P;
    int restarts_used = 0;

    for (int r = 0; r < std::max(1, options.restarts); ++r) {
        ComplexMatrix P0;
        double step = 0.6;
        if (r == 0 && options.warm_start && options.warm_start->first.rows() == d) {
            P0 = options.warm_start->first * options.warm_start->second;
            step = 0.1;
        } else if (r == 0) {
            P0 = I_d;
        } else {
            Rng rng = make_rng(mix_seed(options.seed, r));
            P0 = haar_unitary(d, rng);
        }

        auto objective = [&](const Eigen::VectorXd& x) -> double {
            if (!x.allFinite()) return 1e100;
            try {
                const ComplexMatrix P = P0 * cayley_unitary(skew_from_params(x, 0, d));
                const ComplexMatrix U = assemble_minimal(blocks, I_d, P);
                const ComplexMatrix R = phase * U;
                return lambda_k_of(0.5 * (R + R.adjoint()), k) - target;
            } catch (const Error&) {
                return 1e100; // degenerate chart point: steer the simplex away
            }
        };

        NelderMeadOptions nm;
        nm.max_evals = options.max_evals;
        nm.initial_step = step;
        nm.target = nm_target;
        const NelderMeadResult nm_result =
            nelder_mead_polished(objective, Eigen::VectorXd::Zero(params), nm);

        restarts_used = r + 1;
        if (nm_result.fval < best_gap) {
            best_gap = nm_result.fval;
            best_P = P0 * cayley_unitary(skew_from_params(nm_result.x, 0, d));
        }
        if (best_gap <= options.success_gap) break;
    }

    result.V = I_d;
    result.W = best_P;
    result.U = assemble_minimal(blocks, I_d, best_P);
    result.gap = best_gap;
    result.converged = best_gap <= options.success_gap;
    result.restarts_used = restarts_used;
    return result;
}

ComplexMatrix contractive_dilation(const ComplexMatrix& A, const ComplexMatrix& B, int k,
                                   const ExtremalOptions& options) {
    if (A.rows() != A.cols() || B.rows() != A.rows() || B.cols() != A.cols())
        throw Error(ErrorCode::ShapeError, "A and B must be square with matching shape");
    const int n = static_cast<int>(A.rows());
    const ComplexMatrix I = ComplexMatrix::Identity(n, n);

    const ComplexMatrix constraint = I - A.adjoint() * A - B.adjoint() * B;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> check(0.5 * (constraint + constraint.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    if (check.eigenvalues()(0) < -1e-9)
        throw Error(ErrorCode::ConstraintViolated, "A*A + B*B exceeds I");

    ExtremalResult extremal = extremal_dilation(A, k, 0.0, options);
    if (!extremal.converged)
        throw Error(ErrorCode::OptimizerDidNotConverge,
                    "extremal dilation gap " + std::to_string(extremal.gap));

    // Pad the minimal extremal dilation to 2n x 2n; appending -I eigenvalues
    // at the bottom of the spectrum keeps lambda_k intact.
    const int m = static_cast<int>(extremal.U.rows());
    ComplexMatrix U2 = ComplexMatrix::Zero(2 * n, 2 * n);
    U2.topLeftCorner(m, m) = extremal.U;
    if (2 * n > m)
        U2.bottomRightCorner(2 * n - m, 2 * n - m) =
            -ComplexMatrix::Identity(2 * n - m, 2 * n - m);

    // Rotate the (2,1) block onto (I - A*A)^{1/2}; the conjugation keeps
    // the top-left block and the Re spectrum.
    const ComplexMatrix C_block = U2.block(n, 0, n, n);
    Eigen::JacobiSVD<ComplexMatrix> svd(C_block, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const ComplexMatrix U1 = svd.matrixU() * svd.matrixV().adjoint();
    ComplexMatrix G = ComplexMatrix::Identity(2 * n, 2 * n);
    G.block(n, n, n, n) = U1;
    const ComplexMatrix U_gauged = G.adjoint() * U2 * G;

    const ComplexMatrix Da = defect_sqrt(I - A.adjoint() * A);
    const ComplexMatrix J = B * pinv_psd(Da);
    const ComplexMatrix S = defect_sqrt(I - J * J.adjoint());

    ComplexMatrix V = ComplexMatrix::Zero(3 * n, 2 * n);
    V.block(0, 0, n, n) = I;
    V.block(n, n, n, n) = J.adjoint();
    V.block(2 * n, n, n, n) = -S;

    ComplexMatrix big = ComplexMatrix::Zero(3 * n, 3 * n);
    big.topLeftCorner(2 * n, 2 * n) = U_gauged;
    big.bottomRightCorner(n, n) = -I;

    return V.adjoint() * big * V;
}

NDilationResult prescribed_eigenvalue_ndilation(const ComplexMatrix& A,
                                                const EigenvaluePrescription& prescription,
                                                const NDilationOptions& options) {
    if (!is_contraction(A))
        throw Error(ErrorCode::NotContraction, "N-dilation needs a contraction");
    if (prescription.targets.empty())
        throw Error(ErrorCode::PrescriptionInvalid, "no eigenvalue targets");

    const MinimalBlocks blocks = minimal_blocks(A);
    const int n = blocks.n, d = blocks.d;
    if (prescription.total_multiplicity() != d)
        throw Error(ErrorCode::PrescriptionInvalid,
                    "target multiplicities must sum to the defect rank " + std::to_string(d));

    Eigen::ComplexEigenSolver<ComplexMatrix> spectrum(A);
    for (std::size_t a = 0; a < prescription.targets.size(); ++a) {
        const Complex lambda = prescription.targets[a].first;
        if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
            throw Error(ErrorCode::PrescriptionInvalid, "target eigenvalues must be unimodular");
        if (prescription.targets[a].second < 1)
            throw Error(ErrorCode::PrescriptionInvalid, "multiplicities must be positive");
        for (std::size_t b = a + 1; b < prescription.targets.size(); ++b)
            if (std::abs(lambda - prescription.targets[b].first) <= 1e-12)
                throw Error(ErrorCode::PrescriptionInvalid, "target eigenvalues must be distinct");
        for (Eigen::Index j = 0; j < spectrum.eigenvalues().size(); ++j)
            if (std::abs(lambda - spectrum.eigenvalues()(j)) < 1e-8)
                throw Error(ErrorCode::PrescriptionInvalid,
                            "target eigenvalue too close to the spectrum of A");
    }

    const std::size_t n_targets = prescription.targets.size();
    const ComplexMatrix I_n = ComplexMatrix::Identity(n, n);
    const ComplexMatrix I_d = ComplexMatrix::Identity(d, d);

    // M_j: the d x d matrix whose (V, W)-conjugate must have lambda_j as an
    // eigenvalue of the requested multiplicity.
    std::vector<ComplexMatrix> M(n_targets);
    for (std::size_t j = 0; j < n_targets; ++j) {
        const Complex lambda = prescription.targets[j].first;
        M[j] = blocks.C0 * (lambda * I_n - blocks.A).partialPivLu().solve(blocks.B0) + blocks.D0;
    }

    auto full_residuals = [&](const ComplexMatrix& U) {
        std::vector<double> res(n_targets);
        for (std::size_t j = 0; j < n_targets; ++j) {
            const Complex lambda = prescription.targets[j].first;
            Eigen::JacobiSVD<ComplexMatrix> svd(U - lambda *
                                                        ComplexMatrix::Identity(n + d, n + d));
            // n_j-th smallest singular value (descending order from Eigen)
            res[j] = svd.singularValues()(n + d - prescription.targets[j].second);
        }
        return res;
    };
    auto max_residual = [](const std::vector<double>& res) {
        double worst = 0.0;
        for (double r : res) worst = std::max(worst, r);
        return worst;
    };

    NDilationResult best;
    double best_metric = std::numeric_limits<double>::infinity();

    auto consider = [&](const ComplexMatrix& V, const ComplexMatrix& W) {
        const ComplexMatrix U = assemble_minimal(blocks, V, W);
        const std::vector<double> res = full_residuals(U);
        const double metric = max_residual(res);
        if (metric < best_metric) {
            best_metric = metric;
            best.U = U;
            best.V = V;
            best.W = W;
            best.residuals = res;
        }
    };

    // Exact single-target solution: W M V = lambda I with V = I and
    // W = lambda M*; M is unitary for unimodular lambda off the spectrum.
    if (n_targets == 1) {
        const Complex lambda = prescription.targets[0].first;
        const ComplexMatrix W_exact = lambda * M[0].adjoint();
        if (is_unitary(W_exact, 1e-8)) consider(I_d, W_exact);
    }
    if (best_metric > options.residual_tol) {
        // Same gauge reduction as the extremal search: only P = VW matters,
        // since sigma_i(W M V - lambda I) = sigma_i(V W M - lambda I).
        const int params = d * d;
        auto reduced_objective = [&](const ComplexMatrix& P) {
            double total = 0.0;
            for (std::size_t j = 0; j < n_targets; ++j) {
                const Complex lambda = prescription.targets[j].first;
                Eigen::JacobiSVD<ComplexMatrix> svd(P * M[j] - lambda * I_d);
                for (int i = 0; i < prescription.targets[j].second; ++i) {
                    const double s = svd.singularValues()(d - 1 - i);
                    total += s * s;
                }
            }
            return total;
        };

        for (int r = 0; r < std::max(1, options.restarts); ++r) {
            ComplexMatrix P0 = I_d;
            if (r > 0) {
                Rng rng = make_rng(mix_seed(options.seed, r));
                P0 = haar_unitary(d, rng);
            }
            auto objective = [&](const Eigen::VectorXd& x) -> double {
                if (!x.allFinite()) return 1e100;
                try {
                    return reduced_objective(P0 * cayley_unitary(skew_from_params(x, 0, d)));
                } catch (const Error&) {
                    return 1e100;
                }
            };
            NelderMeadOptions nm;
            nm.max_evals = options.max_evals;
            nm.initial_step = 0.6;
            nm.target = 1e-18;
            const NelderMeadResult nm_result =
                nelder_mead_polished(objective, Eigen::VectorXd::Zero(params), nm);
            consider(I_d, P0 * cayley_unitary(skew_from_params(nm_result.x, 0, d)));
            if (best_metric <= options.residual_tol) break;
        }
    }

    best.converged = best_metric <= options.residual_tol;
    return best;
}

} // namespace nrange
