#pragma once

#include <string>
#include <vector>

#include "sdpdeg/symmat.hpp"

namespace sdpdeg {

/// Dense SDP data for the pair
///   min C.X  s.t. A_i.X = b_i, X >= 0     (primal)
///   max b'y  s.t. Z = C - sum y_i A_i >= 0 (dual)
struct SdpInstance {
    int n = 0;
    int m = 0;
    SymMat C;
    std::vector<SymMat> A;
    std::vector<double> b;
};

enum class SolveStatus { optimal, max_iter, numerical_failure, infeasible_suspected };

std::string status_name(SolveStatus s);

struct SdpOptions {
    double tol = 1e-8;       // stop when max(primal, dual, gap residual) < tol
    int max_iter = 100;
    double step_frac = 0.98; // fraction-to-boundary factor
};

struct SdpSolution {
    SymMat X;
    std::vector<double> y;
    SymMat Z;                  // C - sum y_i A_i at the final iterate
    double gap = 0.0;          // |C.X - b'y| / (1 + |b'y|)
    double primal_residual = 0.0;  // max_i |A_i.X - b_i| / (1 + max|b|)
    double dual_residual = 0.0;    // max entry |C - Z - sum y A| / (1 + max|C|)
    int iterations = 0;
    SolveStatus status = SolveStatus::numerical_failure;
};

/// Primal-dual path-following with the HKM direction and a Mehrotra
/// predictor-corrector step, started from X = Z = I, y = 0. The m x m Schur
/// complement M_ij = trace(Z^-1 A_i X A_j) is assembled densely and solved
/// by Cholesky; a factorization failure yields numerical_failure, and ten
/// consecutive iterations without residual progress yield
/// infeasible_suspected.
SdpSolution solve_sdp(const SdpInstance& inst, const SdpOptions& opts = {});

}  // namespace sdpdeg
