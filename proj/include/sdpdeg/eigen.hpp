#pragma once

#include <vector>

#include "sdpdeg/symmat.hpp"

namespace sdpdeg {

struct EigenDecomposition {
    std::vector<double> values;  // sorted descending
    std::vector<double> vectors; // row-major n*n; column k is the k-th eigenvector
};

/// Cyclic Jacobi iteration, sweeping until every off-diagonal magnitude is
/// below 1e-12 * ||M||_F. Always converges on symmetric input.
EigenDecomposition sym_eigen(const SymMat& m);

struct RankReport {
    int rank = 0;
    std::vector<double> eigenvalues;  // sorted descending
    double gap_ratio = 0.0;           // smallest kept / largest dropped; inf if none dropped
    bool ambiguous = false;           // gap_ratio < 100 or negative eigenvalues clamped
};

/// Numerical rank: #{lambda_i > rel_tol * max(lambda_1, 1e-300)}.
/// Eigenvalues below -rel_tol * lambda_max mark the report ambiguous.
RankReport numerical_rank(const SymMat& m, double rel_tol = 1e-6);

}  // namespace sdpdeg
