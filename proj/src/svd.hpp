#pragma once

#include "matrix.hpp"

namespace storyfear {

// Thin SVD of an N x K matrix (N >= K), factored as M = W * U where U is
// K x K with orthonormal rows (the right singular vectors) and W = M * U^T
// carries the singular values as its column norms.
struct ThinSvd {
    Matrix coefficients;                // W, N x K
    Matrix modes;                       // U, K x K, rows orthonormal
    std::vector<double> singular_values;  // non-increasing
};

// One-sided Jacobi: rotates column pairs of a working copy of M until they
// are mutually orthogonal. Modes come out sorted by descending singular value
// and sign-fixed so each mode's largest-magnitude entry is positive.
ThinSvd jacobi_svd(const Matrix& m);

}  // namespace storyfear
