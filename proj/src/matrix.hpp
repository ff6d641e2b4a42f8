#pragma once

#include <cstddef>
#include <vector>

namespace storyfear {

// Dense row-major matrix, just enough for the mode decomposition.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

// C = A * B
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
double frobenius_norm(const Matrix& m);

}  // namespace storyfear
