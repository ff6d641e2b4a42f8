#include "svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace storyfear {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw ArgError("matmul: shape mismatch");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    }
    return t;
}

double frobenius_norm(const Matrix& m) {
    double s = 0.0;
    for (double v : m.data) s += v * v;
    return std::sqrt(s);
}

ThinSvd jacobi_svd(const Matrix& m) {
    const std::size_t n = m.rows;
    const std::size_t k = m.cols;
    if (n < k) throw ArgError("jacobi_svd: needs rows >= cols");
    for (double v : m.data) {
        if (!std::isfinite(v)) throw ArgError("jacobi_svd: non-finite entry");
    }

    Matrix a = m;                    // becomes W (orthogonal columns)
    Matrix v = Matrix::identity(k);  // accumulates right rotations, columns

    constexpr int kMaxSweeps = 60;
    constexpr double kTol = 1e-15;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < k; ++p) {
            for (std::size_t q = p + 1; q < k; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    const double x = a.at(r, p);
                    const double y = a.at(r, q);
                    app += x * x;
                    aqq += y * y;
                    apq += x * y;
                }
                if (std::fabs(apq) <= kTol * std::sqrt(app * aqq)) continue;
                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t r = 0; r < n; ++r) {
                    const double x = a.at(r, p);
                    const double y = a.at(r, q);
                    a.at(r, p) = c * x - s * y;
                    a.at(r, q) = s * x + c * y;
                }
                for (std::size_t r = 0; r < k; ++r) {
                    const double x = v.at(r, p);
                    const double y = v.at(r, q);
                    v.at(r, p) = c * x - s * y;
                    v.at(r, q) = s * x + c * y;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) s += a.at(r, j) * a.at(r, j);
        sigma[j] = std::sqrt(s);
    }

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    ThinSvd out;
    out.coefficients = Matrix(n, k);
    out.modes = Matrix(k, k);
    out.singular_values.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t src = order[j];
        out.singular_values[j] = sigma[src];
        // mode j = column src of v, as a row; largest-magnitude entry positive
        std::size_t arg = 0;
        for (std::size_t r = 1; r < k; ++r) {
            if (std::fabs(v.at(r, src)) > std::fabs(v.at(arg, src))) arg = r;
        }
        const double flip = v.at(arg, src) < 0.0 ? -1.0 : 1.0;
        for (std::size_t r = 0; r < k; ++r) out.modes.at(j, r) = flip * v.at(r, src);
        for (std::size_t r = 0; r < n; ++r) {
            out.coefficients.at(r, j) = flip * a.at(r, src);
        }
    }
    return out;
}

}  // namespace storyfear
