#pragma once

// Test-side oracles, kept independent of the library's solver paths:
// dense matrices built straight from definitions, a pivoted Gaussian
// elimination solver, and brute-force grid searches.

#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

// Dense row-major matrix.
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<double> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
    double& at(size_t r, size_t c) { return a[r * cols + c]; }
    double at(size_t r, size_t c) const { return a[r * cols + c]; }
};

inline Mat matmul(const Mat& x, const Mat& y) {
    Mat z(x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t t = 0; t < x.cols; ++t) {
            const double v = x.at(i, t);
            if (v == 0.0) continue;
            for (size_t j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(t, j);
        }
    return z;
}

inline Mat transpose(const Mat& x) {
    Mat z(x.cols, x.rows);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
    return z;
}

inline std::vector<double> matvec(const Mat& x, const std::vector<double>& v) {
    std::vector<double> out(x.rows, 0.0);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) out[i] += x.at(i, j) * v[j];
    return out;
}

inline Mat identity(size_t n) {
    Mat z(n, n);
    for (size_t i = 0; i < n; ++i) z.at(i, i) = 1.0;
    return z;
}

inline Mat add(const Mat& x, const Mat& y, double cy = 1.0) {
    Mat z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += cy * y.a[i];
    return z;
}

// Horizontal forward differences on an h-by-w row-major grid, last column
// rows identically zero; built directly from the definition.
inline Mat dense_dx(size_t h, size_t w) {
    Mat d(h * w, h * w);
    for (size_t r = 0; r < h; ++r)
        for (size_t c = 0; c + 1 < w; ++c) {
            const size_t i = r * w + c;
            d.at(i, i) = -1.0;
            d.at(i, i + 1) = 1.0;
        }
    return d;
}

inline Mat dense_dy(size_t h, size_t w) {
    Mat d(h * w, h * w);
    for (size_t r = 0; r + 1 < h; ++r)
        for (size_t c = 0; c < w; ++c) {
            const size_t i = r * w + c;
            d.at(i, i) = -1.0;
            d.at(i, i + w) = 1.0;
        }
    return d;
}

// [dx; dy] stacked, 2N x N
inline Mat dense_d(size_t h, size_t w) {
    const Mat dx = dense_dx(h, w), dy = dense_dy(h, w);
    Mat d(2 * h * w, h * w);
    for (size_t i = 0; i < dx.rows; ++i)
        for (size_t j = 0; j < dx.cols; ++j) {
            d.at(i, j) = dx.at(i, j);
            d.at(i + dx.rows, j) = dy.at(i, j);
        }
    return d;
}

// Gaussian elimination with partial pivoting.
inline std::vector<double> gauss_solve(Mat m, std::vector<double> b) {
    const size_t n = m.rows;
    if (m.cols != n || b.size() != n) throw std::invalid_argument("gauss_solve: shape");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(m.at(r, col)) > std::abs(m.at(piv, col))) piv = r;
        if (m.at(piv, col) == 0.0) throw std::runtime_error("gauss_solve: singular matrix");
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            std::swap(b[piv], b[col]);
        }
        for (size_t r = col + 1; r < n; ++r) {
            const double f = m.at(r, col) / m.at(col, col);
            if (f == 0.0) continue;
            for (size_t j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (size_t i = n; i-- > 0;) {
        double v = b[i];
        for (size_t j = i + 1; j < n; ++j) v -= m.at(i, j) * x[j];
        x[i] = v / m.at(i, i);
    }
    return x;
}

inline double norm2(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

// min over the grid {0, step, 2*step, ...} x ... of a 2-element objective
// f(s) = 1/2 |r - s|^2 + l2 |s|_1 + l3 |s|_2 with s >= 0
inline double grid_min_group_objective(double r0, double r1, double l2, double l3, double step,
                                       double hi) {
    auto f = [&](double s0, double s1) {
        const double d0 = r0 - s0, d1 = r1 - s1;
        return 0.5 * (d0 * d0 + d1 * d1) + l2 * (s0 + s1) + l3 * std::sqrt(s0 * s0 + s1 * s1);
    };
    double best = f(0.0, 0.0);
    const auto steps = static_cast<size_t>(hi / step) + 1;
    for (size_t i = 0; i <= steps; ++i)
        for (size_t j = 0; j <= steps; ++j) {
            const double v = f(static_cast<double>(i) * step, static_cast<double>(j) * step);
            if (v < best) best = v;
        }
    return best;
}

// min over a signed 2-D grid of 1/2 |u - y|^2 + t |u|_2
inline double grid_min_block_soft_objective(double y0, double y1, double t, double step,
                                            double hi) {
    auto f = [&](double u0, double u1) {
        const double d0 = u0 - y0, d1 = u1 - y1;
        return 0.5 * (d0 * d0 + d1 * d1) + t * std::sqrt(u0 * u0 + u1 * u1);
    };
    double best = f(0.0, 0.0);
    const auto steps = static_cast<long>(hi / step) + 1;
    for (long i = -steps; i <= steps; ++i)
        for (long j = -steps; j <= steps; ++j) {
            const double v = f(static_cast<double>(i) * step, static_cast<double>(j) * step);
            if (v < best) best = v;
        }
    return best;
}

} // namespace oracle
