#include "rssl/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "rssl/errors.hpp"
#include "rssl/kernels.hpp"

namespace rssl::la {

void matvec(const double* a, size_t n, size_t m, const double* x, double* y) {
    std::fill(y, y + n, 0.0);
    for (size_t j = 0; j < m; ++j) kern::axpy(x[j], a + j * n, y, n);
}

void matvec_t(const double* a, size_t n, size_t m, const double* x, double* y) {
    for (size_t j = 0; j < m; ++j) y[j] = kern::dot(a + j * n, x, n);
}

DenseCholesky::DenseCholesky(std::vector<double> a, size_t n) : n_(n), a_(std::move(a)) {
    if (a_.size() != n * n) throw DimensionError("DenseCholesky: matrix size mismatch");
    l_ = a_;
    // left-looking Cholesky on the lower triangle, column-major
    for (size_t j = 0; j < n; ++j) {
        double* lj = l_.data() + j * n;
        for (size_t p = 0; p < j; ++p) {
            const double* lp = l_.data() + p * n;
            kern::axpy(-lp[j], lp + j, lj + j, n - j);
        }
        if (lj[j] <= 0.0 || !std::isfinite(lj[j]))
            throw NumericalError("DenseCholesky: matrix not positive definite");
        const double d = std::sqrt(lj[j]);
        lj[j] = d;
        kern::scal(1.0 / d, lj + j + 1, n - j - 1);
    }
}

void DenseCholesky::substitute(const double* b, double* x) const {
    // L y = b
    std::copy(b, b + n_, x);
    for (size_t j = 0; j < n_; ++j) {
        const double* lj = l_.data() + j * n_;
        x[j] /= lj[j];
        kern::axpy(-x[j], lj + j + 1, x + j + 1, n_ - j - 1);
    }
    // L^t x = y
    for (size_t jj = n_; jj-- > 0;) {
        const double* lj = l_.data() + jj * n_;
        x[jj] = (x[jj] - kern::dot(lj + jj + 1, x + jj + 1, n_ - jj - 1)) / lj[jj];
    }
}

void DenseCholesky::solve_into(const double* b, double* x) const {
    substitute(b, x);
    // one refinement step keeps the residual near machine precision
    std::vector<double> r(n_), c(n_);
    for (size_t i = 0; i < n_; ++i) {
        const double* row = a_.data();
        double ax = 0.0;
        for (size_t j = 0; j < n_; ++j) ax += row[j * n_ + i] * x[j];
        r[i] = b[i] - ax;
    }
    substitute(r.data(), c.data());
    for (size_t i = 0; i < n_; ++i) x[i] += c[i];
}

std::vector<double> DenseCholesky::solve(const std::vector<double>& b) const {
    if (b.size() != n_) throw DimensionError("DenseCholesky: rhs length mismatch");
    std::vector<double> x(n_);
    solve_into(b.data(), x.data());
    return x;
}

BandedCholesky::BandedCholesky(std::vector<std::vector<double>> bands, size_t n, size_t bw)
    : n_(n), bw_(bw), a_(std::move(bands)) {
    if (a_.size() != bw + 1) throw DimensionError("BandedCholesky: band count mismatch");
    for (size_t d = 0; d <= bw; ++d)
        if (a_[d].size() != n - std::min(n, d)) throw DimensionError("BandedCholesky: band length mismatch");
    l_ = a_;
    // L(i,j) lives in l_[i-j][j]
    for (size_t j = 0; j < n; ++j) {
        const size_t lo = j > bw ? j - bw : 0;
        double diag = l_[0][j];
        for (size_t p = lo; p < j; ++p) {
            const double v = l_[j - p][p];
            diag -= v * v;
        }
        if (diag <= 0.0 || !std::isfinite(diag))
            throw NumericalError("BandedCholesky: matrix not positive definite");
        const double d = std::sqrt(diag);
        l_[0][j] = d;
        const size_t hi = std::min(n - 1, j + bw);
        for (size_t i = j + 1; i <= hi; ++i) {
            double v = l_[i - j][j];
            const size_t klo = i > bw ? i - bw : 0;
            for (size_t p = std::max(klo, lo); p < j; ++p) v -= l_[i - p][p] * l_[j - p][p];
            l_[i - j][j] = v / d;
        }
    }
}

void BandedCholesky::apply(const double* x, double* y) const {
    for (size_t i = 0; i < n_; ++i) y[i] = a_[0][i] * x[i];
    for (size_t d = 1; d <= bw_; ++d) {
        const auto& band = a_[d];
        for (size_t i = 0; i + d < n_; ++i) {
            y[i + d] += band[i] * x[i];
            y[i] += band[i] * x[i + d];
        }
    }
}

void BandedCholesky::substitute(const double* b, double* x) const {
    std::copy(b, b + n_, x);
    for (size_t j = 0; j < n_; ++j) {
        x[j] /= l_[0][j];
        const size_t hi = std::min(n_ - 1, j + bw_);
        for (size_t i = j + 1; i <= hi; ++i) x[i] -= l_[i - j][j] * x[j];
    }
    for (size_t jj = n_; jj-- > 0;) {
        double v = x[jj];
        const size_t hi = std::min(n_ - 1, jj + bw_);
        for (size_t i = jj + 1; i <= hi; ++i) v -= l_[i - jj][jj] * x[i];
        x[jj] = v / l_[0][jj];
    }
}

void BandedCholesky::solve_into(const double* b, double* x) const {
    substitute(b, x);
    std::vector<double> r(n_), c(n_);
    apply(x, r.data());
    kern::sub(b, r.data(), r.data(), n_);
    substitute(r.data(), c.data());
    for (size_t i = 0; i < n_; ++i) x[i] += c[i];
}

std::vector<double> BandedCholesky::solve(const std::vector<double>& b) const {
    if (b.size() != n_) throw DimensionError("BandedCholesky: rhs length mismatch");
    std::vector<double> x(n_);
    solve_into(b.data(), x.data());
    return x;
}

} // namespace rssl::la
