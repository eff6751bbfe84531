#include "rssl/operators.hpp"

#include <algorithm>
#include <cmath>

#include "rssl/errors.hpp"
#include "rssl/kernels.hpp"
#include "rssl/rng.hpp"

namespace rssl {

BasisMatrix BasisMatrix::truncated(size_t atoms) const {
    if (atoms > k) throw DimensionError("truncated: more atoms than columns");
    BasisMatrix q(n, atoms);
    std::copy(data.begin(), data.begin() + static_cast<ptrdiff_t>(n * atoms), q.data.begin());
    return q;
}

double orthonormality_residual(const BasisMatrix& p) {
    double worst = 0.0;
    for (size_t i = 0; i < p.k; ++i)
        for (size_t j = i; j < p.k; ++j) {
            const double g = kern::dot(p.col(i), p.col(j), p.n);
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    return worst;
}

DerivativeOperator::DerivativeOperator(size_t height, size_t width)
    : height_(height), width_(width) {
    if (height == 0 || width == 0)
        throw InvalidParameterError("DerivativeOperator: height and width must be positive");
    const size_t n = height * width;
    dtd_diag_.assign(n, 0.0);
    dtd_off1_.assign(n > 1 ? n - 1 : 0, 0.0);
    dtd_offw_.assign(n > width ? n - width : 0, 0.0);
    // D^t D is the graph Laplacian of the 4-neighbor pixel grid
    for (size_t r = 0; r < height; ++r)
        for (size_t c = 0; c < width; ++c) {
            const size_t i = r * width + c;
            double deg = 0.0;
            if (c + 1 < width) {
                deg += 1.0;
                dtd_off1_[i] = -1.0;
            }
            if (c > 0) deg += 1.0;
            if (r + 1 < height) {
                deg += 1.0;
                dtd_offw_[i] = -1.0;
            }
            if (r > 0) deg += 1.0;
            dtd_diag_[i] = deg;
        }
}

void DerivativeOperator::apply_dx(const double* v, double* out) const {
    for (size_t r = 0; r < height_; ++r) {
        const size_t base = r * width_;
        for (size_t c = 0; c + 1 < width_; ++c) out[base + c] = v[base + c + 1] - v[base + c];
        out[base + width_ - 1] = 0.0;
    }
}

void DerivativeOperator::apply_dy(const double* v, double* out) const {
    const size_t n = height_ * width_;
    kern::sub(v + width_, v, out, n - width_);
    std::fill(out + (n - width_), out + n, 0.0);
}

void DerivativeOperator::apply_dtd(const double* v, double* out) const {
    const size_t n = height_ * width_;
    for (size_t i = 0; i < n; ++i) out[i] = dtd_diag_[i] * v[i];
    for (size_t i = 0; i + 1 < n; ++i) {
        const double w = dtd_off1_[i];
        out[i + 1] += w * v[i];
        out[i] += w * v[i + 1];
    }
    for (size_t i = 0; i + width_ < n; ++i) {
        const double w = dtd_offw_[i];
        out[i + width_] += w * v[i];
        out[i] += w * v[i + width_];
    }
}

double DerivativeOperator::grad_norm_sq(const double* v) const {
    double acc = 0.0;
    for (size_t r = 0; r < height_; ++r) {
        const size_t base = r * width_;
        for (size_t c = 0; c + 1 < width_; ++c) {
            const double d = v[base + c + 1] - v[base + c];
            acc += d * d;
        }
    }
    const size_t n = height_ * width_;
    for (size_t i = 0; i + width_ < n; ++i) {
        const double d = v[i + width_] - v[i];
        acc += d * d;
    }
    return acc;
}

DerivativeOperator build_derivative_ops(size_t height, size_t width) {
    return DerivativeOperator(height, width);
}

std::vector<double> apply_D(const DerivativeOperator& op, const std::vector<double>& v) {
    if (v.size() != op.n()) throw DimensionError("apply_D: vector length != height*width");
    std::vector<double> out(2 * op.n());
    op.apply_dx(v.data(), out.data());
    op.apply_dy(v.data(), out.data() + op.n());
    return out;
}

void block_soft_inplace(double* y, size_t len, double t) {
    if (t < 0.0) throw InvalidParameterError("block_soft: negative threshold");
    const double norm = std::sqrt(kern::nrm2sq(y, len));
    if (norm <= t) {
        std::fill(y, y + len, 0.0);
        return;
    }
    kern::scal(1.0 - t / norm, y, len);
}

std::vector<double> block_soft(const std::vector<double>& y, double t) {
    std::vector<double> out = y;
    block_soft_inplace(out.data(), out.size(), t);
    return out;
}

namespace {

void fill_rescue_column(double* v, size_t n, size_t col, uint64_t attempt) {
    rng::Engine g(0x9e3779b97f4a7c15ULL ^ (col * 0x100000001b3ULL + attempt));
    for (size_t i = 0; i < n; ++i) v[i] = rng::normal(g);
}

} // namespace

BasisMatrix gram_schmidt(const std::vector<double>& m, size_t n, size_t k) {
    if (k > n) throw DimensionError("gram_schmidt: more columns than rows");
    if (m.size() != n * k) throw DimensionError("gram_schmidt: matrix size mismatch");
    constexpr double kDegenerate = 1e-10;

    BasisMatrix q(n, k);
    q.data = m;
    for (size_t j = 0; j < k; ++j) {
        double* v = q.col(j);
        double norm = 0.0;
        for (uint64_t attempt = 0;; ++attempt) {
            // two MGS passes; the second mops up cancellation error
            for (int pass = 0; pass < 2; ++pass)
                for (size_t i = 0; i < j; ++i) {
                    const double* qi = q.col(i);
                    kern::axpy(-kern::dot(qi, v, n), qi, v, n);
                }
            norm = std::sqrt(kern::nrm2sq(v, n));
            if (norm >= kDegenerate) break;
            fill_rescue_column(v, n, j, attempt);
        }
        kern::scal(1.0 / norm, v, n);
    }
    return q;
}

BasisMatrix gram_schmidt(const BasisMatrix& m) { return gram_schmidt(m.data, m.n, m.k); }

} // namespace rssl
