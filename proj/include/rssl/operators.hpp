#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rssl {

// Orthonormal basis with column-major storage; columns are basis atoms of
// length n, reshaped to the patch geometry when rendered as images.
struct BasisMatrix {
    size_t n = 0;
    size_t k = 0;
    std::vector<double> data; // n * k, column-major

    BasisMatrix() = default;
    BasisMatrix(size_t n_, size_t k_) : n(n_), k(k_), data(n_ * k_, 0.0) {}

    double* col(size_t j) { return data.data() + j * n; }
    const double* col(size_t j) const { return data.data() + j * n; }

    // first `atoms` columns as a new basis
    BasisMatrix truncated(size_t atoms) const;
};

// max_ij |P^t P - I|
double orthonormality_residual(const BasisMatrix& p);

// Forward-difference gradient operators on an h-by-w pixel grid in row-major
// order.  Replicate boundary: the last column (dx) and last row (dy) map to
// zero, so constant images have zero gradient.  Rows hold at most two
// nonzeros, so dx/dy are kept as stencils; D^t D is precomputed as three
// bands (diagonal, adjacent-in-row, adjacent-in-column).
class DerivativeOperator {
public:
    DerivativeOperator(size_t height, size_t width);

    size_t height() const { return height_; }
    size_t width() const { return width_; }
    size_t n() const { return height_ * width_; }

    void apply_dx(const double* v, double* out) const;
    void apply_dy(const double* v, double* out) const;
    void apply_dtd(const double* v, double* out) const;

    // |dx v|^2 + |dy v|^2 without materializing the stacked vector
    double grad_norm_sq(const double* v) const;

    // bands of D^t D: diag has length N, off1 couples (i, i+1) with zeros at
    // row boundaries, offw couples (i, i+width)
    const std::vector<double>& dtd_diag() const { return dtd_diag_; }
    const std::vector<double>& dtd_off1() const { return dtd_off1_; }
    const std::vector<double>& dtd_offw() const { return dtd_offw_; }

private:
    size_t height_, width_;
    std::vector<double> dtd_diag_, dtd_off1_, dtd_offw_;
};

DerivativeOperator build_derivative_ops(size_t height, size_t width);

// [dx v; dy v] stacked into a 2N vector
std::vector<double> apply_D(const DerivativeOperator& op, const std::vector<double>& v);

// max(1 - t/|y|_2, 0) * y, with block_soft(0, t) = 0
std::vector<double> block_soft(const std::vector<double>& y, double t);
void block_soft_inplace(double* y, size_t len, double t);

// Orthonormalizes the columns of a column-major n-by-k matrix with the
// modified Gram-Schmidt recurrence (two projection passes).  A column whose
// residual norm drops below 1e-10 is replaced by a deterministic
// pseudo-random unit vector, seeded by the column index and re-orthogonalized
// against the previous columns.
BasisMatrix gram_schmidt(const std::vector<double>& m, size_t n, size_t k);
BasisMatrix gram_schmidt(const BasisMatrix& m);

} // namespace rssl
