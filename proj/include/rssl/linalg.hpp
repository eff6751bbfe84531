#pragma once

#include <cstddef>
#include <vector>

namespace rssl::la {

// y = A x for a column-major n-by-m matrix.
void matvec(const double* a, size_t n, size_t m, const double* x, double* y);

// y = A^t x for a column-major n-by-m matrix (x has length n, y length m).
void matvec_t(const double* a, size_t n, size_t m, const double* x, double* y);

// Cholesky factorization of a dense symmetric positive definite matrix,
// kept together with the original matrix so solves can run one step of
// iterative refinement.  Throws NumericalError when a pivot collapses.
class DenseCholesky {
public:
    DenseCholesky(std::vector<double> a, size_t n); // a column-major, consumed

    void solve_into(const double* b, double* x) const;
    std::vector<double> solve(const std::vector<double>& b) const;
    size_t dim() const { return n_; }

private:
    void substitute(const double* b, double* x) const;

    size_t n_;
    std::vector<double> a_; // original matrix
    std::vector<double> l_; // lower factor, column-major
};

// Cholesky factorization of a symmetric positive definite banded matrix.
// bands[d][i] holds A(i+d, i) for d = 0..bw; the factor keeps the same
// bandwidth, so factorization is O(n bw^2) and each solve O(n bw).
class BandedCholesky {
public:
    BandedCholesky(std::vector<std::vector<double>> bands, size_t n, size_t bw);

    void solve_into(const double* b, double* x) const;
    std::vector<double> solve(const std::vector<double>& b) const;
    size_t dim() const { return n_; }

private:
    void substitute(const double* b, double* x) const;
    void apply(const double* x, double* y) const; // y = A x from stored bands

    size_t n_, bw_;
    std::vector<std::vector<double>> a_; // original bands
    std::vector<std::vector<double>> l_; // factor bands
};

} // namespace rssl::la
