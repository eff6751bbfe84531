#include <doctest.h>

#include <cmath>
#include <vector>

#include "rssl/errors.hpp"
#include "rssl/linalg.hpp"
#include "rssl/operators.hpp"
#include "rssl/rng.hpp"
#include "support/oracles.hpp"

using namespace rssl;

namespace {

// random SPD matrix A^t A + I, returned column-major (symmetric, so the
// layout matches the row-major oracle too)
std::vector<double> random_spd(size_t n, uint64_t seed) {
    rng::Engine g(seed);
    oracle::Mat a(n, n);
    for (auto& v : a.a) v = rng::uniform(g, -1.0, 1.0);
    oracle::Mat m = oracle::matmul(oracle::transpose(a), a);
    for (size_t i = 0; i < n; ++i) m.at(i, i) += 1.0;
    return m.a;
}

double rel_residual(const std::vector<double>& m_cm, size_t n, const std::vector<double>& x,
                    const std::vector<double>& b) {
    std::vector<double> ax(n, 0.0);
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) ax[i] += m_cm[j * n + i] * x[j];
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < n; ++i) {
        num += (ax[i] - b[i]) * (ax[i] - b[i]);
        den += b[i] * b[i];
    }
    return std::sqrt(num / (den > 0 ? den : 1.0));
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("matvec against the dense oracle") {
    rng::Engine g(5);
    const size_t n = 17, m = 9;
    std::vector<double> a(n * m);
    for (auto& v : a) v = rng::uniform(g, -1.0, 1.0);
    std::vector<double> x(m), y(n);
    for (auto& v : x) v = rng::uniform(g, -1.0, 1.0);
    la::matvec(a.data(), n, m, x.data(), y.data());

    oracle::Mat dense(n, m);
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < n; ++i) dense.at(i, j) = a[j * n + i];
    const auto expect = oracle::matvec(dense, x);
    for (size_t i = 0; i < n; ++i) CHECK(y[i] == doctest::Approx(expect[i]).epsilon(1e-13));

    std::vector<double> z(n), xt(m);
    for (auto& v : z) v = rng::uniform(g, -1.0, 1.0);
    la::matvec_t(a.data(), n, m, z.data(), xt.data());
    const auto expect_t = oracle::matvec(oracle::transpose(dense), z);
    for (size_t j = 0; j < m; ++j) CHECK(xt[j] == doctest::Approx(expect_t[j]).epsilon(1e-13));
}

TEST_CASE("dense cholesky matches pivoted elimination") {
    for (uint64_t seed : {1u, 2u, 3u}) {
        const size_t n = 20;
        const auto m = random_spd(n, seed);
        rng::Engine g(seed + 100);
        std::vector<double> b(n);
        for (auto& v : b) v = rng::uniform(g, -1.0, 1.0);

        const la::DenseCholesky chol(m, n);
        const auto x = chol.solve(b);

        oracle::Mat dense(n, n);
        dense.a = m;
        const auto x_ref = oracle::gauss_solve(dense, b);
        for (size_t i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(x_ref[i]).epsilon(1e-10));
        CHECK(rel_residual(m, n, x, b) <= 1e-12);
    }
}

TEST_CASE("dense cholesky rejects indefinite matrices") {
    std::vector<double> m{1.0, 2.0, 2.0, 1.0}; // eigenvalues 3, -1
    CHECK_THROWS_AS(la::DenseCholesky(m, 2), NumericalError);
}

TEST_CASE("banded cholesky solves the smoothing stencil") {
    // I + lambda D^t D on a 6x5 grid, bandwidth = width
    const DerivativeOperator dop(6, 5);
    const size_t n = dop.n(), bw = dop.width();
    const double lambda = 0.7;
    std::vector<std::vector<double>> bands(bw + 1);
    for (size_t d = 0; d <= bw; ++d) bands[d].assign(n - d, 0.0);
    for (size_t i = 0; i < n; ++i) bands[0][i] = 1.0 + lambda * dop.dtd_diag()[i];
    for (size_t i = 0; i + 1 < n; ++i) bands[1][i] = lambda * dop.dtd_off1()[i];
    for (size_t i = 0; i + bw < n; ++i) bands[bw][i] = lambda * dop.dtd_offw()[i];

    rng::Engine g(9);
    std::vector<double> b(n);
    for (auto& v : b) v = rng::uniform(g, -1.0, 1.0);

    const la::BandedCholesky chol(bands, n, bw);
    const auto x = chol.solve(b);

    const oracle::Mat d = oracle::dense_d(6, 5);
    oracle::Mat sys = oracle::add(oracle::identity(n), oracle::matmul(oracle::transpose(d), d), lambda);
    const auto x_ref = oracle::gauss_solve(sys, b);
    for (size_t i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(x_ref[i]).epsilon(1e-11));

    const auto ax = oracle::matvec(sys, x);
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < n; ++i) {
        num += (ax[i] - b[i]) * (ax[i] - b[i]);
        den += b[i] * b[i];
    }
    CHECK(std::sqrt(num / den) <= 1e-12);
}

TEST_CASE("banded cholesky validates band shapes") {
    std::vector<std::vector<double>> bands{{1.0, 1.0}, {0.0}};
    CHECK_NOTHROW(la::BandedCholesky(bands, 2, 1));
    CHECK_THROWS_AS(la::BandedCholesky({{1.0}}, 2, 0), DimensionError);
}

} // TEST_SUITE
