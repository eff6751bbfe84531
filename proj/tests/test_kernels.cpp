#include <doctest.h>

#include <cmath>
#include <vector>

#include "rssl/kernels.hpp"
#include "rssl/rng.hpp"

using rssl::kern::avx2_ops;
using rssl::kern::Ops;
using rssl::kern::scalar_ops;

namespace {

std::vector<double> random_vec(size_t n, uint64_t seed) {
    rssl::rng::Engine g(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = rssl::rng::uniform(g, -2.0, 2.0);
    return v;
}

// sizes that exercise the unrolled bodies and every remainder tail
const size_t kSizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 33, 100, 1024, 1031};

void check_tables_agree(const Ops& a, const Ops& b) {
    for (size_t n : kSizes) {
        const auto x = random_vec(n, 11 * n + 1);
        const auto y = random_vec(n, 13 * n + 2);
        const double tol = 1e-13 * static_cast<double>(n + 1);

        CHECK(a.dot(x.data(), y.data(), n) == doctest::Approx(b.dot(x.data(), y.data(), n)).epsilon(tol));
        CHECK(a.nrm2sq(x.data(), n) == doctest::Approx(b.nrm2sq(x.data(), n)).epsilon(tol));
        CHECK(a.asum(x.data(), n) == doctest::Approx(b.asum(x.data(), n)).epsilon(tol));

        auto ya = y, yb = y;
        a.axpy(0.37, x.data(), ya.data(), n);
        b.axpy(0.37, x.data(), yb.data(), n);
        for (size_t i = 0; i < n; ++i) CHECK(ya[i] == doctest::Approx(yb[i]).epsilon(1e-14));

        auto xa = x, xb = x;
        a.scal(-1.7, xa.data(), n);
        b.scal(-1.7, xb.data(), n);
        CHECK(xa == xb);

        std::vector<double> ra(n), rb(n);
        a.sub(x.data(), y.data(), ra.data(), n);
        b.sub(x.data(), y.data(), rb.data(), n);
        CHECK(ra == rb);

        xa = x;
        xb = x;
        a.clamp_nonneg(xa.data(), n);
        b.clamp_nonneg(xb.data(), n);
        CHECK(xa == xb);
    }
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar reference identities") {
    const auto& ops = scalar_ops();
    const std::vector<double> a{1, 2, 3}, b{4, -5, 6};
    CHECK(ops.dot(a.data(), b.data(), 3) == 12.0);
    CHECK(ops.nrm2sq(a.data(), 3) == 14.0);
    CHECK(ops.asum(b.data(), 3) == 15.0);
    std::vector<double> y = b;
    ops.axpy(2.0, a.data(), y.data(), 3);
    CHECK(y == std::vector<double>{6, -1, 12});
}

TEST_CASE("avx2 variants match the scalar reference") {
    const Ops* simd = avx2_ops();
    if (simd == nullptr || rssl::kern::active_backend() != rssl::kern::Backend::avx2) {
        MESSAGE("AVX2 not active on this host; equivalence not exercised");
        return;
    }
    check_tables_agree(*simd, scalar_ops());
}

TEST_CASE("active table matches the scalar reference") {
    check_tables_agree(rssl::kern::ops(), scalar_ops());
}

TEST_CASE("backend name is reported") {
    const auto name = rssl::kern::backend_name();
    CHECK((name == "avx2" || name == "scalar"));
}

} // TEST_SUITE
