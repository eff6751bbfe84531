// AVX2/FMA kernel variants.  This translation unit is compiled with
// -mavx2 -mfma; it must only be entered after a runtime CPUID check.

#include "rssl/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace rssl::kern {

namespace avx2 {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double dot(const double* a, const double* b, size_t n) {
    size_t i = 0;
    __m256d r0 = _mm256_setzero_pd(), r1 = r0;
    for (; i + 8 <= n; i += 8) {
        r0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), r0);
        r1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), r1);
    }
    for (; i + 4 <= n; i += 4)
        r0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), r0);
    double acc = hsum(_mm256_add_pd(r0, r1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double nrm2sq(const double* a, size_t n) {
    size_t i = 0;
    __m256d r0 = _mm256_setzero_pd(), r1 = r0;
    for (; i + 8 <= n; i += 8) {
        __m256d x0 = _mm256_loadu_pd(a + i);
        __m256d x1 = _mm256_loadu_pd(a + i + 4);
        r0 = _mm256_fmadd_pd(x0, x0, r0);
        r1 = _mm256_fmadd_pd(x1, x1, r1);
    }
    for (; i + 4 <= n; i += 4) {
        __m256d x0 = _mm256_loadu_pd(a + i);
        r0 = _mm256_fmadd_pd(x0, x0, r0);
    }
    double acc = hsum(_mm256_add_pd(r0, r1));
    for (; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

double asum(const double* a, size_t n) {
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    size_t i = 0;
    __m256d r0 = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4)
        r0 = _mm256_add_pd(r0, _mm256_and_pd(_mm256_loadu_pd(a + i), absmask));
    double acc = hsum(r0);
    for (; i < n; ++i) acc += a[i] < 0 ? -a[i] : a[i];
    return acc;
}

void axpy(double c, const double* x, double* y, size_t n) {
    const __m256d cc = _mm256_set1_pd(c);
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d y0 = _mm256_fmadd_pd(cc, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        __m256d y1 = _mm256_fmadd_pd(cc, _mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4));
        _mm256_storeu_pd(y + i, y0);
        _mm256_storeu_pd(y + i + 4, y1);
    }
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(cc, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += c * x[i];
}

void scal(double c, double* x, size_t n) {
    const __m256d cc = _mm256_set1_pd(c);
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(cc, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= c;
}

void sub(const double* a, const double* b, double* r, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(r + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) r[i] = a[i] - b[i];
}

void clamp_nonneg(double* x, size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_max_pd(zero, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i)
        if (x[i] < 0.0) x[i] = 0.0;
}

} // namespace avx2

const Ops* avx2_ops() {
    static const Ops table = {
        avx2::dot, avx2::nrm2sq, avx2::asum,   avx2::axpy,
        avx2::scal, avx2::sub,   avx2::clamp_nonneg,
    };
    return &table;
}

} // namespace rssl::kern

#else

namespace rssl::kern {
const Ops* avx2_ops() { return nullptr; }
} // namespace rssl::kern

#endif
