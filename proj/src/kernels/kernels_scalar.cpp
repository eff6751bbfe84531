#include "rssl/kernels.hpp"

namespace rssl::kern {

namespace scalar {

double dot(const double* a, const double* b, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double nrm2sq(const double* a, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += a[i] * a[i];
    return acc;
}

double asum(const double* a, size_t n) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += a[i] < 0 ? -a[i] : a[i];
    return acc;
}

void axpy(double c, const double* x, double* y, size_t n) {
    for (size_t i = 0; i < n; ++i) y[i] += c * x[i];
}

void scal(double c, double* x, size_t n) {
    for (size_t i = 0; i < n; ++i) x[i] *= c;
}

void sub(const double* a, const double* b, double* r, size_t n) {
    for (size_t i = 0; i < n; ++i) r[i] = a[i] - b[i];
}

void clamp_nonneg(double* x, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (x[i] < 0.0) x[i] = 0.0;
}

} // namespace scalar

const Ops& scalar_ops() {
    static const Ops table = {
        scalar::dot, scalar::nrm2sq, scalar::asum,   scalar::axpy,
        scalar::scal, scalar::sub,   scalar::clamp_nonneg,
    };
    return table;
}

} // namespace rssl::kern
