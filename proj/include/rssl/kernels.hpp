#pragma once

#include <cstddef>
#include <string>

// Low-level vector kernels used by every numerical module.  Each kernel has
// a scalar reference implementation and (on x86-64) an AVX2/FMA variant.
// The active table is chosen once at startup from CPUID; the scalar table
// stays reachable so the variants can be equivalence-tested against it.

namespace rssl::kern {

struct Ops {
    // sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, size_t n);
    // sum_i a[i]^2
    double (*nrm2sq)(const double* a, size_t n);
    // sum_i |a[i]|
    double (*asum)(const double* a, size_t n);
    // y[i] += c * x[i]
    void (*axpy)(double c, const double* x, double* y, size_t n);
    // x[i] *= c
    void (*scal)(double c, double* x, size_t n);
    // r[i] = a[i] - b[i]
    void (*sub)(const double* a, const double* b, double* r, size_t n);
    // x[i] = max(x[i], 0)
    void (*clamp_nonneg)(double* x, size_t n);
};

enum class Backend { scalar, avx2 };

// Reference table (always available).
const Ops& scalar_ops();

// AVX2 table, or nullptr when not compiled in / not supported by the CPU.
const Ops* avx2_ops();

// Table selected at startup: AVX2 when the CPU supports it, else scalar.
// RSSL_KERNELS=scalar in the environment forces the reference path.
const Ops& ops();

Backend active_backend();
std::string backend_name();

// Convenience forwarders through the active table.
inline double dot(const double* a, const double* b, size_t n) { return ops().dot(a, b, n); }
inline double nrm2sq(const double* a, size_t n) { return ops().nrm2sq(a, n); }
inline double asum(const double* a, size_t n) { return ops().asum(a, n); }
inline void axpy(double c, const double* x, double* y, size_t n) { ops().axpy(c, x, y, n); }
inline void scal(double c, double* x, size_t n) { ops().scal(c, x, n); }
inline void sub(const double* a, const double* b, double* r, size_t n) { ops().sub(a, b, r, n); }
inline void clamp_nonneg(double* x, size_t n) { ops().clamp_nonneg(x, n); }

} // namespace rssl::kern
