#pragma once

#include <cstdint>
#include <vector>

#include "rssl/linalg.hpp"
#include "rssl/operators.hpp"
#include "rssl/patching.hpp"

namespace rssl {

struct HyperParams {
    double lambda1 = 0.5; // smoothness weight on the reconstruction gradient
    double lambda2 = 1.0; // elementwise sparsity weight on the outlier
    double lambda3 = 2.0; // group (column) weight on the outlier
    int max_iters = 100;
    double rel_tol = 1e-6;
    bool nonneg_s = true;

    void validate() const; // throws InvalidParameterError
};

// Result of the per-sample solve.  objective_trace records the objective
// after every half step (coefficient update, then outlier sweep), starting
// from the zero initialization; entries are non-increasing.
struct Decomposition {
    std::vector<double> alpha;
    std::vector<double> s;
    std::vector<double> objective_trace;
    int iterations = 0;
};

// 1/2 |x - P a - s|^2 + (l1/2) |D P a|^2 + l2 |s|_1 + l3 sum_m |s_gm|_2
double objective(const BasisMatrix& p, const std::vector<double>& alpha,
                 const std::vector<double>& s, const std::vector<double>& x,
                 const GroupStructure& groups, const HyperParams& hp,
                 const DerivativeOperator& dop);

// Cached factorization of the coefficient system P^t P + l1 (DP)^t (DP),
// built once per (P, lambda1) pair and shared across samples.  Immutable
// after construction.
class AlphaSystem {
public:
    AlphaSystem(const BasisMatrix& p, const DerivativeOperator& dop, double lambda1);

    // alpha = M^{-1} P^t w  for w = x - s
    void solve_into(const BasisMatrix& p, const double* w, double* alpha) const;
    size_t k() const { return chol_.dim(); }

private:
    la::DenseCholesky chol_;
};

// exact minimizer of 1/2 |x - P a - s|^2 + (l1/2) |D P a|^2 over a
std::vector<double> update_alpha(const BasisMatrix& p, const std::vector<double>& x,
                                 const std::vector<double>& s, const DerivativeOperator& dop,
                                 double lambda1);

// per-group outlier update: block_soft(r_gm - l2 * 1, l3), then projection of
// negative entries to zero when nonneg is set
std::vector<double> update_s_group(const std::vector<double>& r_gm, double lambda2,
                                   double lambda3, bool nonneg);

// Group-wise sweep over s given the residual r = x - P alpha.  Each group
// takes the update_s_group candidate only if it does not increase that
// group's objective 1/2 |r_g - s_g|^2 + l2 |s_g|_1 + l3 |s_g|_2, which keeps
// the objective trace non-increasing.
void sweep_s(const double* r, const GroupStructure& groups, const HyperParams& hp,
             std::vector<double>& s);

// Alternating solve from alpha = 0, s = 0 with P fixed.
Decomposition decompose(const BasisMatrix& p, const std::vector<double>& x,
                        const DerivativeOperator& dop, const GroupStructure& groups,
                        const HyperParams& hp);
// variant reusing a prebuilt coefficient factorization (e.g. across tiles)
Decomposition decompose(const BasisMatrix& p, const AlphaSystem& sys,
                        const std::vector<double>& x, const DerivativeOperator& dop,
                        const GroupStructure& groups, const HyperParams& hp);

// mask[i] = 1 iff s[i] > tau
std::vector<uint8_t> mask_from_s(const std::vector<double>& s, double tau);

} // namespace rssl
