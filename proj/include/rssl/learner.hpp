#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rssl/decompose.hpp"
#include "rssl/linalg.hpp"
#include "rssl/operators.hpp"
#include "rssl/patching.hpp"

namespace rssl {

enum class InitKind { dct, random };

struct TrainConfig {
    size_t k = 64;
    HyperParams hp{0.5, 1.0, 2.0, 100, 1e-4, true}; // rel_tol here stops the outer loop
    int outer_iters = 50;
    uint64_t seed = 0;
    InitKind init = InitKind::dct;
};

struct TrainReport {
    std::vector<double> objective_per_iter;             // after the outlier sweep
    std::vector<double> objective_start_per_iter;       // entering the iteration
    std::vector<double> objective_after_alpha_per_iter; // after the coefficient sweep
    std::vector<double> orthonormality_residual_per_iter;
    std::vector<double> seconds_per_iter; // cumulative wall clock
    double wall_time_seconds = 0.0;
};

// dct: first k zigzag DCT-II atoms (requires square patch geometry);
// random: seeded Gaussian matrix.  Both pass through gram_schmidt and are
// deterministic given (n, k, init, seed).
BasisMatrix init_subspace(size_t n, size_t k, InitKind init, uint64_t seed);

// Cached factorization of (I + lambda1 D^t D), shared by all column updates
// of one patch geometry.
class SmoothingSystem {
public:
    SmoothingSystem(const DerivativeOperator& dop, double lambda1);
    void solve_into(const double* b, double* x) const;
    size_t n() const { return chol_.dim(); }

private:
    la::BandedCholesky chol_;
};

// Closed-form update of column j with every other column held fixed:
//   p_j = (I + l1 D^t D)^{-1} beta_j / sum_i alpha_i(j)^2
// where beta_j accumulates the per-sample residuals against the other
// columns.  Returns the existing column unchanged when sum_i alpha_i(j)^2
// falls below 1e-12.
std::vector<double> update_column(size_t j, const BasisMatrix& p,
                                  const std::vector<std::vector<double>>& samples,
                                  const std::vector<std::vector<double>>& alphas,
                                  const std::vector<std::vector<double>>& outliers,
                                  const DerivativeOperator& dop, double lambda1,
                                  const SmoothingSystem* smooth = nullptr);

// total objective over the corpus
double dataset_objective(const BasisMatrix& p, const std::vector<std::vector<double>>& samples,
                         const std::vector<std::vector<double>>& alphas,
                         const std::vector<std::vector<double>>& outliers,
                         const GroupStructure& groups, const HyperParams& hp,
                         const DerivativeOperator& dop);

// Alternating optimization: per-sample coefficient updates, guarded
// group-wise outlier sweeps, a cyclic pass of column updates, then
// Gram-Schmidt re-orthonormalization and a refresh of the cached
// coefficient factorization.
std::pair<BasisMatrix, TrainReport> train(const std::vector<std::vector<double>>& samples,
                                          const TrainConfig& cfg, const DerivativeOperator& dop,
                                          const GroupStructure& groups);

} // namespace rssl
