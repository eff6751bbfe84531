#include "rssl/learner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "rssl/dct.hpp"
#include "rssl/errors.hpp"
#include "rssl/kernels.hpp"
#include "rssl/rng.hpp"

namespace rssl {

namespace {

constexpr double kDeadAtom = 1e-12;

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

} // namespace

BasisMatrix init_subspace(size_t n, size_t k, InitKind init, uint64_t seed) {
    if (k == 0 || k > n) throw DimensionError("init_subspace: need 1 <= k <= n");
    if (init == InitKind::dct) {
        const auto p = static_cast<size_t>(std::lround(std::sqrt(static_cast<double>(n))));
        if (p * p != n) throw InvalidParameterError("init_subspace: dct needs a square patch");
        return gram_schmidt(dct_basis(p, k));
    }
    rng::Engine g(seed);
    std::vector<double> m(n * k);
    for (double& v : m) v = rng::normal(g);
    return gram_schmidt(m, n, k);
}

SmoothingSystem::SmoothingSystem(const DerivativeOperator& dop, double lambda1)
    : chol_([&] {
          if (lambda1 < 0.0) throw InvalidParameterError("SmoothingSystem: lambda1 must be >= 0");
          const size_t n = dop.n();
          const size_t bw = n > 1 ? std::min(dop.width(), n - 1) : 0;
          std::vector<std::vector<double>> bands(bw + 1);
          for (size_t d = 0; d <= bw; ++d) bands[d].assign(n - d, 0.0);
          for (size_t i = 0; i < n; ++i) bands[0][i] = 1.0 + lambda1 * dop.dtd_diag()[i];
          if (bw >= 1)
              for (size_t i = 0; i + 1 < n; ++i) bands[1][i] += lambda1 * dop.dtd_off1()[i];
          if (dop.width() <= bw)
              for (size_t i = 0; i + dop.width() < n; ++i)
                  bands[dop.width()][i] += lambda1 * dop.dtd_offw()[i];
          return la::BandedCholesky(std::move(bands), n, bw);
      }()) {}

void SmoothingSystem::solve_into(const double* b, double* x) const { chol_.solve_into(b, x); }

std::vector<double> update_column(size_t j, const BasisMatrix& p,
                                  const std::vector<std::vector<double>>& samples,
                                  const std::vector<std::vector<double>>& alphas,
                                  const std::vector<std::vector<double>>& outliers,
                                  const DerivativeOperator& dop, double lambda1,
                                  const SmoothingSystem* smooth) {
    if (j >= p.k) throw DimensionError("update_column: column index out of range");
    if (samples.size() != alphas.size() || samples.size() != outliers.size())
        throw DimensionError("update_column: corpus length mismatch");
    const size_t n = p.n;

    double energy = 0.0; // sum_i alpha_i(j)^2
    for (const auto& a : alphas) energy += a[j] * a[j];
    if (energy < kDeadAtom) return {p.col(j), p.col(j) + n};

    // v = sum_i alpha_i(j) * (P alpha_i - p_j alpha_i(j)); the remaining part
    // of beta_j is sum_i alpha_i(j) (x_i - s_i) - v - l1 D^t D v
    std::vector<double> beta(n, 0.0), v(n, 0.0), recon(n);
    for (size_t i = 0; i < samples.size(); ++i) {
        const double aj = alphas[i][j];
        if (aj == 0.0) continue;
        kern::axpy(aj, samples[i].data(), beta.data(), n);
        kern::axpy(-aj, outliers[i].data(), beta.data(), n);
        la::matvec(p.data.data(), n, p.k, alphas[i].data(), recon.data());
        kern::axpy(-aj, p.col(j), recon.data(), n);
        kern::axpy(aj, recon.data(), v.data(), n);
    }
    kern::axpy(-1.0, v.data(), beta.data(), n);
    if (lambda1 > 0.0) {
        std::vector<double> dtdv(n);
        dop.apply_dtd(v.data(), dtdv.data());
        kern::axpy(-lambda1, dtdv.data(), beta.data(), n);
    }

    std::vector<double> col(n);
    if (smooth) {
        smooth->solve_into(beta.data(), col.data());
    } else {
        const SmoothingSystem local(dop, lambda1);
        local.solve_into(beta.data(), col.data());
    }
    kern::scal(1.0 / energy, col.data(), n);
    return col;
}

double dataset_objective(const BasisMatrix& p, const std::vector<std::vector<double>>& samples,
                         const std::vector<std::vector<double>>& alphas,
                         const std::vector<std::vector<double>>& outliers,
                         const GroupStructure& groups, const HyperParams& hp,
                         const DerivativeOperator& dop) {
    double total = 0.0;
    for (size_t i = 0; i < samples.size(); ++i)
        total += objective(p, alphas[i], outliers[i], samples[i], groups, hp, dop);
    return total;
}

std::pair<BasisMatrix, TrainReport> train(const std::vector<std::vector<double>>& samples,
                                          const TrainConfig& cfg, const DerivativeOperator& dop,
                                          const GroupStructure& groups) {
    const size_t n = dop.n();
    cfg.hp.validate();
    if (cfg.outer_iters < 1) throw InvalidParameterError("train: outer_iters must be >= 1");
    if (cfg.k == 0 || cfg.k > n) throw DimensionError("train: need 1 <= k <= N");
    if (samples.size() < cfg.k) throw InvalidInputError("train: fewer samples than subspace dimension");
    if (groups.total != n) throw DimensionError("train: group structure does not cover the patch");
    for (const auto& x : samples) {
        if (x.size() != n) throw InvalidInputError("train: sample length != height*width");
        if (!all_finite(x)) throw InvalidInputError("train: non-finite sample");
    }

    const auto t0 = std::chrono::steady_clock::now();
    const size_t nd = samples.size(), k = cfg.k;
    const double l1 = cfg.hp.lambda1;

    BasisMatrix p = init_subspace(n, k, cfg.init, cfg.seed);
    std::vector<std::vector<double>> alphas(nd, std::vector<double>(k, 0.0));
    std::vector<std::vector<double>> ss(nd, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> recons(nd, std::vector<double>(n, 0.0));

    const SmoothingSystem smooth(dop, l1);
    AlphaSystem alpha_sys(p, dop, l1);

    auto corpus_objective = [&] {
        return dataset_objective(p, samples, alphas, ss, groups, cfg.hp, dop);
    };

    TrainReport report;
    std::vector<double> w(n), r(n), gcol(k), u(n), beta(n), dtdu(n), pnew(n);
    double prev = 0.0;
    for (int iter = 1; iter <= cfg.outer_iters; ++iter) {
        report.objective_start_per_iter.push_back(corpus_objective());

        // coefficient sweep
        for (size_t i = 0; i < nd; ++i) {
            kern::sub(samples[i].data(), ss[i].data(), w.data(), n);
            alpha_sys.solve_into(p, w.data(), alphas[i].data());
            la::matvec(p.data.data(), n, k, alphas[i].data(), recons[i].data());
        }
        report.objective_after_alpha_per_iter.push_back(corpus_objective());

        // outlier sweep
        for (size_t i = 0; i < nd; ++i) {
            kern::sub(samples[i].data(), recons[i].data(), r.data(), n);
            sweep_s(r.data(), groups, cfg.hp, ss[i]);
        }
        const double f = corpus_objective();
        report.objective_per_iter.push_back(f);

        // cyclic column sweep through the coefficient Gram matrix:
        //   beta_j = Q_j - u - l1 D^t D u,  u = P G_j - G_jj p_j
        // with G = sum_i alpha_i alpha_i^t and Q = sum_i (x_i - s_i) alpha_i^t
        std::vector<double> gram(k * k, 0.0), q(n * k, 0.0);
        for (size_t i = 0; i < nd; ++i) {
            const auto& a = alphas[i];
            for (size_t c = 0; c < k; ++c) {
                if (a[c] == 0.0) continue;
                for (size_t rr = 0; rr < k; ++rr) gram[c * k + rr] += a[c] * a[rr];
            }
            kern::sub(samples[i].data(), ss[i].data(), w.data(), n);
            for (size_t c = 0; c < k; ++c)
                if (a[c] != 0.0) kern::axpy(a[c], w.data(), q.data() + c * n, n);
        }
        for (size_t j = 0; j < k; ++j) {
            const double energy = gram[j * k + j];
            if (energy < kDeadAtom) continue;
            std::copy_n(gram.data() + j * k, k, gcol.data());
            la::matvec(p.data.data(), n, k, gcol.data(), u.data());
            kern::axpy(-energy, p.col(j), u.data(), n);
            kern::sub(q.data() + j * n, u.data(), beta.data(), n);
            if (l1 > 0.0) {
                dop.apply_dtd(u.data(), dtdu.data());
                kern::axpy(-l1, dtdu.data(), beta.data(), n);
            }
            smooth.solve_into(beta.data(), pnew.data());
            kern::scal(1.0 / energy, pnew.data(), n);
            std::copy_n(pnew.data(), n, p.col(j));
        }

        p = gram_schmidt(p);
        report.orthonormality_residual_per_iter.push_back(orthonormality_residual(p));
        alpha_sys = AlphaSystem(p, dop, l1);

        report.seconds_per_iter.push_back(
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        if (iter > 1 && std::abs(prev - f) <= cfg.hp.rel_tol * std::abs(prev)) break;
        prev = f;
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(p), std::move(report)};
}

} // namespace rssl
