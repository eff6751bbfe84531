#include "rssl/decompose.hpp"

#include <algorithm>
#include <cmath>

#include "rssl/errors.hpp"
#include "rssl/kernels.hpp"

namespace rssl {

namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// objective given the precomputed reconstruction P alpha
double objective_from_recon(const std::vector<double>& recon, const std::vector<double>& s,
                            const std::vector<double>& x, const GroupStructure& groups,
                            const HyperParams& hp, const DerivativeOperator& dop) {
    const size_t n = x.size();
    double data_term = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double r = x[i] - recon[i] - s[i];
        data_term += r * r;
    }
    double value = 0.5 * data_term;
    if (hp.lambda1 > 0.0) value += 0.5 * hp.lambda1 * dop.grad_norm_sq(recon.data());
    if (hp.lambda2 > 0.0) value += hp.lambda2 * kern::asum(s.data(), n);
    if (hp.lambda3 > 0.0) {
        double group_term = 0.0;
        for (const auto& g : groups.groups) {
            double sq = 0.0;
            for (size_t idx : g) sq += s[idx] * s[idx];
            group_term += std::sqrt(sq);
        }
        value += hp.lambda3 * group_term;
    }
    return value;
}

} // namespace

void HyperParams::validate() const {
    if (lambda1 < 0.0 || lambda2 < 0.0 || lambda3 < 0.0)
        throw InvalidParameterError("HyperParams: lambdas must be >= 0");
    if (max_iters < 1) throw InvalidParameterError("HyperParams: max_iters must be >= 1");
    if (!(rel_tol > 0.0)) throw InvalidParameterError("HyperParams: rel_tol must be > 0");
}

double objective(const BasisMatrix& p, const std::vector<double>& alpha,
                 const std::vector<double>& s, const std::vector<double>& x,
                 const GroupStructure& groups, const HyperParams& hp,
                 const DerivativeOperator& dop) {
    if (alpha.size() != p.k || s.size() != p.n || x.size() != p.n || dop.n() != p.n ||
        groups.total != p.n)
        throw DimensionError("objective: inconsistent dimensions");
    hp.validate();
    std::vector<double> recon(p.n);
    la::matvec(p.data.data(), p.n, p.k, alpha.data(), recon.data());
    return objective_from_recon(recon, s, x, groups, hp, dop);
}

AlphaSystem::AlphaSystem(const BasisMatrix& p, const DerivativeOperator& dop, double lambda1)
    : chol_([&] {
          if (dop.n() != p.n) throw DimensionError("AlphaSystem: operator size != basis rows");
          if (lambda1 < 0.0) throw InvalidParameterError("AlphaSystem: lambda1 must be >= 0");
          const size_t n = p.n, k = p.k;
          // M = P^t P + l1 [(dx P)^t (dx P) + (dy P)^t (dy P)]
          std::vector<double> m(k * k, 0.0);
          std::vector<double> dxp(n * k), dyp(n * k);
          for (size_t j = 0; j < k; ++j) {
              dop.apply_dx(p.col(j), dxp.data() + j * n);
              dop.apply_dy(p.col(j), dyp.data() + j * n);
          }
          for (size_t i = 0; i < k; ++i)
              for (size_t j = i; j < k; ++j) {
                  double v = kern::dot(p.col(i), p.col(j), n);
                  if (lambda1 > 0.0)
                      v += lambda1 * (kern::dot(dxp.data() + i * n, dxp.data() + j * n, n) +
                                      kern::dot(dyp.data() + i * n, dyp.data() + j * n, n));
                  m[i * k + j] = v;
                  m[j * k + i] = v;
              }
          return la::DenseCholesky(std::move(m), k);
      }()) {}

void AlphaSystem::solve_into(const BasisMatrix& p, const double* w, double* alpha) const {
    std::vector<double> rhs(p.k);
    la::matvec_t(p.data.data(), p.n, p.k, w, rhs.data());
    chol_.solve_into(rhs.data(), alpha);
}

std::vector<double> update_alpha(const BasisMatrix& p, const std::vector<double>& x,
                                 const std::vector<double>& s, const DerivativeOperator& dop,
                                 double lambda1) {
    if (x.size() != p.n || s.size() != p.n) throw DimensionError("update_alpha: vector length != basis rows");
    const AlphaSystem sys(p, dop, lambda1);
    std::vector<double> w(p.n), alpha(p.k);
    kern::sub(x.data(), s.data(), w.data(), p.n);
    sys.solve_into(p, w.data(), alpha.data());
    return alpha;
}

std::vector<double> update_s_group(const std::vector<double>& r_gm, double lambda2,
                                   double lambda3, bool nonneg) {
    if (lambda2 < 0.0 || lambda3 < 0.0)
        throw InvalidParameterError("update_s_group: lambdas must be >= 0");
    std::vector<double> s(r_gm.size());
    for (size_t i = 0; i < r_gm.size(); ++i) s[i] = r_gm[i] - lambda2;
    block_soft_inplace(s.data(), s.size(), lambda3);
    if (nonneg) kern::clamp_nonneg(s.data(), s.size());
    return s;
}

void sweep_s(const double* r, const GroupStructure& groups, const HyperParams& hp,
             std::vector<double>& s) {
    std::vector<double> rg, cand;
    for (const auto& g : groups.groups) {
        rg.resize(g.size());
        for (size_t t = 0; t < g.size(); ++t) rg[t] = r[g[t]];
        cand = update_s_group(rg, hp.lambda2, hp.lambda3, hp.nonneg_s);

        auto group_obj = [&](auto&& value_at) {
            double quad = 0.0, l1 = 0.0, sq = 0.0;
            for (size_t t = 0; t < g.size(); ++t) {
                const double v = value_at(t);
                const double d = rg[t] - v;
                quad += d * d;
                l1 += std::abs(v);
                sq += v * v;
            }
            return 0.5 * quad + hp.lambda2 * l1 + hp.lambda3 * std::sqrt(sq);
        };
        const double f_old = group_obj([&](size_t t) { return s[g[t]]; });
        const double f_new = group_obj([&](size_t t) { return cand[t]; });
        if (f_new <= f_old)
            for (size_t t = 0; t < g.size(); ++t) s[g[t]] = cand[t];
    }
}

Decomposition decompose(const BasisMatrix& p, const AlphaSystem& sys,
                        const std::vector<double>& x, const DerivativeOperator& dop,
                        const GroupStructure& groups, const HyperParams& hp) {
    if (x.size() != p.n || dop.n() != p.n || groups.total != p.n)
        throw DimensionError("decompose: inconsistent dimensions");
    hp.validate();
    if (!all_finite(x)) throw InvalidInputError("decompose: non-finite sample");

    const size_t n = p.n;
    Decomposition out;
    out.alpha.assign(p.k, 0.0);
    out.s.assign(n, 0.0);

    std::vector<double> recon(n, 0.0), w(n), r(n);
    out.objective_trace.push_back(objective_from_recon(recon, out.s, x, groups, hp, dop));
    double prev_round = out.objective_trace.front();

    for (int iter = 1; iter <= hp.max_iters; ++iter) {
        kern::sub(x.data(), out.s.data(), w.data(), n);
        sys.solve_into(p, w.data(), out.alpha.data());
        la::matvec(p.data.data(), n, p.k, out.alpha.data(), recon.data());
        out.objective_trace.push_back(objective_from_recon(recon, out.s, x, groups, hp, dop));

        kern::sub(x.data(), recon.data(), r.data(), n);
        sweep_s(r.data(), groups, hp, out.s);
        const double f = objective_from_recon(recon, out.s, x, groups, hp, dop);
        out.objective_trace.push_back(f);

        out.iterations = iter;
        if (std::abs(prev_round - f) <= hp.rel_tol * std::abs(prev_round)) break;
        prev_round = f;
    }
    return out;
}

Decomposition decompose(const BasisMatrix& p, const std::vector<double>& x,
                        const DerivativeOperator& dop, const GroupStructure& groups,
                        const HyperParams& hp) {
    const AlphaSystem sys(p, dop, hp.lambda1);
    return decompose(p, sys, x, dop, groups, hp);
}

std::vector<uint8_t> mask_from_s(const std::vector<double>& s, double tau) {
    std::vector<uint8_t> mask(s.size());
    for (size_t i = 0; i < s.size(); ++i) mask[i] = s[i] > tau ? 1 : 0;
    return mask;
}

} // namespace rssl
