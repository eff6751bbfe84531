#include "rssl/synth.hpp"

#include <algorithm>
#include <cmath>

#include "rssl/dct.hpp"
#include "rssl/errors.hpp"
#include "rssl/rng.hpp"

namespace rssl {

namespace {

double clip01(double v) { return std::min(1.0, std::max(0.0, v)); }

size_t uniform_index(rng::Engine& g, size_t lo, size_t hi) { // inclusive bounds
    const double u = rng::uniform01(g);
    return lo + std::min(hi - lo, static_cast<size_t>(u * static_cast<double>(hi - lo + 1)));
}

void validate(const SynthSpec& spec) {
    if (spec.patch_size == 0) throw InvalidParameterError("SynthSpec: patch_size must be positive");
    if (spec.bg_rank == 0 || spec.bg_rank > spec.patch_size * spec.patch_size)
        throw InvalidParameterError("SynthSpec: bg_rank out of range");
    if (spec.outlier_prob < 0.0 || spec.outlier_prob > 1.0)
        throw InvalidParameterError("SynthSpec: outlier_prob must lie in [0, 1]");
    if (spec.outlier_mag < 0.0) throw InvalidParameterError("SynthSpec: outlier_mag must be >= 0");
    if (spec.noise_sigma < 0.0) throw InvalidParameterError("SynthSpec: noise_sigma must be >= 0");
}

} // namespace

std::vector<SynthSample> gen_corpus(const SynthSpec& spec, size_t count) {
    validate(spec);
    const size_t p = spec.patch_size;
    const size_t n = p * p;

    std::vector<std::vector<double>> atoms;
    atoms.reserve(spec.bg_rank);
    for (size_t j = 0; j < spec.bg_rank; ++j) atoms.push_back(dct_atom(p, j));

    rng::Engine g(spec.seed);
    std::vector<SynthSample> corpus;
    corpus.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        SynthSample sample;
        sample.clean.assign(n, rng::uniform(g, 0.2, 0.4)); // DC level
        for (size_t j = 1; j < spec.bg_rank; ++j) {
            const double amp = 0.8 / static_cast<double>(1 + j);
            const double coeff = rng::uniform(g, -amp, amp);
            for (size_t t = 0; t < n; ++t) sample.clean[t] += coeff * atoms[j][t];
        }

        sample.x = sample.clean;
        sample.gt_mask.assign(n, 0);
        for (size_t col = 0; col < p; ++col) {
            if (rng::uniform01(g) >= spec.outlier_prob) continue;
            // vertical bar: contiguous run within the column
            const size_t len = uniform_index(g, std::max<size_t>(1, p / 4), std::max<size_t>(1, 3 * p / 4));
            const size_t row0 = uniform_index(g, 0, p - len);
            for (size_t r = row0; r < row0 + len; ++r) {
                sample.x[r * p + col] += spec.outlier_mag;
                if (spec.outlier_mag > 0.0) sample.gt_mask[r * p + col] = 1;
            }
        }

        for (size_t t = 0; t < n; ++t) {
            if (spec.noise_sigma > 0.0) sample.x[t] += spec.noise_sigma * rng::normal(g);
            sample.x[t] = clip01(sample.x[t]);
            sample.clean[t] = clip01(sample.clean[t]);
        }
        corpus.push_back(std::move(sample));
    }
    return corpus;
}

} // namespace rssl
