#pragma once

#include <cstdint>
#include <vector>

#include "rssl/patching.hpp"

namespace rssl {

// Generator for verification corpora: smooth low-frequency backgrounds plus
// planted nonnegative vertical-bar outliers and Gaussian noise, clipped to
// [0, 1].  Fully determined by the seed.
struct SynthSpec {
    size_t patch_size = 32;
    size_t bg_rank = 6;        // number of zigzag DCT atoms in the background
    double outlier_prob = 0.12; // per-column planting probability
    double outlier_mag = 0.45;  // intensity offset of a planted bar
    double noise_sigma = 0.02;
    uint64_t seed = 0;
};

struct SynthSample {
    std::vector<double> x;        // observed patch, clipped to [0, 1]
    std::vector<uint8_t> gt_mask; // planted outlier support
    std::vector<double> clean;    // background without outliers or noise
};

std::vector<SynthSample> gen_corpus(const SynthSpec& spec, size_t count);

} // namespace rssl
