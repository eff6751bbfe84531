#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rssl/patching.hpp"

namespace rssl {

// Pixel-level confusion counts with derived ratios; a foreground pixel
// counts as positive.  Zero-denominator ratios are defined as 0.
struct SegMetrics {
    uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

SegMetrics confusion(const BinaryImage& pred, const BinaryImage& gt);

// harmonic mean 2pr/(p+r); 0 when p + r = 0
double f1_of(double precision, double recall);

// CSV report, one row per algorithm: algorithm,precision,recall,f1
std::string report_csv(const std::vector<std::pair<std::string, SegMetrics>>& rows);

} // namespace rssl
