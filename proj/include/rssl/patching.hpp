#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace rssl {

// Row-major grayscale image with intensities in [0, 1].
struct GrayImage {
    size_t height = 0;
    size_t width = 0;
    std::vector<double> data;

    GrayImage() = default;
    GrayImage(size_t h, size_t w, double fill = 0.0) : height(h), width(w), data(h * w, fill) {}

    double& at(size_t r, size_t c) { return data[r * width + c]; }
    double at(size_t r, size_t c) const { return data[r * width + c]; }
};

// Row-major binary image, 0 = background, 1 = foreground.
struct BinaryImage {
    size_t height = 0;
    size_t width = 0;
    std::vector<uint8_t> data;

    BinaryImage() = default;
    BinaryImage(size_t h, size_t w, uint8_t fill = 0) : height(h), width(w), data(h * w, fill) {}

    uint8_t& at(size_t r, size_t c) { return data[r * width + c]; }
    uint8_t at(size_t r, size_t c) const { return data[r * width + c]; }
};

// Geometry of a non-overlapping tiling, including the replicated padding
// needed to reach a multiple of the patch size.
struct TileLayout {
    size_t patch_size = 0;
    size_t rows = 0;
    size_t cols = 0;
    size_t pad_bottom = 0;
    size_t pad_right = 0;
};

// Partition of patch pixel indices into groups; for this model the groups
// are patch columns.
struct GroupStructure {
    std::vector<std::vector<size_t>> groups;
    size_t total = 0; // indices covered: 0..total-1

    // validates that the groups are disjoint and exhaustive
    static GroupStructure from_groups(std::vector<std::vector<size_t>> groups);
};

// Overlapping patch extraction in top-left scan order, each patch
// vectorized row-major.
std::vector<std::vector<double>> extract_patches(const GrayImage& img, size_t size, size_t stride);

// Non-overlapping tiling with bottom/right edge replication.
std::pair<std::vector<std::vector<double>>, TileLayout> tile_blocks(const GrayImage& img, size_t size);

// Inverse of tile_blocks on the mask domain: stitches per-tile binary masks
// and crops the padding.
BinaryImage assemble_mask(const std::vector<std::vector<uint8_t>>& tiles, const TileLayout& layout);

// Column groups of a size-by-size row-major patch: g_m = {m, m+size, ...}.
GroupStructure column_groups(size_t size);

} // namespace rssl
