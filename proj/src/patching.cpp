#include "rssl/patching.hpp"

#include <algorithm>

#include "rssl/errors.hpp"

namespace rssl {

GroupStructure GroupStructure::from_groups(std::vector<std::vector<size_t>> groups) {
    size_t total = 0;
    for (const auto& g : groups) total += g.size();
    std::vector<uint8_t> seen(total, 0);
    for (const auto& g : groups)
        for (size_t idx : g) {
            if (idx >= total) throw InvalidInputError("GroupStructure: index out of range");
            if (seen[idx]) throw InvalidInputError("GroupStructure: duplicate index");
            seen[idx] = 1;
        }
    // total == sum of sizes and no duplicates => exhaustive
    GroupStructure gs;
    gs.groups = std::move(groups);
    gs.total = total;
    return gs;
}

std::vector<std::vector<double>> extract_patches(const GrayImage& img, size_t size, size_t stride) {
    if (size == 0 || stride == 0) throw InvalidParameterError("extract_patches: size and stride must be positive");
    if (size > img.height || size > img.width)
        throw InvalidInputError("extract_patches: patch larger than image");
    const size_t ny = (img.height - size) / stride + 1;
    const size_t nx = (img.width - size) / stride + 1;
    std::vector<std::vector<double>> patches;
    patches.reserve(ny * nx);
    for (size_t py = 0; py < ny; ++py)
        for (size_t px = 0; px < nx; ++px) {
            std::vector<double> patch(size * size);
            const size_t r0 = py * stride, c0 = px * stride;
            for (size_t r = 0; r < size; ++r)
                std::copy_n(img.data.data() + (r0 + r) * img.width + c0, size,
                            patch.data() + r * size);
            patches.push_back(std::move(patch));
        }
    return patches;
}

std::pair<std::vector<std::vector<double>>, TileLayout> tile_blocks(const GrayImage& img, size_t size) {
    if (size == 0) throw InvalidParameterError("tile_blocks: size must be positive");
    TileLayout layout;
    layout.patch_size = size;
    layout.rows = (img.height + size - 1) / size;
    layout.cols = (img.width + size - 1) / size;
    layout.pad_bottom = layout.rows * size - img.height;
    layout.pad_right = layout.cols * size - img.width;

    std::vector<std::vector<double>> tiles;
    tiles.reserve(layout.rows * layout.cols);
    for (size_t ty = 0; ty < layout.rows; ++ty)
        for (size_t tx = 0; tx < layout.cols; ++tx) {
            std::vector<double> tile(size * size);
            for (size_t r = 0; r < size; ++r) {
                const size_t sr = std::min(ty * size + r, img.height - 1); // replicate edge
                for (size_t c = 0; c < size; ++c) {
                    const size_t sc = std::min(tx * size + c, img.width - 1);
                    tile[r * size + c] = img.at(sr, sc);
                }
            }
            tiles.push_back(std::move(tile));
        }
    return {std::move(tiles), layout};
}

BinaryImage assemble_mask(const std::vector<std::vector<uint8_t>>& tiles, const TileLayout& layout) {
    if (tiles.size() != layout.rows * layout.cols)
        throw InvalidInputError("assemble_mask: tile count does not match layout");
    const size_t size = layout.patch_size;
    const size_t h = layout.rows * size - layout.pad_bottom;
    const size_t w = layout.cols * size - layout.pad_right;
    BinaryImage mask(h, w);
    for (size_t ty = 0; ty < layout.rows; ++ty)
        for (size_t tx = 0; tx < layout.cols; ++tx) {
            const auto& tile = tiles[ty * layout.cols + tx];
            if (tile.size() != size * size)
                throw InvalidInputError("assemble_mask: tile size does not match layout");
            for (size_t r = 0; r < size; ++r) {
                const size_t gr = ty * size + r;
                if (gr >= h) break;
                for (size_t c = 0; c < size; ++c) {
                    const size_t gc = tx * size + c;
                    if (gc >= w) break;
                    mask.at(gr, gc) = tile[r * size + c] ? 1 : 0;
                }
            }
        }
    return mask;
}

GroupStructure column_groups(size_t size) {
    if (size == 0) throw InvalidParameterError("column_groups: size must be positive");
    std::vector<std::vector<size_t>> groups(size);
    for (size_t m = 0; m < size; ++m) {
        groups[m].reserve(size);
        for (size_t r = 0; r < size; ++r) groups[m].push_back(m + r * size);
    }
    return GroupStructure::from_groups(std::move(groups));
}

} // namespace rssl
