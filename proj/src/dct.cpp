#include "rssl/dct.hpp"

#include <cmath>

#include "rssl/errors.hpp"

namespace rssl {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// (u, v) frequency pair of the idx-th zigzag position on a p-by-p grid
std::pair<size_t, size_t> zigzag_freq(size_t p, size_t idx) {
    size_t count = 0;
    for (size_t d = 0; d <= 2 * (p - 1); ++d) {
        const size_t lo = d >= p ? d - p + 1 : 0;
        const size_t hi = std::min(d, p - 1);
        const size_t len = hi - lo + 1;
        if (idx < count + len) {
            const size_t step = idx - count;
            const size_t u = d % 2 == 0 ? hi - step : lo + step;
            return {u, d - u};
        }
        count += len;
    }
    throw InvalidParameterError("zigzag_freq: index out of range");
}

double dct1d(size_t p, size_t freq, size_t pos) {
    if (freq == 0) return std::sqrt(1.0 / static_cast<double>(p));
    return std::sqrt(2.0 / static_cast<double>(p)) *
           std::cos(kPi * (2.0 * static_cast<double>(pos) + 1.0) * static_cast<double>(freq) /
                    (2.0 * static_cast<double>(p)));
}

} // namespace

std::vector<double> dct_atom(size_t patch_size, size_t index) {
    if (patch_size == 0) throw InvalidParameterError("dct_atom: patch_size must be positive");
    if (index >= patch_size * patch_size) throw InvalidParameterError("dct_atom: index out of range");
    const auto [u, v] = zigzag_freq(patch_size, index);
    std::vector<double> atom(patch_size * patch_size);
    for (size_t r = 0; r < patch_size; ++r) {
        const double tr = dct1d(patch_size, u, r);
        for (size_t c = 0; c < patch_size; ++c)
            atom[r * patch_size + c] = tr * dct1d(patch_size, v, c);
    }
    return atom;
}

BasisMatrix dct_basis(size_t patch_size, size_t count) {
    const size_t n = patch_size * patch_size;
    if (count > n) throw DimensionError("dct_basis: more atoms than pixels");
    BasisMatrix b(n, count);
    for (size_t j = 0; j < count; ++j) {
        const auto atom = dct_atom(patch_size, j);
        std::copy(atom.begin(), atom.end(), b.col(j));
    }
    return b;
}

} // namespace rssl
