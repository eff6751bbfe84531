#pragma once

#include <cstddef>
#include <vector>

#include "rssl/operators.hpp"

namespace rssl {

// 2-D DCT-II basis images on a patch_size x patch_size grid, enumerated in
// zigzag frequency order (JPEG scan).  Atom 0 is the constant (DC) image;
// atoms are unit-norm and mutually orthogonal by construction.
std::vector<double> dct_atom(size_t patch_size, size_t index);

// first `count` zigzag atoms as basis columns; count <= patch_size^2
BasisMatrix dct_basis(size_t patch_size, size_t count);

} // namespace rssl
