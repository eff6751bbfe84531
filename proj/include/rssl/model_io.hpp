#pragma once

#include <string>

#include "rssl/operators.hpp"

namespace rssl {

// Binary model container.  Layout, all little-endian:
//   magic   4 bytes "RSSL"
//   version u32 = 1
//   n       u32 (pixels per patch, = patch_size^2)
//   k       u32 (subspace dimension)
//   patch_size u32
//   payload n*k float64, column-major
struct Model {
    BasisMatrix basis;
    size_t patch_size = 0;
};

void save_model(const std::string& path, const Model& model);

// Validates magic, version, n = patch_size^2 and orthonormality of the
// basis (|P^t P - I|_inf <= 1e-6) before returning.
Model load_model(const std::string& path);

} // namespace rssl
