#include "rssl/model_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "rssl/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "model io assumes a little-endian host");
static_assert(sizeof(double) == 8);

namespace rssl {

namespace {

constexpr char kMagic[4] = {'R', 'S', 'S', 'L'};
constexpr uint32_t kVersion = 1;

void put_u32(std::ostream& out, uint32_t v) {
    char buf[4];
    std::memcpy(buf, &v, 4);
    out.write(buf, 4);
}

uint32_t get_u32(std::istream& in) {
    char buf[4];
    in.read(buf, 4);
    if (!in) throw FormatError("model: truncated header");
    uint32_t v;
    std::memcpy(&v, buf, 4);
    return v;
}

} // namespace

void save_model(const std::string& path, const Model& model) {
    const auto& b = model.basis;
    if (b.n != model.patch_size * model.patch_size)
        throw InvalidInputError("save_model: basis rows != patch_size^2");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(kMagic, 4);
    put_u32(out, kVersion);
    put_u32(out, static_cast<uint32_t>(b.n));
    put_u32(out, static_cast<uint32_t>(b.k));
    put_u32(out, static_cast<uint32_t>(model.patch_size));
    out.write(reinterpret_cast<const char*>(b.data.data()),
              static_cast<std::streamsize>(b.data.size() * sizeof(double)));
    if (!out) throw IoError("write failed on " + path);
}

Model load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw FormatError("model: bad magic, not an RSSL file");
    const uint32_t version = get_u32(in);
    if (version != kVersion) throw FormatError("model: unsupported version " + std::to_string(version));
    const uint32_t n = get_u32(in);
    const uint32_t k = get_u32(in);
    const uint32_t patch_size = get_u32(in);
    if (n == 0 || k == 0 || k > n) throw FormatError("model: invalid dimensions");
    if (static_cast<uint64_t>(patch_size) * patch_size != n)
        throw FormatError("model: n != patch_size^2");

    Model model;
    model.patch_size = patch_size;
    model.basis = BasisMatrix(n, k);
    in.read(reinterpret_cast<char*>(model.basis.data.data()),
            static_cast<std::streamsize>(model.basis.data.size() * sizeof(double)));
    if (!in || in.gcount() != static_cast<std::streamsize>(model.basis.data.size() * sizeof(double)))
        throw FormatError("model: truncated payload");

    if (orthonormality_residual(model.basis) > 1e-6)
        throw FormatError("model: basis is not orthonormal");
    return model;
}

} // namespace rssl
