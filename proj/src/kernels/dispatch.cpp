#include "rssl/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace rssl::kern {

namespace {

bool cpu_has_avx2_fma() {
#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend select_backend() {
    const char* forced = std::getenv("RSSL_KERNELS");
    if (forced && std::strcmp(forced, "scalar") == 0) return Backend::scalar;
    if (avx2_ops() != nullptr && cpu_has_avx2_fma()) return Backend::avx2;
    return Backend::scalar;
}

} // namespace

Backend active_backend() {
    static const Backend b = select_backend();
    return b;
}

const Ops& ops() {
    static const Ops& table =
        active_backend() == Backend::avx2 ? *avx2_ops() : scalar_ops();
    return table;
}

std::string backend_name() {
    return active_backend() == Backend::avx2 ? "avx2" : "scalar";
}

} // namespace rssl::kern
