#include "preord/simd.hpp"

#include <cstdlib>
#include <string_view>

namespace preord::simd {
namespace {

const Kernels& select() {
    const char* forced = std::getenv("PREORD_SIMD");
    if (forced && std::string_view(forced) == "scalar") return scalar_kernels();
    if (const Kernels* k = avx2_kernels()) return *k;
    return scalar_kernels();
}

}  // namespace

const Kernels& active() {
    static const Kernels& table = select();
    return table;
}

}  // namespace preord::simd
