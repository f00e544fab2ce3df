#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"

namespace tdsce::kernels {

const KernelTable* avx2() {
#if defined(TDSCE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok ? &avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable* chosen = [] {
        const char* env = std::getenv("TDSCE_SIMD");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar();
        const KernelTable* v = avx2();
        return v ? v : &scalar();
    }();
    return *chosen;
}

}  // namespace tdsce::kernels
