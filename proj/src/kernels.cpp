#include "tobsusy/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace tobsusy::kernels {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const Ops* select() {
    const char* env = std::getenv("TOBOGGAN_SUSY_SIMD");
    if (env != nullptr) {
        if (std::strcmp(env, "scalar") == 0) return &scalar::ops;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return &avx2::ops;
    }
    return avx2_supported() ? &avx2::ops : &scalar::ops;
}

}  // namespace

const Ops& active() {
    static const Ops* chosen = select();
    return *chosen;
}

std::string active_name() {
    return &active() == &avx2::ops ? "avx2" : "scalar";
}

}  // namespace tobsusy::kernels
