#include "ontoembed/vec.hpp"

namespace ontoembed::vec {

namespace {

struct Ops {
    float (*dot)(const float*, const float*, std::size_t);
    void (*axpy)(float, const float*, float*, std::size_t);
    void (*scale)(float, float*, std::size_t);
    float (*l2sq)(const float*, const float*, std::size_t);
    std::string_view name;
};

constexpr Ops kScalar{scalar::dot, scalar::axpy, scalar::scale, scalar::l2sq,
                      "scalar"};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Ops kAvx2{avx2::dot, avx2::axpy, avx2::scale, avx2::l2sq, "avx2"};
bool avx2_available() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
constexpr Ops kNeon{neon::dot, neon::axpy, neon::scale, neon::l2sq, "neon"};
#endif

const Ops* pick_default() {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return &kAvx2;
#endif
#if defined(__ARM_NEON) || defined(__aarch64__)
    return &kNeon;
#endif
    return &kScalar;
}

const Ops*& active() {
    static const Ops* ops = pick_default();
    return ops;
}

}  // namespace

std::string_view active_backend() { return active()->name; }

bool force_backend(Backend b) {
    switch (b) {
        case Backend::Auto:
            active() = pick_default();
            return true;
        case Backend::Scalar:
            active() = &kScalar;
            return true;
        case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            if (avx2_available()) {
                active() = &kAvx2;
                return true;
            }
#endif
            return false;
        case Backend::Neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
            active() = &kNeon;
            return true;
#else
            return false;
#endif
    }
    return false;
}

float dot(const float* a, const float* b, std::size_t n) {
    return active()->dot(a, b, n);
}
void axpy(float alpha, const float* x, float* y, std::size_t n) {
    active()->axpy(alpha, x, y, n);
}
void scale(float alpha, float* x, std::size_t n) {
    active()->scale(alpha, x, n);
}
float l2sq(const float* a, const float* b, std::size_t n) {
    return active()->l2sq(a, b, n);
}

}  // namespace ontoembed::vec
