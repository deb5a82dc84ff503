#include "ontoembed/vec.hpp"

#if defined(__ARM_NEON) || defined(__aarch64__)

#include <arm_neon.h>

namespace ontoembed::vec::neon {

float dot(const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    float32x4_t acc = vdupq_n_f32(0.0f);
    for (; i + 4 <= n; i += 4) {
        acc = vmlaq_f32(acc, vld1q_f32(a + i), vld1q_f32(b + i));
    }
    float sum = vaddvq_f32(acc);
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void axpy(float alpha, const float* x, float* y, std::size_t n) {
    std::size_t i = 0;
    const float32x4_t va = vdupq_n_f32(alpha);
    for (; i + 4 <= n; i += 4) {
        float32x4_t vy = vld1q_f32(y + i);
        vst1q_f32(y + i, vmlaq_f32(vy, va, vld1q_f32(x + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(float alpha, float* x, std::size_t n) {
    std::size_t i = 0;
    const float32x4_t va = vdupq_n_f32(alpha);
    for (; i + 4 <= n; i += 4) {
        vst1q_f32(x + i, vmulq_f32(va, vld1q_f32(x + i)));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

float l2sq(const float* a, const float* b, std::size_t n) {
    std::size_t i = 0;
    float32x4_t acc = vdupq_n_f32(0.0f);
    for (; i + 4 <= n; i += 4) {
        float32x4_t d = vsubq_f32(vld1q_f32(a + i), vld1q_f32(b + i));
        acc = vmlaq_f32(acc, d, d);
    }
    float sum = vaddvq_f32(acc);
    for (; i < n; ++i) {
        const float d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

}  // namespace ontoembed::vec::neon

#endif
