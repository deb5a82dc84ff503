#pragma once

#include <cstddef>
#include <string_view>

// Dense float kernels used by the embedding trainer, the classifiers and the
// distance diagnostics. Every operation has a scalar reference implementation
// and, where the hardware supports it, a SIMD variant (AVX2 on x86-64, NEON
// on aarch64). The variant is selected once at startup; tests pin backends
// explicitly and check the variants agree.

namespace ontoembed::vec {

enum class Backend { Auto, Scalar, Avx2, Neon };

// Active backend after dispatch ("scalar", "avx2" or "neon").
std::string_view active_backend();

// Force a specific backend. Returns false if it is unavailable on this
// machine (the previous selection is kept).
bool force_backend(Backend b);

float dot(const float* a, const float* b, std::size_t n);

// y += alpha * x
void axpy(float alpha, const float* x, float* y, std::size_t n);

// x *= alpha
void scale(float alpha, float* x, std::size_t n);

// Squared Euclidean distance.
float l2sq(const float* a, const float* b, std::size_t n);

namespace scalar {
float dot(const float* a, const float* b, std::size_t n);
void axpy(float alpha, const float* x, float* y, std::size_t n);
void scale(float alpha, float* x, std::size_t n);
float l2sq(const float* a, const float* b, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
float dot(const float* a, const float* b, std::size_t n);
void axpy(float alpha, const float* x, float* y, std::size_t n);
void scale(float alpha, float* x, std::size_t n);
float l2sq(const float* a, const float* b, std::size_t n);
}  // namespace avx2
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
namespace neon {
float dot(const float* a, const float* b, std::size_t n);
void axpy(float alpha, const float* x, float* y, std::size_t n);
void scale(float alpha, float* x, std::size_t n);
float l2sq(const float* a, const float* b, std::size_t n);
}  // namespace neon
#endif

}  // namespace ontoembed::vec
