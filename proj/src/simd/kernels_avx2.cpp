#include "preord/simd.hpp"

#include <bit>

#if defined(PREORD_HAVE_AVX2)
#include <immintrin.h>

namespace preord::simd {
namespace {

// 4 words per __m256i; the tail is finished with scalar code.
constexpr std::size_t kLane = 4;

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

void or_into(std::span<Word> dst, std::span<const Word> src) {
    std::size_t i = 0;
    for (; i + kLane <= dst.size(); i += kLane)
        store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), load(src.data() + i)));
    for (; i < dst.size(); ++i) dst[i] |= src[i];
}

void and_into(std::span<Word> dst, std::span<const Word> src) {
    std::size_t i = 0;
    for (; i + kLane <= dst.size(); i += kLane)
        store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), load(src.data() + i)));
    for (; i < dst.size(); ++i) dst[i] &= src[i];
}

void or_and_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
    std::size_t i = 0;
    for (; i + kLane <= dst.size(); i += kLane) {
        __m256i ab = _mm256_and_si256(load(a.data() + i), load(b.data() + i));
        store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), ab));
    }
    for (; i < dst.size(); ++i) dst[i] |= a[i] & b[i];
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
    std::size_t i = 0;
    for (; i + kLane <= a.size(); i += kLane) {
        // testc(b, a) is 1 iff (~b & a) == 0
        if (!_mm256_testc_si256(load(b.data() + i), load(a.data() + i))) return false;
    }
    for (; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool equal(std::span<const Word> a, std::span<const Word> b) {
    std::size_t i = 0;
    for (; i + kLane <= a.size(); i += kLane) {
        __m256i diff = _mm256_xor_si256(load(a.data() + i), load(b.data() + i));
        if (!_mm256_testz_si256(diff, diff)) return false;
    }
    for (; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool any(std::span<const Word> a) {
    std::size_t i = 0;
    for (; i + kLane <= a.size(); i += kLane) {
        __m256i v = load(a.data() + i);
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < a.size(); ++i)
        if (a[i]) return true;
    return false;
}

std::size_t popcount(std::span<const Word> a) {
    // No vector popcount in AVX2; unrolled scalar popcnt is the fastest option here.
    std::size_t n0 = 0, n1 = 0, n2 = 0, n3 = 0, i = 0;
    for (; i + kLane <= a.size(); i += kLane) {
        n0 += static_cast<std::size_t>(std::popcount(a[i]));
        n1 += static_cast<std::size_t>(std::popcount(a[i + 1]));
        n2 += static_cast<std::size_t>(std::popcount(a[i + 2]));
        n3 += static_cast<std::size_t>(std::popcount(a[i + 3]));
    }
    for (; i < a.size(); ++i) n0 += static_cast<std::size_t>(std::popcount(a[i]));
    return n0 + n1 + n2 + n3;
}

}  // namespace

const Kernels* avx2_kernels() {
    static const Kernels table{"avx2", or_into, and_into, or_and_into, is_subset, equal, any, popcount};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &table : nullptr;
}

}  // namespace preord::simd

#else

namespace preord::simd {
const Kernels* avx2_kernels() { return nullptr; }
}  // namespace preord::simd

#endif
