#include "preord/simd.hpp"

#include <bit>

namespace preord::simd {
namespace {

void or_into(std::span<Word> dst, std::span<const Word> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

void and_into(std::span<Word> dst, std::span<const Word> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

void or_and_into(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= a[i] & b[i];
}

bool is_subset(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool equal(std::span<const Word> a, std::span<const Word> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool any(std::span<const Word> a) {
    for (Word w : a)
        if (w) return true;
    return false;
}

std::size_t popcount(std::span<const Word> a) {
    std::size_t n = 0;
    for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels table{"scalar", or_into, and_into, or_and_into, is_subset, equal, any, popcount};
    return table;
}

}  // namespace preord::simd
