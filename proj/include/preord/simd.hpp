#pragma once

// Word-parallel kernels over bitset rows.
//
// Every relation row is a span of 64-bit words. The scalar kernels are the
// reference; the AVX2 kernels must produce identical results for every input
// (tests/test_simd.cpp checks this). The active table is chosen once at
// startup from CPUID, or forced with PREORD_SIMD=scalar|avx2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace preord::simd {

using Word = std::uint64_t;

struct Kernels {
    std::string_view name;
    // dst |= src
    void (*or_into)(std::span<Word> dst, std::span<const Word> src);
    // dst &= src
    void (*and_into)(std::span<Word> dst, std::span<const Word> src);
    // dst |= a & b
    void (*or_and_into)(std::span<Word> dst, std::span<const Word> a, std::span<const Word> b);
    // a ⊆ b
    bool (*is_subset)(std::span<const Word> a, std::span<const Word> b);
    bool (*equal)(std::span<const Word> a, std::span<const Word> b);
    bool (*any)(std::span<const Word> a);
    std::size_t (*popcount)(std::span<const Word> a);
};

const Kernels& scalar_kernels();

// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const Kernels* avx2_kernels();

// Table selected for this process.
const Kernels& active();

}  // namespace preord::simd
