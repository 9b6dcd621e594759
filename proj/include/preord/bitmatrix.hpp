#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "preord/simd.hpp"

namespace preord {

using Index = std::size_t;
using simd::Word;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Dense boolean matrix stored as packed rows. Padding bits past cols() are
// always zero, so whole-row kernels can compare and count without masking.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), words_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    static BitMatrix full(std::size_t rows, std::size_t cols) {
        BitMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) m.fill_row(r);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t stride() const noexcept { return stride_; }

    bool test(std::size_t r, std::size_t c) const noexcept {
        return (words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value = true) noexcept {
        Word& w = words_[r * stride_ + c / kWordBits];
        const Word bit = Word{1} << (c % kWordBits);
        w = value ? (w | bit) : (w & ~bit);
    }

    std::span<const Word> row(std::size_t r) const noexcept { return {words_.data() + r * stride_, stride_}; }
    std::span<Word> row(std::size_t r) noexcept { return {words_.data() + r * stride_, stride_}; }

    void fill_row(std::size_t r) noexcept {
        auto w = row(r);
        for (std::size_t i = 0; i < stride_; ++i) w[i] = ~Word{0};
        if (cols_ % kWordBits) w[stride_ - 1] = (Word{1} << (cols_ % kWordBits)) - 1;
    }

    // Calls fn(c) for every set column of row r, in increasing order.
    template <class Fn>
    void for_each_in_row(std::size_t r, Fn&& fn) const {
        auto w = row(r);
        for (std::size_t i = 0; i < stride_; ++i) {
            Word bits = w[i];
            while (bits) {
                fn(i * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) for_each_in_row(r, [&](std::size_t c) { t.set(c, r); });
        return t;
    }

    std::size_t count() const { return simd::active().popcount(words_); }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && simd::active().equal(a.words_, b.words_);
    }

    // Lexicographic on (rows, cols, words); only used for dedup in ordered containers.
    friend bool operator<(const BitMatrix& a, const BitMatrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        return a.words_ < b.words_;
    }

    std::span<const Word> words() const noexcept { return words_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> words_;
};

}  // namespace preord
