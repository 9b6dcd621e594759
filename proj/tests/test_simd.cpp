#include <doctest.h>

#include <random>
#include <vector>

#include "preord/bitmatrix.hpp"
#include "preord/simd.hpp"

using namespace preord;
using simd::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
    std::vector<Word> w(n);
    for (auto& x : w) {
        x = rng();
        // Thin out bits so subset and equality tests are not always false.
        for (int i = 0; i < density; ++i) x &= rng();
    }
    return w;
}

}  // namespace

TEST_CASE("scalar and avx2 kernels agree on every length up to 40 words") {
    const simd::Kernels& s = simd::scalar_kernels();
    const simd::Kernels* v = simd::avx2_kernels();
    if (!v) {
        MESSAGE("AVX2 kernels unavailable on this machine; only the scalar table is exercised");
        return;
    }
    std::mt19937_64 rng(7);
    for (std::size_t n = 0; n <= 40; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = random_words(rng, n, trial % 4);
            auto b = random_words(rng, n, trial % 3);
            if (trial % 5 == 0) b = a;
            if (trial % 7 == 0)
                for (std::size_t i = 0; i < n; ++i) b[i] |= a[i];
            const auto c = random_words(rng, n, 1);

            CHECK(s.is_subset(a, b) == v->is_subset(a, b));
            CHECK(s.equal(a, b) == v->equal(a, b));
            CHECK(s.any(a) == v->any(a));
            CHECK(s.popcount(a) == v->popcount(a));

            auto x1 = b, x2 = b;
            s.or_into(x1, a);
            v->or_into(x2, a);
            CHECK(x1 == x2);
            x1 = b, x2 = b;
            s.and_into(x1, a);
            v->and_into(x2, a);
            CHECK(x1 == x2);
            x1 = c, x2 = c;
            s.or_and_into(x1, a, b);
            v->or_and_into(x2, a, b);
            CHECK(x1 == x2);
        }
    }
}

TEST_CASE("scalar kernels follow their definitions") {
    const simd::Kernels& s = simd::scalar_kernels();
    std::vector<Word> a{0b1010, 0}, b{0b1110, 1};
    CHECK(s.is_subset(a, b));
    CHECK_FALSE(s.is_subset(b, a));
    CHECK(s.popcount(b) == 4);
    CHECK(s.any(a));
    CHECK_FALSE(s.any(std::vector<Word>{0, 0}));
    std::vector<Word> d{0b0001, 0};
    s.or_and_into(d, a, b);
    CHECK(d[0] == 0b1011);
}

TEST_CASE("bit matrix padding stays clear") {
    BitMatrix m = BitMatrix::full(3, 70);
    CHECK(m.count() == 210);
    BitMatrix t = m.transposed();
    CHECK(t.rows() == 70);
    CHECK(t.count() == 210);
    CHECK(BitMatrix::identity(65).count() == 65);
}

TEST_CASE("active table is one of the two") {
    const auto& k = simd::active();
    CHECK((k.name == simd::scalar_kernels().name || (simd::avx2_kernels() && k.name == simd::avx2_kernels()->name)));
}
