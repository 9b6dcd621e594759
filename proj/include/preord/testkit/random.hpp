#pragma once

// Deterministic random generators for fuzz suites. Everything is drawn from
// std::mt19937_64 through plain modular reduction so that a seed reproduces
// the same instances on every platform.

#include <cstddef>
#include <cstdint>
#include <random>

#include "preord/relation.hpp"

namespace preord::testkit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t bits() { return engine_(); }
    // Uniform-ish in [0, n); n > 0.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    // In [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool coin(unsigned num = 1, unsigned den = 2) { return engine_() % den < num; }

private:
    std::mt19937_64 engine_;
};

// Closure of a random edge set on n points. The edge budget is drawn from
// [0, 2n] so both sparse and nearly codiscrete results occur.
FinPreorder random_preorder(Rng& rng, std::size_t n);

// A random morphism into a fixed codomain: random values, then random domain
// edges kept only where they map to related points, then closed.
PreordMorphism random_morphism_into(Rng& rng, std::size_t dom_size, const FinPreorder& dst);
// A random morphism out of a fixed domain: the codomain order is the closure
// of the image of ρ plus a few random edges. Surjective about half the time.
PreordMorphism random_morphism_from(Rng& rng, const FinPreorder& src, std::size_t max_cod);
// Either of the two above, with carriers in [1, max_n].
PreordMorphism random_morphism(Rng& rng, std::size_t max_n);

// A surjective fully faithful map: the quotient by a random sub-equivalence of ~ρ.
PreordMorphism random_E_bar(Rng& rng, const FinPreorder& src);
// A surjective fully faithful map onto dst: a random surjection from dom_size
// points (at least dst.size()) with the inverse-image order.
PreordMorphism random_E_bar_onto(Rng& rng, const FinPreorder& dst, std::size_t dom_size);

// A commutative square e ∈ Ē, m ∈ M*, u = α ∘ e, v = m ∘ α where α is the
// hidden diagonal.
struct RandomSquare {
    PreordMorphism e, m, u, v, alpha;
};
RandomSquare random_orthogonality_square(Rng& rng, std::size_t max_n);

}  // namespace preord::testkit
