#pragma once

// Morphism classes of the Galois structure induced by the partial-order
// reflection, the reflective (E, M) and monotone-light (Ē, M*) factorization
// systems, effective-descent covers and the stable-units check.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "preord/pretorsion.hpp"
#include "preord/relation.hpp"

namespace preord {

// One classifier outcome. When value is false, witness holds the offending
// element tuple and reason says how to read it.
struct Flag {
    bool value = false;
    std::vector<Index> witness;
    std::string reason;

    static Flag yes() { return {true, {}, {}}; }
    static Flag no(std::vector<Index> witness, std::string reason) {
        return {false, std::move(witness), std::move(reason)};
    }
    explicit operator bool() const noexcept { return value; }
};

Flag is_surjective(const PreordMorphism& f);
// a ρ a′ ⇔ f(a) σ f(a′)
Flag is_fully_faithful(const PreordMorphism& f);
// surjective and σ = f(ρ)
Flag is_regular_epi(const PreordMorphism& f);
// fully faithful and F(f) a regular epimorphism of the quotients
Flag in_E(const PreordMorphism& f);
// (f, f̂) : (A, ~ρ) → (B, ~σ) is a discrete fibration
Flag in_M(const PreordMorphism& f);
// surjective and fully faithful
Flag in_E_bar(const PreordMorphism& f);
// every fibre (f⁻¹(b), ρ) is a partial order
Flag in_M_star(const PreordMorphism& f);
// Ker_N(f) = (A, ρ ∧ Eq(f)) is a partial order
Flag in_M_star_by_kernel(const PreordMorphism& f);
// every chain b₁ σ b₂ σ b₃ lifts to e₁ ρ e₂ ρ e₃ over it
Flag is_effective_descent(const PreordMorphism& f);

// Alternative routes for cross-checking.
bool reflects_to_isomorphism(const PreordMorphism& f);  // F(f) is an isomorphism
bool in_M_by_naturality_square(const PreordMorphism& f);  // unit naturality square is a pullback
bool in_E_bar_by_kernel(const PreordMorphism& f);       // surjective, Ker_N(f) = (A, Eq(f)), f(ρ) = σ
bool in_E_bar_by_regular_epi(const PreordMorphism& f);  // Eq(f) ⊆ ρ and regular epi

struct MorphismClassification {
    Flag surjective;
    Flag fully_faithful;
    Flag regular_epi;
    Flag in_E;
    Flag in_M;
    Flag in_E_bar;
    Flag in_M_star;
    Flag effective_descent;
    bool in_M_star_by_kernel = false;
};

MorphismClassification classify(const PreordMorphism& f);

enum class FactorizationSystem { reflective, monotone_light };

const char* to_string(FactorizationSystem s);

struct FactorizationResult {
    FinPreorder mid;
    PreordMorphism e;  // src → mid
    PreordMorphism m;  // mid → dst
    FactorizationSystem system = FactorizationSystem::reflective;
    Flag e_certificate;  // in_E or in_E_bar
    Flag m_certificate;  // in_M or in_M_star
};

// mid = F(A) ×_{F(B)} B, e = ⟨π_A, f⟩, m the second projection.
FactorizationResult reflective_factorization(const PreordMorphism& f);
// mid = A / (Eq(f) ∧ ~ρ) with the direct-image order.
FactorizationResult monotone_light_factorization(const PreordMorphism& f);

struct CoverElement {
    Index cls;    // ~-class of the base point in B
    int layer;    // 1, 2 or 3
    Index base;   // β, a member of that class
};

struct DescentCover {
    FinPreorder object;  // partial order on 3|B| triples
    PreordMorphism p;    // (cls, layer, β) ↦ β
    std::vector<CoverElement> elements;
};

DescentCover effective_descent_cover(const FinPreorder& b);

// Returns whether src is a partial order. Throws PreconditionViolation unless
// dst and every fibre are partial orders.
bool fibre_poset_lemma(const PreordMorphism& f);

// Pulls the unit π_X back along g : Z → F(X), reflects the square and
// reports whether the reflected square is again a pullback.
// Throws CarrierMismatch unless g lands in F(X).
bool verify_stable_units(const FinPreorder& x, const PreordMorphism& g);

struct PullbackMonoCheck {
    bool inverse_image_matches = false;  // f⁻¹(S) = R
    bool induced_map_injective = false;  // φ : X/R → Y/S
};

// Throws PreconditionViolation unless both ends are equivalence relations.
PullbackMonoCheck pullback_mono_check(const PreordMorphism& f);

struct OrthogonalityResult {
    std::size_t diagonals = 0;
    std::optional<PreordMorphism> diagonal;
    std::string reason;  // why no diagonal exists, when diagonals == 0
};

// Square   A --e--> B
//          |u       |v
//          C --m--> D
// Throws PreconditionViolation unless e ∈ Ē, m ∈ M* and m ∘ u = v ∘ e.
OrthogonalityResult check_orthogonality(const PreordMorphism& e, const PreordMorphism& m, const PreordMorphism& u,
                                        const PreordMorphism& v);

}  // namespace preord
