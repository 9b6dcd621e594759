#pragma once

// The pretorsion theory (equivalence relations, partial orders) on finite
// preorders: the symmetric core, the reflector onto partial orders, the ideal
// N of morphisms factoring through a discrete object, N-kernels and the
// canonical short N-exact sequence.

#include <optional>
#include <string>
#include <vector>

#include "preord/relation.hpp"

namespace preord {

// A quotient of a preorder by an equivalence relation, with the direct-image
// order on the classes. Classes are numbered by their smallest member.
struct Quotient {
    FinPreorder object;
    PreordMorphism projection;
    std::vector<std::vector<Index>> classes;  // members, ascending
};

// class_of[a] must already be canonical (0, 1, ... in order of first
// appearance). Throws InvariantViolation if the direct image is not a preorder.
Quotient quotient_by_classes(const FinPreorder& p, const std::vector<Index>& class_of);

// "{a,b}" from the member labels.
std::string class_label(const FinSet& carrier, const std::vector<Index>& members);

// ~ρ = ρ ∧ ρᵒ
Relation sym_core(const FinPreorder& p);

// The partial-order reflection F(P) and its unit π : P → F(P).
using Reflection = Quotient;
Reflection reflect(const FinPreorder& p);

// F(f) : F(A) → F(B), a ↦ π_B(f(a)) on classes.
PreordMorphism reflect_morphism(const PreordMorphism& f, const Reflection& src, const Reflection& dst);
PreordMorphism reflect_morphism(const PreordMorphism& f);

struct NFactorization {
    FinPreorder discrete_object;    // the image of f with the discrete order
    PreordMorphism to_discrete;     // A → Z
    PreordMorphism from_discrete;   // Z → B
};

struct NMembership {
    bool member = false;
    std::optional<NFactorization> witness;  // when member
    std::optional<Pair> counterexample;     // a ρ a′ with f(a) ≠ f(a′), when not
    explicit operator bool() const noexcept { return member; }
};

// f ∈ N iff a ρ a′ ⇒ f(a) = f(a′).
NMembership in_ideal_N(const PreordMorphism& f);

struct NKernel {
    FinPreorder object;        // (A, ρ ∧ Eq(f))
    PreordMorphism inclusion;  // identity on elements
};

NKernel n_kernel(const PreordMorphism& f);

struct NExactSequence {
    PreordMorphism torsion_part;  // (A, ~ρ) → (A, ρ)
    PreordMorphism free_part;     // (A, ρ) → (A/~ρ, π(ρ))
    std::vector<std::vector<Index>> classes;
};

NExactSequence canonical_sequence(const FinPreorder& p);

// For g : A → Y with g ∘ torsion_part ∈ N, the unique α with α ∘ free_part = g.
// nullopt when g ∘ torsion_part ∉ N.
std::optional<PreordMorphism> factor_through_free_part(const NExactSequence& seq, const PreordMorphism& g);

struct Decomposition {
    Relation equiv;             // equivalence relation R on A
    FinPreorder quotient_order; // partial order on A/R
    SetMap class_map;           // q : A → A/R
};

Decomposition decompose(const FinPreorder& p);
// Throws PreconditionViolation on malformed input: a non-equivalence R, a
// class map whose kernel pair is not R, or a non-antisymmetric quotient order.
FinPreorder recompose(const Decomposition& d);

// Checks that every monotone map T → Fp lies in N. Throws
// PreconditionViolation unless T is an equivalence relation and Fp a partial order.
bool hom_is_trivial(const FinPreorder& t, const FinPreorder& fp);

}  // namespace preord
