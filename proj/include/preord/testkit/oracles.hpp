#pragma once

// Brute-force oracles. None of these call the library algorithm they are
// used to check; they work from the definitions on raw index vectors.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "preord/alexandroff.hpp"
#include "preord/relation.hpp"

namespace preord::testkit {

// Compact text for counterexample dumps, e.g. "3 points {0<=1,1<=0}".
std::string describe(const FinPreorder& p);
std::string describe(const PreordMorphism& f);
std::string describe(const std::vector<Index>& values);

// s ∘ r by the triple loop.
Relation compose_by_definition(const Relation& r, const Relation& s);
// Warshall closure of r ∪ Δ.
Relation closure_by_definition(const Relation& r);
// f ∘ R ∘ fᵒ, composed by definition.
Relation direct_image_by_definition(const SetMap& f, const Relation& r);

// Searches all discrete Z with |Z| ≤ |A| and all set maps A → Z → B.
// Throws CapExceeded past kMorphismCap.
bool brute_force_in_N(const PreordMorphism& f);

// The reflection by definition: classes of ρ ∧ ρᵒ numbered by smallest member,
// ordered by the direct image of ρ.
struct OracleReflection {
    std::vector<Index> class_of;
    BitMatrix order;
};
OracleReflection reflect_by_meet(const FinPreorder& p);

// All open subsets, as indicator vectors, in bitmask order. Throws CapExceeded past 12 points.
inline constexpr std::size_t kOpenSetCap = 12;
std::vector<std::vector<bool>> enumerate_open_sets(const AlexandroffSpace& s);
// Intersection of every open set containing x, from the explicit open family.
std::vector<Index> min_open_by_intersection(const AlexandroffSpace& s, Index x);

struct NKernelData {
    PreordMorphism f;  // A → B
    PreordMorphism k;  // K → A, claimed N-kernel of f
};
struct NCokernelData {
    PreordMorphism k;  // K → A
    PreordMorphism p;  // A → C, claimed N-cokernel of k
};
struct PullbackData {
    PreordMorphism f;  // X → Y
    PreordMorphism g;  // Z → Y
    PreordMorphism p1; // P → X
    PreordMorphism p2; // P → Z
};
struct OrthogonalityData {
    PreordMorphism e, m, u, v;  // square with m ∘ u = v ∘ e
};

using UniversalData = std::variant<NKernelData, NCokernelData, PullbackData, OrthogonalityData>;

struct UniversalResult {
    bool holds = true;
    std::size_t probes = 0;
    std::string counterexample;
    std::size_t diagonals = 0;  // orthogonality only
    explicit operator bool() const noexcept { return holds; }
};

// Quantifies the universal property over every probe object with at most
// probe_cap points and every probe morphism. For orthogonality, probes are
// all maps B → C and holds means exactly one diagonal. Throws CapExceeded
// when probe_cap > kRelationCap or a carrier exceeds kMorphismCap.
UniversalResult brute_force_universal(const UniversalData& data, std::size_t probe_cap = 3);

}  // namespace preord::testkit
