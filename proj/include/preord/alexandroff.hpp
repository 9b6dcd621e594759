#pragma once

// Finite Alexandroff-discrete spaces, stored by minimal open neighbourhoods,
// and their dictionary with finite preorders. Opens are the down-closed sets:
// U(x) = {y : y ρ x}, and x ≤ y iff y lies in the closure of {x}.

#include <vector>

#include "preord/relation.hpp"

namespace preord {

class AlexandroffSpace {
public:
    AlexandroffSpace() = default;
    // Row x of min_nbhd is U(x). Throws InvariantViolation unless x ∈ U(x)
    // and y ∈ U(x) ⇒ U(y) ⊆ U(x).
    AlexandroffSpace(FinSet carrier, BitMatrix min_nbhd);

    const FinSet& carrier() const noexcept { return carrier_; }
    std::size_t size() const noexcept { return carrier_.size(); }
    const BitMatrix& min_nbhds() const noexcept { return u_; }
    // y ∈ U(x)
    bool in_min_open(Index x, Index y) const { return u_.test(x, y); }
    // A subset (as an indicator vector) is open iff it contains U(y) for each of its points.
    bool is_open(const std::vector<bool>& subset) const;

    friend bool operator==(const AlexandroffSpace& a, const AlexandroffSpace& b) { return a.u_ == b.u_; }

private:
    FinSet carrier_;
    BitMatrix u_;
};

AlexandroffSpace preorder_to_space(const FinPreorder& p);
FinPreorder space_to_preorder(const AlexandroffSpace& s);

// Both throw std::out_of_range for a point outside the carrier.
std::vector<Index> closure_of_point(const AlexandroffSpace& s, Index x);
std::vector<Index> min_open(const AlexandroffSpace& s, Index x);

// Computed on the topology: distinct points have distinct closures.
bool is_T0(const AlexandroffSpace& s);
// Computed on the topology: every minimal open set is also closed.
bool is_partition(const AlexandroffSpace& s);
// The same two properties read off the specialization preorder.
bool is_T0_by_order(const AlexandroffSpace& s);
bool is_partition_by_order(const AlexandroffSpace& s);

// Subspace on the listed points (ascending); U′(x) = U(x) ∩ points.
AlexandroffSpace subspace(const AlexandroffSpace& s, const std::vector<Index>& points);
// Every non-empty open set is the whole space.
bool has_trivial_topology(const AlexandroffSpace& s);

class ContinuousMap {
public:
    ContinuousMap() = default;
    // Throws InvariantViolation if f(U(x)) ⊄ U(f(x)) for some x.
    ContinuousMap(AlexandroffSpace src, AlexandroffSpace dst, SetMap map);

    const AlexandroffSpace& src() const noexcept { return src_; }
    const AlexandroffSpace& dst() const noexcept { return dst_; }
    const SetMap& map() const noexcept { return map_; }
    Index operator()(Index x) const { return map_(x); }

private:
    AlexandroffSpace src_;
    AlexandroffSpace dst_;
    SetMap map_;
};

bool is_continuous(const AlexandroffSpace& src, const AlexandroffSpace& dst, const std::vector<Index>& values);

ContinuousMap to_continuous(const PreordMorphism& f);
PreordMorphism to_monotone(const ContinuousMap& f);

struct T0Reflection {
    AlexandroffSpace space;
    ContinuousMap projection;
    std::vector<std::vector<Index>> classes;  // points with equal closures, by smallest member
};

T0Reflection t0_reflection(const AlexandroffSpace& s);

// The finest Alexandroff topology on the codomain carrier making f continuous.
AlexandroffSpace finest_topology(const ContinuousMap& f);

struct TopologicalClassification {
    bool surjective = false;
    bool codomain_is_finest = false;
    bool fibres_trivial = false;
    bool fibres_T0 = false;
    bool in_M_star_top = false;    // every fibre subspace is T0
    bool in_E_prime_top = false;   // surjective, finest codomain topology, trivial fibres
    bool regular_epi_top = false;  // surjective and finest codomain topology
};

TopologicalClassification classify_continuous(const ContinuousMap& f);

}  // namespace preord
