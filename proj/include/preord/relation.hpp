#pragma once

// Finite sets, binary relations, preorders and monotone maps, plus the
// relation calculus (composite, opposite, meet, direct and inverse image,
// kernel pairs, pullbacks) the rest of the library is written in.
//
// Elements are indices 0..n-1. Labels are presentation metadata only and
// never take part in equality or carrier checks.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preord/bitmatrix.hpp"
#include "preord/error.hpp"

namespace preord {

using Pair = std::pair<Index, Index>;

class FinSet {
public:
    FinSet() = default;
    explicit FinSet(std::size_t size) : size_(size) {}
    // Throws InvariantViolation on duplicate labels.
    explicit FinSet(std::vector<std::string> labels);

    std::size_t size() const noexcept { return size_; }
    bool has_labels() const noexcept { return !labels_.empty(); }
    // The stored label, or the decimal index when the set is unlabeled.
    std::string label(Index i) const;
    std::vector<std::string> labels() const;

private:
    std::size_t size_ = 0;
    std::vector<std::string> labels_;
};

void require_same_size(const FinSet& a, const FinSet& b, const char* what);

class Relation {
public:
    Relation() = default;
    // The empty relation src → dst.
    Relation(FinSet src, FinSet dst);
    // Throws CarrierMismatch if the matrix is not src.size() × dst.size().
    Relation(FinSet src, FinSet dst, BitMatrix incidence);

    static Relation from_pairs(FinSet src, FinSet dst, const std::vector<Pair>& pairs);
    static Relation identity(const FinSet& x);
    static Relation full(FinSet src, FinSet dst);

    const FinSet& src() const noexcept { return src_; }
    const FinSet& dst() const noexcept { return dst_; }
    const BitMatrix& incidence() const noexcept { return m_; }

    bool contains(Index x, Index y) const { return m_.test(x, y); }
    std::size_t count() const { return m_.count(); }
    // All pairs in lexicographic order.
    std::vector<Pair> pairs() const;

    bool is_subset_of(const Relation& other) const;

    friend bool operator==(const Relation& a, const Relation& b) { return a.m_ == b.m_; }

private:
    FinSet src_;
    FinSet dst_;
    BitMatrix m_;
};

// s ∘ r : X → Z for r : X → Y and s : Y → Z.
Relation compose(const Relation& r, const Relation& s);
Relation opposite(const Relation& r);
Relation meet(const Relation& r, const Relation& s);
Relation join(const Relation& r, const Relation& s);

struct RelationFlags {
    bool reflexive = false;
    bool transitive = false;
    bool symmetric = false;
    bool antisymmetric = false;
};

bool is_reflexive(const Relation& r);
bool is_transitive(const Relation& r);
bool is_symmetric(const Relation& r);
bool is_antisymmetric(const Relation& r);
RelationFlags relation_predicates(const Relation& r);

class SetMap {
public:
    SetMap() = default;
    // Throws InvariantViolation if values are not a total map dom → cod.
    SetMap(FinSet dom, FinSet cod, std::vector<Index> values);

    static SetMap identity(const FinSet& x);
    static SetMap constant(const FinSet& dom, const FinSet& cod, Index value);

    const FinSet& dom() const noexcept { return dom_; }
    const FinSet& cod() const noexcept { return cod_; }
    const std::vector<Index>& values() const noexcept { return values_; }
    Index operator()(Index a) const { return values_[a]; }

    bool is_injective() const;
    bool is_surjective() const;
    // Graph of the map as a relation dom → cod.
    Relation graph() const;

    friend bool operator==(const SetMap& a, const SetMap& b) {
        return a.cod_.size() == b.cod_.size() && a.values_ == b.values_;
    }

private:
    FinSet dom_;
    FinSet cod_;
    std::vector<Index> values_;
};

// g ∘ f
SetMap compose(const SetMap& f, const SetMap& g);

// f(R) = f ∘ R ∘ fᵒ : (b, b′) related iff some (a, a′) ∈ R has f(a) = b, f(a′) = b′.
Relation direct_image(const SetMap& f, const Relation& r);
// f⁻¹(S) = fᵒ ∘ S ∘ f : (a, a′) related iff (f(a), f(a′)) ∈ S.
Relation inverse_image(const SetMap& f, const Relation& s);
// Eq(f)
Relation kernel_pair(const SetMap& f);

class FinPreorder {
public:
    FinPreorder() = default;
    // Throws InvariantViolation unless rel is a reflexive, transitive endorelation.
    explicit FinPreorder(Relation rel);

    static FinPreorder discrete(const FinSet& x);
    static FinPreorder codiscrete(const FinSet& x);
    // 0 ≤ 1 ≤ ... ≤ n-1
    static FinPreorder chain(std::size_t n);
    static FinPreorder discrete(std::size_t n) { return discrete(FinSet(n)); }
    static FinPreorder codiscrete(std::size_t n) { return codiscrete(FinSet(n)); }

    const FinSet& carrier() const noexcept { return rel_.src(); }
    const Relation& rel() const noexcept { return rel_; }
    std::size_t size() const noexcept { return rel_.src().size(); }
    bool leq(Index a, Index b) const { return rel_.contains(a, b); }

    bool is_partial_order() const { return is_antisymmetric(rel_); }
    bool is_equivalence() const { return is_symmetric(rel_); }
    bool is_discrete() const;

    friend bool operator==(const FinPreorder& a, const FinPreorder& b) { return a.rel_ == b.rel_; }

private:
    Relation rel_;
};

// Smallest preorder containing r.
FinPreorder reflexive_transitive_closure(const Relation& r);

bool is_monotone(const FinPreorder& src, const FinPreorder& dst, const std::vector<Index>& values);

class PreordMorphism {
public:
    PreordMorphism() = default;
    // Throws InvariantViolation if the map is not monotone.
    PreordMorphism(FinPreorder src, FinPreorder dst, SetMap map);
    PreordMorphism(FinPreorder src, FinPreorder dst, std::vector<Index> values);

    static PreordMorphism identity(const FinPreorder& p);

    const FinPreorder& src() const noexcept { return src_; }
    const FinPreorder& dst() const noexcept { return dst_; }
    const SetMap& map() const noexcept { return map_; }
    const std::vector<Index>& values() const noexcept { return map_.values(); }
    Index operator()(Index a) const { return map_(a); }

    friend bool operator==(const PreordMorphism& a, const PreordMorphism& b) {
        return a.src_ == b.src_ && a.dst_ == b.dst_ && a.map_ == b.map_;
    }

private:
    FinPreorder src_;
    FinPreorder dst_;
    SetMap map_;
};

// g ∘ f
PreordMorphism compose(const PreordMorphism& f, const PreordMorphism& g);

// Bijective and order-reflecting (hence an isomorphism in PreOrd).
bool is_isomorphism(const PreordMorphism& f);

// Visits every monotone map src → dst by backtracking in index order; the
// callback returns false to stop early.
void for_each_monotone_map(const FinPreorder& src, const FinPreorder& dst,
                           const std::function<bool(const std::vector<Index>&)>& visit);

struct Pullback {
    FinPreorder object;
    PreordMorphism p1;  // to the domain of f
    PreordMorphism p2;  // to the domain of g
    std::vector<Pair> elements;  // (x, z) in lexicographic order
};

// X ×_Y Z for f : X → Y, g : Z → Y, with the componentwise order.
Pullback preord_pullback(const PreordMorphism& f, const PreordMorphism& g);

// Square   P --p2--> Z
//          |p1       |g
//          X --f-->  Y
// Each overload throws PreconditionViolation when the square does not commute.
//
// Sets: the comparison P → X ×_Y Z is a bijection.
bool is_pullback_square(const SetMap& p1, const SetMap& p2, const SetMap& f, const SetMap& g);
// Preorders: the comparison is a bijection that also reflects the order.
bool is_pullback_square(const PreordMorphism& p1, const PreordMorphism& p2, const PreordMorphism& f,
                        const PreordMorphism& g);
// Relations over a map: the square  R → S  over  f × f : A × A → B × B
// (commuting means R ⊆ f⁻¹(S)) is a pullback iff R = f⁻¹(S).
bool is_pullback_square(const Relation& r, const SetMap& f, const Relation& s);

}  // namespace preord
