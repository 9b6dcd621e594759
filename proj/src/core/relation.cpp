#include "preord/relation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "preord/graph.hpp"

namespace preord {

namespace {

const simd::Kernels& K() { return simd::active(); }

std::string pair_text(Index a, Index b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void require_endo(const Relation& r, const char* what) {
    if (r.src().size() != r.dst().size())
        throw CarrierMismatch(std::string(what) + ": expected an endorelation, got " +
                              std::to_string(r.src().size()) + "x" + std::to_string(r.dst().size()));
}

}  // namespace

// ---------------------------------------------------------------- FinSet

FinSet::FinSet(std::vector<std::string> labels) : size_(labels.size()), labels_(std::move(labels)) {
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw InvariantViolation("duplicate label '" + l + "'");
}

std::string FinSet::label(Index i) const { return labels_.empty() ? std::to_string(i) : labels_.at(i); }

std::vector<std::string> FinSet::labels() const {
    std::vector<std::string> out;
    out.reserve(size_);
    for (Index i = 0; i < size_; ++i) out.push_back(label(i));
    return out;
}

void require_same_size(const FinSet& a, const FinSet& b, const char* what) {
    if (a.size() != b.size())
        throw CarrierMismatch(std::string(what) + ": carrier sizes " + std::to_string(a.size()) + " and " +
                              std::to_string(b.size()) + " differ");
}

// ---------------------------------------------------------------- Relation

Relation::Relation(FinSet src, FinSet dst)
    : src_(std::move(src)), dst_(std::move(dst)), m_(src_.size(), dst_.size()) {}

Relation::Relation(FinSet src, FinSet dst, BitMatrix incidence)
    : src_(std::move(src)), dst_(std::move(dst)), m_(std::move(incidence)) {
    if (m_.rows() != src_.size() || m_.cols() != dst_.size())
        throw CarrierMismatch("relation incidence is " + std::to_string(m_.rows()) + "x" +
                              std::to_string(m_.cols()) + ", carriers are " + std::to_string(src_.size()) +
                              "x" + std::to_string(dst_.size()));
}

Relation Relation::from_pairs(FinSet src, FinSet dst, const std::vector<Pair>& pairs) {
    BitMatrix m(src.size(), dst.size());
    for (auto [x, y] : pairs) {
        if (x >= src.size() || y >= dst.size())
            throw InvariantViolation("pair " + pair_text(x, y) + " out of range");
        m.set(x, y);
    }
    return Relation(std::move(src), std::move(dst), std::move(m));
}

Relation Relation::identity(const FinSet& x) { return Relation(x, x, BitMatrix::identity(x.size())); }

Relation Relation::full(FinSet src, FinSet dst) {
    BitMatrix m = BitMatrix::full(src.size(), dst.size());
    return Relation(std::move(src), std::move(dst), std::move(m));
}

std::vector<Pair> Relation::pairs() const {
    std::vector<Pair> out;
    for (Index x = 0; x < m_.rows(); ++x) m_.for_each_in_row(x, [&](Index y) { out.emplace_back(x, y); });
    return out;
}

bool Relation::is_subset_of(const Relation& other) const {
    require_same_size(src_, other.src_, "is_subset_of");
    require_same_size(dst_, other.dst_, "is_subset_of");
    for (Index x = 0; x < m_.rows(); ++x)
        if (!K().is_subset(m_.row(x), other.m_.row(x))) return false;
    return true;
}

Relation compose(const Relation& r, const Relation& s) {
    require_same_size(r.dst(), s.src(), "compose_relations");
    BitMatrix out(r.src().size(), s.dst().size());
    const BitMatrix& rm = r.incidence();
    const BitMatrix& sm = s.incidence();
    for (Index x = 0; x < rm.rows(); ++x) rm.for_each_in_row(x, [&](Index y) { K().or_into(out.row(x), sm.row(y)); });
    return Relation(r.src(), s.dst(), std::move(out));
}

Relation opposite(const Relation& r) { return Relation(r.dst(), r.src(), r.incidence().transposed()); }

Relation meet(const Relation& r, const Relation& s) {
    require_same_size(r.src(), s.src(), "meet");
    require_same_size(r.dst(), s.dst(), "meet");
    BitMatrix out = r.incidence();
    for (Index x = 0; x < out.rows(); ++x) K().and_into(out.row(x), s.incidence().row(x));
    return Relation(r.src(), r.dst(), std::move(out));
}

Relation join(const Relation& r, const Relation& s) {
    require_same_size(r.src(), s.src(), "join");
    require_same_size(r.dst(), s.dst(), "join");
    BitMatrix out = r.incidence();
    for (Index x = 0; x < out.rows(); ++x) K().or_into(out.row(x), s.incidence().row(x));
    return Relation(r.src(), r.dst(), std::move(out));
}

bool is_reflexive(const Relation& r) {
    require_endo(r, "is_reflexive");
    for (Index a = 0; a < r.src().size(); ++a)
        if (!r.contains(a, a)) return false;
    return true;
}

bool is_transitive(const Relation& r) {
    require_endo(r, "is_transitive");
    const BitMatrix& m = r.incidence();
    for (Index a = 0; a < m.rows(); ++a) {
        bool ok = true;
        m.for_each_in_row(a, [&](Index b) { ok = ok && K().is_subset(m.row(b), m.row(a)); });
        if (!ok) return false;
    }
    return true;
}

bool is_symmetric(const Relation& r) {
    require_endo(r, "is_symmetric");
    return r.incidence() == r.incidence().transposed();
}

bool is_antisymmetric(const Relation& r) {
    require_endo(r, "is_antisymmetric");
    const BitMatrix& m = r.incidence();
    for (Index a = 0; a < m.rows(); ++a) {
        bool ok = true;
        m.for_each_in_row(a, [&](Index b) { ok = ok && (a == b || !m.test(b, a)); });
        if (!ok) return false;
    }
    return true;
}

RelationFlags relation_predicates(const Relation& r) {
    return {is_reflexive(r), is_transitive(r), is_symmetric(r), is_antisymmetric(r)};
}

// ---------------------------------------------------------------- SetMap

SetMap::SetMap(FinSet dom, FinSet cod, std::vector<Index> values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
    if (values_.size() != dom_.size())
        throw InvariantViolation("map has " + std::to_string(values_.size()) + " values for a domain of size " +
                                 std::to_string(dom_.size()));
    for (Index a = 0; a < values_.size(); ++a)
        if (values_[a] >= cod_.size())
            throw InvariantViolation("map sends " + std::to_string(a) + " to " + std::to_string(values_[a]) +
                                     ", outside a codomain of size " + std::to_string(cod_.size()));
}

SetMap SetMap::identity(const FinSet& x) {
    std::vector<Index> v(x.size());
    for (Index i = 0; i < v.size(); ++i) v[i] = i;
    return SetMap(x, x, std::move(v));
}

SetMap SetMap::constant(const FinSet& dom, const FinSet& cod, Index value) {
    return SetMap(dom, cod, std::vector<Index>(dom.size(), value));
}

bool SetMap::is_injective() const {
    std::vector<bool> hit(cod_.size(), false);
    for (Index v : values_) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

bool SetMap::is_surjective() const {
    std::vector<bool> hit(cod_.size(), false);
    for (Index v : values_) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Relation SetMap::graph() const {
    BitMatrix m(dom_.size(), cod_.size());
    for (Index a = 0; a < values_.size(); ++a) m.set(a, values_[a]);
    return Relation(dom_, cod_, std::move(m));
}

SetMap compose(const SetMap& f, const SetMap& g) {
    require_same_size(f.cod(), g.dom(), "compose maps");
    std::vector<Index> v(f.dom().size());
    for (Index a = 0; a < v.size(); ++a) v[a] = g(f(a));
    return SetMap(f.dom(), g.cod(), std::move(v));
}

Relation direct_image(const SetMap& f, const Relation& r) {
    require_endo(r, "direct_image");
    require_same_size(f.dom(), r.src(), "direct_image");
    BitMatrix out(f.cod().size(), f.cod().size());
    const BitMatrix& m = r.incidence();
    for (Index a = 0; a < m.rows(); ++a) m.for_each_in_row(a, [&](Index a2) { out.set(f(a), f(a2)); });
    return Relation(f.cod(), f.cod(), std::move(out));
}

Relation inverse_image(const SetMap& f, const Relation& s) {
    require_endo(s, "inverse_image");
    require_same_size(f.cod(), s.src(), "inverse_image");
    const std::size_t n = f.dom().size();
    BitMatrix out(n, n);
    // Row a of the result depends only on f(a); build each distinct row once.
    std::vector<Index> built_from(f.cod().size(), n);
    for (Index a = 0; a < n; ++a) {
        const Index b = f(a);
        if (built_from[b] != n) {
            K().or_into(out.row(a), out.row(built_from[b]));
            continue;
        }
        for (Index a2 = 0; a2 < n; ++a2)
            if (s.contains(b, f(a2))) out.set(a, a2);
        built_from[b] = a;
    }
    return Relation(f.dom(), f.dom(), std::move(out));
}

Relation kernel_pair(const SetMap& f) { return inverse_image(f, Relation::identity(f.cod())); }

// ---------------------------------------------------------------- FinPreorder

FinPreorder::FinPreorder(Relation rel) : rel_(std::move(rel)) {
    require_endo(rel_, "preorder");
    const BitMatrix& m = rel_.incidence();
    for (Index a = 0; a < m.rows(); ++a)
        if (!m.test(a, a)) throw InvariantViolation("preorder is not reflexive at " + std::to_string(a));
    for (Index a = 0; a < m.rows(); ++a) {
        m.for_each_in_row(a, [&](Index b) {
            if (K().is_subset(m.row(b), m.row(a))) return;
            for (Index c = 0; c < m.cols(); ++c)
                if (m.test(b, c) && !m.test(a, c))
                    throw InvariantViolation("preorder is not transitive: " + pair_text(a, b) + " and " +
                                             pair_text(b, c) + " but not " + pair_text(a, c));
        });
    }
}

FinPreorder FinPreorder::discrete(const FinSet& x) { return FinPreorder(Relation::identity(x)); }

FinPreorder FinPreorder::codiscrete(const FinSet& x) { return FinPreorder(Relation::full(x, x)); }

FinPreorder FinPreorder::chain(std::size_t n) {
    BitMatrix m(n, n);
    for (Index a = 0; a < n; ++a)
        for (Index b = a; b < n; ++b) m.set(a, b);
    FinSet x(n);
    return FinPreorder(Relation(x, x, std::move(m)));
}

bool FinPreorder::is_discrete() const { return rel_ == Relation::identity(carrier()); }

FinPreorder reflexive_transitive_closure(const Relation& r) {
    require_endo(r, "reflexive_transitive_closure");
    const BitMatrix& adj = r.incidence();
    const std::size_t n = adj.rows();
    const SccResult scc = strongly_connected_components(adj);

    // Reverse topological emission order: successors' reach sets are final
    // before their predecessors are processed.
    std::vector<std::vector<Index>> members(scc.count);
    for (Index v = 0; v < n; ++v) members[scc.component[v]].push_back(v);
    BitMatrix reach(scc.count, n);
    for (std::size_t c = 0; c < scc.count; ++c) {
        for (Index v : members[c]) reach.set(c, v);
        for (Index v : members[c]) {
            adj.for_each_in_row(v, [&](Index w) {
                const std::size_t d = scc.component[w];
                if (d != c) K().or_into(reach.row(c), reach.row(d));
            });
        }
    }
    BitMatrix out(n, n);
    for (Index v = 0; v < n; ++v) K().or_into(out.row(v), reach.row(scc.component[v]));
    return FinPreorder(Relation(r.src(), r.src(), std::move(out)));
}

// ---------------------------------------------------------------- morphisms

bool is_monotone(const FinPreorder& src, const FinPreorder& dst, const std::vector<Index>& values) {
    const BitMatrix& m = src.rel().incidence();
    for (Index a = 0; a < m.rows(); ++a) {
        bool ok = true;
        m.for_each_in_row(a, [&](Index a2) { ok = ok && dst.leq(values[a], values[a2]); });
        if (!ok) return false;
    }
    return true;
}

PreordMorphism::PreordMorphism(FinPreorder src, FinPreorder dst, SetMap map)
    : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {
    require_same_size(map_.dom(), src_.carrier(), "morphism domain");
    require_same_size(map_.cod(), dst_.carrier(), "morphism codomain");
    if (!is_monotone(src_, dst_, map_.values())) {
        for (auto [a, a2] : src_.rel().pairs())
            if (!dst_.leq(map_(a), map_(a2)))
                throw InvariantViolation("map is not monotone: " + pair_text(a, a2) + " is related but " +
                                         pair_text(map_(a), map_(a2)) + " is not");
    }
}

PreordMorphism::PreordMorphism(FinPreorder src, FinPreorder dst, std::vector<Index> values)
    : PreordMorphism(src, dst, SetMap(src.carrier(), dst.carrier(), std::move(values))) {}

PreordMorphism PreordMorphism::identity(const FinPreorder& p) {
    return PreordMorphism(p, p, SetMap::identity(p.carrier()));
}

PreordMorphism compose(const PreordMorphism& f, const PreordMorphism& g) {
    return PreordMorphism(f.src(), g.dst(), compose(f.map(), g.map()));
}

bool is_isomorphism(const PreordMorphism& f) {
    if (!f.map().is_injective() || !f.map().is_surjective()) return false;
    return f.src().rel() == inverse_image(f.map(), f.dst().rel());
}

void for_each_monotone_map(const FinPreorder& src, const FinPreorder& dst,
                           const std::function<bool(const std::vector<Index>&)>& visit) {
    const std::size_t n = src.size();
    const std::size_t m = dst.size();
    std::vector<Index> values(n, 0);
    if (n == 0) {
        visit(values);
        return;
    }
    if (m == 0) return;

    // Candidate v for position a must respect every relation with an earlier position.
    auto fits = [&](Index a, Index v) {
        for (Index b = 0; b < a; ++b) {
            if (src.leq(b, a) && !dst.leq(values[b], v)) return false;
            if (src.leq(a, b) && !dst.leq(v, values[b])) return false;
        }
        return true;
    };
    std::vector<Index> next(n, 0);
    Index a = 0;
    while (true) {
        bool placed = false;
        while (next[a] < m) {
            const Index v = next[a]++;
            if (fits(a, v)) {
                values[a] = v;
                placed = true;
                break;
            }
        }
        if (!placed) {
            if (a == 0) return;
            next[a] = 0;
            --a;
            continue;
        }
        if (a + 1 == n) {
            if (!visit(values)) return;
        } else {
            ++a;
        }
    }
}

// ---------------------------------------------------------------- pullbacks

Pullback preord_pullback(const PreordMorphism& f, const PreordMorphism& g) {
    require_same_size(f.dst().carrier(), g.dst().carrier(), "preord_pullback codomain");
    const FinPreorder& x = f.src();
    const FinPreorder& z = g.src();
    Pullback out;
    for (Index i = 0; i < x.size(); ++i)
        for (Index j = 0; j < z.size(); ++j)
            if (f(i) == g(j)) out.elements.emplace_back(i, j);

    const std::size_t n = out.elements.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto [i, j] : out.elements) labels.push_back("(" + x.carrier().label(i) + "," + z.carrier().label(j) + ")");
    FinSet carrier(std::move(labels));
    BitMatrix m(n, n);
    for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q)
            if (x.leq(out.elements[p].first, out.elements[q].first) &&
                z.leq(out.elements[p].second, out.elements[q].second))
                m.set(p, q);
    out.object = FinPreorder(Relation(carrier, carrier, std::move(m)));

    std::vector<Index> v1(n), v2(n);
    for (Index p = 0; p < n; ++p) {
        v1[p] = out.elements[p].first;
        v2[p] = out.elements[p].second;
    }
    out.p1 = PreordMorphism(out.object, x, std::move(v1));
    out.p2 = PreordMorphism(out.object, z, std::move(v2));
    return out;
}

namespace {

// Shared part of the Set and PreOrd pullback tests. Returns the comparison
// map P → X ×_Y Z as pair indices, or nullopt when it is not a bijection.
std::optional<std::vector<Pair>> comparison_bijection(const SetMap& p1, const SetMap& p2, const SetMap& f,
                                                      const SetMap& g) {
    require_same_size(p1.dom(), p2.dom(), "pullback square apex");
    require_same_size(p1.cod(), f.dom(), "pullback square left");
    require_same_size(p2.cod(), g.dom(), "pullback square right");
    require_same_size(f.cod(), g.cod(), "pullback square base");
    for (Index p = 0; p < p1.dom().size(); ++p)
        if (f(p1(p)) != g(p2(p)))
            throw PreconditionViolation("square does not commute at element " + std::to_string(p));

    std::size_t fibre_pairs = 0;
    for (Index i = 0; i < f.dom().size(); ++i)
        for (Index j = 0; j < g.dom().size(); ++j)
            if (f(i) == g(j)) ++fibre_pairs;

    std::vector<Pair> images;
    images.reserve(p1.dom().size());
    for (Index p = 0; p < p1.dom().size(); ++p) images.emplace_back(p1(p), p2(p));
    std::vector<Pair> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    if (sorted.size() != fibre_pairs) return std::nullopt;
    return images;
}

}  // namespace

bool is_pullback_square(const SetMap& p1, const SetMap& p2, const SetMap& f, const SetMap& g) {
    return comparison_bijection(p1, p2, f, g).has_value();
}

bool is_pullback_square(const PreordMorphism& p1, const PreordMorphism& p2, const PreordMorphism& f,
                        const PreordMorphism& g) {
    auto images = comparison_bijection(p1.map(), p2.map(), f.map(), g.map());
    if (!images) return false;
    const FinPreorder& apex = p1.src();
    const FinPreorder& x = f.src();
    const FinPreorder& z = g.src();
    for (Index p = 0; p < apex.size(); ++p)
        for (Index q = 0; q < apex.size(); ++q) {
            const bool below = x.leq((*images)[p].first, (*images)[q].first) &&
                               z.leq((*images)[p].second, (*images)[q].second);
            if (apex.leq(p, q) != below) return false;
        }
    return true;
}

bool is_pullback_square(const Relation& r, const SetMap& f, const Relation& s) {
    require_endo(r, "pullback square top-left");
    require_same_size(r.src(), f.dom(), "pullback square");
    const Relation pulled = inverse_image(f, s);
    if (!r.is_subset_of(pulled)) throw PreconditionViolation("relation square does not commute");
    return r == pulled;
}

}  // namespace preord
