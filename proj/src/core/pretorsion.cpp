#include "preord/pretorsion.hpp"

#include <algorithm>

#include "preord/graph.hpp"

namespace preord {

std::string class_label(const FinSet& carrier, const std::vector<Index>& members) {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out += ",";
        out += carrier.label(members[i]);
    }
    return out + "}";
}

Quotient quotient_by_classes(const FinPreorder& p, const std::vector<Index>& class_of) {
    std::size_t count = 0;
    for (Index c : class_of) count = std::max(count, c + 1);
    std::vector<std::vector<Index>> classes(count);
    for (Index a = 0; a < class_of.size(); ++a) classes[class_of[a]].push_back(a);

    std::vector<std::string> labels;
    labels.reserve(count);
    for (const auto& members : classes) labels.push_back(class_label(p.carrier(), members));
    FinSet carrier(std::move(labels));

    SetMap q(p.carrier(), carrier, class_of);
    FinPreorder object(direct_image(q, p.rel()));
    PreordMorphism projection(p, object, std::move(q));
    return {std::move(object), std::move(projection), std::move(classes)};
}

Relation sym_core(const FinPreorder& p) { return meet(p.rel(), opposite(p.rel())); }

Reflection reflect(const FinPreorder& p) {
    // In a reflexive transitive relation, a ~ b iff a and b are mutually
    // reachable, so the ~-classes are exactly the strongly connected components.
    SccResult scc = strongly_connected_components(p.rel().incidence());
    canonicalize_classes(scc.component);
    return quotient_by_classes(p, scc.component);
}

PreordMorphism reflect_morphism(const PreordMorphism& f, const Reflection& src, const Reflection& dst) {
    std::vector<Index> values(src.classes.size());
    for (Index c = 0; c < values.size(); ++c) values[c] = dst.projection(f(src.classes[c].front()));
    return PreordMorphism(src.object, dst.object, std::move(values));
}

PreordMorphism reflect_morphism(const PreordMorphism& f) {
    return reflect_morphism(f, reflect(f.src()), reflect(f.dst()));
}

NMembership in_ideal_N(const PreordMorphism& f) {
    NMembership out;
    for (auto [a, a2] : f.src().rel().pairs()) {
        if (f(a) != f(a2)) {
            out.counterexample = Pair{a, a2};
            return out;
        }
    }
    out.member = true;

    // Factor through the image of f, ordered discretely.
    std::vector<Index> image = f.values();
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    std::vector<std::string> labels;
    for (Index b : image) labels.push_back(f.dst().carrier().label(b));
    FinPreorder z = FinPreorder::discrete(FinSet(std::move(labels)));

    std::vector<Index> to(f.src().size());
    for (Index a = 0; a < to.size(); ++a)
        to[a] = static_cast<Index>(std::lower_bound(image.begin(), image.end(), f(a)) - image.begin());
    out.witness = NFactorization{z, PreordMorphism(f.src(), z, std::move(to)), PreordMorphism(z, f.dst(), image)};
    return out;
}

NKernel n_kernel(const PreordMorphism& f) {
    FinPreorder k(meet(f.src().rel(), kernel_pair(f.map())));
    PreordMorphism inclusion(k, f.src(), SetMap::identity(f.src().carrier()));
    return {std::move(k), std::move(inclusion)};
}

NExactSequence canonical_sequence(const FinPreorder& p) {
    FinPreorder torsion(sym_core(p));
    Reflection r = reflect(p);
    return {PreordMorphism(torsion, p, SetMap::identity(p.carrier())), std::move(r.projection),
            std::move(r.classes)};
}

std::optional<PreordMorphism> factor_through_free_part(const NExactSequence& seq, const PreordMorphism& g) {
    require_same_size(g.src().carrier(), seq.free_part.src().carrier(), "factor_through_free_part");
    if (!in_ideal_N(compose(seq.torsion_part, g))) return std::nullopt;
    std::vector<Index> values(seq.classes.size());
    for (Index c = 0; c < values.size(); ++c) values[c] = g(seq.classes[c].front());
    return PreordMorphism(seq.free_part.dst(), g.dst(), std::move(values));
}

Decomposition decompose(const FinPreorder& p) {
    Reflection r = reflect(p);
    return {sym_core(p), std::move(r.object), r.projection.map()};
}

FinPreorder recompose(const Decomposition& d) {
    const Relation& equiv = d.equiv;
    if (equiv.src().size() != equiv.dst().size() || !is_reflexive(equiv) || !is_transitive(equiv) ||
        !is_symmetric(equiv))
        throw PreconditionViolation("recompose: R is not an equivalence relation");
    require_same_size(d.class_map.dom(), equiv.src(), "recompose class map domain");
    require_same_size(d.class_map.cod(), d.quotient_order.carrier(), "recompose class map codomain");
    if (!d.class_map.is_surjective()) throw PreconditionViolation("recompose: class map is not surjective");
    if (!(kernel_pair(d.class_map) == equiv))
        throw PreconditionViolation("recompose: class map does not have kernel pair R");
    if (!d.quotient_order.is_partial_order())
        throw PreconditionViolation("recompose: quotient order is not antisymmetric");
    return FinPreorder(inverse_image(d.class_map, d.quotient_order.rel()));
}

bool hom_is_trivial(const FinPreorder& t, const FinPreorder& fp) {
    if (!t.is_equivalence()) throw PreconditionViolation("hom_is_trivial: source is not an equivalence relation");
    if (!fp.is_partial_order()) throw PreconditionViolation("hom_is_trivial: target is not a partial order");
    bool all = true;
    for_each_monotone_map(t, fp, [&](const std::vector<Index>& values) {
        all = in_ideal_N(PreordMorphism(t, fp, values)).member;
        return all;
    });
    return all;
}

}  // namespace preord
