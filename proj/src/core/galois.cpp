#include "preord/galois.hpp"

#include <algorithm>
#include <map>

#include "preord/graph.hpp"

namespace preord {

namespace {

const simd::Kernels& K() { return simd::active(); }

std::vector<std::vector<Index>> fibres(const PreordMorphism& f) {
    std::vector<std::vector<Index>> out(f.dst().size());
    for (Index a = 0; a < f.src().size(); ++a) out[f(a)].push_back(a);
    return out;
}

}  // namespace

Flag is_surjective(const PreordMorphism& f) {
    std::vector<bool> hit(f.dst().size(), false);
    for (Index v : f.values()) hit[v] = true;
    for (Index b = 0; b < hit.size(); ++b)
        if (!hit[b]) return Flag::no({b}, "codomain element not in the image");
    return Flag::yes();
}

Flag is_fully_faithful(const PreordMorphism& f) {
    if (f.src().rel() == inverse_image(f.map(), f.dst().rel())) return Flag::yes();
    const std::size_t n = f.src().size();
    for (Index a = 0; a < n; ++a)
        for (Index a2 = 0; a2 < n; ++a2)
            if (f.dst().leq(f(a), f(a2)) && !f.src().leq(a, a2))
                return Flag::no({a, a2}, "images are related but the elements are not");
    return Flag::yes();
}

Flag is_regular_epi(const PreordMorphism& f) {
    if (Flag s = is_surjective(f); !s) return s;
    const Relation image = direct_image(f.map(), f.src().rel());
    for (auto [b, b2] : f.dst().rel().pairs())
        if (!image.contains(b, b2)) return Flag::no({b, b2}, "related pair not in the direct image of the order");
    return Flag::yes();
}

Flag in_E(const PreordMorphism& f) {
    if (Flag ff = is_fully_faithful(f); !ff) return ff;
    const Reflection ra = reflect(f.src());
    const Reflection rb = reflect(f.dst());
    const PreordMorphism ff_quot = reflect_morphism(f, ra, rb);
    // Regular epi of the quotients: every class hit, and the quotient order
    // covered by the image of the source quotient order.
    std::vector<bool> hit(rb.classes.size(), false);
    for (Index c : ff_quot.values()) hit[c] = true;
    for (Index c = 0; c < hit.size(); ++c)
        if (!hit[c]) return Flag::no({rb.classes[c].front()}, "~-class of this element is not in the image");
    const Relation image = direct_image(ff_quot.map(), ra.object.rel());
    for (auto [c, c2] : rb.object.rel().pairs())
        if (!image.contains(c, c2))
            return Flag::no({rb.classes[c].front(), rb.classes[c2].front()},
                            "quotient order between these classes is not covered");
    return Flag::yes();
}

Flag in_M(const PreordMorphism& f) {
    const Reflection ra = reflect(f.src());
    const Reflection rb = reflect(f.dst());
    for (Index a = 0; a < f.src().size(); ++a) {
        const auto& own_class = ra.classes[ra.projection(a)];
        for (Index b : rb.classes[rb.projection(f(a))]) {
            std::size_t lifts = 0;
            for (Index a2 : own_class)
                if (f(a2) == b) ++lifts;
            if (lifts != 1)
                return Flag::no({a, b}, lifts == 0 ? "no lift of b into the ~-class of a"
                                                   : "several lifts of b into the ~-class of a");
        }
    }
    return Flag::yes();
}

Flag in_E_bar(const PreordMorphism& f) {
    if (Flag s = is_surjective(f); !s) return s;
    return is_fully_faithful(f);
}

Flag in_M_star(const PreordMorphism& f) {
    for (const auto& fibre : fibres(f))
        for (std::size_t i = 0; i < fibre.size(); ++i)
            for (std::size_t j = i + 1; j < fibre.size(); ++j)
                if (f.src().leq(fibre[i], fibre[j]) && f.src().leq(fibre[j], fibre[i]))
                    return Flag::no({fibre[i], fibre[j]}, "distinct equivalent elements in one fibre");
    return Flag::yes();
}

Flag in_M_star_by_kernel(const PreordMorphism& f) {
    const NKernel k = n_kernel(f);
    const Relation core = sym_core(k.object);
    for (auto [a, a2] : core.pairs())
        if (a != a2) return Flag::no({a, a2}, "N-kernel is not antisymmetric here");
    return Flag::yes();
}

Flag is_effective_descent(const PreordMorphism& f) {
    const FinPreorder& src = f.src();
    const FinPreorder& dst = f.dst();
    const std::size_t na = src.size();
    const std::size_t nb = dst.size();

    // down[e] = f({e′ : e′ ρ e}), up[e] = f({e′ : e ρ e′}) as bitsets over B.
    BitMatrix down(na, nb), up(na, nb);
    for (auto [e, e2] : src.rel().pairs()) {
        up.set(e, f(e2));
        down.set(e2, f(e));
    }
    const auto by_base = fibres(f);
    const BitMatrix& sigma = dst.rel().incidence();
    BitMatrix acc(1, nb);
    for (Index b2 = 0; b2 < nb; ++b2) {
        for (Index b1 = 0; b1 < nb; ++b1) {
            if (!sigma.test(b1, b2)) continue;
            // Every b₃ above b₂ must be reachable from some e₂ over b₂ that lies above a point over b₁.
            std::fill(acc.row(0).begin(), acc.row(0).end(), Word{0});
            for (Index e2 : by_base[b2])
                if (down.test(e2, b1)) K().or_into(acc.row(0), up.row(e2));
            if (!K().is_subset(sigma.row(b2), acc.row(0))) {
                for (Index b3 = 0; b3 < nb; ++b3)
                    if (sigma.test(b2, b3) && !acc.test(0, b3))
                        return Flag::no({b1, b2, b3}, "chain b1 <= b2 <= b3 does not lift");
            }
        }
    }
    return Flag::yes();
}

bool reflects_to_isomorphism(const PreordMorphism& f) { return is_isomorphism(reflect_morphism(f)); }

bool in_M_by_naturality_square(const PreordMorphism& f) {
    const Reflection ra = reflect(f.src());
    const Reflection rb = reflect(f.dst());
    return is_pullback_square(f, ra.projection, rb.projection, reflect_morphism(f, ra, rb));
}

bool in_E_bar_by_kernel(const PreordMorphism& f) {
    if (!is_surjective(f)) return false;
    const NKernel k = n_kernel(f);
    return k.object.rel() == kernel_pair(f.map()) && direct_image(f.map(), f.src().rel()) == f.dst().rel();
}

bool in_E_bar_by_regular_epi(const PreordMorphism& f) {
    return kernel_pair(f.map()).is_subset_of(f.src().rel()) && is_regular_epi(f).value;
}

MorphismClassification classify(const PreordMorphism& f) {
    MorphismClassification c;
    c.surjective = is_surjective(f);
    c.fully_faithful = is_fully_faithful(f);
    c.regular_epi = is_regular_epi(f);
    c.in_E = in_E(f);
    c.in_M = in_M(f);
    c.in_E_bar = in_E_bar(f);
    c.in_M_star = in_M_star(f);
    c.effective_descent = is_effective_descent(f);
    c.in_M_star_by_kernel = in_M_star_by_kernel(f).value;
    return c;
}

const char* to_string(FactorizationSystem s) {
    return s == FactorizationSystem::reflective ? "reflective" : "monotone-light";
}

FactorizationResult reflective_factorization(const PreordMorphism& f) {
    const Reflection ra = reflect(f.src());
    const Reflection rb = reflect(f.dst());
    const PreordMorphism quot = reflect_morphism(f, ra, rb);
    Pullback pb = preord_pullback(quot, rb.projection);

    std::map<Pair, Index> position;
    for (Index p = 0; p < pb.elements.size(); ++p) position.emplace(pb.elements[p], p);
    std::vector<Index> e_values(f.src().size());
    for (Index a = 0; a < e_values.size(); ++a) e_values[a] = position.at({ra.projection(a), f(a)});

    FactorizationResult out;
    out.mid = pb.object;
    out.e = PreordMorphism(f.src(), pb.object, std::move(e_values));
    out.m = pb.p2;
    out.system = FactorizationSystem::reflective;
    out.e_certificate = in_E(out.e);
    out.m_certificate = in_M(out.m);
    return out;
}

FactorizationResult monotone_light_factorization(const PreordMorphism& f) {
    const Reflection ra = reflect(f.src());
    // a ≡ a′ iff f(a) = f(a′) and a ~ρ a′; classes numbered by smallest member.
    std::map<Pair, Index> key_to_class;
    std::vector<Index> class_of(f.src().size());
    for (Index a = 0; a < class_of.size(); ++a) {
        auto [it, inserted] = key_to_class.emplace(Pair{ra.projection(a), f(a)}, key_to_class.size());
        class_of[a] = it->second;
    }
    Quotient q = quotient_by_classes(f.src(), class_of);

    std::vector<Index> m_values(q.classes.size());
    for (Index c = 0; c < m_values.size(); ++c) m_values[c] = f(q.classes[c].front());

    FactorizationResult out;
    out.mid = q.object;
    out.e = std::move(q.projection);
    out.m = PreordMorphism(q.object, f.dst(), std::move(m_values));
    out.system = FactorizationSystem::monotone_light;
    out.e_certificate = in_E_bar(out.e);
    out.m_certificate = in_M_star(out.m);
    return out;
}

DescentCover effective_descent_cover(const FinPreorder& b) {
    const Reflection rb = reflect(b);
    DescentCover out;
    for (Index k = 0; k < rb.classes.size(); ++k)
        for (int layer = 1; layer <= 3; ++layer)
            for (Index beta : rb.classes[k]) out.elements.push_back({k, layer, beta});

    const std::size_t n = out.elements.size();
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& el : out.elements)
        labels.push_back("(" + class_label(b.carrier(), rb.classes[el.cls]) + "," + std::to_string(el.layer) + "," +
                         b.carrier().label(el.base) + ")");
    FinSet carrier(std::move(labels));

    // Lexicographic: strictly smaller class, else same class and lower layer, else equal.
    BitMatrix m(n, n);
    for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q) {
            const auto& x = out.elements[p];
            const auto& y = out.elements[q];
            const bool below = (x.cls != y.cls && rb.object.leq(x.cls, y.cls)) ||
                               (x.cls == y.cls && x.layer < y.layer) || p == q;
            if (below) m.set(p, q);
        }
    out.object = FinPreorder(Relation(carrier, carrier, std::move(m)));

    std::vector<Index> values(n);
    for (Index p = 0; p < n; ++p) values[p] = out.elements[p].base;
    out.p = PreordMorphism(out.object, b, std::move(values));
    return out;
}

bool fibre_poset_lemma(const PreordMorphism& f) {
    if (!f.dst().is_partial_order()) throw PreconditionViolation("fibre_poset_lemma: codomain is not a partial order");
    if (!in_M_star(f)) throw PreconditionViolation("fibre_poset_lemma: some fibre is not a partial order");
    return f.src().is_partial_order();
}

bool verify_stable_units(const FinPreorder& x, const PreordMorphism& g) {
    const Reflection rx = reflect(x);
    if (g.dst().size() != rx.object.size() || !(g.dst() == rx.object))
        throw CarrierMismatch("verify_stable_units: g does not land in the reflection of X");
    const PreordMorphism unit(x, g.dst(), rx.projection.map());
    const Pullback pb = preord_pullback(unit, g);

    const Reflection rp = reflect(pb.object);
    const Reflection rz = reflect(g.src());
    const Reflection rfx = reflect(g.dst());
    const PreordMorphism fp1 = reflect_morphism(pb.p1, rp, rx);
    const PreordMorphism fp2 = reflect_morphism(pb.p2, rp, rz);
    const PreordMorphism funit = reflect_morphism(unit, rx, rfx);
    const PreordMorphism fg = reflect_morphism(g, rz, rfx);
    return is_pullback_square(fp1, fp2, funit, fg);
}

PullbackMonoCheck pullback_mono_check(const PreordMorphism& f) {
    if (!f.src().is_equivalence() || !f.dst().is_equivalence())
        throw PreconditionViolation("pullback_mono_check: both ends must be equivalence relations");
    PullbackMonoCheck out;
    out.inverse_image_matches = inverse_image(f.map(), f.dst().rel()) == f.src().rel();

    const Reflection rx = reflect(f.src());
    const Reflection ry = reflect(f.dst());
    std::vector<bool> hit(ry.classes.size(), false);
    out.induced_map_injective = true;
    for (const auto& members : rx.classes) {
        const Index target = ry.projection(f(members.front()));
        if (hit[target]) out.induced_map_injective = false;
        hit[target] = true;
    }
    return out;
}

OrthogonalityResult check_orthogonality(const PreordMorphism& e, const PreordMorphism& m, const PreordMorphism& u,
                                        const PreordMorphism& v) {
    require_same_size(e.src().carrier(), u.src().carrier(), "orthogonality: e and u");
    require_same_size(e.dst().carrier(), v.src().carrier(), "orthogonality: e and v");
    require_same_size(u.dst().carrier(), m.src().carrier(), "orthogonality: u and m");
    require_same_size(m.dst().carrier(), v.dst().carrier(), "orthogonality: m and v");
    if (!in_E_bar(e)) throw PreconditionViolation("orthogonality: e is not surjective fully faithful");
    if (!in_M_star(m)) throw PreconditionViolation("orthogonality: m has a fibre that is not a partial order");
    for (Index a = 0; a < e.src().size(); ++a)
        if (m(u(a)) != v(e(a))) throw PreconditionViolation("orthogonality: square does not commute");

    OrthogonalityResult out;
    // e is surjective, so α ∘ e = u pins α down on every point of B.
    const std::size_t nb = e.dst().size();
    std::vector<Index> alpha(nb, 0);
    std::vector<bool> set(nb, false);
    for (Index a = 0; a < e.src().size(); ++a) {
        const Index b = e(a);
        if (set[b] && alpha[b] != u(a)) {
            out.reason = "u is not constant on the fibre of e over " + std::to_string(b);
            return out;
        }
        alpha[b] = u(a);
        set[b] = true;
    }
    if (!is_monotone(e.dst(), u.dst(), alpha)) {
        out.reason = "the forced map B -> C is not monotone";
        return out;
    }
    for (Index b = 0; b < nb; ++b)
        if (m(alpha[b]) != v(b)) {
            out.reason = "the forced map does not satisfy m . alpha = v at " + std::to_string(b);
            return out;
        }
    out.diagonals = 1;
    out.diagonal = PreordMorphism(e.dst(), u.dst(), std::move(alpha));
    return out;
}

}  // namespace preord
