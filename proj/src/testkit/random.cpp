#include "preord/testkit/random.hpp"

#include <algorithm>

#include "preord/galois.hpp"
#include "preord/pretorsion.hpp"

namespace preord::testkit {

namespace {

std::vector<Index> random_surjection(Rng& rng, std::size_t dom, std::size_t cod) {
    std::vector<Index> order(dom);
    for (Index i = 0; i < dom; ++i) order[i] = i;
    for (std::size_t i = dom; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<Index> v(dom);
    for (Index i = 0; i < dom; ++i) v[order[i]] = i < cod ? i : rng.below(cod);
    return v;
}

}  // namespace

FinPreorder random_preorder(Rng& rng, std::size_t n) {
    const FinSet carrier(n);
    BitMatrix m(n, n);
    if (n > 1) {
        const std::size_t mode = rng.below(3);
        const std::size_t edges = mode == 2 ? rng.between(0, n / 2) : rng.between(0, 2 * n);
        for (std::size_t e = 0; e < edges; ++e) {
            Index a = rng.below(n), b = rng.below(n);
            // Mode 1 only draws forward edges, so the closure is a partial order.
            if (mode == 1 && a > b) std::swap(a, b);
            m.set(a, b);
        }
    }
    return reflexive_transitive_closure(Relation(carrier, carrier, std::move(m)));
}

PreordMorphism random_morphism_into(Rng& rng, std::size_t dom_size, const FinPreorder& dst) {
    if (dst.size() == 0) dom_size = 0;
    std::vector<Index> v(dom_size);
    for (auto& x : v) x = rng.below(dst.size());
    BitMatrix m(dom_size, dom_size);
    if (dom_size > 1) {
        const std::size_t edges = rng.between(0, 2 * dom_size);
        for (std::size_t e = 0; e < edges; ++e) {
            const Index a = rng.below(dom_size), b = rng.below(dom_size);
            if (dst.leq(v[a], v[b])) m.set(a, b);
        }
        // Random pairs rarely share a fibre; add some that do.
        if (rng.coin()) {
            for (std::size_t e = 0; e < dom_size; ++e) {
                const Index a = rng.below(dom_size);
                for (Index b = 0; b < dom_size; ++b)
                    if (b != a && v[b] == v[a] && rng.coin(1, 3)) {
                        m.set(a, b);
                        break;
                    }
            }
        }
    }
    const FinSet carrier(dom_size);
    FinPreorder src = reflexive_transitive_closure(Relation(carrier, carrier, std::move(m)));
    return PreordMorphism(std::move(src), dst, std::move(v));
}

PreordMorphism random_morphism_from(Rng& rng, const FinPreorder& src, std::size_t max_cod) {
    const std::size_t n = src.size();
    const std::size_t cod = n == 0 ? rng.between(0, max_cod) : rng.between(1, std::max<std::size_t>(1, max_cod));
    std::vector<Index> v(n);
    const std::size_t mode = rng.below(3);
    if (mode == 0 && cod <= n) {
        v = random_surjection(rng, n, cod);
    } else if (mode == 1) {
        // Constant on ~-classes, so F(f) carries all the information.
        const Reflection r = reflect(src);
        std::vector<Index> per_class(r.classes.size());
        for (auto& x : per_class) x = rng.below(cod);
        for (Index a = 0; a < n; ++a) v[a] = per_class[r.projection(a)];
    } else {
        for (auto& x : v) x = rng.below(cod);
    }
    const FinSet carrier(cod);
    const SetMap map(src.carrier(), carrier, v);
    BitMatrix extra = direct_image(map, src.rel()).incidence();
    if (cod > 1) {
        const std::size_t edges = rng.between(0, cod / 2);
        for (std::size_t e = 0; e < edges; ++e) extra.set(rng.below(cod), rng.below(cod));
    }
    FinPreorder dst = reflexive_transitive_closure(Relation(carrier, carrier, std::move(extra)));
    return PreordMorphism(src, std::move(dst), std::move(v));
}

PreordMorphism random_morphism(Rng& rng, std::size_t max_n) {
    if (rng.coin()) return random_morphism_from(rng, random_preorder(rng, rng.between(1, max_n)), max_n);
    const FinPreorder dst = random_preorder(rng, rng.between(1, max_n));
    return random_morphism_into(rng, rng.between(1, max_n), dst);
}

PreordMorphism random_E_bar(Rng& rng, const FinPreorder& src) {
    const std::size_t n = src.size();
    std::vector<Index> block(n);
    std::size_t blocks = 0;
    for (Index a = 0; a < n; ++a) {
        block[a] = n;
        for (Index b = 0; b < a && block[a] == n; ++b)
            if (src.leq(a, b) && src.leq(b, a) && rng.coin()) block[a] = block[b];
        if (block[a] == n) block[a] = blocks++;
    }
    return quotient_by_classes(src, block).projection;
}

PreordMorphism random_E_bar_onto(Rng& rng, const FinPreorder& dst, std::size_t dom_size) {
    dom_size = std::max(dom_size, dst.size());
    if (dst.size() == 0) dom_size = 0;
    std::vector<Index> v = random_surjection(rng, dom_size, dst.size());
    const FinSet carrier(dom_size);
    const SetMap map(carrier, dst.carrier(), v);
    FinPreorder src(inverse_image(map, dst.rel()));
    return PreordMorphism(std::move(src), dst, std::move(v));
}

RandomSquare random_orthogonality_square(Rng& rng, std::size_t max_n) {
    const FinPreorder c0 = random_preorder(rng, rng.between(1, max_n));
    const PreordMorphism h = random_morphism_from(rng, c0, max_n);
    const FactorizationResult ml = monotone_light_factorization(h);
    RandomSquare sq;
    sq.m = ml.m;
    sq.alpha = random_morphism_into(rng, rng.between(1, max_n), sq.m.src());
    const std::size_t nb = sq.alpha.src().size();
    sq.e = random_E_bar_onto(rng, sq.alpha.src(), rng.between(nb, std::max(nb, max_n)));
    sq.u = compose(sq.e, sq.alpha);
    sq.v = compose(sq.alpha, sq.m);
    return sq;
}

}  // namespace preord::testkit
