#include <doctest.h>

#include <random>

#include "preord/graph.hpp"
#include "preord/relation.hpp"
#include "preord/testkit/enumerate.hpp"
#include "preord/testkit/oracles.hpp"
#include "support.hpp"

using namespace preord;
using namespace preord::test;
using preord::testkit::compose_by_definition;

namespace {

// All relations X → Y with |X|·|Y| ≤ 9, indexed by bitmask.
std::vector<Relation> all_relations(std::size_t x, std::size_t y) {
    std::vector<Relation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (x * y)); ++mask) {
        BitMatrix m(x, y);
        for (Index i = 0; i < x; ++i)
            for (Index j = 0; j < y; ++j)
                if ((mask >> (i * y + j)) & 1u) m.set(i, j);
        out.emplace_back(FinSet(x), FinSet(y), std::move(m));
    }
    return out;
}

std::uint64_t mask_of(const Relation& r) {
    std::uint64_t mask = 0;
    for (auto [i, j] : r.pairs()) mask |= std::uint64_t{1} << (i * r.dst().size() + j);
    return mask;
}

std::vector<SetMap> all_maps(std::size_t a, std::size_t b) {
    std::vector<SetMap> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < a; ++i) total *= b;
    if (b == 0 && a > 0) total = 0;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Index> v(a);
        std::size_t rest = code;
        for (auto& x : v) {
            x = rest % b;
            rest /= b;
        }
        out.emplace_back(FinSet(a), FinSet(b), v);
    }
    return out;
}

}  // namespace

TEST_CASE("compose examples") {
    CHECK(compose(rel(2, 2, {{0, 1}}), rel(2, 2, {{1, 0}})) == rel(2, 2, {{0, 0}}));
    const Relation r = rel(3, 3, {{0, 2}, {1, 1}});
    CHECK(compose(Relation::identity(FinSet(3)), r) == r);
    CHECK(compose(Relation::full(FinSet(3), FinSet(3)), Relation(FinSet(3), FinSet(3))).count() == 0);
    CHECK_THROWS_AS(compose(rel(2, 3, {}), rel(2, 2, {})), CarrierMismatch);
}

TEST_CASE("compose agrees with the triple loop and is associative on all carriers up to 3") {
    for (std::size_t x = 1; x <= 3; ++x)
        for (std::size_t y = 1; y <= 3; ++y)
            for (std::size_t z = 1; z <= 3; ++z) {
                const auto rs = all_relations(x, y);
                const auto ss = all_relations(y, z);
                for (const auto& r : rs)
                    for (const auto& s : ss) REQUIRE(compose(r, s) == compose_by_definition(r, s));
            }
    // Associativity over every composable triple, through composition tables.
    std::size_t triples = 0;
    for (std::size_t w = 1; w <= 3; ++w)
        for (std::size_t x = 1; x <= 3; ++x)
            for (std::size_t y = 1; y <= 3; ++y)
                for (std::size_t z = 1; z <= 3; ++z) {
                    const auto r1 = all_relations(w, x), r2 = all_relations(x, y), r3 = all_relations(y, z);
                    const auto wy = all_relations(w, y), xz = all_relations(x, z);
                    // t12[a][b] = r2[b] ∘ r1[a], t23[b][c] = r3[c] ∘ r2[b]
                    std::vector<std::uint32_t> t12(r1.size() * r2.size()), t23(r2.size() * r3.size());
                    for (std::size_t a = 0; a < r1.size(); ++a)
                        for (std::size_t b = 0; b < r2.size(); ++b)
                            t12[a * r2.size() + b] = static_cast<std::uint32_t>(mask_of(compose(r1[a], r2[b])));
                    for (std::size_t b = 0; b < r2.size(); ++b)
                        for (std::size_t c = 0; c < r3.size(); ++c)
                            t23[b * r3.size() + c] = static_cast<std::uint32_t>(mask_of(compose(r2[b], r3[c])));
                    std::vector<std::uint32_t> left(wy.size() * r3.size()), right(r1.size() * xz.size());
                    for (std::size_t m = 0; m < wy.size(); ++m)
                        for (std::size_t c = 0; c < r3.size(); ++c)
                            left[m * r3.size() + c] = static_cast<std::uint32_t>(mask_of(compose(wy[m], r3[c])));
                    for (std::size_t a = 0; a < r1.size(); ++a)
                        for (std::size_t m = 0; m < xz.size(); ++m)
                            right[a * xz.size() + m] = static_cast<std::uint32_t>(mask_of(compose(r1[a], xz[m])));
                    bool ok = true;
                    for (std::size_t a = 0; a < r1.size(); ++a)
                        for (std::size_t b = 0; b < r2.size(); ++b)
                            for (std::size_t c = 0; c < r3.size(); ++c) {
                                ok = ok && left[t12[a * r2.size() + b] * r3.size() + c] ==
                                               right[a * xz.size() + t23[b * r3.size() + c]];
                                ++triples;
                            }
                    REQUIRE(ok);
                }
    CHECK(triples > 100000000);
}

TEST_CASE("opposite is an involution and reverses composition") {
    CHECK(opposite(rel(2, 2, {{0, 1}})) == rel(2, 2, {{1, 0}}));
    const FinPreorder eq = closure(3, {{0, 1}, {1, 0}});
    CHECK(opposite(eq.rel()) == eq.rel());
    for (const auto& r : all_relations(2, 3)) {
        CHECK(opposite(opposite(r)) == r);
        for (const auto& s : all_relations(3, 2)) CHECK(opposite(compose(r, s)) == compose(opposite(s), opposite(r)));
    }
}

TEST_CASE("meet examples") {
    const Relation r = rel(2, 2, {{0, 1}, {1, 0}, {0, 0}, {1, 1}});
    const Relation s = rel(2, 2, {{0, 0}, {1, 1}, {0, 1}});
    CHECK(meet(r, s) == s);
    CHECK(meet(s, Relation::full(FinSet(2), FinSet(2))) == s);
    const FinPreorder chain = FinPreorder::chain(4);
    CHECK(meet(chain.rel(), opposite(chain.rel())) == Relation::identity(FinSet(4)));
    CHECK_THROWS_AS(meet(rel(2, 2, {}), rel(2, 3, {})), CarrierMismatch);
}

TEST_CASE("direct and inverse image examples") {
    const SetMap f(FinSet(3), FinSet(2), {0, 0, 1});
    const Relation r = rel(3, 3, {{0, 2}, {0, 0}, {1, 1}, {2, 2}});
    CHECK(direct_image(f, r) == rel(2, 2, {{0, 0}, {1, 1}, {0, 1}}));
    CHECK(direct_image(SetMap::identity(FinSet(3)), r) == r);
    CHECK(direct_image(SetMap::constant(FinSet(3), FinSet(2), 1), r) == rel(2, 2, {{1, 1}}));

    CHECK(inverse_image(f, Relation::identity(FinSet(2))) == kernel_pair(f));
    const Relation s = rel(2, 2, {{0, 0}, {1, 1}, {0, 1}});
    CHECK(inverse_image(SetMap::identity(FinSet(2)), s) == s);
    // Pointwise: (a, a′) related iff (f(a), f(a′)) ∈ S.
    CHECK(inverse_image(f, s) == rel(3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 2}}));
}

TEST_CASE("kernel pair examples") {
    CHECK(kernel_pair(SetMap(FinSet(3), FinSet(4), {2, 0, 3})) == Relation::identity(FinSet(3)));
    CHECK(kernel_pair(SetMap::constant(FinSet(3), FinSet(2), 0)) == Relation::full(FinSet(3), FinSet(3)));
    const Relation eq = kernel_pair(SetMap(FinSet(3), FinSet(2), {0, 0, 1}));
    CHECK(eq == rel(3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}));
    CHECK(is_symmetric(eq));
}

TEST_CASE("image adjunction laws on every map and relation up to 3 points") {
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b)
            for (const auto& f : all_maps(a, b)) {
                for (const auto& r : all_relations(a, a)) {
                    CHECK(r.is_subset_of(inverse_image(f, direct_image(f, r))));
                    CHECK(direct_image(f, r) == testkit::direct_image_by_definition(f, r));
                }
                for (const auto& s : all_relations(b, b)) {
                    const Relation back = direct_image(f, inverse_image(f, s));
                    CHECK(back.is_subset_of(s));
                    if (f.is_surjective()) CHECK(back == s);
                }
            }
}

TEST_CASE("direct image matches the composite definition at 4 points") {
    for (const auto& f : all_maps(4, 3))
        for (std::uint64_t mask = 0; mask < (1u << 16); mask += 37) {
            BitMatrix m(4, 4);
            for (Index i = 0; i < 16; ++i)
                if ((mask >> i) & 1u) m.set(i / 4, i % 4);
            const Relation r{FinSet(4), FinSet(4), std::move(m)};
            REQUIRE(direct_image(f, r) == testkit::direct_image_by_definition(f, r));
        }
}

TEST_CASE("relation predicates") {
    const RelationFlags d = relation_predicates(Relation::identity(FinSet(3)));
    CHECK((d.reflexive && d.transitive && d.symmetric && d.antisymmetric));
    const RelationFlags full = relation_predicates(Relation::full(FinSet(2), FinSet(2)));
    CHECK((full.reflexive && full.transitive && full.symmetric && !full.antisymmetric));
    const RelationFlags c = relation_predicates(rel(2, 2, {{0, 0}, {1, 1}, {0, 1}}));
    CHECK((c.reflexive && c.transitive && !c.symmetric && c.antisymmetric));
    CHECK_THROWS_AS(relation_predicates(rel(2, 3, {})), CarrierMismatch);
}

TEST_CASE("reflexive transitive closure") {
    CHECK(reflexive_transitive_closure(rel(3, 3, {})) == FinPreorder::discrete(3));
    CHECK(closure(3, {{0, 1}, {1, 2}}) == FinPreorder::chain(3));
    CHECK(closure(2, {{0, 1}, {1, 0}}) == FinPreorder::codiscrete(2));
}

TEST_CASE("closure is idempotent, monotone and matches Warshall") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 70;
        BitMatrix m(n, n), bigger(n, n);
        const std::size_t edges = rng() % (2 * n + 1);
        for (std::size_t e = 0; e < edges; ++e) {
            const Index a = rng() % n, b = rng() % n;
            m.set(a, b);
            bigger.set(a, b);
        }
        bigger.set(rng() % n, rng() % n);
        const Relation r{FinSet(n), FinSet(n), std::move(m)};
        const FinPreorder c = reflexive_transitive_closure(r);
        CHECK(c.rel() == testkit::closure_by_definition(r));
        CHECK(reflexive_transitive_closure(c.rel()) == c);
        const Relation rb{FinSet(n), FinSet(n), std::move(bigger)};
        CHECK(c.rel().is_subset_of(reflexive_transitive_closure(rb).rel()));
    }
}

TEST_CASE("preorder and morphism invariants are enforced") {
    CHECK_THROWS_AS(FinPreorder(rel(2, 2, {{0, 1}})), InvariantViolation);
    CHECK_THROWS_AS(FinPreorder(rel(3, 3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}})), InvariantViolation);
    CHECK_THROWS_AS(FinPreorder(rel(2, 3, {})), CarrierMismatch);
    CHECK_THROWS_AS(SetMap(FinSet(2), FinSet(2), {0, 2}), InvariantViolation);
    CHECK_THROWS_AS(SetMap(FinSet(2), FinSet(2), {0}), InvariantViolation);
    CHECK_THROWS_AS(PreordMorphism(FinPreorder::chain(2), FinPreorder::discrete(2), std::vector<Index>{0, 1}),
                    InvariantViolation);
    CHECK_THROWS_AS(FinSet(std::vector<std::string>{"a", "a"}), InvariantViolation);
}

TEST_CASE("pullback examples") {
    const FinPreorder c3 = FinPreorder::chain(3);
    const PreordMorphism g(FinPreorder::chain(2), c3, std::vector<Index>{0, 2});
    const Pullback along_id = preord_pullback(PreordMorphism::identity(c3), g);
    CHECK(along_id.object.size() == 2);
    CHECK(along_id.object == FinPreorder::chain(2));

    const Pullback prod = preord_pullback(to_point(FinPreorder::chain(2)), to_point(FinPreorder::codiscrete(2)));
    REQUIRE(prod.object.size() == 4);
    CHECK(prod.elements == std::vector<Pair>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(prod.object.rel() == rel(4, 4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
                                          {2, 2}, {2, 3}, {3, 2}, {3, 3}}));
    CHECK(prod.object.carrier().label(1) == "(0,1)");
    CHECK(is_pullback_square(prod.p1, prod.p2, to_point(FinPreorder::chain(2)), to_point(FinPreorder::codiscrete(2))));
    CHECK_THROWS_AS(preord_pullback(to_point(c3), PreordMorphism::identity(c3)), CarrierMismatch);
}

TEST_CASE("pullback squares") {
    // Kernel-pair square of any map is a pullback of sets.
    const SetMap f(FinSet(3), FinSet(2), {0, 0, 1});
    const Relation eq = kernel_pair(f);
    std::vector<Index> first, second;
    for (auto [a, b] : eq.pairs()) {
        first.push_back(a);
        second.push_back(b);
    }
    const FinSet k(first.size());
    CHECK(is_pullback_square(SetMap(k, FinSet(3), first), SetMap(k, FinSet(3), second), f, f));
    // Relation over a map.
    const Relation s = rel(2, 2, {{0, 0}, {1, 1}, {0, 1}});
    CHECK(is_pullback_square(inverse_image(f, s), f, s));
    CHECK_FALSE(is_pullback_square(Relation::identity(FinSet(3)), f, s));
    CHECK_THROWS_AS(is_pullback_square(Relation::full(FinSet(3), FinSet(3)), f, s), PreconditionViolation);
    // A commuting square that is not a pullback: the lower half of a product.
    const PreordMorphism one = to_point(FinPreorder::discrete(1));
    const PreordMorphism two = to_point(FinPreorder::discrete(2));
    CHECK_FALSE(is_pullback_square(PreordMorphism(FinPreorder::discrete(1), FinPreorder::discrete(2), std::vector<Index>{0}),
                                   one, two, one));
    CHECK_THROWS_AS(is_pullback_square(PreordMorphism::identity(FinPreorder::discrete(2)),
                                       PreordMorphism::identity(FinPreorder::discrete(2)),
                                       PreordMorphism::identity(FinPreorder::discrete(2)),
                                       PreordMorphism(FinPreorder::discrete(2), FinPreorder::discrete(2),
                                                      std::vector<Index>{1, 0})),
                    PreconditionViolation);
}

TEST_CASE("pullbacks satisfy the universal property on small cospans") {
    const auto objects = testkit::enumerate_objects({2, testkit::Filter::preorder, 1});
    const auto maps = testkit::enumerate_all_morphisms(objects);
    std::size_t checked = 0;
    for (const auto& f : maps)
        for (const auto& g : maps) {
            if (!(f.dst().size() == g.dst().size() && f.dst() == g.dst())) continue;
            const Pullback pb = preord_pullback(f, g);
            const auto u = testkit::brute_force_universal(testkit::PullbackData{f, g, pb.p1, pb.p2}, 3);
            REQUIRE_MESSAGE(u.holds, u.counterexample);
            CHECK(is_pullback_square(pb.p1, pb.p2, f, g));
            ++checked;
        }
    CHECK(checked > 100);
}

TEST_CASE("scc condensation numbering") {
    const BitMatrix adj = running_example().rel().incidence();
    SccResult r = strongly_connected_components(adj);
    CHECK(r.count == 2);
    CHECK(r.component[0] == r.component[1]);
    CHECK(r.component[0] > r.component[2]);
    canonicalize_classes(r.component);
    CHECK(r.component == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("monotone map enumeration") {
    std::size_t n = 0;
    for_each_monotone_map(FinPreorder::chain(2), FinPreorder::chain(2), [&](const std::vector<Index>&) {
        ++n;
        return true;
    });
    CHECK(n == 3);
    n = 0;
    for_each_monotone_map(FinPreorder::discrete(0), FinPreorder::discrete(0), [&](const std::vector<Index>&) {
        ++n;
        return true;
    });
    CHECK(n == 1);
    n = 0;
    for_each_monotone_map(FinPreorder::discrete(1), FinPreorder::discrete(0), [&](const std::vector<Index>&) {
        ++n;
        return true;
    });
    CHECK(n == 0);
}
