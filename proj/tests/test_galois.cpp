#include <doctest.h>

#include "preord/galois.hpp"
#include "preord/testkit/enumerate.hpp"
#include "preord/testkit/oracles.hpp"
#include "preord/testkit/random.hpp"
#include "support.hpp"

using namespace preord;
using namespace preord::test;
namespace tk = preord::testkit;

namespace {

const std::vector<PreordMorphism>& small_maps() {
    static const auto maps = tk::enumerate_all_morphisms(tk::enumerate_objects({3, tk::Filter::preorder, 1}));
    return maps;
}

}  // namespace

TEST_CASE("fully faithful examples") {
    CHECK(is_fully_faithful(PreordMorphism::identity(running_example())));
    const Flag incl = is_fully_faithful(
        PreordMorphism(FinPreorder::discrete(2), FinPreorder::chain(2), std::vector<Index>{0, 1}));
    CHECK_FALSE(incl.value);
    CHECK(incl.witness == std::vector<Index>{0, 1});
    CHECK_FALSE(incl.reason.empty());
    CHECK(is_fully_faithful(to_point(FinPreorder::codiscrete(2))));
}

TEST_CASE("classification examples") {
    const PreordMorphism c2 = to_point(FinPreorder::codiscrete(2));
    const MorphismClassification c = classify(c2);
    CHECK(c.in_E_bar.value);
    CHECK_FALSE(c.in_M_star.value);
    CHECK(c.in_M_star.witness == std::vector<Index>{0, 1});
    CHECK_FALSE(c.in_M_star_by_kernel);

    const PreordMorphism inj(FinPreorder::chain(2), running_example(), std::vector<Index>{1, 2});
    CHECK(classify(inj).in_M_star.value);

    const PreordMorphism ns(FinPreorder::discrete(1), FinPreorder::chain(2), std::vector<Index>{0});
    const MorphismClassification n = classify(ns);
    CHECK_FALSE(n.effective_descent.value);
    CHECK(n.effective_descent.witness.size() == 3);
    CHECK_FALSE(n.surjective.value);
    CHECK(n.surjective.witness == std::vector<Index>{1});

    for (const auto& f : small_maps())
        if (f.src().is_partial_order() && f.dst().is_partial_order()) CHECK(classify(f).in_M.value);
}

TEST_CASE("classifier witnesses and cross-checks on every small morphism") {
    for (const auto& f : small_maps()) {
        const MorphismClassification c = classify(f);
        for (const Flag* flag : {&c.surjective, &c.fully_faithful, &c.regular_epi, &c.in_E, &c.in_M, &c.in_E_bar,
                                 &c.in_M_star, &c.effective_descent})
            if (!flag->value) CHECK_FALSE(flag->witness.empty());
        CHECK(c.in_M_star.value == c.in_M_star_by_kernel);
        CHECK(c.in_M.value == in_M_by_naturality_square(f));
        CHECK(c.in_E_bar.value == in_E_bar_by_kernel(f));
        CHECK(c.in_E_bar.value == in_E_bar_by_regular_epi(f));
        // Ē ⊆ E and M ⊆ M*
        if (c.in_E_bar) CHECK(c.in_E.value);
        if (c.in_M) CHECK(c.in_M_star.value);
        // isomorphisms lie in every class
        if (is_isomorphism(f)) CHECK((c.in_E && c.in_M && c.in_E_bar && c.in_M_star && c.effective_descent));
    }
}

TEST_CASE("reflective factorization examples") {
    const PreordMorphism between_posets(FinPreorder::chain(2), FinPreorder::chain(3), std::vector<Index>{0, 2});
    CHECK(is_isomorphism(reflective_factorization(between_posets).e));

    const FactorizationResult c = reflective_factorization(to_point(FinPreorder::codiscrete(2)));
    CHECK(c.mid.size() == 1);
    CHECK(c.e.values() == std::vector<Index>{0, 0});
    CHECK(is_isomorphism(c.m));
    CHECK(c.system == FactorizationSystem::reflective);

    for (const auto& f : small_maps()) {
        const FactorizationResult r = reflective_factorization(f);
        REQUIRE(compose(r.e, r.m).values() == f.values());
        CHECK(in_E(r.e).value);
        CHECK(in_M(r.m).value);
        CHECK(r.e_certificate.value);
        CHECK(r.m_certificate.value);
        if (in_E(f)) CHECK(is_isomorphism(r.m));
        if (in_M(f)) CHECK(is_isomorphism(r.e));
    }
}

TEST_CASE("monotone-light factorization examples") {
    const PreordMorphism inj(FinPreorder::chain(2), running_example(), std::vector<Index>{0, 2});
    const FactorizationResult i = monotone_light_factorization(inj);
    CHECK(i.e.values() == std::vector<Index>{0, 1});
    CHECK(i.m.values() == inj.values());

    const FactorizationResult c = monotone_light_factorization(to_point(FinPreorder::codiscrete(2)));
    CHECK(c.mid.size() == 1);
    CHECK(c.e.values() == std::vector<Index>{0, 0});
    CHECK(is_isomorphism(c.m));
    CHECK(c.system == FactorizationSystem::monotone_light);

    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& p : tk::enumerate_preorders(n)) {
            const Reflection r = reflect(p);
            const FactorizationResult ml = monotone_light_factorization(r.projection);
            CHECK(ml.e.values() == r.projection.values());
            CHECK(is_isomorphism(ml.m));
        }
}

TEST_CASE("monotone-light factorization on every small morphism") {
    for (const auto& f : small_maps()) {
        const FactorizationResult r = monotone_light_factorization(f);
        REQUIRE(compose(r.e, r.m).values() == f.values());
        CHECK(in_E_bar(r.e).value);
        CHECK(in_M_star(r.m).value);
        // Ker_N(m) is the reflection of Ker_N(f)
        const FinPreorder km = n_kernel(r.m).object;
        CHECK(km.is_partial_order());
        CHECK(reflect(n_kernel(f).object).object.size() == km.size());
        // m ∈ M* means Ē-parts are isomorphisms, and vice versa.
        if (in_M_star(f)) CHECK(is_isomorphism(r.e));
        if (in_E_bar(f)) CHECK(is_isomorphism(r.m));
    }
}

TEST_CASE("monotone-light factorizations of random morphisms") {
    tk::Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const PreordMorphism f = tk::random_morphism(rng, 40);
        const FactorizationResult r = monotone_light_factorization(f);
        REQUIRE(compose(r.e, r.m).values() == f.values());
        CHECK(in_E_bar(r.e).value);
        CHECK(in_M_star(r.m).value);
        const FactorizationResult s = reflective_factorization(f);
        REQUIRE(compose(s.e, s.m).values() == f.values());
        CHECK(in_E(s.e).value);
        CHECK(in_M(s.m).value);
    }
}

TEST_CASE("orthogonality with an identity leg") {
    for (const auto& m : small_maps()) {
        if (!in_M_star(m)) continue;
        // e = id: α = u for any u : A → C
        const FinPreorder& c = m.src();
        for (const auto& u : tk::enumerate_morphisms(c, c)) {
            const PreordMorphism id = PreordMorphism::identity(c);
            const PreordMorphism v = compose(u, m);
            const OrthogonalityResult r = check_orthogonality(id, m, u, v);
            REQUIRE(r.diagonals == 1);
            CHECK(r.diagonal->values() == u.values());
        }
    }
    for (const auto& e : small_maps()) {
        if (!in_E_bar(e)) continue;
        // m = id: α = v
        const FinPreorder& b = e.dst();
        const PreordMorphism id = PreordMorphism::identity(b);
        const OrthogonalityResult r = check_orthogonality(e, id, e, id);
        REQUIRE(r.diagonals == 1);
        CHECK(r.diagonal->values() == id.values());
    }
}

TEST_CASE("orthogonality preconditions and random squares") {
    const PreordMorphism c2 = to_point(FinPreorder::codiscrete(2));
    const PreordMorphism pt = PreordMorphism::identity(FinPreorder::discrete(1));
    const PreordMorphism u(FinPreorder::discrete(1), FinPreorder::codiscrete(2), std::vector<Index>{0});
    CHECK_THROWS_AS(check_orthogonality(pt, c2, u, pt), PreconditionViolation);
    CHECK_THROWS_AS(check_orthogonality(pt, c2, pt, pt), CarrierMismatch);
    const PreordMorphism in(FinPreorder::discrete(1), FinPreorder::chain(2), std::vector<Index>{0});
    CHECK_THROWS_AS(check_orthogonality(in, PreordMorphism::identity(FinPreorder::chain(2)), in,
                                        PreordMorphism::identity(FinPreorder::chain(2))),
                    PreconditionViolation);

    tk::Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const tk::RandomSquare sq = tk::random_orthogonality_square(rng, 8);
        const OrthogonalityResult r = check_orthogonality(sq.e, sq.m, sq.u, sq.v);
        REQUIRE_MESSAGE(r.diagonals == 1, r.reason);
        CHECK(compose(sq.e, *r.diagonal).values() == sq.u.values());
        CHECK(compose(*r.diagonal, sq.m).values() == sq.v.values());
        if (sq.e.dst().size() <= 4 && sq.m.src().size() <= 4) {
            const tk::UniversalResult u = tk::brute_force_universal(tk::OrthogonalityData{sq.e, sq.m, sq.u, sq.v});
            CHECK_MESSAGE(u.holds, u.counterexample);
        }
    }
}

TEST_CASE("effective descent cover examples") {
    const DescentCover point = effective_descent_cover(FinPreorder::discrete(1));
    CHECK(point.object == FinPreorder::chain(3));
    CHECK(point.p.values() == std::vector<Index>{0, 0, 0});

    const DescentCover c = effective_descent_cover(FinPreorder::codiscrete(2));
    REQUIRE(c.object.size() == 6);
    CHECK(c.object.is_partial_order());
    CHECK(is_effective_descent(c.p));
    for (Index x = 0; x < 6; ++x)
        for (Index y = 0; y < 6; ++y) {
            const CoverElement& a = c.elements[x];
            const CoverElement& b = c.elements[y];
            CHECK(a.cls == 0);
            CHECK(c.object.leq(x, y) == (x == y || a.layer < b.layer));
        }
    CHECK(c.elements[0].layer == 1);
    CHECK(c.elements[1].layer == 1);
    CHECK(c.elements[1].base == 1);
    CHECK(c.elements[2].layer == 2);
    CHECK(c.object.carrier().label(0) == "({0,1},1,0)");

    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& b : tk::enumerate_preorders(n)) {
            const DescentCover d = effective_descent_cover(b);
            CHECK(d.object.size() == 3 * b.size());
            CHECK(d.object.is_partial_order());
            CHECK(is_effective_descent(d.p));
        }
}

TEST_CASE("fibre poset lemma") {
    CHECK(fibre_poset_lemma(PreordMorphism::identity(FinPreorder::chain(3))));
    CHECK_THROWS_AS(fibre_poset_lemma(PreordMorphism::identity(FinPreorder::codiscrete(2))), PreconditionViolation);
    CHECK_THROWS_AS(fibre_poset_lemma(to_point(FinPreorder::codiscrete(2))), PreconditionViolation);
    for (const auto& f : small_maps()) {
        if (!f.dst().is_partial_order() || !in_M_star(f)) continue;
        CHECK(fibre_poset_lemma(f));
    }
}

TEST_CASE("stable units") {
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& x : tk::enumerate_preorders(n)) {
            const Reflection r = reflect(x);
            for (std::size_t z = 0; z <= 3; ++z)
                for (const auto& zo : tk::enumerate_preorders(z))
                    for (const auto& g : tk::enumerate_morphisms(zo, r.object)) CHECK(verify_stable_units(x, g));
        }
    const PreordMorphism wrong(FinPreorder::discrete(1), FinPreorder::chain(3), std::vector<Index>{0});
    CHECK_THROWS_AS(verify_stable_units(running_example(), wrong), CarrierMismatch);
}

TEST_CASE("pullback mono check") {
    const FinPreorder r = closure(3, {{0, 1}, {1, 0}});
    const PreordMorphism f(r, FinPreorder::discrete(2), std::vector<Index>{0, 0, 1});
    const PullbackMonoCheck a = pullback_mono_check(f);
    CHECK(a.inverse_image_matches);
    CHECK(a.induced_map_injective);
    const PullbackMonoCheck b = pullback_mono_check(
        PreordMorphism(FinPreorder::discrete(3), FinPreorder::discrete(2), std::vector<Index>{0, 0, 1}));
    CHECK_FALSE(b.inverse_image_matches);
    CHECK_FALSE(b.induced_map_injective);
    CHECK_THROWS_AS(pullback_mono_check(PreordMorphism::identity(FinPreorder::chain(2))), PreconditionViolation);

    for (const auto& g : small_maps()) {
        if (!g.src().is_equivalence() || !g.dst().is_equivalence()) continue;
        const PullbackMonoCheck c = pullback_mono_check(g);
        CHECK(c.inverse_image_matches == c.induced_map_injective);
    }
}

TEST_CASE("reflecting to an isomorphism") {
    CHECK(reflects_to_isomorphism(reflect(running_example()).projection));
    CHECK_FALSE(reflects_to_isomorphism(to_point(FinPreorder::chain(2))));
}
