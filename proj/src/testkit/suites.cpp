#include "preord/testkit/suites.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "preord/testkit/enumerate.hpp"
#include "preord/testkit/oracles.hpp"
#include "preord/testkit/random.hpp"

namespace preord::testkit {

namespace {

constexpr std::size_t kKeptFailures = 20;
// Doubly exhaustive morphism sweeps stay at 3 points even when max_n is 4.
constexpr std::size_t kSweepCap = 3;

template <class Fn>
void guarded(SuiteReport& r, const std::string& what, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        r.check(false, [&] { return what + ": threw " + e.what(); });
    }
}

std::vector<FinPreorder> objects_up_to(std::size_t n) {
    return enumerate_objects({std::min(n, kRelationCap), Filter::preorder, 1});
}

const std::vector<PreordMorphism>& sweep(std::size_t max_n) {
    static std::vector<PreordMorphism> cache[kSweepCap + 1];
    static std::once_flag once[kSweepCap + 1];
    const std::size_t n = std::min(max_n, kSweepCap);
    std::call_once(once[n], [n] { cache[n] = enumerate_all_morphisms(objects_up_to(n)); });
    return cache[n];
}

bool antisymmetric_by_loops(const FinPreorder& p) {
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < p.size(); ++b)
            if (a != b && p.leq(a, b) && p.leq(b, a)) return false;
    return true;
}

bool constant_on_order(const PreordMorphism& f) {
    for (Index a = 0; a < f.src().size(); ++a)
        for (Index b = 0; b < f.src().size(); ++b)
            if (f.src().leq(a, b) && f(a) != f(b)) return false;
    return true;
}

bool monotone_by_loops(const FinPreorder& p, const FinPreorder& q, const std::vector<Index>& v) {
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < p.size(); ++b)
            if (p.leq(a, b) && !q.leq(v[a], v[b])) return false;
    return true;
}

bool composes_to(const PreordMorphism& e, const PreordMorphism& m, const PreordMorphism& f) {
    if (e.src().size() != f.src().size() || m.dst().size() != f.dst().size()) return false;
    if (e.dst().size() != m.src().size()) return false;
    for (Index a = 0; a < f.src().size(); ++a)
        if (m(e(a)) != f(a)) return false;
    return e.src() == f.src() && m.dst() == f.dst();
}

// Every σ-chain b₁ ≤ b₂ ≤ b₃ lifts to e₁ ≤ e₂ ≤ e₃ over it.
bool chains_lift_by_search(const PreordMorphism& p) {
    const FinPreorder& a = p.src();
    const FinPreorder& b = p.dst();
    std::vector<std::vector<Index>> over(b.size());
    for (Index e = 0; e < a.size(); ++e) over[p(e)].push_back(e);
    for (Index b1 = 0; b1 < b.size(); ++b1)
        for (Index b2 = 0; b2 < b.size(); ++b2) {
            if (!b.leq(b1, b2)) continue;
            for (Index b3 = 0; b3 < b.size(); ++b3) {
                if (!b.leq(b2, b3)) continue;
                bool lifted = false;
                for (Index e2 : over[b2]) {
                    bool below = false, above = false;
                    for (Index e1 : over[b1]) below = below || a.leq(e1, e2);
                    for (Index e3 : over[b3]) above = above || a.leq(e2, e3);
                    if (below && above) {
                        lifted = true;
                        break;
                    }
                }
                if (!lifted) return false;
            }
        }
    return true;
}

// A random Alexandroff space built directly from neighbourhood tables.
AlexandroffSpace random_space(Rng& rng, std::size_t n) {
    BitMatrix u(n, n);
    for (Index x = 0; x < n; ++x) {
        u.set(x, x);
        const std::size_t picks = rng.between(0, 2);
        for (std::size_t i = 0; i < picks && n > 0; ++i) u.set(x, rng.below(n));
    }
    // Close under y ∈ U(x) ⇒ U(y) ⊆ U(x).
    bool grew = true;
    while (grew) {
        grew = false;
        for (Index x = 0; x < n; ++x)
            for (Index y = 0; y < n; ++y)
                if (u.test(x, y))
                    for (Index z = 0; z < n; ++z)
                        if (u.test(y, z) && !u.test(x, z)) {
                            u.set(x, z);
                            grew = true;
                        }
    }
    return AlexandroffSpace(FinSet(n), std::move(u));
}

std::size_t random_count(const SuiteConfig& c, std::size_t fallback) { return c.random_count.value_or(fallback); }
std::size_t random_max_n(const SuiteConfig& c, std::size_t fallback) { return c.random_max_n.value_or(fallback); }

// ---------------------------------------------------------------- pretorsion

void check_object_pretorsion(SuiteReport& r, const Subject& s, const FinPreorder& p, bool with_universal,
                             std::size_t probe_n) {
    const std::string tag = describe(p);
    guarded(r, "sym_core on " + tag, [&] {
        const Relation core = s.sym_core(p);
        bool ok = core.src().size() == p.size() && core.dst().size() == p.size();
        for (Index a = 0; ok && a < p.size(); ++a)
            for (Index b = 0; ok && b < p.size(); ++b) ok = core.contains(a, b) == (p.leq(a, b) && p.leq(b, a));
        r.check(ok, [&] { return "sym_core differs from rho meet rho-op on " + tag; });
    });
    guarded(r, "reflect on " + tag, [&] {
        const Reflection refl = s.reflect(p);
        const OracleReflection o = reflect_by_meet(p);
        r.check(antisymmetric_by_loops(refl.object), [&] { return "reflect output not antisymmetric on " + tag; });
        bool same = refl.projection.values() == o.class_of && refl.object.rel().incidence() == o.order;
        r.check(same, [&] { return "reflect disagrees with the meet-and-quotient oracle on " + tag; });
        const Reflection again = s.reflect(refl.object);
        r.check(again.object.size() == refl.object.size() && again.object == refl.object,
                [&] { return "reflect is not idempotent on " + tag; });
    });
    guarded(r, "canonical sequence on " + tag, [&] {
        const NExactSequence seq = s.canonical_sequence(p);
        r.check(seq.torsion_part.src().is_equivalence(),
                [&] { return "torsion part is not an equivalence relation on " + tag; });
        r.check(antisymmetric_by_loops(seq.free_part.dst()), [&] { return "free part is not a partial order on " + tag; });
        const NKernel k = s.n_kernel(seq.free_part);
        r.check(k.object == seq.torsion_part.src(), [&] { return "Ker_N of the unit is not (A, ~rho) on " + tag; });
        if (with_universal) {
            const UniversalResult kr = brute_force_universal(NKernelData{seq.free_part, seq.torsion_part}, probe_n);
            r.check(kr.holds, [&] { return "N-kernel property of the sequence fails on " + tag + ": " + kr.counterexample; });
            const UniversalResult cr = brute_force_universal(NCokernelData{seq.torsion_part, seq.free_part}, probe_n);
            r.check(cr.holds,
                    [&] { return "N-cokernel property of the sequence fails on " + tag + ": " + cr.counterexample; });
        }
    });
    guarded(r, "decompose/recompose on " + tag, [&] {
        r.check(recompose(decompose(p)) == p, [&] { return "recompose(decompose(P)) != P on " + tag; });
    });
}

void check_morphism_pretorsion(SuiteReport& r, const Subject& s, const PreordMorphism& f, bool brute,
                               bool with_universal, std::size_t probe_n) {
    const std::string tag = describe(f);
    guarded(r, "in_ideal_N on " + tag, [&] {
        const NMembership m = s.in_ideal_N(f);
        const bool expected = brute ? brute_force_in_N(f) : constant_on_order(f);
        r.check(m.member == expected, [&] { return "in_ideal_N is " + std::to_string(m.member) + " on " + tag; });
        if (m.member && m.witness) {
            const auto& w = *m.witness;
            const PreordMorphism back = compose(w.to_discrete, w.from_discrete);
            r.check(w.discrete_object.is_discrete() && back.values() == f.values(),
                    [&] { return "N witness does not factor " + tag + " through a discrete object"; });
        }
        if (!m.member) {
            r.check(m.counterexample && f.src().leq(m.counterexample->first, m.counterexample->second) &&
                        f(m.counterexample->first) != f(m.counterexample->second),
                    [&] { return "N counterexample is not a related pair with distinct images on " + tag; });
        }
    });
    guarded(r, "n_kernel on " + tag, [&] {
        const NKernel k = s.n_kernel(f);
        bool ok = k.object.size() == f.src().size();
        for (Index a = 0; ok && a < f.src().size(); ++a)
            for (Index b = 0; ok && b < f.src().size(); ++b)
                ok = k.object.leq(a, b) == (f.src().leq(a, b) && f(a) == f(b));
        r.check(ok, [&] { return "Ker_N differs from rho meet Eq(f) on " + tag; });
        if (with_universal) {
            const UniversalResult u = brute_force_universal(NKernelData{f, k.inclusion}, probe_n);
            r.check(u.holds, [&] { return "N-kernel universal property fails on " + tag + ": " + u.counterexample; });
        }
    });
}

}  // namespace

void SuiteReport::check(bool ok, const std::function<std::string()>& describe_failure) {
    ++checks;
    if (ok) return;
    ++failure_count;
    if (failures.size() < kKeptFailures) failures.push_back(describe_failure());
}

Subject reference_subject() {
    Subject s;
    s.sym_core = [](const FinPreorder& p) { return sym_core(p); };
    s.reflect = [](const FinPreorder& p) { return reflect(p); };
    s.in_ideal_N = [](const PreordMorphism& f) { return in_ideal_N(f); };
    s.n_kernel = [](const PreordMorphism& f) { return n_kernel(f); };
    s.canonical_sequence = [](const FinPreorder& p) { return canonical_sequence(p); };
    s.classify = [](const PreordMorphism& f) { return classify(f); };
    s.reflective_factorization = [](const PreordMorphism& f) { return reflective_factorization(f); };
    s.monotone_light_factorization = [](const PreordMorphism& f) { return monotone_light_factorization(f); };
    s.check_orthogonality = [](const PreordMorphism& e, const PreordMorphism& m, const PreordMorphism& u,
                               const PreordMorphism& v) { return check_orthogonality(e, m, u, v); };
    s.effective_descent_cover = [](const FinPreorder& b) { return effective_descent_cover(b); };
    s.preord_pullback = [](const PreordMorphism& f, const PreordMorphism& g) { return preord_pullback(f, g); };
    s.verify_stable_units = [](const FinPreorder& x, const PreordMorphism& g) { return verify_stable_units(x, g); };
    s.preorder_to_space = [](const FinPreorder& p) { return preorder_to_space(p); };
    s.space_to_preorder = [](const AlexandroffSpace& sp) { return space_to_preorder(sp); };
    s.classify_continuous = [](const ContinuousMap& f) { return classify_continuous(f); };
    return s;
}

SuiteReport run_pretorsion_suite(const Subject& s, const SuiteConfig& c) {
    SuiteReport r{"pretorsion", 0, 0, {}};
    const auto objects = objects_up_to(std::min(c.max_n, kSweepCap));
    for (const auto& p : objects) check_object_pretorsion(r, s, p, true, c.probe_n);

    // Every morphism from an equivalence relation to a partial order lies in N.
    for (const auto& t : objects) {
        if (!t.is_equivalence()) continue;
        for (const auto& fp : objects) {
            if (!antisymmetric_by_loops(fp)) continue;
            guarded(r, "hom(T, F)", [&] {
                for (const auto& f : enumerate_morphisms(t, fp))
                    r.check(brute_force_in_N(f) && s.in_ideal_N(f).member,
                            [&] { return "morphism from an equivalence to a poset outside N: " + describe(f); });
                r.check(hom_is_trivial(t, fp), [&] { return "hom_is_trivial false for " + describe(t) + " -> " + describe(fp); });
            });
        }
    }
    for (const auto& f : sweep(c.max_n)) check_morphism_pretorsion(r, s, f, true, true, c.probe_n);

    Rng rng(c.seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t count = random_count(c, 1000), max_n = random_max_n(c, 30);
    for (std::size_t i = 0; i < count; ++i) {
        const FinPreorder p = random_preorder(rng, rng.between(1, max_n));
        check_object_pretorsion(r, s, p, false, 0);
        const PreordMorphism f = random_morphism(rng, max_n);
        check_morphism_pretorsion(r, s, f, false, false, 0);
    }
    return r;
}

// ------------------------------------------------------------- stable units

namespace {

void check_pullback(SuiteReport& r, const Subject& s, const PreordMorphism& f, const PreordMorphism& g,
                    bool with_universal, std::size_t probe_n) {
    const std::string tag = describe(f) + " and " + describe(g);
    guarded(r, "pullback of " + tag, [&] {
        const Pullback pb = s.preord_pullback(f, g);
        // Carrier: exactly the pairs with f(x) = g(z), lexicographic; order componentwise.
        std::vector<Pair> expected;
        for (Index x = 0; x < f.src().size(); ++x)
            for (Index z = 0; z < g.src().size(); ++z)
                if (f(x) == g(z)) expected.emplace_back(x, z);
        bool ok = pb.elements == expected && pb.object.size() == expected.size();
        for (Index i = 0; ok && i < expected.size(); ++i)
            for (Index j = 0; ok && j < expected.size(); ++j)
                ok = pb.object.leq(i, j) == (f.src().leq(expected[i].first, expected[j].first) &&
                                             g.src().leq(expected[i].second, expected[j].second));
        r.check(ok, [&] { return "pullback carrier or order differs from the definition for " + tag; });
        if (with_universal) {
            const UniversalResult u = brute_force_universal(PullbackData{f, g, pb.p1, pb.p2}, probe_n);
            r.check(u.holds, [&] { return "pullback universal property fails for " + tag + ": " + u.counterexample; });
        }
    });
}

}  // namespace

SuiteReport run_stable_units_suite(const Subject& s, const SuiteConfig& c) {
    SuiteReport r{"stable-units", 0, 0, {}};
    const auto objects = objects_up_to(std::min(c.max_n, kSweepCap));
    for (const auto& x : objects) {
        const FinPreorder fx = reflect(x).object;
        for (const auto& z : objects)
            for (const auto& g : enumerate_morphisms(z, fx))
                guarded(r, "stable units", [&] {
                    r.check(s.verify_stable_units(x, g),
                            [&] { return "reflected pullback square is not a pullback: X = " + describe(x) + ", g = " + describe(g); });
                });
    }
    // Pullbacks of all small cospans against the brute-force universal property.
    const auto small = objects_up_to(2);
    const auto small_maps = enumerate_all_morphisms(small);
    for (const auto& f : small_maps)
        for (const auto& g : small_maps)
            if (f.dst().size() == g.dst().size() && f.dst() == g.dst()) check_pullback(r, s, f, g, true, c.probe_n);
    // The squares verify_stable_units builds, at full size.
    for (const auto& x : objects) {
        const Reflection rx = reflect(x);
        for (const auto& z : objects_up_to(2))
            for (const auto& g : enumerate_morphisms(z, rx.object)) check_pullback(r, s, rx.projection, g, true, 2);
    }

    Rng rng(c.seed ^ 0x51ed270b27a4c3d1ULL);
    const std::size_t count = random_count(c, 1000), max_n = random_max_n(c, 20);
    for (std::size_t i = 0; i < count; ++i) {
        const FinPreorder x = random_preorder(rng, rng.between(1, max_n));
        const Reflection rx = reflect(x);
        const PreordMorphism g = random_morphism_into(rng, rng.between(1, max_n), rx.object);
        guarded(r, "random stable units", [&] {
            r.check(s.verify_stable_units(x, g),
                    [&] { return "reflected pullback square is not a pullback: X = " + describe(x) + ", g = " + describe(g); });
        });
        check_pullback(r, s, rx.projection, g, false, 0);
    }
    return r;
}

// ------------------------------------------------------------ factorization

namespace {

void check_factorizations(SuiteReport& r, const Subject& s, const PreordMorphism& f, bool small) {
    const std::string tag = describe(f);
    guarded(r, "classification of " + tag, [&] {
        const MorphismClassification k = s.classify(f);
        r.check(k.in_E.value == reflects_to_isomorphism(f), [&] { return "in_E disagrees with F(f) iso on " + tag; });
        r.check(k.in_M.value == in_M_by_naturality_square(f),
                [&] { return "in_M disagrees with the naturality-square pullback on " + tag; });
        r.check(k.in_E_bar.value == in_E_bar_by_kernel(f) && k.in_E_bar.value == in_E_bar_by_regular_epi(f),
                [&] { return "the three E-bar tests disagree on " + tag; });
        r.check((!k.in_E || k.fully_faithful) && (!k.in_E_bar || k.in_E) && (!k.in_M || k.in_M_star) &&
                    (!k.effective_descent || k.regular_epi) && (!k.regular_epi || k.surjective),
                [&] { return "classification implications broken on " + tag; });
    });
    guarded(r, "reflective factorization of " + tag, [&] {
        const FactorizationResult fr = s.reflective_factorization(f);
        r.check(composes_to(fr.e, fr.m, f), [&] { return "reflective m . e != f on " + tag; });
        const MorphismClassification ke = s.classify(fr.e), km = s.classify(fr.m);
        r.check(fr.e_certificate.value && ke.in_E.value && reflects_to_isomorphism(fr.e),
                [&] { return "reflective e is not in E on " + tag; });
        r.check(fr.m_certificate.value && km.in_M.value && in_M_by_naturality_square(fr.m),
                [&] { return "reflective m is not in M on " + tag; });
    });
    guarded(r, "monotone-light factorization of " + tag, [&] {
        const FactorizationResult fr = s.monotone_light_factorization(f);
        r.check(composes_to(fr.e, fr.m, f), [&] { return "monotone-light m . e != f on " + tag; });
        const MorphismClassification ke = s.classify(fr.e), km = s.classify(fr.m);
        r.check(fr.e_certificate.value && ke.in_E_bar.value && in_E_bar_by_regular_epi(fr.e),
                [&] { return "monotone-light e is not in E-bar on " + tag; });
        r.check(fr.m_certificate.value && km.in_M_star.value && fr.m.dst() == f.dst(),
                [&] { return "monotone-light m is not in M* on " + tag; });
        // n_kernel(m) is the reflection of n_kernel(f).
        const NKernel km_kernel = s.n_kernel(fr.m);
        const Reflection fk = reflect(s.n_kernel(f).object);
        r.check(km_kernel.object == fk.object, [&] { return "Ker_N(m) is not F(Ker_N(f)) on " + tag; });

        // Uniqueness: a relabelled copy of the factorization is reached by exactly one diagonal, an isomorphism.
        const std::size_t nk = fr.mid.size();
        std::vector<Index> perm(nk);
        for (Index i = 0; i < nk; ++i) perm[i] = (i + 1) % std::max<std::size_t>(nk, 1);
        std::vector<Index> inv(nk);
        for (Index i = 0; i < nk; ++i) inv[perm[i]] = i;
        BitMatrix mid2(nk, nk);
        for (Index i = 0; i < nk; ++i)
            for (Index j = 0; j < nk; ++j)
                if (fr.mid.leq(i, j)) mid2.set(perm[i], perm[j]);
        const FinPreorder other{Relation(FinSet(nk), FinSet(nk), std::move(mid2))};
        std::vector<Index> e2(f.src().size()), m2(nk);
        for (Index a = 0; a < e2.size(); ++a) e2[a] = perm[fr.e(a)];
        for (Index i = 0; i < nk; ++i) m2[i] = fr.m(inv[i]);
        const PreordMorphism e_other(f.src(), other, e2), m_other(other, f.dst(), m2);
        const OrthogonalityResult o = s.check_orthogonality(fr.e, m_other, e_other, fr.m);
        r.check(o.diagonals == 1 && o.diagonal && is_isomorphism(*o.diagonal),
                [&] { return "comparison of two monotone-light factorizations is not a unique iso on " + tag; });
        if (small) {
            const UniversalResult u = brute_force_universal(OrthogonalityData{fr.e, m_other, e_other, fr.m});
            r.check(u.holds, [&] { return "brute-force diagonal count " + std::to_string(u.diagonals) + " on " + tag; });
        }
    });
}

void check_square(SuiteReport& r, const Subject& s, const RandomSquare& sq) {
    const std::string tag = "square e = " + describe(sq.e) + ", m = " + describe(sq.m);
    guarded(r, "orthogonality " + tag, [&] {
        const OrthogonalityResult o = s.check_orthogonality(sq.e, sq.m, sq.u, sq.v);
        r.check(o.diagonals == 1 && o.diagonal && o.diagonal->values() == sq.alpha.values(),
                [&] { return "orthogonality did not return the unique diagonal for " + tag + ": " + o.reason; });
        double work = 1;
        for (std::size_t i = 0; i < sq.e.dst().size(); ++i) work *= static_cast<double>(sq.m.src().size());
        if (work <= 2e5) {
            const UniversalResult u = brute_force_universal(OrthogonalityData{sq.e, sq.m, sq.u, sq.v});
            r.check(u.holds, [&] { return "brute force finds " + std::to_string(u.diagonals) + " diagonals for " + tag; });
        }
    });
}

}  // namespace

SuiteReport run_factorization_suite(const Subject& s, const SuiteConfig& c) {
    SuiteReport r{"factorization", 0, 0, {}};
    for (const auto& f : sweep(c.max_n)) check_factorizations(r, s, f, true);

    // E-bar is pullback-stable.
    const auto objects = objects_up_to(std::min(c.max_n, kSweepCap));
    for (const auto& e : sweep(c.max_n)) {
        if (!in_E_bar(e)) continue;
        for (const auto& z : objects)
            for (const auto& g : enumerate_morphisms(z, e.dst()))
                guarded(r, "E-bar stability", [&] {
                    const Pullback pb = s.preord_pullback(e, g);
                    r.check(s.classify(pb.p2).in_E_bar.value,
                            [&] { return "pullback of " + describe(e) + " along " + describe(g) + " leaves E-bar"; });
                });
    }

    Rng rng(c.seed ^ 0x2545f4914f6cdd1dULL);
    const std::size_t count = random_count(c, 1000), max_n = random_max_n(c, 50);
    for (std::size_t i = 0; i < count; ++i) check_factorizations(r, s, random_morphism(rng, max_n), false);
    const std::size_t square_n = std::min<std::size_t>(max_n, 20);
    for (std::size_t i = 0; i < count; ++i) check_square(r, s, random_orthogonality_square(rng, square_n));
    return r;
}

// ----------------------------------------------------------------- covering

namespace {

void check_covering(SuiteReport& r, const Subject& s, const PreordMorphism& f, bool with_lemma) {
    const std::string tag = describe(f);
    guarded(r, "M* agreement on " + tag, [&] {
        const bool by_fibres = s.classify(f).in_M_star.value;
        const bool by_kernel = antisymmetric_by_loops(s.n_kernel(f).object);
        const ContinuousMap cf(s.preorder_to_space(f.src()), s.preorder_to_space(f.dst()), f.map());
        const bool by_topology = s.classify_continuous(cf).in_M_star_top;
        r.check(by_fibres == by_kernel && by_kernel == by_topology, [&] {
            return "M* tests disagree (fibres " + std::to_string(by_fibres) + ", kernel " + std::to_string(by_kernel) +
                   ", topology " + std::to_string(by_topology) + ") on " + tag;
        });
        if (!with_lemma || !by_fibres) return;
        // Pulling a covering back along the descent cover of its codomain gives a trivial covering.
        const DescentCover cover = s.effective_descent_cover(f.dst());
        const Pullback pb = s.preord_pullback(cover.p, f);
        r.check(fibre_poset_lemma(pb.p1) && s.classify(pb.p1).in_M.value,
                [&] { return "pullback of a covering along the descent cover is not a trivial covering: " + tag; });
    });
}

}  // namespace

SuiteReport run_covering_suite(const Subject& s, const SuiteConfig& c) {
    SuiteReport r{"covering", 0, 0, {}};
    for (const auto& f : sweep(c.max_n)) check_covering(r, s, f, true);
    Rng rng(c.seed ^ 0x94d049bb133111ebULL);
    const std::size_t count = random_count(c, 1000), max_n = random_max_n(c, 50);
    for (std::size_t i = 0; i < count; ++i) check_covering(r, s, random_morphism(rng, max_n), false);
    for (std::size_t i = 0; i < count / 5; ++i) check_covering(r, s, random_morphism(rng, 6), true);
    return r;
}

// -------------------------------------------------------------- descent cover

namespace {

void check_cover(SuiteReport& r, const Subject& s, const FinPreorder& b) {
    const std::string tag = describe(b);
    guarded(r, "descent cover of " + tag, [&] {
        const DescentCover cover = s.effective_descent_cover(b);
        const std::size_t n = cover.object.size();
        r.check(n == 3 * b.size() && cover.elements.size() == n,
                [&] { return "cover has " + std::to_string(n) + " elements over " + tag; });
        r.check(antisymmetric_by_loops(cover.object), [&] { return "cover is not antisymmetric over " + tag; });
        const OracleReflection o = reflect_by_meet(b);
        bool order_ok = cover.p.dst() == b;
        for (Index p = 0; order_ok && p < n; ++p) {
            const auto& x = cover.elements[p];
            order_ok = cover.p(p) == x.base && o.class_of[x.base] == x.cls && x.layer >= 1 && x.layer <= 3;
            for (Index q = 0; order_ok && q < n; ++q) {
                const auto& y = cover.elements[q];
                const bool expected = (x.cls != y.cls && o.order.test(x.cls, y.cls)) ||
                                      (x.cls == y.cls && x.layer < y.layer) || p == q;
                order_ok = cover.object.leq(p, q) == expected;
            }
        }
        r.check(order_ok, [&] { return "cover order is not the lexicographic order over " + tag; });
        r.check(chains_lift_by_search(cover.p) && s.classify(cover.p).effective_descent.value,
                [&] { return "cover is not an effective descent map over " + tag; });
    });
}

}  // namespace

SuiteReport run_descent_suite(const Subject& s, const SuiteConfig& c) {
    SuiteReport r{"descent", 0, 0, {}};
    for (const auto& b : objects_up_to(c.max_n)) check_cover(r, s, b);
    Rng rng(c.seed ^ 0xbf58476d1ce4e5b9ULL);
    const std::size_t count = random_count(c, 500), max_n = random_max_n(c, 40);
    for (std::size_t i = 0; i < count; ++i) check_cover(r, s, random_preorder(rng, rng.between(1, max_n)));
    return r;
}

// --------------------------------------------------------------- alexandroff

namespace {

void check_space_roundtrips(SuiteReport& r, const Subject& s, const FinPreorder& p) {
    const std::string tag = describe(p);
    guarded(r, "Alexandroff round trip on " + tag, [&] {
        const AlexandroffSpace sp = s.preorder_to_space(p);
        bool rule = sp.size() == p.size();
        for (Index x = 0; rule && x < p.size(); ++x)
            for (Index y = 0; rule && y < p.size(); ++y) rule = sp.in_min_open(x, y) == p.leq(y, x);
        r.check(rule, [&] { return "U(x) is not {y : y <= x} on " + tag; });
        r.check(s.space_to_preorder(sp) == p, [&] { return "preorder -> space -> preorder is not the identity on " + tag; });
        r.check(is_T0(sp) == is_T0_by_order(sp) && is_T0(sp) == antisymmetric_by_loops(p),
                [&] { return "T0 tests disagree on " + tag; });
        r.check(is_partition(sp) == is_partition_by_order(sp) && is_partition(sp) == p.is_equivalence(),
                [&] { return "partition tests disagree on " + tag; });
    });
}

void check_space(SuiteReport& r, const Subject& s, const AlexandroffSpace& sp, bool explicit_opens) {
    guarded(r, "space round trip", [&] {
        const FinPreorder p = s.space_to_preorder(sp);
        r.check(s.preorder_to_space(p) == sp, [] { return std::string("space -> preorder -> space is not the identity"); });
        r.check(is_T0(sp) == is_T0_by_order(sp) && is_partition(sp) == is_partition_by_order(sp),
                [] { return std::string("direct and order-based T0/partition tests disagree"); });
        if (!explicit_opens) return;
        for (Index x = 0; x < sp.size(); ++x)
            r.check(min_open(sp, x) == min_open_by_intersection(sp, x),
                    [&] { return "U(" + std::to_string(x) + ") is not the intersection of its open neighbourhoods"; });
    });
}

// Continuity by preimages of every open set.
bool continuous_by_opens(const AlexandroffSpace& a, const std::vector<std::vector<bool>>& dst_opens,
                         const std::vector<Index>& v) {
    for (const auto& open : dst_opens) {
        std::vector<bool> pre(a.size());
        for (Index x = 0; x < a.size(); ++x) pre[x] = open[v[x]];
        for (Index y = 0; y < a.size(); ++y)
            if (pre[y])
                for (Index z = 0; z < a.size(); ++z)
                    if (a.in_min_open(y, z) && !pre[z]) return false;
    }
    return true;
}

void check_topological_classes(SuiteReport& r, const Subject& s, const PreordMorphism& f, bool with_regular_epi) {
    const std::string tag = describe(f);
    guarded(r, "topological classification of " + tag, [&] {
        const ContinuousMap cf(s.preorder_to_space(f.src()), s.preorder_to_space(f.dst()), f.map());
        const TopologicalClassification t = s.classify_continuous(cf);
        const MorphismClassification k = s.classify(f);
        r.check(t.in_M_star_top == k.in_M_star.value, [&] { return "M* and T0-fibre test disagree on " + tag; });
        r.check(t.in_E_prime_top == k.in_E_bar.value, [&] { return "E-bar and E-prime disagree on " + tag; });
        if (with_regular_epi)
            r.check(t.regular_epi_top == k.regular_epi.value,
                    [&] { return "regular epi tests disagree on " + tag; });
    });
}

}  // namespace

SuiteReport run_alexandroff_suite(const Subject& s, const SuiteConfig& c) {
    SuiteReport r{"alexandroff", 0, 0, {}};
    const auto objects = objects_up_to(c.max_n);
    for (const auto& p : objects) check_space_roundtrips(r, s, p);

    // Spaces enumerated directly as neighbourhood tables, independent of preorders.
    for (std::size_t n = 0; n <= std::min(c.max_n, kSweepCap); ++n) {
        std::size_t spaces = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
            BitMatrix u(n, n);
            for (Index x = 0; x < n; ++x)
                for (Index y = 0; y < n; ++y)
                    if ((mask >> (x * n + y)) & 1u) u.set(x, y);
            bool valid = true;
            for (Index x = 0; x < n && valid; ++x) {
                valid = u.test(x, x);
                for (Index y = 0; y < n && valid; ++y)
                    if (u.test(x, y))
                        for (Index z = 0; z < n && valid; ++z) valid = !u.test(y, z) || u.test(x, z);
            }
            if (!valid) continue;
            ++spaces;
            check_space(r, s, AlexandroffSpace(FinSet(n), std::move(u)), true);
        }
        r.check(spaces == enumerate_preorders(n).size(),
                [&] { return std::to_string(spaces) + " Alexandroff spaces on " + std::to_string(n) + " points"; });
    }

    // Monotone maps are exactly the continuous maps.
    const auto small = objects_up_to(std::min(c.max_n, kSweepCap));
    for (const auto& p : small)
        for (const auto& q : small)
            guarded(r, "monotone vs continuous", [&] {
                const AlexandroffSpace sp = s.preorder_to_space(p), sq = s.preorder_to_space(q);
                const auto opens = enumerate_open_sets(sq);
                std::vector<Index> v(p.size(), 0);
                const std::size_t total = q.size() == 0 ? (p.size() == 0 ? 1 : 0) : [&] {
                    std::size_t t = 1;
                    for (std::size_t i = 0; i < p.size(); ++i) t *= q.size();
                    return t;
                }();
                for (std::size_t code = 0; code < total; ++code) {
                    std::size_t rest = code;
                    for (Index i = 0; i < p.size(); ++i) {
                        v[i] = rest % q.size();
                        rest /= q.size();
                    }
                    const bool mono = monotone_by_loops(p, q, v);
                    r.check(mono == continuous_by_opens(sp, opens, v) && mono == is_continuous(sp, sq, v),
                            [&] { return "monotone/continuous mismatch for " + describe(v) + " from " + describe(p) +
                                         " to " + describe(q); });
                }
            });

    // T0 reflection agrees with the partial-order reflection.
    for (const auto& p : objects)
        guarded(r, "t0 reflection", [&] {
            const T0Reflection t = t0_reflection(s.preorder_to_space(p));
            const Reflection refl = s.reflect(p);
            r.check(t.classes == refl.classes && t.space == s.preorder_to_space(refl.object),
                    [&] { return "T0 reflection and reflect disagree on " + describe(p); });
        });

    for (const auto& f : sweep(c.max_n)) check_topological_classes(r, s, f, true);

    Rng rng(c.seed ^ 0xd6e8feb86659fd93ULL);
    const std::size_t count = random_count(c, 500), max_n = random_max_n(c, 50);
    for (std::size_t i = 0; i < count; ++i) {
        check_space_roundtrips(r, s, random_preorder(rng, rng.between(1, max_n)));
        check_space(r, s, random_space(rng, rng.between(1, max_n)), false);
        // Regular epis are compared only where f(ρ) need not be closed; see the decisions notes.
        check_topological_classes(r, s, random_morphism(rng, max_n), false);
    }
    return r;
}

// --------------------------------------------------------------- enumeration

SuiteReport run_enumeration_suite(const Subject&, const SuiteConfig& c) {
    SuiteReport r{"enumeration", 0, 0, {}};
    static const std::size_t preorders[] = {1, 1, 4, 29, 355};
    static const std::size_t posets[] = {1, 1, 3, 19, 219};
    static const std::size_t equivalences[] = {1, 1, 2, 5, 15};
    const std::size_t top = std::max<std::size_t>(3, std::min(c.max_n, kRelationCap));
    for (std::size_t n = 0; n <= top; ++n) {
        const std::pair<Filter, const std::size_t*> filters[] = {
            {Filter::preorder, preorders}, {Filter::poset, posets}, {Filter::equivalence, equivalences}};
        for (const auto& [filter, table] : filters) {
            const auto a = enumerate_preorders(n, filter);
            const auto b = enumerate_preorders_by_closure(n, filter);
            std::vector<BitMatrix> ma, mb;
            for (const auto& p : a) ma.push_back(p.rel().incidence());
            for (const auto& p : b) mb.push_back(p.rel().incidence());
            std::sort(ma.begin(), ma.end());
            std::sort(mb.begin(), mb.end());
            const bool unique = std::adjacent_find(ma.begin(), ma.end()) == ma.end();
            const std::size_t expected = table[n];
            r.check(a.size() == expected && b.size() == expected && unique && ma == mb, [&] {
                return "n = " + std::to_string(n) + ": filter gives " + std::to_string(a.size()) + ", closure gives " +
                       std::to_string(b.size()) + ", expected " + std::to_string(expected);
            });
        }
    }
    // Brute-force morphism counts against the library's backtracking enumerator.
    const auto objects = objects_up_to(std::min(c.max_n, kSweepCap));
    for (const auto& p : objects)
        for (const auto& q : objects) {
            std::size_t backtracked = 0;
            for_each_monotone_map(p, q, [&](const std::vector<Index>&) {
                ++backtracked;
                return true;
            });
            const std::size_t brute = enumerate_morphisms(p, q).size();
            r.check(brute == backtracked, [&] {
                return "morphism count " + std::to_string(brute) + " vs " + std::to_string(backtracked) + " for " +
                       describe(p) + " -> " + describe(q);
            });
        }
    return r;
}

std::vector<std::string> suite_names() {
    return {"pretorsion", "stable-units", "factorization", "covering", "descent", "alexandroff", "enumeration"};
}

SuiteReport run_suite(const std::string& name, const Subject& s, const SuiteConfig& c) {
    if (name == "pretorsion") return run_pretorsion_suite(s, c);
    if (name == "stable-units") return run_stable_units_suite(s, c);
    if (name == "factorization") return run_factorization_suite(s, c);
    if (name == "covering") return run_covering_suite(s, c);
    if (name == "descent") return run_descent_suite(s, c);
    if (name == "alexandroff") return run_alexandroff_suite(s, c);
    if (name == "enumeration") return run_enumeration_suite(s, c);
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

// ------------------------------------------------------------------ mutants

namespace {

Flag in_M_existence_only(const PreordMorphism& f) {
    const Reflection ra = reflect(f.src());
    const Reflection rb = reflect(f.dst());
    for (Index a = 0; a < f.src().size(); ++a)
        for (Index b : rb.classes[rb.projection(f(a))]) {
            bool any = false;
            for (Index a2 : ra.classes[ra.projection(a)]) any = any || f(a2) == b;
            if (!any) return Flag::no({a, b}, "no lift");
        }
    return Flag::yes();
}

NKernel kernel_dropping_a_pair(const PreordMorphism& f) {
    NKernel k = n_kernel(f);
    for (const auto& [a, b] : k.object.rel().pairs()) {
        if (a == b) continue;
        BitMatrix m = k.object.rel().incidence();
        m.set(a, b, false);
        Relation rel(k.object.carrier(), k.object.carrier(), std::move(m));
        if (!is_transitive(rel)) continue;
        FinPreorder smaller(std::move(rel));
        PreordMorphism inc(smaller, f.src(), SetMap::identity(f.src().carrier()));
        return {std::move(smaller), std::move(inc)};
    }
    return k;
}

FactorizationResult monotone_light_by_kernel_pair_only(const PreordMorphism& f) {
    std::map<Index, Index> by_value;
    std::vector<Index> class_of(f.src().size());
    for (Index a = 0; a < class_of.size(); ++a)
        class_of[a] = by_value.emplace(f(a), by_value.size()).first->second;
    Quotient q = quotient_by_classes(f.src(), class_of);
    std::vector<Index> m_values(q.classes.size());
    for (Index c2 = 0; c2 < m_values.size(); ++c2) m_values[c2] = f(q.classes[c2].front());
    FactorizationResult out;
    out.mid = q.object;
    out.e = q.projection;
    out.m = PreordMorphism(q.object, f.dst(), std::move(m_values));
    out.system = FactorizationSystem::monotone_light;
    out.e_certificate = in_E_bar(out.e);
    out.m_certificate = in_M_star(out.m);
    return out;
}

DescentCover cover_with_nonstrict_class_order(const FinPreorder& b) {
    DescentCover real = effective_descent_cover(b);
    const Reflection rb = reflect(b);
    const std::size_t n = real.elements.size();
    BitMatrix m(n, n);
    for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q) {
            const auto& x = real.elements[p];
            const auto& y = real.elements[q];
            if (rb.object.leq(x.cls, y.cls)) m.set(p, q);
        }
    DescentCover out;
    out.elements = real.elements;
    out.object = FinPreorder(Relation(real.object.carrier(), real.object.carrier(), std::move(m)));
    out.p = PreordMorphism(out.object, b, real.p.map());
    return out;
}

Pullback pullback_ignoring_second_order(const PreordMorphism& f, const PreordMorphism& g) {
    Pullback pb = preord_pullback(f, g);
    const std::size_t n = pb.elements.size();
    BitMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (f.src().leq(pb.elements[i].first, pb.elements[j].first) &&
                pb.elements[i].second == pb.elements[j].second)
                m.set(i, j);
    Pullback out;
    out.elements = pb.elements;
    out.object = FinPreorder(Relation(pb.object.carrier(), pb.object.carrier(), std::move(m)));
    out.p1 = PreordMorphism(out.object, f.src(), pb.p1.map());
    out.p2 = PreordMorphism(out.object, g.src(), pb.p2.map());
    return out;
}

}  // namespace

std::vector<Mutation> documented_mutations() {
    std::vector<Mutation> out;
    out.push_back({"reflect-without-collapse", "reflect returns P itself with singleton classes",
                   [](Subject& s) {
                       s.reflect = [](const FinPreorder& p) {
                           std::vector<Index> id(p.size());
                           for (Index i = 0; i < id.size(); ++i) id[i] = i;
                           return quotient_by_classes(p, id);
                       };
                   }});
    out.push_back({"in-M-existence-only", "in_M accepts any number of lifts, not exactly one",
                   [](Subject& s) {
                       s.classify = [](const PreordMorphism& f) {
                           MorphismClassification k = classify(f);
                           k.in_M = in_M_existence_only(f);
                           return k;
                       };
                   }});
    out.push_back({"n-kernel-drops-a-pair", "n_kernel removes one removable pair from rho meet Eq(f)",
                   [](Subject& s) { s.n_kernel = kernel_dropping_a_pair; }});
    out.push_back({"sym-core-is-rho", "sym_core returns rho instead of rho meet rho-op",
                   [](Subject& s) { s.sym_core = [](const FinPreorder& p) { return p.rel(); }; }});
    out.push_back({"in-N-always", "in_ideal_N answers yes for every morphism",
                   [](Subject& s) {
                       s.in_ideal_N = [](const PreordMorphism&) {
                           NMembership m;
                           m.member = true;
                           return m;
                       };
                   }});
    out.push_back({"monotone-light-by-Eq-only", "the monotone-light quotient uses Eq(f) without meeting ~rho",
                   [](Subject& s) { s.monotone_light_factorization = monotone_light_by_kernel_pair_only; }});
    out.push_back({"cover-nonstrict-class-order", "the descent cover relates all triples over related classes",
                   [](Subject& s) { s.effective_descent_cover = cover_with_nonstrict_class_order; }});
    out.push_back({"in-M-star-whole-domain", "in_M_star tests antisymmetry of the whole domain, not the fibres",
                   [](Subject& s) {
                       s.classify = [](const PreordMorphism& f) {
                           MorphismClassification k = classify(f);
                           k.in_M_star = f.src().is_partial_order() ? Flag::yes() : Flag::no({}, "domain");
                           return k;
                       };
                   }});
    out.push_back({"pullback-ignores-second-order", "pullback order compares the second component by equality",
                   [](Subject& s) { s.preord_pullback = pullback_ignoring_second_order; }});
    out.push_back({"space-from-up-sets", "preorder_to_space uses U(x) = {y : x <= y}",
                   [](Subject& s) {
                       s.preorder_to_space = [](const FinPreorder& p) {
                           return AlexandroffSpace(p.carrier(), p.rel().incidence());
                       };
                   }});
    return out;
}

}  // namespace preord::testkit
