#include "preord/testkit/oracles.hpp"

#include <array>
#include <functional>
#include <mutex>
#include <sstream>

#include "preord/testkit/enumerate.hpp"

namespace preord::testkit {

namespace {

// Calls fn on every map {0..dom-1} → {0..cod-1} in odometer order until fn returns false.
void for_each_map(std::size_t dom, std::size_t cod, const std::function<bool(const std::vector<Index>&)>& fn) {
    if (cod == 0 && dom > 0) return;
    std::vector<Index> v(dom, 0);
    while (true) {
        if (!fn(v)) return;
        std::size_t i = dom;
        while (i > 0) {
            --i;
            if (++v[i] < cod) break;
            v[i] = 0;
            if (i == 0) return;
        }
        if (dom == 0) return;
    }
}

bool monotone(const FinPreorder& p, const FinPreorder& q, const std::vector<Index>& v) {
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < p.size(); ++b)
            if (p.leq(a, b) && !q.leq(v[a], v[b])) return false;
    return true;
}

// g ∈ N read pointwise (a ≤ a′ ⇒ g(a) = g(a′)). This criterion is itself
// checked against brute_force_in_N by the pretorsion suite.
template <class G>
bool constant_on_order(const FinPreorder& p, G&& g) {
    for (Index a = 0; a < p.size(); ++a)
        for (Index b = 0; b < p.size(); ++b)
            if (p.leq(a, b) && g(a) != g(b)) return false;
    return true;
}

double power(std::size_t base, std::size_t exp) {
    double r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= static_cast<double>(base);
    return r;
}

constexpr double kWorkCap = 5e7;

void guard_work(double work, const char* what) {
    if (work > kWorkCap) throw CapExceeded(std::string(what) + ": brute-force search too large");
}

const std::vector<FinPreorder>& probes_of_size(std::size_t n) {
    static std::array<std::vector<FinPreorder>, kRelationCap + 1> cache;
    static std::array<std::once_flag, kRelationCap + 1> once;
    std::call_once(once[n], [n] { cache[n] = enumerate_preorders(n); });
    return cache[n];
}

UniversalResult check(const NKernelData& d, std::size_t cap) {
    UniversalResult r;
    const FinPreorder& a = d.f.src();
    const FinPreorder& k = d.k.src();
    if (!constant_on_order(k, [&](Index x) { return d.f(d.k(x)); })) {
        r.holds = false;
        r.counterexample = "f o k is not in N";
        return r;
    }
    for (std::size_t n = 0; n <= cap; ++n) {
        guard_work(power(a.size(), n) * power(k.size(), n) * static_cast<double>(probes_of_size(n).size()),
                   "N-kernel check");
        for (const FinPreorder& x : probes_of_size(n)) {
            for_each_map(n, a.size(), [&](const std::vector<Index>& lam) {
                if (!monotone(x, a, lam)) return true;
                if (!constant_on_order(x, [&](Index i) { return d.f(lam[i]); })) return true;
                ++r.probes;
                std::size_t lifts = 0;
                for_each_map(n, k.size(), [&](const std::vector<Index>& mu) {
                    for (Index i = 0; i < n; ++i)
                        if (d.k(mu[i]) != lam[i]) return true;
                    if (monotone(x, k, mu)) ++lifts;
                    return lifts < 2;
                });
                if (lifts != 1) {
                    r.holds = false;
                    r.counterexample = "probe X = " + describe(x) + ", lambda = " + describe(lam) + " has " +
                                       std::to_string(lifts) + " factorizations through k";
                    return false;
                }
                return true;
            });
            if (!r.holds) return r;
        }
    }
    return r;
}

UniversalResult check(const NCokernelData& d, std::size_t cap) {
    UniversalResult r;
    const FinPreorder& a = d.k.dst();
    const FinPreorder& k = d.k.src();
    const FinPreorder& c = d.p.dst();
    if (!constant_on_order(k, [&](Index x) { return d.p(d.k(x)); })) {
        r.holds = false;
        r.counterexample = "p o k is not in N";
        return r;
    }
    for (std::size_t n = 0; n <= cap; ++n) {
        guard_work((power(n, a.size()) + power(n, c.size())) * power(n, a.size()) *
                       static_cast<double>(probes_of_size(n).size()),
                   "N-cokernel check");
        for (const FinPreorder& y : probes_of_size(n)) {
            for_each_map(a.size(), n, [&](const std::vector<Index>& g) {
                if (!monotone(a, y, g)) return true;
                if (!constant_on_order(k, [&](Index i) { return g[d.k(i)]; })) return true;
                ++r.probes;
                std::size_t lifts = 0;
                for_each_map(c.size(), n, [&](const std::vector<Index>& alpha) {
                    for (Index i = 0; i < a.size(); ++i)
                        if (alpha[d.p(i)] != g[i]) return true;
                    if (monotone(c, y, alpha)) ++lifts;
                    return lifts < 2;
                });
                if (lifts != 1) {
                    r.holds = false;
                    r.counterexample = "probe Y = " + describe(y) + ", g = " + describe(g) + " has " +
                                       std::to_string(lifts) + " factorizations through p";
                    return false;
                }
                return true;
            });
            if (!r.holds) return r;
        }
    }
    return r;
}

UniversalResult check(const PullbackData& d, std::size_t cap) {
    UniversalResult r;
    const FinPreorder& x = d.f.src();
    const FinPreorder& z = d.g.src();
    const FinPreorder& p = d.p1.src();
    for (Index i = 0; i < p.size(); ++i)
        if (d.f(d.p1(i)) != d.g(d.p2(i))) {
            r.holds = false;
            r.counterexample = "square does not commute at element " + std::to_string(i);
            return r;
        }
    for (std::size_t n = 0; n <= cap; ++n) {
        guard_work(power(x.size(), n) * power(z.size(), n) * power(p.size(), n) *
                       static_cast<double>(probes_of_size(n).size()),
                   "pullback check");
        for (const FinPreorder& w : probes_of_size(n)) {
            for_each_map(n, x.size(), [&](const std::vector<Index>& a) {
                if (!monotone(w, x, a)) return true;
                for_each_map(n, z.size(), [&](const std::vector<Index>& b) {
                    for (Index i = 0; i < n; ++i)
                        if (d.f(a[i]) != d.g(b[i])) return true;
                    if (!monotone(w, z, b)) return true;
                    ++r.probes;
                    std::size_t lifts = 0;
                    for_each_map(n, p.size(), [&](const std::vector<Index>& h) {
                        for (Index i = 0; i < n; ++i)
                            if (d.p1(h[i]) != a[i] || d.p2(h[i]) != b[i]) return true;
                        if (monotone(w, p, h)) ++lifts;
                        return lifts < 2;
                    });
                    if (lifts != 1) {
                        r.holds = false;
                        r.counterexample = "probe W = " + describe(w) + ", a = " + describe(a) +
                                           ", b = " + describe(b) + " has " + std::to_string(lifts) +
                                           " mediating maps";
                        return false;
                    }
                    return true;
                });
                return r.holds;
            });
            if (!r.holds) return r;
        }
    }
    return r;
}

UniversalResult check(const OrthogonalityData& d) {
    UniversalResult r;
    const FinPreorder& b = d.e.dst();
    const FinPreorder& c = d.m.src();
    guard_work(power(c.size(), b.size()), "orthogonality check");
    for (Index i = 0; i < d.e.src().size(); ++i)
        if (d.m(d.u(i)) != d.v(d.e(i))) {
            r.holds = false;
            r.counterexample = "square does not commute at element " + std::to_string(i);
            return r;
        }
    for_each_map(b.size(), c.size(), [&](const std::vector<Index>& t) {
        ++r.probes;
        for (Index i = 0; i < d.e.src().size(); ++i)
            if (t[d.e(i)] != d.u(i)) return true;
        for (Index j = 0; j < b.size(); ++j)
            if (d.m(t[j]) != d.v(j)) return true;
        if (!monotone(b, c, t)) return true;
        ++r.diagonals;
        return true;
    });
    r.holds = r.diagonals == 1;
    if (!r.holds) r.counterexample = std::to_string(r.diagonals) + " diagonals";
    return r;
}

}  // namespace

std::string describe(const std::vector<Index>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

std::string describe(const FinPreorder& x) {
    std::ostringstream os;
    os << x.size() << " points {";
    bool first = true;
    for (const auto& [a, b] : x.rel().pairs())
        if (a != b) {
            os << (first ? "" : ",") << a << "<=" << b;
            first = false;
        }
    os << "}";
    return os.str();
}

std::string describe(const PreordMorphism& f) {
    return describe(f.src()) + " -> " + describe(f.dst()) + " values " + describe(f.values());
}

Relation compose_by_definition(const Relation& r, const Relation& s) {
    const std::size_t nx = r.src().size(), ny = r.dst().size(), nz = s.dst().size();
    if (s.src().size() != ny) throw CarrierMismatch("compose_by_definition: middle carriers differ");
    BitMatrix m(nx, nz);
    for (Index x = 0; x < nx; ++x)
        for (Index y = 0; y < ny; ++y)
            if (r.contains(x, y))
                for (Index z = 0; z < nz; ++z)
                    if (s.contains(y, z)) m.set(x, z);
    return Relation(r.src(), s.dst(), std::move(m));
}

Relation closure_by_definition(const Relation& r) {
    const std::size_t n = r.src().size();
    std::vector<std::vector<bool>> t(n, std::vector<bool>(n, false));
    for (Index i = 0; i < n; ++i) {
        t[i][i] = true;
        for (Index j = 0; j < n; ++j)
            if (r.contains(i, j)) t[i][j] = true;
    }
    for (Index k = 0; k < n; ++k)
        for (Index i = 0; i < n; ++i)
            if (t[i][k])
                for (Index j = 0; j < n; ++j)
                    if (t[k][j]) t[i][j] = true;
    BitMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (t[i][j]) m.set(i, j);
    return Relation(r.src(), r.dst(), std::move(m));
}

Relation direct_image_by_definition(const SetMap& f, const Relation& r) {
    const std::size_t na = f.dom().size(), nb = f.cod().size();
    BitMatrix graph(na, nb), cograph(nb, na);
    for (Index a = 0; a < na; ++a) {
        graph.set(a, f(a));
        cograph.set(f(a), a);
    }
    const Relation g(f.dom(), f.cod(), std::move(graph));
    const Relation go(f.cod(), f.dom(), std::move(cograph));
    return compose_by_definition(compose_by_definition(go, r), g);
}

bool brute_force_in_N(const PreordMorphism& f) {
    const FinPreorder& a = f.src();
    const FinPreorder& b = f.dst();
    if (a.size() > kMorphismCap || b.size() > kMorphismCap)
        throw CapExceeded("brute_force_in_N is capped at " + std::to_string(kMorphismCap) + " points");
    if (a.size() == 0) return true;
    for (std::size_t z = 1; z <= a.size(); ++z) {
        bool found = false;
        for_each_map(a.size(), z, [&](const std::vector<Index>& h) {
            // A → (Z, Δ) must send related points to the same point.
            for (Index x = 0; x < a.size(); ++x)
                for (Index y = 0; y < a.size(); ++y)
                    if (a.leq(x, y) && h[x] != h[y]) return true;
            // Any map out of a discrete object is monotone.
            for_each_map(z, b.size(), [&](const std::vector<Index>& k) {
                bool equal = true;
                for (Index x = 0; x < a.size() && equal; ++x) equal = k[h[x]] == f(x);
                found = equal;
                return !found;
            });
            return !found;
        });
        if (found) return true;
    }
    return false;
}

OracleReflection reflect_by_meet(const FinPreorder& p) {
    const std::size_t n = p.size();
    OracleReflection out;
    out.class_of.assign(n, n);
    std::size_t classes = 0;
    for (Index a = 0; a < n; ++a) {
        if (out.class_of[a] != n) continue;
        for (Index b = a; b < n; ++b)
            if (p.leq(a, b) && p.leq(b, a)) out.class_of[b] = classes;
        ++classes;
    }
    out.order = BitMatrix(classes, classes);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (p.leq(a, b)) out.order.set(out.class_of[a], out.class_of[b]);
    return out;
}

std::vector<std::vector<bool>> enumerate_open_sets(const AlexandroffSpace& s) {
    const std::size_t n = s.size();
    if (n > kOpenSetCap)
        throw CapExceeded("open-set enumeration is capped at " + std::to_string(kOpenSetCap) + " points");
    std::vector<std::vector<bool>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<bool> set(n);
        for (Index i = 0; i < n; ++i) set[i] = (mask >> i) & 1u;
        bool open = true;
        for (Index y = 0; y < n && open; ++y)
            if (set[y])
                for (Index z = 0; z < n && open; ++z)
                    if (s.in_min_open(y, z) && !set[z]) open = false;
        if (open) out.push_back(std::move(set));
    }
    return out;
}

std::vector<Index> min_open_by_intersection(const AlexandroffSpace& s, Index x) {
    std::vector<bool> acc(s.size(), true);
    for (const auto& open : enumerate_open_sets(s)) {
        if (!open[x]) continue;
        for (Index i = 0; i < s.size(); ++i) acc[i] = acc[i] && open[i];
    }
    std::vector<Index> out;
    for (Index i = 0; i < s.size(); ++i)
        if (acc[i]) out.push_back(i);
    return out;
}

UniversalResult brute_force_universal(const UniversalData& data, std::size_t probe_cap) {
    if (probe_cap > kRelationCap)
        throw CapExceeded("probe objects are capped at " + std::to_string(kRelationCap) + " points");
    return std::visit(
        [&](const auto& d) -> UniversalResult {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, OrthogonalityData>)
                return check(d);
            else
                return check(d, probe_cap);
        },
        data);
}

}  // namespace preord::testkit
