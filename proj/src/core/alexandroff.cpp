#include "preord/alexandroff.hpp"

#include <stdexcept>
#include <string>

#include "preord/graph.hpp"
#include "preord/pretorsion.hpp"

namespace preord {

namespace {

const simd::Kernels& K() { return simd::active(); }

void check_point(const AlexandroffSpace& s, Index x) {
    if (x >= s.size())
        throw std::out_of_range("point " + std::to_string(x) + " outside a space of size " + std::to_string(s.size()));
}

}  // namespace

AlexandroffSpace::AlexandroffSpace(FinSet carrier, BitMatrix min_nbhd)
    : carrier_(std::move(carrier)), u_(std::move(min_nbhd)) {
    if (u_.rows() != carrier_.size() || u_.cols() != carrier_.size())
        throw CarrierMismatch("minimal neighbourhood table does not match the carrier");
    for (Index x = 0; x < u_.rows(); ++x) {
        if (!u_.test(x, x)) throw InvariantViolation("point " + std::to_string(x) + " is not in its own U(x)");
        u_.for_each_in_row(x, [&](Index y) {
            if (!K().is_subset(u_.row(y), u_.row(x)))
                throw InvariantViolation("U(" + std::to_string(y) + ") is not contained in U(" + std::to_string(x) +
                                         ") although " + std::to_string(y) + " is in U(" + std::to_string(x) + ")");
        });
    }
}

bool AlexandroffSpace::is_open(const std::vector<bool>& subset) const {
    for (Index y = 0; y < subset.size(); ++y) {
        if (!subset[y]) continue;
        bool inside = true;
        u_.for_each_in_row(y, [&](Index z) { inside = inside && subset[z]; });
        if (!inside) return false;
    }
    return true;
}

AlexandroffSpace preorder_to_space(const FinPreorder& p) {
    // U(x) = {y : y ρ x} is column x of ρ.
    return AlexandroffSpace(p.carrier(), p.rel().incidence().transposed());
}

FinPreorder space_to_preorder(const AlexandroffSpace& s) {
    // x ≤ y iff x ∈ U(y)
    return FinPreorder(Relation(s.carrier(), s.carrier(), s.min_nbhds().transposed()));
}

std::vector<Index> closure_of_point(const AlexandroffSpace& s, Index x) {
    check_point(s, x);
    std::vector<Index> out;
    for (Index y = 0; y < s.size(); ++y)
        if (s.in_min_open(y, x)) out.push_back(y);
    return out;
}

std::vector<Index> min_open(const AlexandroffSpace& s, Index x) {
    check_point(s, x);
    std::vector<Index> out;
    s.min_nbhds().for_each_in_row(x, [&](Index y) { out.push_back(y); });
    return out;
}

bool is_T0(const AlexandroffSpace& s) {
    const BitMatrix closures = s.min_nbhds().transposed();  // row x = closure of {x}
    for (Index x = 0; x < s.size(); ++x)
        for (Index y = x + 1; y < s.size(); ++y)
            if (K().equal(closures.row(x), closures.row(y))) return false;
    return true;
}

bool is_partition(const AlexandroffSpace& s) {
    for (Index x = 0; x < s.size(); ++x) {
        std::vector<bool> complement(s.size(), true);
        s.min_nbhds().for_each_in_row(x, [&](Index y) { complement[y] = false; });
        if (!s.is_open(complement)) return false;
    }
    return true;
}

bool is_T0_by_order(const AlexandroffSpace& s) { return space_to_preorder(s).is_partial_order(); }

bool is_partition_by_order(const AlexandroffSpace& s) { return space_to_preorder(s).is_equivalence(); }

AlexandroffSpace subspace(const AlexandroffSpace& s, const std::vector<Index>& points) {
    std::vector<std::string> labels;
    for (Index p : points) labels.push_back(s.carrier().label(p));
    BitMatrix u(points.size(), points.size());
    for (Index i = 0; i < points.size(); ++i)
        for (Index j = 0; j < points.size(); ++j)
            if (s.in_min_open(points[i], points[j])) u.set(i, j);
    return AlexandroffSpace(FinSet(std::move(labels)), std::move(u));
}

bool has_trivial_topology(const AlexandroffSpace& s) {
    // Non-empty opens are unions of U(x); all of them are the whole space iff every U(x) is.
    return s.min_nbhds().count() == s.size() * s.size();
}

bool is_continuous(const AlexandroffSpace& src, const AlexandroffSpace& dst, const std::vector<Index>& values) {
    for (Index x = 0; x < src.size(); ++x) {
        bool ok = true;
        src.min_nbhds().for_each_in_row(x, [&](Index y) { ok = ok && dst.in_min_open(values[x], values[y]); });
        if (!ok) return false;
    }
    return true;
}

ContinuousMap::ContinuousMap(AlexandroffSpace src, AlexandroffSpace dst, SetMap map)
    : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {
    require_same_size(map_.dom(), src_.carrier(), "continuous map domain");
    require_same_size(map_.cod(), dst_.carrier(), "continuous map codomain");
    if (!is_continuous(src_, dst_, map_.values())) throw InvariantViolation("map is not continuous");
}

ContinuousMap to_continuous(const PreordMorphism& f) {
    return ContinuousMap(preorder_to_space(f.src()), preorder_to_space(f.dst()), f.map());
}

PreordMorphism to_monotone(const ContinuousMap& f) {
    return PreordMorphism(space_to_preorder(f.src()), space_to_preorder(f.dst()), f.map());
}

T0Reflection t0_reflection(const AlexandroffSpace& s) {
    const BitMatrix closures = s.min_nbhds().transposed();
    std::vector<Index> class_of(s.size());
    std::vector<Index> reps;
    for (Index x = 0; x < s.size(); ++x) {
        Index c = 0;
        while (c < reps.size() && !K().equal(closures.row(reps[c]), closures.row(x))) ++c;
        if (c == reps.size()) reps.push_back(x);
        class_of[x] = c;
    }
    T0Reflection out;
    out.classes.resize(reps.size());
    for (Index x = 0; x < s.size(); ++x) out.classes[class_of[x]].push_back(x);

    std::vector<std::string> labels;
    for (const auto& members : out.classes) labels.push_back(class_label(s.carrier(), members));
    BitMatrix u(reps.size(), reps.size());
    for (Index x = 0; x < s.size(); ++x)
        s.min_nbhds().for_each_in_row(x, [&](Index y) { u.set(class_of[x], class_of[y]); });
    FinSet carrier(std::move(labels));
    out.space = AlexandroffSpace(carrier, std::move(u));
    out.projection = ContinuousMap(s, out.space, SetMap(s.carrier(), carrier, std::move(class_of)));
    return out;
}

AlexandroffSpace finest_topology(const ContinuousMap& f) {
    const AlexandroffSpace& a = f.src();
    const std::size_t nb = f.dst().size();
    // For each y grow the smallest V ∋ y whose preimage is open: whenever
    // f(x) ∈ V, all of f(U(x)) must be in V as well.
    BitMatrix u(nb, nb);
    for (Index y = 0; y < nb; ++y) {
        std::vector<bool> in_v(nb, false);
        in_v[y] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (Index x = 0; x < a.size(); ++x) {
                if (!in_v[f(x)]) continue;
                a.min_nbhds().for_each_in_row(x, [&](Index z) {
                    if (!in_v[f(z)]) {
                        in_v[f(z)] = true;
                        grew = true;
                    }
                });
            }
        }
        for (Index z = 0; z < nb; ++z)
            if (in_v[z]) u.set(y, z);
    }
    return AlexandroffSpace(f.dst().carrier(), std::move(u));
}

TopologicalClassification classify_continuous(const ContinuousMap& f) {
    TopologicalClassification c;
    c.surjective = f.map().is_surjective();
    c.codomain_is_finest = finest_topology(f) == f.dst();

    std::vector<std::vector<Index>> fibres(f.dst().size());
    for (Index x = 0; x < f.src().size(); ++x) fibres[f(x)].push_back(x);
    c.fibres_trivial = true;
    c.fibres_T0 = true;
    for (const auto& points : fibres) {
        const AlexandroffSpace fibre = subspace(f.src(), points);
        c.fibres_trivial = c.fibres_trivial && has_trivial_topology(fibre);
        c.fibres_T0 = c.fibres_T0 && is_T0(fibre);
    }
    c.in_M_star_top = c.fibres_T0;
    c.regular_epi_top = c.surjective && c.codomain_is_finest;
    c.in_E_prime_top = c.regular_epi_top && c.fibres_trivial;
    return c;
}

}  // namespace preord
