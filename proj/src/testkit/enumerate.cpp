#include "preord/testkit/enumerate.hpp"

#include <set>
#include <string>

namespace preord::testkit {

void EnumerationConfig::validate() const {
    if (max_carrier > kRelationCap)
        throw CapExceeded("exhaustive enumeration is capped at " + std::to_string(kRelationCap) + " points, asked for " +
                          std::to_string(max_carrier));
}

bool passes(const FinPreorder& p, Filter f) {
    switch (f) {
        case Filter::preorder: return true;
        case Filter::poset: return p.is_partial_order();
        case Filter::equivalence: return p.is_equivalence();
    }
    return false;
}

namespace {

// Bit i*n + j of the mask is the pair (i, j).
bool reflexive_transitive_mask(std::uint64_t mask, std::size_t n) {
    auto has = [&](std::size_t i, std::size_t j) { return (mask >> (i * n + j)) & 1u; };
    for (std::size_t i = 0; i < n; ++i)
        if (!has(i, i)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (has(i, j))
                for (std::size_t k = 0; k < n; ++k)
                    if (has(j, k) && !has(i, k)) return false;
    return true;
}

FinPreorder from_mask(std::uint64_t mask, std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((mask >> (i * n + j)) & 1u) m.set(i, j);
    return FinPreorder(Relation(FinSet(n), FinSet(n), std::move(m)));
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap)
        throw CapExceeded(std::string(what) + " is capped at " + std::to_string(cap) + " points, asked for " +
                          std::to_string(n));
}

}  // namespace

PreorderStream::PreorderStream(std::size_t n, Filter filter) : n_(n), filter_(filter) {
    check_cap(n, kRelationCap, "preorder enumeration");
    end_ = std::uint64_t{1} << (n * n);
}

std::optional<FinPreorder> PreorderStream::next() {
    while (mask_ < end_) {
        const std::uint64_t mask = mask_++;
        if (!reflexive_transitive_mask(mask, n_)) continue;
        FinPreorder p = from_mask(mask, n_);
        if (passes(p, filter_)) return p;
    }
    return std::nullopt;
}

std::vector<FinPreorder> enumerate_preorders(std::size_t n, Filter filter) {
    std::vector<FinPreorder> out;
    PreorderStream stream(n, filter);
    while (auto p = stream.next()) out.push_back(std::move(*p));
    return out;
}

std::vector<FinPreorder> enumerate_preorders_by_closure(std::size_t n, Filter filter) {
    check_cap(n, kRelationCap, "preorder enumeration");
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) off.emplace_back(i, j);
    std::set<std::vector<bool>> seen;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << off.size()); ++sub) {
        std::vector<bool> r(n * n, false);
        for (std::size_t i = 0; i < n; ++i) r[i * n + i] = true;
        for (std::size_t b = 0; b < off.size(); ++b)
            if ((sub >> b) & 1u) r[off[b].first * n + off[b].second] = true;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (r[i * n + k] && r[k * n + j]) r[i * n + j] = true;
        seen.insert(std::move(r));
    }
    std::vector<FinPreorder> out;
    for (const auto& r : seen) {
        std::uint64_t mask = 0;
        for (std::size_t b = 0; b < r.size(); ++b)
            if (r[b]) mask |= std::uint64_t{1} << b;
        FinPreorder p = from_mask(mask, n);
        if (passes(p, filter)) out.push_back(std::move(p));
    }
    return out;
}

std::vector<FinPreorder> enumerate_objects(const EnumerationConfig& config) {
    config.validate();
    std::vector<FinPreorder> out;
    for (std::size_t n = 0; n <= config.max_carrier; ++n)
        for (auto& p : enumerate_preorders(n, config.filter)) out.push_back(std::move(p));
    return out;
}

MorphismStream::MorphismStream(FinPreorder p, FinPreorder q)
    : p_(std::move(p)), q_(std::move(q)), values_(p_.size(), 0) {
    check_cap(p_.size(), kMorphismCap, "morphism enumeration");
    check_cap(q_.size(), kMorphismCap, "morphism enumeration");
    // No maps out of a non-empty set into the empty set; exactly one out of the empty set.
    done_ = q_.size() == 0 && p_.size() > 0;
}

bool MorphismStream::advance() {
    for (std::size_t i = values_.size(); i-- > 0;) {
        if (++values_[i] < q_.size()) return true;
        values_[i] = 0;
    }
    return false;
}

std::optional<PreordMorphism> MorphismStream::next() {
    while (!done_) {
        std::vector<Index> current = values_;
        done_ = !advance();
        bool monotone = true;
        for (Index a = 0; a < p_.size() && monotone; ++a)
            for (Index b = 0; b < p_.size() && monotone; ++b)
                if (p_.leq(a, b) && !q_.leq(current[a], current[b])) monotone = false;
        if (monotone) return PreordMorphism(p_, q_, std::move(current));
    }
    return std::nullopt;
}

std::vector<PreordMorphism> enumerate_morphisms(const FinPreorder& p, const FinPreorder& q) {
    std::vector<PreordMorphism> out;
    MorphismStream stream(p, q);
    while (auto f = stream.next()) out.push_back(std::move(*f));
    return out;
}

std::vector<PreordMorphism> enumerate_all_morphisms(const std::vector<FinPreorder>& objects) {
    std::vector<PreordMorphism> out;
    for (const auto& p : objects)
        for (const auto& q : objects)
            for (auto& f : enumerate_morphisms(p, q)) out.push_back(std::move(f));
    return out;
}

}  // namespace preord::testkit
