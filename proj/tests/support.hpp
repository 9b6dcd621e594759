#pragma once

#include <vector>

#include "preord/relation.hpp"

namespace preord::test {

inline Relation rel(std::size_t x, std::size_t y, const std::vector<Pair>& pairs) {
    return Relation::from_pairs(FinSet(x), FinSet(y), pairs);
}

inline FinPreorder closure(std::size_t n, const std::vector<Pair>& edges) {
    return reflexive_transitive_closure(rel(n, n, edges));
}

// 0 ~ 1 ≤ 2
inline FinPreorder running_example() { return closure(3, {{0, 1}, {1, 0}, {1, 2}}); }

inline PreordMorphism to_point(const FinPreorder& p) {
    return PreordMorphism(p, FinPreorder::discrete(1), std::vector<Index>(p.size(), 0));
}

}  // namespace preord::test
