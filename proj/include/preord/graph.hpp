#pragma once

#include <cstddef>
#include <vector>

#include "preord/bitmatrix.hpp"

namespace preord {

// Strongly connected components of the digraph whose adjacency rows are the
// rows of a square BitMatrix. Components are numbered in Tarjan emission
// order, which is a reverse topological order of the condensation: every
// edge u → v between different components has component[u] > component[v].
struct SccResult {
    std::vector<std::size_t> component;
    std::size_t count = 0;
};

SccResult strongly_connected_components(const BitMatrix& adjacency);

// Renumbers a labelling so that classes are ordered by their smallest member.
// Returns the number of classes.
std::size_t canonicalize_classes(std::vector<std::size_t>& class_of);

}  // namespace preord
