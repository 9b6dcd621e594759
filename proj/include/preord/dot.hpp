#pragma once

// Graphviz export of a preorder: the Hasse diagram of its partial-order
// quotient, with each ~-class drawn as a boxed cluster of its members.

#include <string>
#include <vector>

#include "preord/relation.hpp"

namespace preord {

// Covering pairs (a, b) of a partial order: a < b with nothing strictly between.
// Display only. Throws PreconditionViolation on a non-antisymmetric input.
std::vector<Pair> hasse_edges(const FinPreorder& poset);

std::string to_dot(const FinPreorder& p, const std::string& name = "P");

}  // namespace preord
