#include "preord/dot.hpp"

#include <sstream>

#include "preord/pretorsion.hpp"

namespace preord {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::vector<Pair> hasse_edges(const FinPreorder& poset) {
    if (!poset.is_partial_order()) throw PreconditionViolation("Hasse diagram needs a partial order");
    const std::size_t n = poset.size();
    std::vector<Pair> out;
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (a == b || !poset.leq(a, b)) continue;
            bool covers = true;
            for (Index c = 0; c < n && covers; ++c)
                if (c != a && c != b && poset.leq(a, c) && poset.leq(c, b)) covers = false;
            if (covers) out.emplace_back(a, b);
        }
    return out;
}

std::string to_dot(const FinPreorder& p, const std::string& name) {
    const Reflection r = reflect(p);
    std::ostringstream os;
    os << "digraph " << quoted(name) << " {\n";
    os << "  compound=true;\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=ellipse];\n";
    for (Index c = 0; c < r.classes.size(); ++c) {
        os << "  subgraph cluster_" << c << " {\n";
        os << "    label=" << quoted(r.object.carrier().label(c)) << ";\n";
        os << "    style=rounded; shape=box;\n";
        for (Index a : r.classes[c]) os << "    n" << a << " [label=" << quoted(p.carrier().label(a)) << "];\n";
        os << "  }\n";
    }
    // One edge per covering pair of classes, drawn between class representatives.
    for (const auto& [c, d] : hasse_edges(r.object)) {
        os << "  n" << r.classes[c].front() << " -> n" << r.classes[d].front() << " [ltail=cluster_" << c
           << ", lhead=cluster_" << d << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace preord
