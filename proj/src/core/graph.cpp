#include "preord/graph.hpp"

#include <algorithm>
#include <limits>

namespace preord {

SccResult strongly_connected_components(const BitMatrix& adjacency) {
    const std::size_t n = adjacency.rows();
    constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

    SccResult out;
    out.component.assign(n, kUnvisited);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;

    // Explicit DFS frames: (vertex, next column to scan).
    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    std::vector<Frame> frames;
    std::size_t counter = 0;

    auto next_neighbor = [&](std::size_t v, std::size_t from) -> std::size_t {
        auto row = adjacency.row(v);
        for (std::size_t w = from / kWordBits; w < row.size(); ++w) {
            Word bits = row[w];
            if (w == from / kWordBits) bits &= ~Word{0} << (from % kWordBits);
            if (bits) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        }
        return n;
    };

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            Frame& fr = frames.back();
            const std::size_t w = fr.next < n ? next_neighbor(fr.v, fr.next) : n;
            if (w < n) {
                fr.next = w + 1;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
                continue;
            }
            const std::size_t v = fr.v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            if (low[v] == index[v]) {
                std::size_t x;
                do {
                    x = stack.back();
                    stack.pop_back();
                    on_stack[x] = false;
                    out.component[x] = out.count;
                } while (x != v);
                ++out.count;
            }
        }
    }
    return out;
}

std::size_t canonicalize_classes(std::vector<std::size_t>& class_of) {
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> renumber;
    std::size_t next = 0;
    for (std::size_t& c : class_of) {
        if (c >= renumber.size()) renumber.resize(c + 1, kUnset);
        if (renumber[c] == kUnset) renumber[c] = next++;
        c = renumber[c];
    }
    return next;
}

}  // namespace preord
