#include "amgf/combinat.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace amgf {

LabeledTree prufer_decode(std::span<const unsigned> seq) {
    const auto m = static_cast<unsigned>(seq.size() + 2);
    std::vector<unsigned> degree(m + 1, 1);
    for (unsigned v : seq) {
        if (v < 1 || v > m) {
            throw std::out_of_range("pruefer label " + std::to_string(v) + " outside 1.." + std::to_string(m));
        }
        ++degree[v];
    }
    LabeledTree t{m, {}};
    t.edges.reserve(m - 1);
    for (unsigned v : seq) {
        unsigned leaf = 1;
        while (degree[leaf] != 1) ++leaf;
        t.edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        --degree[leaf];
        --degree[v];
    }
    unsigned u = 0, w = 0;
    for (unsigned v = 1; v <= m; ++v) {
        if (degree[v] == 1) (u == 0 ? u : w) = v;
    }
    t.edges.emplace_back(u, w);
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

void for_each_labeled_tree(unsigned m, const std::function<void(const LabeledTree&)>& fn) {
    if (m == 0) throw std::domain_error("a tree needs at least one vertex");
    if (m == 1) {
        fn(LabeledTree{1, {}});
        return;
    }
    std::vector<unsigned> seq(m - 2, 1);
    for (;;) {
        fn(prufer_decode(seq));
        // odometer over {1..m}^{m-2}
        std::size_t i = 0;
        while (i < seq.size() && seq[i] == m) seq[i++] = 1;
        if (i == seq.size()) break;
        ++seq[i];
    }
}

bool is_alternating(const LabeledTree& t) {
    // bit 0: has a smaller neighbor, bit 1: has a larger neighbor
    std::vector<unsigned char> seen(t.m + 1, 0);
    for (const auto& [u, v] : t.edges) {
        seen[v] |= 1;
        seen[u] |= 2;
    }
    return std::none_of(seen.begin(), seen.end(), [](unsigned char s) { return s == 3; });
}

LabeledTree relabel_reversed(const LabeledTree& t) {
    LabeledTree r{t.m, {}};
    for (const auto& [u, v] : t.edges) r.edges.emplace_back(t.m + 1 - v, t.m + 1 - u);
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

Integer count_alternating_trees(unsigned m, unsigned cap) {
    if (m > cap) throw std::domain_error("oracle scale exceeded");
    unsigned long count = 0;
    for_each_labeled_tree(m, [&](const LabeledTree& t) { count += is_alternating(t) ? 1 : 0; });
    return Integer(count);
}

}  // namespace amgf
