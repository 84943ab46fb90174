// Brute-force enumeration of labeled trees through Pruefer sequences, used
// as an independent oracle for the k = 2 tree series.
#pragma once

#include "amgf/rational.hpp"

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace amgf {

/// Tree on vertices 1..m. Each edge is stored as (smaller, larger) and the
/// edge list is sorted, so equal trees compare equal.
struct LabeledTree {
    unsigned m = 1;
    std::vector<std::pair<unsigned, unsigned>> edges;

    friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

/// The tree on m = seq.size() + 2 vertices with Pruefer sequence seq.
/// Throws std::out_of_range for a label outside 1..m.
LabeledTree prufer_decode(std::span<const unsigned> seq);

/// Calls fn once for each of the m^{m-2} labeled trees on 1..m (m >= 1).
void for_each_labeled_tree(unsigned m, const std::function<void(const LabeledTree&)>& fn);

/// No vertex has both a smaller and a larger neighbor.
bool is_alternating(const LabeledTree& t);

/// Image under v -> m + 1 - v.
LabeledTree relabel_reversed(const LabeledTree& t);

inline constexpr unsigned kDefaultEnumerationCap = 9;

/// Number of alternating trees on 1..m by exhaustive enumeration; m = 1
/// counts the one-vertex tree. Throws std::domain_error("oracle scale
/// exceeded") when m > cap.
Integer count_alternating_trees(unsigned m, unsigned cap = kDefaultEnumerationCap);

}  // namespace amgf
