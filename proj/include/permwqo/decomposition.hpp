#pragma once

#include <string>
#include <vector>

#include "permwqo/permutation.hpp"

namespace permwqo {

/// Node of a substitution decomposition tree.
///
/// Sum and skew nodes group maximal chains of direct (resp. skew) summands, so
/// a sum node never has a sum child and a skew node never has a skew child.
/// Every remaining internal node inflates a simple skeleton of length >= 4.
struct SubstitutionTree {
    enum class Kind { leaf, sum, skew, simple };

    Kind kind = Kind::leaf;
    Permutation skeleton;  // only meaningful for Kind::simple
    std::vector<SubstitutionTree> children;

    std::size_t leaf_count() const;

    /// The skeleton inflated at this node: 12..k for sum, k..21 for skew, 1 for a leaf.
    Permutation node_skeleton() const;

    /// Recursive inflation back to a permutation.
    Permutation evaluate() const;

    /// Compact term such as "2413[1, +(1, -(1, 1)), -(1, 1, 1), +(1, 1)]".
    std::string str() const;

    friend bool operator==(const SubstitutionTree&, const SubstitutionTree&) = default;
};

/// Throws InvalidInput on the empty permutation.
SubstitutionTree decompose_tree(const Permutation& pi);

/// The maximal proper intervals of a permutation that is neither sum nor skew
/// decomposable; together with singletons they partition the positions.
std::vector<Interval> maximal_intervals(const Permutation& pi);

}  // namespace permwqo
