#include "permwqo/decomposition.hpp"

namespace permwqo {

std::size_t SubstitutionTree::leaf_count() const {
    if (kind == Kind::leaf) return 1;
    std::size_t total = 0;
    for (const auto& c : children) total += c.leaf_count();
    return total;
}

Permutation SubstitutionTree::node_skeleton() const {
    switch (kind) {
        case Kind::leaf: return Permutation::identity(1);
        case Kind::sum: return Permutation::identity(children.size());
        case Kind::skew: return Permutation::decreasing(children.size());
        case Kind::simple: return skeleton;
    }
    return {};
}

Permutation SubstitutionTree::evaluate() const {
    if (kind == Kind::leaf) return Permutation::identity(1);
    std::vector<Permutation> blocks;
    blocks.reserve(children.size());
    for (const auto& c : children) blocks.push_back(c.evaluate());
    return inflate(node_skeleton(), blocks);
}

std::string SubstitutionTree::str() const {
    if (kind == Kind::leaf) return "1";
    std::string out = kind == Kind::sum ? "+(" : kind == Kind::skew ? "-(" : skeleton.compact() + "[";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += ", ";
        out += children[i].str();
    }
    out += kind == Kind::simple ? "]" : ")";
    return out;
}

std::vector<Interval> maximal_intervals(const Permutation& pi) {
    const auto all = intervals(pi);
    std::vector<Interval> out;
    for (const auto& r : all) {
        bool maximal = true;
        for (const auto& s : all) {
            if (s != r && s.first <= r.first && r.last <= s.last) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(r);
    }
    return out;
}

namespace {

SubstitutionTree decompose(const Permutation& pi) {
    using Kind = SubstitutionTree::Kind;
    SubstitutionTree node;
    if (pi.size() == 1) return node;

    for (SumKind dir : {SumKind::direct, SumKind::skew}) {
        auto parts = components(pi, dir);
        if (parts.size() > 1) {
            node.kind = dir == SumKind::direct ? Kind::sum : Kind::skew;
            for (const auto& p : parts) node.children.push_back(decompose(p));
            return node;
        }
    }

    // Neither sum nor skew decomposable: the maximal intervals are disjoint and
    // the quotient by them is simple.
    node.kind = Kind::simple;
    const auto blocks = maximal_intervals(pi);
    std::vector<int> representatives;
    std::size_t pos = 1;
    auto next_block = blocks.begin();
    while (pos <= pi.size()) {
        if (next_block != blocks.end() && next_block->first == pos) {
            std::vector<int> vals(pi.begin() + static_cast<std::ptrdiff_t>(next_block->first - 1),
                                  pi.begin() + static_cast<std::ptrdiff_t>(next_block->last));
            representatives.push_back(pi.at(pos));
            node.children.push_back(decompose(reduce(vals)));
            pos = next_block->last + 1;
            ++next_block;
        } else {
            representatives.push_back(pi.at(pos));
            node.children.emplace_back();
            ++pos;
        }
    }
    node.skeleton = reduce(representatives);
    return node;
}

}  // namespace

SubstitutionTree decompose_tree(const Permutation& pi) {
    if (pi.empty()) throw InvalidInput("decompose_tree: empty permutation has no decomposition");
    return decompose(pi);
}

}  // namespace permwqo
