#include "permwqo/labels.hpp"

namespace permwqo {

void validate(const LabeledPermutation& p, const FinitePoset& poset) {
    if (p.labels.size() != p.perm.size())
        throw InvalidInput("labeled permutation: " + std::to_string(p.labels.size()) + " labels for length " +
                           std::to_string(p.perm.size()));
    for (auto l : p.labels)
        if (!poset.contains_element(l)) throw InvalidInput("labeled permutation: label not in poset");
}

std::optional<Witness> labeled_occurrence(const LabeledPermutation& s, const LabeledPermutation& p,
                                          const FinitePoset& poset) {
    validate(s, poset);
    validate(p, poset);
    return detail::find_embedding(s.perm, p.perm, [&](std::size_t j, std::size_t i) {
        return poset.leq(s.labels[j], p.labels[i]);
    });
}

bool labeled_contains(const LabeledPermutation& s, const LabeledPermutation& p, const FinitePoset& poset) {
    return labeled_occurrence(s, p, poset).has_value();
}

bool subword_leq(const Word& v, const Word& w, const FinitePoset& poset) {
    // Greedy leftmost matching is optimal: an earlier match never leaves fewer
    // letters for the rest of v.
    std::size_t i = 0;
    for (auto letter : v) {
        while (i < w.size() && !poset.leq(letter, w[i])) ++i;
        if (i == w.size()) return false;
        ++i;
    }
    return true;
}

LabeledPermutation last_entry_encoding(const Permutation& beta) {
    if (beta.empty()) throw InvalidInput("last_entry_encoding: empty permutation");
    const int last = beta[beta.size() - 1];
    LabeledPermutation out{delete_entry(beta, beta.size()), {}};
    for (std::size_t i = 0; i + 1 < beta.size(); ++i) out.labels.push_back(beta[i] < last ? kHollow : kFilled);
    return out;
}

LabeledPermutation strip_zero_labels(const LabeledPermutation& p, std::size_t zero) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.perm.size(); ++i)
        if (p.labels.at(i) != zero) keep.push_back(i);
    LabeledPermutation out{pattern_at(p.perm, keep), {}};
    for (auto i : keep) out.labels.push_back(p.labels[i]);
    return out;
}

const char* compass_name(Compass c) {
    switch (c) {
        case Compass::sw: return "sw";
        case Compass::se: return "se";
        case Compass::ne: return "ne";
        case Compass::nw: return "nw";
    }
    return "?";
}

FinitePoset compass_atoms() { return FinitePoset::antichain({"sw", "se", "ne", "nw"}); }

FinitePoset compass_poset(const FinitePoset& labels) {
    return FinitePoset::product({labels, labels, compass_atoms()});
}

std::size_t compass_label(std::size_t own, std::size_t deleted, Compass dir, std::size_t label_count) {
    return (own * label_count + deleted) * 4 + static_cast<std::size_t>(dir);
}

LabeledPermutation compass_encoding(const LabeledPermutation& p, std::size_t a, std::size_t label_count) {
    if (p.perm.size() < 2) throw InvalidInput("compass_encoding: length must be at least 2");
    if (p.labels.size() != p.perm.size()) throw InvalidInput("compass_encoding: label count mismatch");
    if (a < 1 || a > p.perm.size()) throw InvalidInput("compass_encoding: index out of range");
    const int pivot = p.perm.at(a);
    const std::size_t pivot_label = p.labels[a - 1];
    LabeledPermutation out{delete_entry(p.perm, a), {}};
    for (std::size_t i = 1; i <= p.perm.size(); ++i) {
        if (i == a) continue;
        const bool right = i > a;
        const bool higher = p.perm.at(i) > pivot;
        Compass dir = right ? (higher ? Compass::sw : Compass::nw) : (higher ? Compass::se : Compass::ne);
        out.labels.push_back(compass_label(p.labels[i - 1], pivot_label, dir, label_count));
    }
    return out;
}

std::pair<LabeledPermutation, std::size_t> compass_decode(const LabeledPermutation& q, std::size_t label_count) {
    if (q.perm.empty()) throw InvalidInput("compass_decode: empty encoding");
    if (q.labels.size() != q.perm.size()) throw InvalidInput("compass_decode: label count mismatch");
    const std::size_t n = q.perm.size();
    std::optional<std::size_t> pivot_label;
    std::size_t left = 0, below = 0;
    std::vector<Compass> dirs(n);
    std::vector<std::size_t> own(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t l = q.labels[i];
        if (l >= label_count * label_count * 4) throw InvalidInput("compass_decode: label out of range");
        dirs[i] = static_cast<Compass>(l % 4);
        const std::size_t deleted = (l / 4) % label_count;
        own[i] = l / 4 / label_count;
        if (pivot_label && *pivot_label != deleted) throw InvalidInput("compass_decode: inconsistent deleted label");
        pivot_label = deleted;
        if (dirs[i] == Compass::se || dirs[i] == Compass::ne) ++left;
        if (dirs[i] == Compass::ne || dirs[i] == Compass::nw) ++below;
    }
    // Entries left of the deleted one must come first, and the value split must agree.
    for (std::size_t i = 0; i < n; ++i) {
        const bool is_left = dirs[i] == Compass::se || dirs[i] == Compass::ne;
        const bool is_below = dirs[i] == Compass::ne || dirs[i] == Compass::nw;
        if (is_left != (i < left) || is_below != (q.perm[i] <= static_cast<int>(below)))
            throw InvalidInput("compass_decode: directions inconsistent with the permutation");
    }
    const int pivot_value = static_cast<int>(below) + 1;
    std::vector<int> values;
    LabeledPermutation out;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i == left) {
            values.push_back(pivot_value);
            out.labels.push_back(*pivot_label);
        }
        if (i < n) {
            values.push_back(q.perm[i] >= pivot_value ? q.perm[i] + 1 : q.perm[i]);
            out.labels.push_back(own[i]);
        }
    }
    out.perm = Permutation(std::move(values));
    return {out, left + 1};
}

LabeledPermutation apply_symmetry(const LabeledPermutation& p, Symmetry which) {
    const std::size_t n = p.perm.size();
    // Each symmetry moves the point (i, pi(i)) to a new position; the label follows the point.
    LabeledPermutation out{apply_symmetry(p.perm, which), std::vector<std::size_t>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t x = i + 1;
        const auto y = static_cast<std::size_t>(p.perm[i]);
        std::size_t new_pos = 0;
        switch (which) {
            case Symmetry::inverse: new_pos = y; break;
            case Symmetry::reverse_complement: new_pos = n + 1 - x; break;
            case Symmetry::rc_inverse: new_pos = n + 1 - y; break;
        }
        out.labels[new_pos - 1] = p.labels[i];
    }
    return out;
}

}  // namespace permwqo
