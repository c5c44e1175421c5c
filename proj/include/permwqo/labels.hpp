#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "permwqo/permutation.hpp"
#include "permwqo/poset.hpp"

namespace permwqo {

/// A permutation with one label (an index into some FinitePoset) per position.
struct LabeledPermutation {
    Permutation perm;
    std::vector<std::size_t> labels;

    friend auto operator<=>(const LabeledPermutation&, const LabeledPermutation&) = default;
    friend bool operator==(const LabeledPermutation&, const LabeledPermutation&) = default;
};

/// Throws InvalidInput when lengths differ or a label is outside the poset.
void validate(const LabeledPermutation& p, const FinitePoset& poset);

/// Lexicographically least witness of `s` in `p` whose labels satisfy
/// label_s(j) <= label_p(i_j) in `poset`.
std::optional<Witness> labeled_occurrence(const LabeledPermutation& s, const LabeledPermutation& p,
                                          const FinitePoset& poset);
bool labeled_contains(const LabeledPermutation& s, const LabeledPermutation& p,
                      const FinitePoset& poset);

/// A word over a finite poset, letters as element indices.
using Word = std::vector<std::size_t>;

/// Generalised subword order: v embeds in w with each letter dominated.
bool subword_leq(const Word& v, const Word& w, const FinitePoset& poset);

/// Least (i, j), i < j, in lexicographic order with leq(seq[i], seq[j]); indices 1-based.
template <class T, class Leq>
std::optional<std::pair<std::size_t, std::size_t>> find_good_pair(const std::vector<T>& seq, Leq&& leq) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (leq(seq[i], seq[j])) return std::make_pair(i + 1, j + 1);
    return std::nullopt;
}

/// Label indices of FinitePoset::two_antichain().
inline constexpr std::size_t kHollow = 0;
inline constexpr std::size_t kFilled = 1;

/// Removes the last entry of `beta`; every remaining entry is labeled hollow if
/// it lay below the removed entry and filled if above. Labels refer to
/// FinitePoset::two_antichain(). Requires |beta| >= 1.
LabeledPermutation last_entry_encoding(const Permutation& beta);

/// Deletes every entry labeled `zero` and reduces, keeping the other labels in order.
LabeledPermutation strip_zero_labels(const LabeledPermutation& p, std::size_t zero);

/// Position of the deleted entry relative to a retained one, in the fixed order
/// sw, se, ne, nw. The name says where the deleted entry sits as seen from the
/// retained entry.
enum class Compass : std::size_t { sw = 0, se = 1, ne = 2, nw = 3 };

const char* compass_name(Compass c);

/// The compass atoms as a four-element antichain.
FinitePoset compass_atoms();

/// L x L x {sw, se, ne, nw}, indexed so that (own, deleted, dir) has index
/// (own * |L| + deleted) * 4 + dir.
FinitePoset compass_poset(const FinitePoset& labels);

std::size_t compass_label(std::size_t own, std::size_t deleted, Compass dir, std::size_t label_count);

/// Deletes the entry at 1-based position `a`; each retained entry records its
/// own label, the deleted entry's label, and where the deleted entry sits.
/// Requires |p| >= 2.
LabeledPermutation compass_encoding(const LabeledPermutation& p, std::size_t a, std::size_t label_count);

/// Inverse of compass_encoding: recovers the labeled permutation and the
/// deleted position. Throws InvalidInput on labels that no encoding produces.
std::pair<LabeledPermutation, std::size_t> compass_decode(const LabeledPermutation& q, std::size_t label_count);

/// Applies a graph-preserving symmetry, carrying each entry's label with it.
LabeledPermutation apply_symmetry(const LabeledPermutation& p, Symmetry which);

}  // namespace permwqo
