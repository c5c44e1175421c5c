#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permwqo/labels.hpp"
#include "permwqo/permutation.hpp"

namespace permwqo {

/// First k terms of 2, 4, 1, 6, 3, 8, 5, ...
std::vector<int> oscillating_sequence(std::size_t k);

/// The increasing oscillations of length n: one for n <= 2, two for n >= 3.
PermSet increasing_oscillations(std::size_t n);

/// The increasing oscillation of length n that starts with 2 (or 1 when n = 1).
Permutation oscillation_starting_low(std::size_t n);

enum class AntichainFamily {
    amr_oscillation,  // oscillation body with a two-entry anchor at each end
    amr_tarjan,       // oscillation body plus one entry inverted with the whole body
    widdershins,      // anticlockwise spiral, four points per turn
    labeled_path,     // oscillation with both path endpoints labeled
};

const char* family_name(AntichainFamily f);
/// Accepts "amr-oscillation", "amr-tarjan", "widdershins", "labeled-path".
AntichainFamily parse_family(std::string_view name);

/// Length of the k-th member (k >= 1); strictly increasing in k.
std::size_t member_length(AntichainFamily f, std::size_t k);

/// Smallest index whose member has the given length, if any.
std::optional<std::size_t> index_for_length(AntichainFamily f, std::size_t length);

/// k-th member of an unlabeled family; for labeled_path, the underlying permutation.
Permutation antichain_member(AntichainFamily f, std::size_t k);

/// Positions (1-based) of the anchor entries of an amr family member: the
/// entries that are not part of the oscillation body.
std::vector<std::size_t> anchor_positions(AntichainFamily f, std::size_t k);

/// Plane coordinates of the k-turn spiral before reduction.
std::vector<std::pair<int, int>> widdershins_points(std::size_t k);

/// Increasing oscillation of length k + 1 whose path endpoints are labeled
/// filled and all other entries hollow, over FinitePoset::two_antichain().
LabeledPermutation labeled_antichain_member(std::size_t k);

/// The k-turn widdershins spiral with its first and last spiral points
/// (the points (2, -2) and (1 - 2k, -2k - 3)) labeled hollow and the rest filled.
LabeledPermutation labeled_widdershins_member(std::size_t k);

/// True iff no member is <= a later or an earlier one. On failure, the first
/// offending pair (i, j) as 1-based indices into `members`, with members[i] <= members[j].
template <class T, class Leq>
std::optional<std::pair<std::size_t, std::size_t>> antichain_violation(const std::vector<T>& members, Leq&& leq) {
    if (auto forward = find_good_pair(members, leq)) return forward;
    std::vector<T> reversed(members.rbegin(), members.rend());
    if (auto backward = find_good_pair(reversed, leq)) {
        const std::size_t n = members.size();
        return std::make_pair(n + 1 - backward->first, n + 1 - backward->second);
    }
    return std::nullopt;
}

template <class T, class Leq>
bool verify_antichain(const std::vector<T>& members, Leq&& leq) {
    return !antichain_violation(members, std::forward<Leq>(leq)).has_value();
}

}  // namespace permwqo
