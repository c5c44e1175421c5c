#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permwqo/errors.hpp"

namespace permwqo {

/// A permutation of {1..n} in one-line notation. The empty permutation is
/// the default-constructed value.
class Permutation {
public:
    Permutation() = default;

    /// Throws InvalidInput unless `values` is a bijection onto {1..n}.
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

    static Permutation identity(std::size_t n);
    static Permutation decreasing(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    /// 0-based access.
    int operator[](std::size_t i) const { return values_[i]; }
    /// 1-based access, matching the usual pi(i) notation.
    int at(std::size_t i) const;

    std::span<const int> values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    /// Whitespace-separated one-line notation; the empty permutation is "".
    std::string str() const;
    /// Digit string when n <= 9, otherwise the same as str().
    std::string compact() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}
    friend Permutation make_unchecked(std::vector<int> values);

    std::vector<int> values_;
};

/// Internal constructor for values already known to be a permutation.
Permutation make_unchecked(std::vector<int> values);

using PermSet = std::set<Permutation>;

/// Parses "4 7 9 8 3 2 1 5 6", "4,7,9" or the compact "479832156" (n <= 9).
Permutation parse_permutation(std::string_view text);

/// The permutation order-isomorphic to a sequence of distinct values.
template <class T>
Permutation reduce(std::span<const T> seq) {
    std::vector<std::size_t> order(seq.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
    std::vector<int> out(seq.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && !(seq[order[r - 1]] < seq[order[r]]))
            throw InvalidInput("reduce: duplicate entries");
        out[order[r]] = static_cast<int>(r + 1);
    }
    return make_unchecked(std::move(out));
}

template <class T>
Permutation reduce(const std::vector<T>& seq) {
    return reduce(std::span<const T>(seq));
}

/// Increasing 1-based index lists.
using Witness = std::vector<std::size_t>;

namespace detail {

/// Depth-first embedding of `pattern` into `text` in lexicographic index order.
/// `accept(j, i)` is an extra per-entry test (pattern index j -> text index i,
/// both 0-based). Returns the lexicographically least accepted embedding.
template <class Accept>
std::optional<Witness> find_embedding(const Permutation& pattern, const Permutation& text,
                                      Accept&& accept) {
    const std::size_t k = pattern.size();
    const std::size_t n = text.size();
    if (k == 0) return Witness{};
    if (k > n) return std::nullopt;

    // For each pattern entry, the earlier entries holding the nearest smaller
    // and larger values; a candidate only has to fit between their images.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> below(k, none), above(k, none);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t p = 0; p < j; ++p) {
            if (pattern[p] < pattern[j] && (below[j] == none || pattern[p] > pattern[below[j]]))
                below[j] = p;
            if (pattern[p] > pattern[j] && (above[j] == none || pattern[p] < pattern[above[j]]))
                above[j] = p;
        }
    }

    std::vector<std::size_t> image(k), next(k, 0);
    std::size_t j = 0;
    for (;;) {
        const int lo = below[j] == none ? 0 : text[image[below[j]]];
        const int hi = above[j] == none ? static_cast<int>(n) + 1 : text[image[above[j]]];
        bool placed = false;
        for (std::size_t i = next[j]; i + (k - j) <= n; ++i) {
            const int v = text[i];
            if (v <= lo || v >= hi || !accept(j, i)) continue;
            image[j] = i;
            next[j] = i + 1;
            placed = true;
            break;
        }
        if (placed) {
            if (j + 1 == k) break;
            ++j;
            next[j] = image[j - 1] + 1;
        } else {
            if (j == 0) return std::nullopt;
            --j;
        }
    }
    Witness w(k);
    for (std::size_t p = 0; p < k; ++p) w[p] = image[p] + 1;
    return w;
}

}  // namespace detail

/// Lexicographically least witness of `pattern` inside `text`, if any.
std::optional<Witness> find_occurrence(const Permutation& pattern, const Permutation& text);

/// True iff `pi` contains `sigma` as a pattern.
bool contains(const Permutation& sigma, const Permutation& pi);

enum class Symmetry { inverse, reverse_complement, rc_inverse };

Permutation inverse(const Permutation& pi);
Permutation reverse(const Permutation& pi);
Permutation complement(const Permutation& pi);
Permutation reverse_complement(const Permutation& pi);
Permutation apply_symmetry(const Permutation& pi, Symmetry which);

enum class SumKind { direct, skew };

Permutation sum(const Permutation& sigma, const Permutation& tau, SumKind kind = SumKind::direct);
Permutation sum_all(std::span<const Permutation> parts, SumKind kind = SumKind::direct);

/// Maximal decomposition into sum (resp. skew) indecomposable blocks.
std::vector<Permutation> components(const Permutation& pi, SumKind kind = SumKind::direct);

/// Removes the entry at 1-based position `i` and reduces.
Permutation delete_entry(const Permutation& pi, std::size_t i);

/// Subsequence at the given 0-based positions, reduced.
Permutation pattern_at(const Permutation& pi, std::span<const std::size_t> positions);

/// 1-based closed index range.
struct Interval {
    std::size_t first;
    std::size_t last;
    std::size_t length() const noexcept { return last - first + 1; }
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// All proper intervals (length 2..n-1), ordered by (first, last).
std::vector<Interval> intervals(const Permutation& pi);

bool is_interval(const Permutation& pi, Interval r);

/// Nontrivial with no proper intervals.
bool is_simple(const Permutation& pi);

/// sigma[alpha_1, ..., alpha_m]: entry i of sigma replaced by a block order-isomorphic to alpha_i.
Permutation inflate(const Permutation& sigma, std::span<const Permutation> alphas);

PermSet patterns_of_length(const Permutation& pi, std::size_t k);

/// S_n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Calls f on every permutation of length n in lexicographic order until it returns false.
void for_each_permutation(std::size_t n, const std::function<bool(const Permutation&)>& f);

/// Number of inversions.
std::size_t inversions(const Permutation& pi);

}  // namespace permwqo
