#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "permwqo/labels.hpp"
#include "permwqo/permutation.hpp"
#include "permwqo/poset.hpp"

/// Reference implementations by plain subset enumeration. They share no code
/// with the search routines they are used to check, and are only meant for
/// lengths up to about 12.
namespace permwqo::brute {

inline std::vector<int> subsequence(const Permutation& pi, std::uint32_t mask) {
    std::vector<int> out;
    for (std::size_t i = 0; i < pi.size(); ++i)
        if (mask >> i & 1u) out.push_back(pi[i]);
    return out;
}

/// Rank-based reduction, independent of permwqo::reduce.
inline std::vector<int> standardize(const std::vector<int>& xs) {
    std::vector<int> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        int rank = 1;
        for (int y : xs)
            if (y < xs[i]) ++rank;
        out[i] = rank;
    }
    return out;
}

inline bool same_pattern(const std::vector<int>& xs, const Permutation& sigma) {
    if (xs.size() != sigma.size()) return false;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if ((xs[i] < xs[j]) != (sigma[i] < sigma[j])) return false;
    return true;
}

inline bool contains(const Permutation& sigma, const Permutation& pi) {
    if (sigma.size() > pi.size()) return false;
    for (std::uint32_t mask = 0; mask < (1u << pi.size()); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == sigma.size() &&
            same_pattern(subsequence(pi, mask), sigma))
            return true;
    return false;
}

/// Every pattern of pi, of every length, including the empty one.
inline PermSet all_patterns(const Permutation& pi) {
    PermSet out;
    for (std::uint32_t mask = 0; mask < (1u << pi.size()); ++mask)
        out.insert(make_unchecked(standardize(subsequence(pi, mask))));
    return out;
}

inline bool avoids_all(const Permutation& pi, const std::vector<Permutation>& basis) {
    return std::none_of(basis.begin(), basis.end(), [&](const Permutation& b) { return brute::contains(b, pi); });
}

/// Proper intervals [i, j] (1-based, 2 <= j - i + 1 <= n - 1).
inline std::vector<std::pair<std::size_t, std::size_t>> intervals(const Permutation& pi) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = pi.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j - i + 1 >= n) continue;
            int lo = pi[i], hi = pi[i];
            for (std::size_t k = i; k <= j; ++k) lo = std::min(lo, pi[k]), hi = std::max(hi, pi[k]);
            if (static_cast<std::size_t>(hi - lo) == j - i) out.emplace_back(i + 1, j + 1);
        }
    }
    return out;
}

/// Some proper prefix occupies the lowest values (direct) or the highest (skew).
inline bool sum_decomposable(const Permutation& pi, bool skew = false) {
    const int n = static_cast<int>(pi.size());
    for (int k = 1; k < n; ++k) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) ok = skew ? pi[static_cast<std::size_t>(i)] > n - k : pi[static_cast<std::size_t>(i)] <= k;
        if (ok) return true;
    }
    return false;
}

inline bool subword_leq(const std::vector<std::size_t>& v, const std::vector<std::size_t>& w, const FinitePoset& poset) {
    if (v.size() > w.size()) return false;
    for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != v.size()) continue;
        std::size_t j = 0;
        bool ok = true;
        for (std::size_t i = 0; i < w.size() && ok; ++i)
            if (mask >> i & 1u) ok = poset.leq(v[j++], w[i]);
        if (ok) return true;
    }
    return false;
}

inline bool labeled_contains(const LabeledPermutation& s, const LabeledPermutation& p, const FinitePoset& poset) {
    if (s.perm.size() > p.perm.size()) return false;
    for (std::uint32_t mask = 0; mask < (1u << p.perm.size()); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != s.perm.size()) continue;
        if (!same_pattern(subsequence(p.perm, mask), s.perm)) continue;
        std::size_t j = 0;
        bool ok = true;
        for (std::size_t i = 0; i < p.perm.size() && ok; ++i)
            if (mask >> i & 1u) ok = poset.leq(s.labels[j++], p.labels[i]);
        if (ok) return true;
    }
    return false;
}

}  // namespace permwqo::brute
