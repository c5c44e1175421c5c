#include "permwqo/antichains.hpp"

#include <algorithm>

#include "permwqo/graph.hpp"

namespace permwqo {

std::vector<int> oscillating_sequence(std::size_t k) {
    std::vector<int> out;
    for (std::size_t m = 1; m <= k; ++m) {
        const int t = static_cast<int>(m);
        out.push_back(m == 1 ? 2 : (m % 2 == 0 ? t + 2 : t - 2));
    }
    return out;
}

Permutation oscillation_starting_low(std::size_t n) {
    if (n == 0) return {};
    // Odd lengths are a prefix of the sequence; even lengths skip the n-th term,
    // which would otherwise split off as a final direct summand.
    auto seq = oscillating_sequence(n + 1);
    if (n % 2 == 1) {
        seq.resize(n);
    } else {
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(n - 1));
    }
    return reduce(seq);
}

PermSet increasing_oscillations(std::size_t n) {
    if (n == 0) throw InvalidInput("increasing_oscillations: length must be at least 1");
    const auto low = oscillation_starting_low(n);
    return {low, inverse(low)};
}

const char* family_name(AntichainFamily f) {
    switch (f) {
        case AntichainFamily::amr_oscillation: return "amr-oscillation";
        case AntichainFamily::amr_tarjan: return "amr-tarjan";
        case AntichainFamily::widdershins: return "widdershins";
        case AntichainFamily::labeled_path: return "labeled-path";
    }
    return "?";
}

AntichainFamily parse_family(std::string_view name) {
    for (auto f : {AntichainFamily::amr_oscillation, AntichainFamily::amr_tarjan, AntichainFamily::widdershins,
                   AntichainFamily::labeled_path})
        if (name == family_name(f)) return f;
    throw InvalidInput("unknown antichain family '" + std::string(name) + "'");
}

std::size_t member_length(AntichainFamily f, std::size_t k) {
    if (k == 0) throw InvalidInput("antichain members are indexed from 1");
    switch (f) {
        case AntichainFamily::amr_oscillation: return 2 * k + 6;
        case AntichainFamily::amr_tarjan: return 2 * k + 4;
        case AntichainFamily::widdershins: return 4 * k;
        case AntichainFamily::labeled_path: return k + 1;
    }
    return 0;
}

std::optional<std::size_t> index_for_length(AntichainFamily f, std::size_t length) {
    for (std::size_t k = 1; member_length(f, k) <= length; ++k)
        if (member_length(f, k) == length) return k;
    return std::nullopt;
}

std::vector<std::pair<int, int>> widdershins_points(std::size_t k) {
    std::vector<std::pair<int, int>> pts;
    for (int j = 1; j <= static_cast<int>(k); ++j) {
        pts.emplace_back(2 * j, -2 * j);
        pts.emplace_back(2 * j - 1, 2 * j);
        pts.emplace_back(-2 * j, 2 * j - 1);
        pts.emplace_back(-(2 * j - 1), -(2 * j + 3));
    }
    return pts;
}

Permutation antichain_member(AntichainFamily f, std::size_t k) {
    const auto n = static_cast<int>(member_length(f, k));
    std::vector<int> v;
    switch (f) {
        case AntichainFamily::amr_oscillation:
            // 4 1 2 | 6 3 8 5 ... | n-1 n n-3
            v = {4, 1, 2};
            for (int j = 3; j <= n / 2 - 1; ++j) {
                v.push_back(2 * j);
                v.push_back(2 * j - 3);
            }
            v.insert(v.end(), {n - 1, n, n - 3});
            return Permutation(v);
        case AntichainFamily::amr_tarjan:
            // 2 n-1 | 4 1 6 3 ... n n-3
            v = {2, n - 1};
            for (int j = 2; j <= n / 2; ++j) {
                v.push_back(2 * j);
                v.push_back(2 * j - 3);
            }
            return Permutation(v);
        case AntichainFamily::widdershins: {
            auto pts = widdershins_points(k);
            std::sort(pts.begin(), pts.end());
            std::vector<int> ys;
            for (auto [x, y] : pts) ys.push_back(y);
            return reduce(ys);
        }
        case AntichainFamily::labeled_path: return inverse(oscillation_starting_low(k + 1));
    }
    return {};
}

std::vector<std::size_t> anchor_positions(AntichainFamily f, std::size_t k) {
    const std::size_t n = member_length(f, k);
    switch (f) {
        case AntichainFamily::amr_oscillation: return {2, 3, n - 2, n - 1};
        case AntichainFamily::amr_tarjan: return {2};
        default: throw InvalidInput(std::string("no anchors defined for family ") + family_name(f));
    }
}

LabeledPermutation labeled_antichain_member(std::size_t k) {
    LabeledPermutation out{antichain_member(AntichainFamily::labeled_path, k), {}};
    const Graph g = inversion_graph(out.perm);
    for (std::size_t v = 0; v < g.size(); ++v) out.labels.push_back(g.degree(v) <= 1 ? kFilled : kHollow);
    return out;
}

LabeledPermutation labeled_widdershins_member(std::size_t k) {
    const auto pts = widdershins_points(k);
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    LabeledPermutation out{antichain_member(AntichainFamily::widdershins, k), {}};
    for (const auto& pt : sorted) out.labels.push_back(pt == pts.front() || pt == pts.back() ? kHollow : kFilled);
    return out;
}

}  // namespace permwqo
