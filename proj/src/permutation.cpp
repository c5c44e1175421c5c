#include "permwqo/permutation.hpp"

#include <cctype>
#include <sstream>

namespace permwqo {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const auto n = static_cast<int>(values_.size());
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
        if (v < 1 || v > n) throw InvalidInput("permutation entry out of range: " + std::to_string(v));
        if (seen[v]) throw InvalidInput("permutation has a repeated entry: " + std::to_string(v));
        seen[v] = true;
    }
}

Permutation make_unchecked(std::vector<int> values) {
    return Permutation(std::move(values), Permutation::Unchecked{});
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return make_unchecked(std::move(v));
}

Permutation Permutation::decreasing(std::size_t n) {
    std::vector<int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(n - i);
    return make_unchecked(std::move(v));
}

int Permutation::at(std::size_t i) const {
    if (i < 1 || i > values_.size())
        throw InvalidInput("index " + std::to_string(i) + " out of range");
    return values_[i - 1];
}

std::string Permutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

std::string Permutation::compact() const {
    if (values_.size() > 9) return str();
    std::string out;
    for (int v : values_) out += static_cast<char>('0' + v);
    return out;
}

Permutation parse_permutation(std::string_view text) {
    std::string cleaned(text);
    for (char& c : cleaned)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(cleaned);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);

    std::vector<int> values;
    if (tokens.size() == 1 && tokens[0].size() > 1) {
        // Compact digit string, only meaningful for n <= 9.
        for (char c : tokens[0]) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InvalidInput("not a permutation: '" + std::string(text) + "'");
            values.push_back(c - '0');
        }
    } else {
        for (const auto& tok : tokens) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw InvalidInput("not a permutation: '" + std::string(text) + "'");
            }
            if (used != tok.size()) throw InvalidInput("not a permutation: '" + std::string(text) + "'");
            values.push_back(v);
        }
    }
    return Permutation(std::move(values));
}

std::optional<Witness> find_occurrence(const Permutation& pattern, const Permutation& text) {
    return detail::find_embedding(pattern, text, [](std::size_t, std::size_t) { return true; });
}

bool contains(const Permutation& sigma, const Permutation& pi) {
    return find_occurrence(sigma, pi).has_value();
}

Permutation inverse(const Permutation& pi) {
    std::vector<int> out(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) out[pi[i] - 1] = static_cast<int>(i + 1);
    return make_unchecked(std::move(out));
}

Permutation reverse(const Permutation& pi) {
    std::vector<int> out(pi.begin(), pi.end());
    std::reverse(out.begin(), out.end());
    return make_unchecked(std::move(out));
}

Permutation complement(const Permutation& pi) {
    const int n1 = static_cast<int>(pi.size()) + 1;
    std::vector<int> out(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) out[i] = n1 - pi[i];
    return make_unchecked(std::move(out));
}

Permutation reverse_complement(const Permutation& pi) { return complement(reverse(pi)); }

Permutation apply_symmetry(const Permutation& pi, Symmetry which) {
    switch (which) {
        case Symmetry::inverse: return inverse(pi);
        case Symmetry::reverse_complement: return reverse_complement(pi);
        case Symmetry::rc_inverse: return inverse(reverse_complement(pi));
    }
    return pi;
}

Permutation sum(const Permutation& sigma, const Permutation& tau, SumKind kind) {
    const int m = static_cast<int>(sigma.size());
    const int n = static_cast<int>(tau.size());
    std::vector<int> out;
    out.reserve(sigma.size() + tau.size());
    if (kind == SumKind::direct) {
        for (int v : sigma) out.push_back(v);
        for (int v : tau) out.push_back(v + m);
    } else {
        for (int v : sigma) out.push_back(v + n);
        for (int v : tau) out.push_back(v);
    }
    return make_unchecked(std::move(out));
}

Permutation sum_all(std::span<const Permutation> parts, SumKind kind) {
    Permutation acc;
    for (const auto& p : parts) acc = sum(acc, p, kind);
    return acc;
}

std::vector<Permutation> components(const Permutation& pi, SumKind kind) {
    std::vector<Permutation> out;
    const std::size_t n = pi.size();
    std::size_t start = 0;
    int lo = static_cast<int>(n) + 1, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        lo = std::min(lo, pi[i]);
        hi = std::max(hi, pi[i]);
        const auto len = static_cast<int>(i - start + 1);
        // A prefix block closes when its values form the bottom (direct) or top (skew) range
        // of what remains.
        const bool closes = hi - lo + 1 == len &&
                            (kind == SumKind::direct ? lo == static_cast<int>(start) + 1
                                                     : hi == static_cast<int>(n - start));
        if (closes) {
            std::vector<int> block(pi.begin() + static_cast<std::ptrdiff_t>(start),
                                   pi.begin() + static_cast<std::ptrdiff_t>(i + 1));
            out.push_back(reduce(block));
            start = i + 1;
            lo = static_cast<int>(n) + 1;
            hi = 0;
        }
    }
    return out;
}

Permutation delete_entry(const Permutation& pi, std::size_t i) {
    if (i < 1 || i > pi.size())
        throw InvalidInput("delete_entry: index " + std::to_string(i) + " out of range");
    const int removed = pi[i - 1];
    std::vector<int> out;
    out.reserve(pi.size() - 1);
    for (std::size_t p = 0; p < pi.size(); ++p) {
        if (p == i - 1) continue;
        out.push_back(pi[p] > removed ? pi[p] - 1 : pi[p]);
    }
    return make_unchecked(std::move(out));
}

Permutation pattern_at(const Permutation& pi, std::span<const std::size_t> positions) {
    std::vector<int> sub;
    sub.reserve(positions.size());
    for (auto p : positions) sub.push_back(pi[p]);
    return reduce(sub);
}

bool is_interval(const Permutation& pi, Interval r) {
    int lo = pi.at(r.first), hi = lo;
    for (std::size_t i = r.first; i <= r.last; ++i) {
        lo = std::min(lo, pi.at(i));
        hi = std::max(hi, pi.at(i));
    }
    return static_cast<std::size_t>(hi - lo + 1) == r.length();
}

std::vector<Interval> intervals(const Permutation& pi) {
    std::vector<Interval> out;
    const std::size_t n = pi.size();
    for (std::size_t a = 0; a < n; ++a) {
        int lo = pi[a], hi = pi[a];
        for (std::size_t b = a + 1; b < n; ++b) {
            lo = std::min(lo, pi[b]);
            hi = std::max(hi, pi[b]);
            const std::size_t len = b - a + 1;
            if (len >= n) break;
            if (static_cast<std::size_t>(hi - lo + 1) == len) out.push_back({a + 1, b + 1});
        }
    }
    return out;
}

bool is_simple(const Permutation& pi) { return pi.size() >= 2 && intervals(pi).empty(); }

Permutation inflate(const Permutation& sigma, std::span<const Permutation> alphas) {
    if (alphas.size() != sigma.size())
        throw InvalidInput("inflate: expected " + std::to_string(sigma.size()) + " blocks, got " +
                           std::to_string(alphas.size()));
    for (const auto& a : alphas)
        if (a.empty()) throw InvalidInput("inflate: empty block");

    // offset[v] = total size of the blocks replacing values below v.
    std::vector<int> size_by_value(sigma.size() + 1, 0);
    for (std::size_t i = 0; i < sigma.size(); ++i)
        size_by_value[sigma[i]] = static_cast<int>(alphas[i].size());
    std::vector<int> offset(sigma.size() + 2, 0);
    for (std::size_t v = 1; v <= sigma.size(); ++v) offset[v + 1] = offset[v] + size_by_value[v];

    std::vector<int> out;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (int a : alphas[i]) out.push_back(a + offset[sigma[i]]);
    return make_unchecked(std::move(out));
}

PermSet patterns_of_length(const Permutation& pi, std::size_t k) {
    PermSet out;
    const std::size_t n = pi.size();
    if (k > n) return out;
    std::vector<std::size_t> pos(k);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    for (;;) {
        out.insert(pattern_at(pi, pos));
        // next k-combination of {0..n-1}
        std::size_t j = k;
        while (j > 0 && pos[j - 1] == n - k + (j - 1)) --j;
        if (j == 0) break;
        ++pos[j - 1];
        for (std::size_t t = j; t < k; ++t) pos[t] = pos[t - 1] + 1;
    }
    return out;
}

void for_each_permutation(std::size_t n, const std::function<bool(const Permutation&)>& f) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        if (!f(make_unchecked(v))) return;
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::size_t inversions(const Permutation& pi) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < pi.size(); ++i)
        for (std::size_t j = i + 1; j < pi.size(); ++j)
            if (pi[i] > pi[j]) ++count;
    return count;
}

}  // namespace permwqo
