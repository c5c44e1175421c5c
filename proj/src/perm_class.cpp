#include "permwqo/perm_class.hpp"

#include <algorithm>
#include <map>

#include "permwqo/decomposition.hpp"

namespace permwqo {

PermClass::PermClass(std::vector<Permutation> basis, std::string name) : name_(std::move(name)) {
    std::sort(basis.begin(), basis.end(),
              [](const Permutation& a, const Permutation& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    for (const auto& b : basis) {
        const bool redundant =
            std::any_of(basis_.begin(), basis_.end(), [&](const Permutation& kept) { return permwqo::contains(kept, b); });
        if (!redundant) basis_.insert(b);
    }
}

PermClass PermClass::downward_closure_of(const PermSet& generators, std::string name) {
    std::size_t longest = 0;
    for (const auto& g : generators) longest = std::max(longest, g.size());
    auto inside = [&](const Permutation& pi) {
        return std::any_of(generators.begin(), generators.end(),
                           [&](const Permutation& g) { return permwqo::contains(pi, g); });
    };
    // Every basis element has one more entry than some member, so it is no longer than longest + 1.
    auto basis = minimal_nonmembers(inside, longest + 1, longest + 1);
    return PermClass(std::vector<Permutation>(basis.begin(), basis.end()), std::move(name));
}

std::size_t PermClass::max_basis_length() const {
    std::size_t m = 0;
    for (const auto& b : basis_) m = std::max(m, b.size());
    return m;
}

bool PermClass::contains(const Permutation& pi) const {
    return std::none_of(basis_.begin(), basis_.end(), [&](const Permutation& b) { return permwqo::contains(b, pi); });
}

std::string PermClass::str() const {
    std::string out = "Av(";
    bool first = true;
    for (const auto& b : basis_) {
        if (!first) out += ", ";
        out += b.empty() ? std::string("e") : b.compact();
        first = false;
    }
    return out + ")";
}

bool member(const Permutation& pi, const PermClass& c) { return c.contains(pi); }

PermSet enumerate(const PermClass& c, std::size_t n, std::size_t max_n) {
    check_guard("enumerate", n, max_n);
    PermSet out;
    for_each_permutation(n, [&](const Permutation& p) {
        if (c.contains(p)) out.insert(p);
        return true;
    });
    return out;
}

PermSet minimal_nonmembers(const MembershipOracle& oracle, std::size_t nmax, std::size_t max_n) {
    check_guard("minimal_nonmembers", nmax, max_n);
    PermSet out;
    // Members of the previous length; a minimal nonmember has every deletion among them.
    PermSet previous;
    for (std::size_t n = 0; n <= nmax; ++n) {
        PermSet current;
        for_each_permutation(n, [&](const Permutation& p) {
            if (oracle(p)) {
                current.insert(p);
                return true;
            }
            bool minimal = true;
            for (std::size_t i = 1; i <= n && minimal; ++i) minimal = previous.count(delete_entry(p, i)) > 0;
            if (minimal) out.insert(p);
            return true;
        });
        previous = std::move(current);
    }
    return out;
}

PermClass union_basis(const PermClass& c, const PermClass& d, std::size_t max_n) {
    if (c.basis().empty() || d.basis().empty()) return PermClass({}, "all permutations");
    const std::size_t bound = c.max_basis_length() + d.max_basis_length();
    auto basis = minimal_nonmembers([&](const Permutation& p) { return c.contains(p) || d.contains(p); }, bound,
                                    max_n);
    return PermClass(std::vector<Permutation>(basis.begin(), basis.end()));
}

bool plus_one_member(const Permutation& pi, const PermClass& c) {
    if (pi.empty()) return true;
    for (std::size_t i = 1; i <= pi.size(); ++i)
        if (c.contains(delete_entry(pi, i))) return true;
    return false;
}

BasisSearchResult plus_one_basis(const PermClass& c, std::optional<std::size_t> evidence_cap, std::size_t max_n) {
    const std::size_t m = c.max_basis_length();
    BasisSearchResult result;
    result.bound = m * (m + 1);
    std::size_t search = result.bound;
    if (evidence_cap) search = std::min(search, *evidence_cap);
    check_guard("plus_one_basis", search, max_n);
    auto basis = minimal_nonmembers([&](const Permutation& p) { return plus_one_member(p, c); }, search, max_n);
    result.basis = PermClass(std::vector<Permutation>(basis.begin(), basis.end()));
    result.searched_to = search;
    result.exact = search >= result.bound;
    return result;
}

namespace {

bool sum_closure_member(const Permutation& pi, const PermClass& c, SumKind kind) {
    for (const auto& part : components(pi, kind))
        if (!c.contains(part)) return false;
    return true;
}

bool separable_closure_member(const Permutation& pi, const PermClass& c, std::map<Permutation, bool>& memo) {
    if (c.contains(pi)) return true;
    if (pi.size() <= 1) return false;
    if (auto it = memo.find(pi); it != memo.end()) return it->second;
    bool result = false;
    const std::size_t n = pi.size();
    for (std::size_t split = 1; split < n && !result; ++split) {
        int lo = static_cast<int>(n) + 1, hi = 0;
        for (std::size_t i = 0; i < split; ++i) {
            lo = std::min(lo, pi[i]);
            hi = std::max(hi, pi[i]);
        }
        const bool direct = lo == 1 && hi == static_cast<int>(split);
        const bool skew = hi == static_cast<int>(n) && lo == static_cast<int>(n - split) + 1;
        if (!direct && !skew) continue;
        std::vector<int> left(pi.begin(), pi.begin() + static_cast<std::ptrdiff_t>(split));
        std::vector<int> right(pi.begin() + static_cast<std::ptrdiff_t>(split), pi.end());
        result = separable_closure_member(reduce(left), c, memo) && separable_closure_member(reduce(right), c, memo);
    }
    memo[pi] = result;
    return result;
}

}  // namespace

bool closure_member(const Permutation& pi, const PermClass& c, ClosureKind kind) {
    switch (kind) {
        case ClosureKind::sum: return sum_closure_member(pi, c, SumKind::direct);
        case ClosureKind::skew: return sum_closure_member(pi, c, SumKind::skew);
        case ClosureKind::substitution: {
            for (std::size_t k = 2; k <= pi.size(); ++k) {
                if (k == 3) continue;  // no simple permutations of length three
                for (const auto& p : patterns_of_length(pi, k))
                    if (is_simple(p) && !c.contains(p)) return false;
            }
            return true;
        }
        case ClosureKind::separable: {
            std::map<Permutation, bool> memo;
            return separable_closure_member(pi, c, memo);
        }
    }
    return false;
}

bool substitution_member_via_tree(const Permutation& pi, const PermClass& c) {
    if (pi.size() <= 1) return true;
    const auto tree = decompose_tree(pi);
    auto check = [&](auto&& self, const SubstitutionTree& node) -> bool {
        switch (node.kind) {
            case SubstitutionTree::Kind::leaf: return true;
            case SubstitutionTree::Kind::sum:
                if (!c.contains(Permutation{1, 2})) return false;
                break;
            case SubstitutionTree::Kind::skew:
                if (!c.contains(Permutation{2, 1})) return false;
                break;
            case SubstitutionTree::Kind::simple:
                if (!c.contains(node.skeleton)) return false;
                break;
        }
        for (const auto& child : node.children)
            if (!self(self, child)) return false;
        return true;
    };
    return check(check, tree);
}

PermSet simples_in_class(const PermClass& c, std::size_t nmax, std::size_t max_n) {
    check_guard("simples_in_class", nmax, max_n);
    PermSet out;
    for (std::size_t n = 2; n <= nmax; ++n) {
        if (n == 3) continue;
        for_each_permutation(n, [&](const Permutation& p) {
            if (is_simple(p) && c.contains(p)) out.insert(p);
            return true;
        });
    }
    return out;
}

PermSet downward_closure(const PermSet& xs, std::size_t n) {
    PermSet out;
    for (const auto& x : xs) {
        auto part = patterns_of_length(x, n);
        out.insert(part.begin(), part.end());
    }
    return out;
}

}  // namespace permwqo
