#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permwqo/permutation.hpp"

namespace permwqo {

/// A permutation class Av(B) given by a finite basis. The basis is minimalized
/// on construction, so it is always an antichain; an empty basis is the class
/// of all permutations.
class PermClass {
public:
    PermClass() = default;
    explicit PermClass(std::vector<Permutation> basis, std::string name = {});

    /// Downward closure of a finite set, with its basis computed exactly.
    static PermClass downward_closure_of(const PermSet& generators, std::string name = {});

    const PermSet& basis() const noexcept { return basis_; }
    const std::string& name() const noexcept { return name_; }
    /// Longest basis element; 0 for the class of all permutations.
    std::size_t max_basis_length() const;

    bool contains(const Permutation& pi) const;

    /// "Av(2413, 3142)".
    std::string str() const;

    friend bool operator==(const PermClass& a, const PermClass& b) { return a.basis_ == b.basis_; }

private:
    PermSet basis_;
    std::string name_;
};

using MembershipOracle = std::function<bool(const Permutation&)>;

inline constexpr std::size_t kDefaultEnumerateCap = 10;
inline constexpr std::size_t kDefaultBasisSearchCap = 9;

bool member(const Permutation& pi, const PermClass& c);

/// Members of length n, sorted.
PermSet enumerate(const PermClass& c, std::size_t n, std::size_t max_n = kDefaultEnumerateCap);

/// Permutations of length <= nmax rejected by `oracle` whose one-entry deletions
/// are all accepted. `oracle` must describe a downward-closed set.
PermSet minimal_nonmembers(const MembershipOracle& oracle, std::size_t nmax,
                           std::size_t max_n = kDefaultBasisSearchCap);

/// Exact basis of the union, searched up to the sum of the longest basis lengths.
PermClass union_basis(const PermClass& c, const PermClass& d, std::size_t max_n = kDefaultBasisSearchCap);

/// True iff pi is empty or some one-entry deletion of pi lies in c.
bool plus_one_member(const Permutation& pi, const PermClass& c);

struct BasisSearchResult {
    PermClass basis;
    std::size_t searched_to = 0;  // longest length examined
    std::size_t bound = 0;        // length bound that makes the search exhaustive
    bool exact = false;           // searched_to >= bound
};

/// Basis of the one-point extension of c. Basis elements have length at most
/// m(m+1) for m the longest basis element of c, so the search is exact when
/// that bound fits the cap. With `evidence_cap`, searches only that far and
/// reports a partial (non-exact) result instead of refusing.
BasisSearchResult plus_one_basis(const PermClass& c, std::optional<std::size_t> evidence_cap = std::nullopt,
                                 std::size_t max_n = kDefaultBasisSearchCap);

enum class ClosureKind { sum, skew, substitution, separable };

/// Membership in the sum, skew, substitution or separable closure of c.
/// Substitution membership is decided by checking every simple pattern of pi.
bool closure_member(const Permutation& pi, const PermClass& c, ClosureKind kind);

/// Substitution-closure membership decided independently, from the skeletons of
/// the substitution decomposition tree.
bool substitution_member_via_tree(const Permutation& pi, const PermClass& c);

/// Simple members of c with length in [2, nmax].
PermSet simples_in_class(const PermClass& c, std::size_t nmax, std::size_t max_n = kDefaultBasisSearchCap);

/// All length-n patterns of members of xs.
PermSet downward_closure(const PermSet& xs, std::size_t n);

}  // namespace permwqo
