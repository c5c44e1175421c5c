#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permwqo {

/// A finite quasi-order on named atoms. Elements are referred to by index.
///
/// The relation given at construction is closed under reflexivity and
/// transitivity, so a cover relation is enough. Antisymmetry is not required.
class FinitePoset {
public:
    FinitePoset() = default;
    FinitePoset(std::vector<std::string> elements,
                const std::vector<std::pair<std::string, std::string>>& leq);
    FinitePoset(std::vector<std::string> elements,
                const std::vector<std::pair<std::size_t, std::size_t>>& leq);

    static FinitePoset antichain(std::vector<std::string> elements);
    static FinitePoset chain(std::vector<std::string> elements);
    /// Chain on "1" < "2" < ... < "n".
    static FinitePoset chain(std::size_t n);
    static FinitePoset singleton(std::string name = "*");
    /// The hollow/filled two-element antichain {"o", "*"} used by the label encodings.
    static FinitePoset two_antichain();

    /// Componentwise order on the Cartesian product. Element index of (e_1, ..., e_k)
    /// is the mixed-radix number with e_1 most significant.
    static FinitePoset product(const std::vector<FinitePoset>& factors);

    /// This order with a new element strictly below everything, appended as the last index.
    FinitePoset with_minimum(std::string name = "0") const;

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws InvalidInput if the name is not an element.
    std::size_t index_of(std::string_view name) const;

    bool leq(std::size_t a, std::size_t b) const { return rel_[a * names_.size() + b] != 0; }
    bool contains_element(std::size_t a) const noexcept { return a < names_.size(); }

    bool is_antisymmetric() const;
    /// The generating cover pairs of the closed relation, excluding reflexive ones.
    std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;

private:
    void close();

    std::vector<std::string> names_;
    std::vector<char> rel_;
};

/// Componentwise comparison of tuples over a list of factor orders.
bool product_leq(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                 const std::vector<FinitePoset>& posets);

}  // namespace permwqo
