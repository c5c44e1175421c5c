#include "permwqo/poset.hpp"

#include "permwqo/errors.hpp"

namespace permwqo {

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::size_t, std::size_t>>& leq)
    : names_(std::move(elements)), rel_(names_.size() * names_.size(), 0) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw InvalidInput("poset: duplicate element '" + names_[i] + "'");
    for (auto [a, b] : leq) {
        if (a >= names_.size() || b >= names_.size()) throw InvalidInput("poset: relation index out of range");
        rel_[a * names_.size() + b] = 1;
    }
    close();
}

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& leq)
    : FinitePoset(std::move(elements), std::vector<std::pair<std::size_t, std::size_t>>{}) {
    for (const auto& [a, b] : leq) rel_[index_of(a) * names_.size() + index_of(b)] = 1;
    close();
}

void FinitePoset::close() {
    const std::size_t n = names_.size();
    for (std::size_t i = 0; i < n; ++i) rel_[i * n + i] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (rel_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (rel_[k * n + j]) rel_[i * n + j] = 1;
}

FinitePoset FinitePoset::antichain(std::vector<std::string> elements) {
    return FinitePoset(std::move(elements), std::vector<std::pair<std::size_t, std::size_t>>{});
}

FinitePoset FinitePoset::chain(std::vector<std::string> elements) {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 1; i < elements.size(); ++i) covers.emplace_back(i - 1, i);
    return FinitePoset(std::move(elements), covers);
}

FinitePoset FinitePoset::chain(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    return chain(std::move(names));
}

FinitePoset FinitePoset::singleton(std::string name) { return antichain({std::move(name)}); }

FinitePoset FinitePoset::two_antichain() { return antichain({"o", "*"}); }

FinitePoset FinitePoset::product(const std::vector<FinitePoset>& factors) {
    std::size_t total = 1;
    for (const auto& f : factors) total *= f.size();

    std::vector<std::vector<std::size_t>> tuples(total, std::vector<std::size_t>(factors.size()));
    std::vector<std::string> names(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (std::size_t f = factors.size(); f-- > 0;) {
            tuples[idx][f] = rest % factors[f].size();
            rest /= factors[f].size();
        }
        std::string name = "(";
        for (std::size_t f = 0; f < factors.size(); ++f) {
            if (f) name += ",";
            name += factors[f].name(tuples[idx][f]);
        }
        names[idx] = name + ")";
    }

    FinitePoset out;
    out.names_ = std::move(names);
    out.rel_.assign(total * total, 0);
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b)
            out.rel_[a * total + b] = product_leq(tuples[a], tuples[b], factors) ? 1 : 0;
    return out;
}

FinitePoset FinitePoset::with_minimum(std::string name) const {
    auto names = names_;
    if (find(name)) throw InvalidInput("poset: element '" + name + "' already present");
    names.push_back(std::move(name));
    const std::size_t n = names_.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a) {
        pairs.emplace_back(n, a);
        for (std::size_t b = 0; b < n; ++b)
            if (leq(a, b)) pairs.emplace_back(a, b);
    }
    return FinitePoset(std::move(names), pairs);
}

std::optional<std::size_t> FinitePoset::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::size_t FinitePoset::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw InvalidInput("label '" + std::string(name) + "' is not an element of the poset");
}

bool FinitePoset::is_antisymmetric() const {
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = a + 1; b < size(); ++b)
            if (leq(a, b) && leq(b, a)) return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::strict_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b)
            if (a != b && leq(a, b)) out.emplace_back(a, b);
    return out;
}

bool product_leq(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                 const std::vector<FinitePoset>& posets) {
    if (a.size() != posets.size() || b.size() != posets.size())
        throw InvalidInput("product_leq: arity mismatch");
    for (std::size_t i = 0; i < posets.size(); ++i) {
        if (!posets[i].contains_element(a[i]) || !posets[i].contains_element(b[i]))
            throw InvalidInput("product_leq: component not in its poset");
        if (!posets[i].leq(a[i], b[i])) return false;
    }
    return true;
}

}  // namespace permwqo
