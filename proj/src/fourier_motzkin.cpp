#include "permwqo/fourier_motzkin.hpp"

#include <map>
#include <utility>

#include "permwqo/errors.hpp"

namespace permwqo {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

const Rational kZero(0);

bool all_zero(const LinearConstraint& c) {
    for (const auto& a : c.coeffs)
        if (a != kZero) return false;
    return true;
}

bool trivially_satisfied(const LinearConstraint& c) { return c.strict ? Rational(0) < c.bound : Rational(0) <= c.bound; }

/// Scales so the first nonzero coefficient has magnitude one.
LinearConstraint normalized(LinearConstraint c) {
    for (const auto& a : c.coeffs) {
        if (a == kZero) continue;
        const Rational scale = a < kZero ? -a : a;
        for (auto& x : c.coeffs) x /= scale;
        c.bound /= scale;
        break;
    }
    return c;
}

/// Keeps the tightest bound per left-hand side. Returns false on a violated
/// constant constraint.
bool simplify(std::vector<LinearConstraint>& constraints) {
    std::map<std::vector<Rational>, std::pair<Rational, bool>> tightest;
    for (auto& raw : constraints) {
        if (all_zero(raw)) {
            if (!trivially_satisfied(raw)) return false;
            continue;
        }
        auto c = normalized(raw);
        auto [it, inserted] = tightest.try_emplace(c.coeffs, c.bound, c.strict);
        if (inserted) continue;
        auto& [bound, strict] = it->second;
        if (c.bound < bound || (c.bound == bound && c.strict)) {
            bound = c.bound;
            strict = c.strict;
        }
    }
    constraints.clear();
    for (auto& [coeffs, b] : tightest) constraints.push_back({coeffs, b.first, b.second});
    return true;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear_system(std::size_t variables,
                                                         const std::vector<LinearConstraint>& constraints) {
    for (const auto& c : constraints)
        if (c.coeffs.size() != variables) throw InvalidInput("linear system: coefficient count mismatch");

    std::vector<LinearConstraint> current = constraints;
    if (!simplify(current)) return std::nullopt;

    // involving[v]: constraints mentioning v once every higher variable is gone.
    std::vector<std::vector<LinearConstraint>> involving(variables);
    for (std::size_t v = variables; v-- > 0;) {
        std::vector<LinearConstraint> upper, lower, rest;
        for (auto& c : current) {
            if (c.coeffs[v] > kZero)
                upper.push_back(std::move(c));
            else if (c.coeffs[v] < kZero)
                lower.push_back(std::move(c));
            else
                rest.push_back(std::move(c));
        }
        for (const auto& u : upper) {
            for (const auto& l : lower) {
                // a*x_v + ... <= b with a > 0, and c*x_v + ... <= d with c < 0:
                // (-c)(first) + a(second) cancels x_v.
                const Rational a = u.coeffs[v];
                const Rational c = -l.coeffs[v];
                LinearConstraint combined{std::vector<Rational>(variables), u.bound * c + l.bound * a,
                                          u.strict || l.strict};
                for (std::size_t k = 0; k < variables; ++k) combined.coeffs[k] = u.coeffs[k] * c + l.coeffs[k] * a;
                combined.coeffs[v] = kZero;
                rest.push_back(std::move(combined));
            }
        }
        involving[v] = std::move(upper);
        involving[v].insert(involving[v].end(), lower.begin(), lower.end());
        current = std::move(rest);
        if (!simplify(current)) return std::nullopt;
    }

    std::vector<Rational> x(variables, Rational(0));
    for (std::size_t v = 0; v < variables; ++v) {
        std::optional<Rational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : involving[v]) {
            Rational rhs = c.bound;
            for (std::size_t u = 0; u < v; ++u) rhs -= c.coeffs[u] * x[u];
            const Rational limit = rhs / c.coeffs[v];
            if (c.coeffs[v] > kZero) {
                if (!hi || limit < *hi || (limit == *hi && c.strict)) {
                    hi = limit;
                    hi_strict = c.strict;
                }
            } else {
                if (!lo || limit > *lo || (limit == *lo && c.strict)) {
                    lo = limit;
                    lo_strict = c.strict;
                }
            }
        }
        if (lo && hi) {
            if (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict))) return std::nullopt;  // unreachable when FM is sound
            x[v] = (*lo + *hi) / 2;
        } else if (lo) {
            x[v] = *lo + 1;
        } else if (hi) {
            x[v] = *hi - 1;
        }
    }
    return x;
}

bool satisfies(const std::vector<Rational>& x, const std::vector<LinearConstraint>& constraints) {
    for (const auto& c : constraints) {
        Rational lhs(0);
        for (std::size_t k = 0; k < x.size(); ++k) lhs += c.coeffs[k] * x[k];
        if (c.strict ? !(lhs < c.bound) : !(lhs <= c.bound)) return false;
    }
    return true;
}

}  // namespace permwqo
