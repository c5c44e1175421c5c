#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace permwqo {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

/// coeffs . x < bound (strict) or coeffs . x <= bound.
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational bound;
    bool strict = true;
};

/// Exact feasibility of a system of strict and non-strict linear inequalities
/// over the rationals by Fourier-Motzkin elimination. Returns a satisfying
/// point, recovered by back-substitution, or nothing when infeasible.
///
/// Constraints are normalized and deduplicated after every elimination step,
/// which keeps two-variable systems (the only kind the grid code produces)
/// polynomially sized.
std::optional<std::vector<Rational>> solve_linear_system(std::size_t variables,
                                                         const std::vector<LinearConstraint>& constraints);

/// True iff `x` satisfies every constraint exactly.
bool satisfies(const std::vector<Rational>& x, const std::vector<LinearConstraint>& constraints);

}  // namespace permwqo
