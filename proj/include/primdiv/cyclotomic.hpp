#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "primdiv/integer.hpp"

namespace primdiv {

/// Phi_n as an exact integer polynomial, coefficients low-to-high.
struct CyclotomicPoly {
    std::uint64_t order = 1;
    std::vector<Integer> coefficients;

    std::size_t degree() const { return coefficients.size() - 1; }
};

/// Moebius-product construction with exact polynomial division; no floats,
/// no root products. Results are cached per order.
const CyclotomicPoly& cyclotomic_coeffs(std::uint64_t n);

/// (Phi_n(gamma), den^phi(n) * Phi_n(gamma)); the second is an exact integer.
std::pair<Rational, Integer> cyclotomic_value(std::uint64_t n, const Rational& gamma);

/// Product of Phi_d over d | n; used by identity checks, exact.
std::vector<Integer> cyclotomic_divisor_product(std::uint64_t n);

}  // namespace primdiv
