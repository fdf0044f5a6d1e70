#pragma once

#include <vector>

#include "primdiv/quadfield.hpp"

namespace primdiv {

/// Brute-force routes kept deliberately independent of the main
/// implementations; the verification suites compare against these.
namespace oracles {

/// Trial division only; n must factor completely below the bound.
std::vector<std::pair<Integer, unsigned>> brute_factor(const Integer& n);

/// Totient by counting units, omega/mobius from trial division.
Integer brute_phi(std::uint64_t n);
int brute_omega(std::uint64_t n);
int brute_mobius(std::uint64_t n);

/// Phi_n by recursive exact long division of t^n - 1 by the lower-order
/// factors (no Moebius product).
std::vector<Integer> brute_cyclotomic(std::uint64_t n);

/// Minimal fundamental-unit solution by ascending y search.
QuadElement brute_fundamental_unit(const QuadraticField& field, std::uint64_t y_cap = 5'000'000);

/// Imaginary class number by the exact character-sum formula
/// h = w/(2|D|) |sum a * chi(a)|.
Integer dirichlet_class_number(const Integer& D);

/// Class number by enumerating integral ideals below the Minkowski bound and
/// partitioning them by the principality of I * conj(J).
Integer ideal_class_count(const QuadraticField& field);

/// Order of the residue of gamma by explicit powering (small norms only).
Integer brute_residue_order(const QuadElement& gamma, const PrimeIdeal& P);

}  // namespace oracles
}  // namespace primdiv
