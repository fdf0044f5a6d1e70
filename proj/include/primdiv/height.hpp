#pragma once

#include "primdiv/quadfield.hpp"

namespace primdiv {

enum class HeightMethod { PlacesFormula, MahlerMeasure };

struct HeightValue {
    double value = 0;         // nats
    double error_budget = 1e-9;
    HeightMethod method = HeightMethod::PlacesFormula;
};

/// log max(|num|, den).
HeightValue height_rational(const Rational& q);

/// Computed through the places formula and independently through the Mahler
/// measure of the primitive minimal polynomial; the two must agree within the
/// combined budget and the places value is returned. Rational inputs are
/// routed to height_rational.
HeightValue height_quad(const QuadElement& x);
HeightValue height_quad_mahler(const QuadElement& x);

struct FloorCheck {
    double height = 0;
    double floor = 0;          // degree-specific floor (log 2 or log(golden)/2)
    double floor_any_degree = 0;  // 1/(4 d (log* d)^3)
    bool pass = false;
};
FloorCheck height_floor_check(const Rational& x);
FloorCheck height_floor_check(const QuadElement& x);

struct CycHeightReport {
    double residual = 0;  // |h(Phi_n(gamma)) - phi(n) h(gamma)|
    double bound = 0;     // 2^omega(n) log(pi n)
    bool pass = false;
    double arch_floor = 0;  // -1e14 d^5 h(gamma) 2^omega(n) log* n
    double log_value_embedding = 0;
    double log_value_conjugate = 0;
    bool arch_pass = false;
};
CycHeightReport cyclotomic_height_residual(const Rational& gamma, std::uint64_t n);
CycHeightReport cyclotomic_height_residual(const QuadElement& gamma, std::uint64_t n);

}  // namespace primdiv
