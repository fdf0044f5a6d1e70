#pragma once

#include <optional>
#include <vector>

#include "primdiv/quadfield.hpp"

namespace primdiv {

/// Primitive binary quadratic form a x^2 + b xy + c y^2 of discriminant D.
struct BQForm {
    Integer a, b, c;
    Integer discriminant() const { return b * b - 4 * a * c; }
    bool operator==(const BQForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

/// Reduction of a positive-definite form (D < 0).
BQForm reduce_imaginary(BQForm f);
/// One rho step on an indefinite form; reduced forms cycle under it.
BQForm rho_real(const BQForm& f, const Integer& disc_sqrt_floor);
bool is_reduced_real(const BQForm& f, const Integer& disc_sqrt_floor);
/// Walks an arbitrary indefinite form into its reduction cycle.
BQForm reduce_real(BQForm f, const Integer& disc_sqrt_floor);

std::vector<BQForm> reduced_forms_imaginary(const Integer& D);
std::vector<BQForm> reduced_forms_real(const Integer& D);
/// Number of rho-cycles among the reduced forms = narrow class number.
Integer count_real_form_cycles(const Integer& D);

IdealRep ideal_of_prime(const PrimeIdeal& P);
IdealRep ideal_mul(const IdealRep& x, const IdealRep& y);
IdealRep ideal_pow(const IdealRep& x, unsigned long e);
IdealRep unit_ideal(const QuadraticField& field);

/// Integral ideal of norm < |D|^{1/2} in the class of P^{-1} (= the class of
/// the conjugate), found by Gauss reduction of the conjugate's form. The
/// composite P * result is verified principal; failure to verify is a bug
/// and throws.
IdealRep ideal_in_inverse_class(const PrimeIdeal& P);

struct PrincipalSearch {
    std::optional<QuadElement> generator;
    bool budget_exceeded = false;
    long unit_exponent = 0;  // eta power applied by the normalization (real)
};

/// Exhaustive generator search inside the proven unit-normalization window;
/// an exhausted window distinguishes "not principal" from "budget exceeded".
PrincipalSearch principal_generator(const QuadraticField& field, const IdealRep& I,
                                    std::uint64_t search_cap = 20'000'000);

}  // namespace primdiv
