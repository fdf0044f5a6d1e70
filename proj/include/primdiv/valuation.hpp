#pragma once

#include <vector>

#include "primdiv/factor.hpp"
#include "primdiv/quadfield.hpp"

namespace primdiv {

enum class ValuationMethod { Direct, OrderLte, NormDescent, HenselEmbedding };

struct ValuationResult {
    PrimeIdeal ideal;
    long value = 0;
    ValuationMethod method = ValuationMethod::Direct;
};

struct RationalValuation {
    Integer p;
    long value = 0;
    ValuationMethod method = ValuationMethod::Direct;
};

/// nu_p of a nonzero rational.
long nu_p(const Rational& x, const Integer& p);

/// Valuation of a nonzero element at a prime ideal. Inert and ramified
/// primes reduce to nu_p of the norm; split primes go through the Hensel
/// embedding sending sqrt(D) to a lifted root of D mod p^k.
ValuationResult nu_ideal(const QuadElement& x, const PrimeIdeal& P);

/// Split-prime cross-check: distributes nu_p(norm) one-sidedly after
/// removing the p-content; exact, no lifting.
ValuationResult nu_ideal_norm_descent(const QuadElement& x, const PrimeIdeal& P);

/// Multiplicative order of a p-adic unit in the residue field (size N(P)).
/// Factors N(P) - 1; intended for moderate primes.
Integer mult_order(const Rational& gamma, const Integer& p, const FactorEffort& effort = {});
Integer mult_order(const QuadElement& gamma, const PrimeIdeal& P, const FactorEffort& effort = {});

/// nu_p(gamma^n - 1) by multiplicative order + lifting the exponent for odd
/// unramified p; p = 2 and ramified primes use direct computation modulo
/// rising prime powers. Requires nu(gamma) = 0 at the prime and gamma not a
/// root of unity.
RationalValuation nu_power_minus_one(const Rational& gamma, unsigned long n, const Integer& p,
                                     const FactorEffort& effort = {});
ValuationResult nu_power_minus_one(const QuadElement& gamma, unsigned long n, const PrimeIdeal& P,
                                   const FactorEffort& effort = {});

/// Independent oracle: computes gamma^n - 1 exactly, then values it.
/// Refuses when the exact power would exceed `bit_budget` bits.
RationalValuation nu_direct_oracle(const Rational& gamma, unsigned long n, const Integer& p,
                                   std::uint64_t bit_budget = 1u << 26);
ValuationResult nu_direct_oracle(const QuadElement& gamma, unsigned long n, const PrimeIdeal& P,
                                 std::uint64_t bit_budget = 1u << 26);

/// Order-equals-n test needing only the prime divisors of n (not of N(P)-1):
/// true iff the residue of gamma has exact order n in the residue field.
bool residue_order_equals(const Rational& gamma, const Integer& p, unsigned long n,
                          const std::vector<Integer>& n_prime_divisors);
bool residue_order_equals(const QuadElement& gamma, const PrimeIdeal& P, unsigned long n,
                          const std::vector<Integer>& n_prime_divisors);

}  // namespace primdiv
