#pragma once

#include <string>
#include <vector>

#include "primdiv/factor.hpp"
#include "primdiv/integer.hpp"
#include "primdiv/quadfield.hpp"

namespace primdiv {

struct YuBoundInput {
    int k = 1;                    // number of alpha_i
    int d = 1;                    // field degree
    std::vector<double> heights;  // h(alpha_i), positive
    Integer prime_norm;           // N(p)
    Integer underlying_p;         // rational prime >= 5
    double delta = 1.0;
    Integer B = 1;  // max |b_i|
    // Order 2^u of the 2-power torsion; only documents what delta means.
    int two_power_torsion_order_u = 0;
};

struct BoundReport {
    double omega_value = 0;
    double rhs = 0;
    int branch = 0;  // 1: (Np/delta)(k/log Np)^k, 2: e^k log Np
};

/// Closed-form right-hand side of the p-adic logarithmic-form bound:
/// 1e5 d^{k+2} (log* d)^3 30^k k^{5/2} (log* k) h_1...h_k Omega log* B.
BoundReport yu_rhs(const YuBoundInput& input);

enum class ValuationBoundVariant { Thm14, Thm15 };

struct ValuationBoundParams {
    Integer prime_norm;   // Thm14: N(p); Thm15: the rational prime p
    int d = 1;            // Thm14 only
    double h_gamma = 0;
    std::uint64_t n = 1;
    Integer abs_disc = 0;  // Thm15: |D_K| for the p0 report
    bool sharper = false;  // Thm15: the proof-side 0.002 exponent
};

struct ValuationBoundReport {
    double value = 0;
    double p0_log = 0;  // log p0 (Thm14) or log log p0 (Thm15)
    bool p0_is_double_exp = false;
    bool hypothesis_met = false;
};

ValuationBoundReport valuation_bound_rhs(ValuationBoundVariant variant,
                                         const ValuationBoundParams& params);

enum class ThresholdVariant { Thm12, Thm13 };

struct ThresholdReport {
    double threshold = 0;  // n exp(c log n / log log n)
    std::string n0_expr;
    double n0_log = 0;  // log n0 (thm12) / log log n0 (thm13)
    bool n0_is_double_exp = false;
    bool hypothesis_met = false;  // n >= n0 (never at representable n)
};

ThresholdReport largest_prime_threshold(std::uint64_t n, ThresholdVariant variant,
                                  const Integer& abs_disc = 0);

struct SigmaBounds {
    double lower = 0;  // 0.9 (resp 1.8) phi(n) h(gamma)
    double upper = 0;  // 2 (resp 8) h P^2 log P exp(-c log n/log log n) log n / n
};

enum class SigmaVariant { Rational, Quadratic };

SigmaBounds sigma_bounds(SigmaVariant variant, double h_gamma, std::uint64_t n, double P);

/// Exact index [F_p^x : <residues>] for a cyclic residue group of factored
/// order: the subgroup generated by a set is the unique subgroup of order
/// lcm of the element orders.
Integer subgroup_index(const Integer& group_order, const std::vector<Integer>& element_orders);

}  // namespace primdiv
