#include "primdiv/bounds.hpp"

#include <cmath>

#include "primdiv/arith.hpp"

namespace primdiv {

BoundReport yu_rhs(const YuBoundInput& in) {
    if (in.underlying_p < 5) throw std::invalid_argument("yu_rhs: requires p >= 5");
    if (in.k < 1 || static_cast<int>(in.heights.size()) != in.k)
        throw std::invalid_argument("yu_rhs: needs k positive heights");
    if (in.B < 1) throw std::invalid_argument("yu_rhs: B >= 1");
    if (in.delta <= 0) throw std::invalid_argument("yu_rhs: delta must be positive");
    for (double h : in.heights)
        if (h <= 0) throw std::invalid_argument("yu_rhs: heights must be positive");

    double logNp = log_abs(in.prime_norm);
    double k = in.k;
    double branch1 = in.prime_norm.get_d() / in.delta * std::pow(k / logNp, k);
    double branch2 = std::exp(k) * logNp;
    BoundReport rep;
    rep.omega_value = std::max(branch1, branch2);
    rep.branch = branch1 >= branch2 ? 1 : 2;

    double lsd = log_star(static_cast<double>(in.d));
    double rhs = 1e5 * std::pow(static_cast<double>(in.d), k + 2) * lsd * lsd * lsd *
                 std::pow(30.0, k) * std::pow(k, 2.5) * log_star(k);
    for (double h : in.heights) rhs *= h;
    rhs *= rep.omega_value * log_star(in.B.get_d());
    rep.rhs = rhs;
    return rep;
}

ValuationBoundReport valuation_bound_rhs(ValuationBoundVariant variant,
                                         const ValuationBoundParams& p) {
    if (p.prime_norm < 3) throw std::invalid_argument("valuation_bound_rhs: norm >= 3");
    ValuationBoundReport rep;
    double logN = log_abs(p.prime_norm);
    double llogN = std::log(logN);
    double lsn = log_star(static_cast<double>(p.n));
    if (variant == ValuationBoundVariant::Thm14) {
        double c = 0.002 / static_cast<double>(p.d);
        rep.value = p.prime_norm.get_d() * std::exp(-c * logN / llogN) * p.h_gamma * lsn;
        double lsd = log_star(static_cast<double>(p.d));
        rep.p0_log = 80000.0 * p.d * lsd * lsd;
        rep.p0_is_double_exp = false;
        rep.hypothesis_met = logN >= rep.p0_log;
    } else {
        double c = p.sharper ? 0.002 : 0.001;
        rep.value = p.prime_norm.get_d() * std::exp(-c * logN / llogN) * p.h_gamma * lsn;
        rep.p0_log = std::max(1e8, 2.0 * std::abs(p.abs_disc.get_d()));
        rep.p0_is_double_exp = true;  // p0 = exp(exp(p0_log))
        rep.hypothesis_met = false;   // log log p >= 1e8 is unreachable
    }
    return rep;
}

ThresholdReport largest_prime_threshold(std::uint64_t n, ThresholdVariant variant,
                                  const Integer& abs_disc) {
    if (n < 3) throw std::invalid_argument("largest_prime_threshold: n >= 3");
    ThresholdReport rep;
    double ln = std::log(static_cast<double>(n));
    double lln = std::log(ln);
    double c = (variant == ThresholdVariant::Thm12) ? 0.0005 : 0.0002;
    rep.threshold = static_cast<double>(n) * std::exp(c * ln / lln);
    if (variant == ThresholdVariant::Thm12) {
        rep.n0_expr = "exp(10^6)";
        rep.n0_log = 1e6;
        rep.n0_is_double_exp = false;
        rep.hypothesis_met = ln >= rep.n0_log;
    } else {
        rep.n0_expr = "exp(exp(max{10^9, 3|D_K|}))";
        rep.n0_log = std::max(1e9, 3.0 * std::abs(abs_disc.get_d()));
        rep.n0_is_double_exp = true;
        rep.hypothesis_met = false;
    }
    return rep;
}

SigmaBounds sigma_bounds(SigmaVariant variant, double h_gamma, std::uint64_t n, double P) {
    if (n < 3 || P < 3) throw std::invalid_argument("sigma_bounds: n, P >= 3");
    ArithProfile pr = arith_profile(Integer(static_cast<unsigned long>(n)));
    double phi_n = pr.phi.get_d();
    double ln = std::log(static_cast<double>(n));
    double lln = std::log(ln);
    double lp = std::log(P);
    SigmaBounds out;
    if (variant == SigmaVariant::Rational) {
        out.lower = 0.9 * phi_n * h_gamma;
        out.upper = 2.0 * h_gamma * P * P * lp * std::exp(-0.002 * ln / lln) * ln /
                    static_cast<double>(n);
    } else {
        out.lower = 1.8 * phi_n * h_gamma;
        out.upper = 8.0 * h_gamma * P * P * lp * std::exp(-0.0005 * ln / lln) * ln /
                    static_cast<double>(n);
    }
    return out;
}

Integer subgroup_index(const Integer& group_order, const std::vector<Integer>& element_orders) {
    Integer l = 1;
    for (const Integer& o : element_orders) {
        Integer g = gcd(l, o);
        l = l / g * o;
    }
    if (group_order % l != 0) throw std::invalid_argument("subgroup_index: order not dividing");
    return group_order / l;
}

}  // namespace primdiv
