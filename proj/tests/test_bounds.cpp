#include "doctest.h"
#include "primdiv/bounds.hpp"

using namespace primdiv;

namespace {

YuBoundInput base_input() {
    YuBoundInput in;
    in.k = 1;
    in.d = 1;
    in.heights = {std::log(2.0)};
    in.prime_norm = 101;
    in.underlying_p = 101;
    in.delta = 1;
    in.B = 10;
    return in;
}

}  // namespace

TEST_CASE("yu_rhs: frozen hand evaluations") {
    BoundReport r = yu_rhs(base_input());
    CHECK(r.omega_value == doctest::Approx(21.884585598888700).epsilon(1e-9));
    CHECK(r.branch == 1);
    CHECK(r.rhs == doctest::Approx(104785389.43747217).epsilon(1e-9));

    YuBoundInput in2 = base_input();
    in2.prime_norm = 7;
    in2.underlying_p = 7;
    in2.B = 1;
    BoundReport r2 = yu_rhs(in2);
    CHECK(r2.branch == 2);
    CHECK(r2.omega_value == doctest::Approx(5.2895321979910903).epsilon(1e-9));
    // log* B = 1 at B = 1.
    CHECK(r2.rhs == doctest::Approx(1e5 * 30 * std::log(2.0) * 5.2895321979910903)
                        .epsilon(1e-9));
}

TEST_CASE("yu_rhs: rejects p < 5 and bad shapes") {
    YuBoundInput in = base_input();
    in.underlying_p = 3;
    CHECK_THROWS_AS(yu_rhs(in), std::invalid_argument);
    in = base_input();
    in.heights = {0.5, 0.5};
    CHECK_THROWS_AS(yu_rhs(in), std::invalid_argument);
    in = base_input();
    in.heights = {-1.0};
    CHECK_THROWS_AS(yu_rhs(in), std::invalid_argument);
}

TEST_CASE("yu_rhs: monotone in heights, B and k on grids") {
    YuBoundInput in = base_input();
    double prev = 0;
    for (double h : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        in.heights = {h};
        double v = yu_rhs(in).rhs;
        CHECK(v >= prev);
        prev = v;
    }
    in = base_input();
    prev = 0;
    for (long B : {1L, 2L, 10L, 100L, 100000L}) {
        in.B = B;
        double v = yu_rhs(in).rhs;
        CHECK(v >= prev);
        prev = v;
    }
    in = base_input();
    prev = 0;
    for (int k : {1, 2, 3, 4}) {
        in.k = k;
        in.heights.assign(k, std::log(2.0));
        double v = yu_rhs(in).rhs;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("omega takes the exact max of the two branches") {
    YuBoundInput in = base_input();
    for (long np : {7L, 11L, 101L, 10007L}) {
        in.prime_norm = np;
        in.underlying_p = np;
        BoundReport r = yu_rhs(in);
        double b1 = static_cast<double>(np) / in.delta * (1.0 / std::log(double(np)));
        double b2 = std::exp(1.0) * std::log(double(np));
        CHECK(r.omega_value == doctest::Approx(std::max(b1, b2)).epsilon(1e-12));
    }
}

TEST_CASE("valuation_bound_rhs: frozen values") {
    ValuationBoundParams p;
    p.prime_norm = pow_ui(10, 9);
    p.h_gamma = 0.48121;
    p.n = 100;
    ValuationBoundReport r = valuation_bound_rhs(ValuationBoundVariant::Thm15, p);
    CHECK(r.value == doctest::Approx(2200955505.2037993).epsilon(1e-9));
    CHECK(!r.hypothesis_met);
    CHECK(r.p0_is_double_exp);
    CHECK(r.p0_log == doctest::Approx(1e8));

    ValuationBoundParams q;
    q.prime_norm = pow_ui(10, 6);
    q.d = 1;
    q.h_gamma = std::log(2.0);
    q.n = 10;
    ValuationBoundReport r14 = valuation_bound_rhs(ValuationBoundVariant::Thm14, q);
    CHECK(r14.value == doctest::Approx(1579323.5081584880).epsilon(1e-9));
    CHECK(r14.p0_log == doctest::Approx(80000.0));
    CHECK(!r14.hypothesis_met);

    // log* n at n = 1 gives factor 1.
    q.n = 1;
    ValuationBoundReport r1 = valuation_bound_rhs(ValuationBoundVariant::Thm14, q);
    CHECK(r1.value == doctest::Approx(r14.value / std::log(10.0)).epsilon(1e-9));

    // The sharper proof-side exponent is behind the flag.
    p.sharper = true;
    ValuationBoundReport rs = valuation_bound_rhs(ValuationBoundVariant::Thm15, p);
    CHECK(rs.value < r.value);
}

TEST_CASE("largest_prime_threshold: frozen values and hypothesis reporting") {
    ThresholdReport r = largest_prime_threshold(1'000'000, ThresholdVariant::Thm12);
    CHECK(r.threshold == doctest::Approx(1002634.1955891262).epsilon(1e-9));
    CHECK(!r.hypothesis_met);
    CHECK(r.n0_log == doctest::Approx(1e6));

    ThresholdReport r3 = largest_prime_threshold(3, ThresholdVariant::Thm12);
    CHECK(r3.threshold > 3.0);  // log log 3 > 0

    ThresholdReport r13 = largest_prime_threshold(1000, ThresholdVariant::Thm13, 40);
    CHECK(r13.n0_is_double_exp);
    CHECK(r13.n0_log == doctest::Approx(1e9));
    CHECK(!r13.hypothesis_met);
    CHECK_THROWS_AS(largest_prime_threshold(2, ThresholdVariant::Thm12), std::invalid_argument);
}

TEST_CASE("sigma_bounds: frozen values") {
    SigmaBounds r = sigma_bounds(SigmaVariant::Rational, std::log(2.0), 100, 1000.0);
    CHECK(r.lower == doctest::Approx(24.953298500158031).epsilon(1e-9));
    SigmaBounds q = sigma_bounds(SigmaVariant::Quadratic, 0.4812118250596034, 100, 1000.0);
    CHECK(q.lower == doctest::Approx(34.647251404291448).epsilon(1e-9));
    // Prime n scales the lower bound linearly via phi(n) = n - 1.
    SigmaBounds p1 = sigma_bounds(SigmaVariant::Rational, 1.0, 101, 1000.0);
    CHECK(p1.lower == doctest::Approx(0.9 * 100.0));
}

TEST_CASE("subgroup_index in a cyclic group") {
    CHECK(subgroup_index(100, {Integer(10), Integer(4)}) == 5);  // lcm 20
    CHECK(subgroup_index(48, {Integer(48)}) == 1);
    CHECK_THROWS_AS(subgroup_index(10, {Integer(3)}), std::invalid_argument);
}

TEST_CASE("norm +-1 subgroup of F_{p^2} has index (p-1)/2") {
    // Brute enumeration of F_{p^2} = F_p[s]/(s^2 - m) for a non-residue m;
    // this index is the delta used in the quadratic bound application.
    for (long p : {5L, 7L, 11L, 13L}) {
        long m = 2;
        while (true) {
            bool residue = false;
            for (long t = 1; t < p; ++t)
                if ((t * t) % p == m % p) residue = true;
            if (!residue) break;
            ++m;
        }
        long members = 0;
        for (long x = 0; x < p; ++x)
            for (long y = 0; y < p; ++y) {
                if (x == 0 && y == 0) continue;
                long norm = ((x * x - m * y * y) % p + p) % p;
                if (norm == 1 || norm == p - 1) ++members;
            }
        long index = (p * p - 1) / members;
        CHECK(index == (p - 1) / 2);
    }
}
