#include "doctest.h"
#include "primdiv/arith.hpp"
#include "primdiv/factor.hpp"
#include "primdiv/oracles.hpp"
#include "primdiv/primality.hpp"

using namespace primdiv;

TEST_CASE("factor: unit input gives the empty product") {
    Factorization f = factor(1);
    CHECK(f.entries.empty());
    CHECK(f.unfactored_cofactor == 1);
    CHECK(f.reassemble() == 1);
}

TEST_CASE("factor: 63 and 2^21 - 1 against trial-division expectations") {
    Factorization f = factor(63);
    REQUIRE(f.entries.size() == 2);
    CHECK(f.entries[0].prime == 3);
    CHECK(f.entries[0].exponent == 2);
    CHECK(f.entries[1].prime == 7);
    CHECK(f.entries[1].exponent == 1);

    Integer n = pow_ui(2, 21) - 1;  // 2097151
    Factorization g = factor(n);
    REQUIRE(g.entries.size() == 3);
    CHECK(g.entries[0].prime == 7);
    CHECK(g.entries[0].exponent == 2);
    CHECK(g.entries[1].prime == 127);
    CHECK(g.entries[2].prime == 337);
    CHECK(g.reassemble() == n);
}

TEST_CASE("factor: reassembly, primality of listed entries, determinism") {
    SplitMix64 rng(7);
    FactorEffort eff;
    for (int i = 0; i < 40; ++i) {
        Integer n(static_cast<unsigned long>(rng.below(1'000'000'000) + 2));
        Factorization f = factor(n, eff);
        CHECK(f.reassemble() == n);
        for (const auto& e : f.entries) CHECK(is_prime(e.prime));
        for (std::size_t k = 1; k < f.entries.size(); ++k)
            CHECK(f.entries[k - 1].prime < f.entries[k].prime);
        Factorization again = factor(n, eff);
        REQUIRE(again.entries.size() == f.entries.size());
        for (std::size_t k = 0; k < f.entries.size(); ++k)
            CHECK(again.entries[k].prime == f.entries[k].prime);
    }
}

TEST_CASE("factor: rho stage splits semiprimes beyond the trial bound") {
    Integer p("1000003"), q("1000033");
    Factorization f = factor(p * q);
    REQUIRE(f.complete());
    REQUIRE(f.entries.size() == 2);
    CHECK(f.entries[0].prime == p);
    CHECK(f.entries[1].prime == q);
}

TEST_CASE("factor: budget exhaustion surfaces the cofactor instead of guessing") {
    Integer p = pow_ui(2, 107) - 1;            // prime, p -+ 1 not smooth
    Integer q = pow_ui(2, 127) - 1;            // prime
    FactorEffort eff;
    eff.trial_bound = 100;
    eff.rho_iterations = 10;
    eff.rho_retries = 1;
    Factorization f = factor(p * q * 6, eff);
    CHECK(!f.complete());
    CHECK(f.reassemble() == p * q * 6);
    CHECK(classify_prime(f.unfactored_cofactor) == Primality::Composite);
}

TEST_CASE("classify_prime: deterministic verdicts at desk scale") {
    CHECK(classify_prime(2) == Primality::Prime);
    CHECK(classify_prime(Integer("2305843009213693951")) == Primality::Prime);
    CHECK(classify_prime(Integer("2305843009213693953")) == Primality::Composite);
    // Above the deterministic witness bound only probable verdicts appear.
    Integer big = pow_ui(10, 30) + 57;  // prime
    CHECK(classify_prime(big) == Primality::ProbablePrime);
}

TEST_CASE("arith_profile: conventions and oracle agreement") {
    ArithProfile p1 = arith_profile(1);
    CHECK(p1.phi == 1);
    CHECK(p1.omega == 0);
    CHECK(p1.mobius == 1);
    ArithProfile p12 = arith_profile(12);
    CHECK(p12.phi == 4);
    CHECK(p12.omega == 2);
    CHECK(p12.mobius == 0);
    ArithProfile p30 = arith_profile(30);
    CHECK(p30.phi == 8);
    CHECK(p30.omega == 3);
    CHECK(p30.mobius == -1);
    for (std::uint64_t n : {2ull, 9ull, 36ull, 97ull, 210ull, 1024ull}) {
        ArithProfile pr = arith_profile(Integer(static_cast<unsigned long>(n)));
        CHECK(pr.phi == oracles::brute_phi(n));
        CHECK(pr.omega == oracles::brute_omega(n));
        CHECK(pr.mobius == oracles::brute_mobius(n));
    }
}

TEST_CASE("arith_profile: multiplicativity on random coprime pairs") {
    SplitMix64 rng(11);
    int done = 0;
    while (done < 100) {
        Integer a(static_cast<unsigned long>(rng.below(100000) + 2));
        Integer b(static_cast<unsigned long>(rng.below(100000) + 2));
        if (gcd(a, b) != 1) continue;
        ++done;
        CHECK(arith_profile(a * b).phi == arith_profile(a).phi * arith_profile(b).phi);
    }
}

TEST_CASE("prime counts by sieve") {
    CHECK(prime_count(3) == 2);
    CHECK(prime_count(100) == 25);
    CHECK(prime_count(1'000'000) == 78498);
    CHECK(prime_count_mod(100, 4, 1) == 11);
    CHECK_THROWS_AS(PrimeSieve(200, 100), SieveBudgetError);
}

TEST_CASE("estimate_check: spot rows from the bounds") {
    EstimateReport omega = estimate_check(EstimateKind::OmegaBound, 3, 1000);
    REQUIRE(!omega.rows.empty());
    CHECK(omega.rows.front().argument == 3);
    CHECK(omega.rows.front().lhs == doctest::Approx(1.0));
    CHECK(omega.rows.front().rhs == doctest::Approx(16.35398969983500).epsilon(1e-9));
    CHECK(omega.failures_in_claimed_range == 0);

    EstimateReport pi = estimate_check(EstimateKind::PiBounds, 3, 100);
    bool fails_at_10 = false, ok_at_17 = true;
    for (const auto& row : pi.rows) {
        if (row.argument == 10) {
            fails_at_10 = !row.lower_pass;
            CHECK(row.lhs == doctest::Approx(4.0));
            CHECK(row.rhs == doctest::Approx(4.342944819032518).epsilon(1e-9));
        }
        if (row.argument >= 17 && !row.lower_pass) ok_at_17 = false;
    }
    CHECK(fails_at_10);
    CHECK(ok_at_17);
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>({1, 2, 3, 4, 6, 12}));
}
