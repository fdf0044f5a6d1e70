#include "doctest.h"
#include "primdiv/oracles.hpp"
#include "primdiv/valuation.hpp"

using namespace primdiv;

TEST_CASE("nu_ideal: ramified, inert and split spot values") {
    const QuadraticField& K5 = make_field(5);
    auto p5 = primes_above(K5, 5)[0];
    CHECK(nu_ideal(K5.element(0, 1, 1), p5).value == 1);  // sqrt 5

    const QuadraticField& Km5 = make_field(-5);
    auto p2 = primes_above(Km5, 2)[0];
    CHECK(nu_ideal(Km5.element(1, 1, 1), p2).value == 1);  // 1 + sqrt(-5), norm 6

    auto at11 = primes_above(K5, 11);
    REQUIRE(at11[0].root == 4);
    QuadElement x = K5.element(4, 1, 1) / K5.element(4, -1, 1);  // (4+sqrt5)/(4-sqrt5)
    CHECK(nu_ideal(x, at11[0]).value == -1);
    CHECK(nu_ideal(x, at11[1]).value == 1);
    CHECK(nu_ideal(x, at11[0]).method == ValuationMethod::HenselEmbedding);
    CHECK(nu_ideal_norm_descent(x, at11[0]).value == -1);
    CHECK(nu_ideal_norm_descent(x, at11[1]).value == 1);
}

TEST_CASE("nu_ideal: split additivity on random elements") {
    const QuadraticField& K = make_field(-23);
    SplitMix64 rng(23);
    for (int i = 0; i < 200; ++i) {
        Integer a(static_cast<unsigned long>(rng.below(10000)));
        Integer b(static_cast<unsigned long>(rng.below(10000)) + 1);
        Integer q(static_cast<unsigned long>(rng.below(200)) + 1);
        if (rng.below(2)) a = -a;
        QuadElement x = K.element(a, b, q);
        if (x.is_zero()) continue;
        for (unsigned long p : {2ul, 3ul, 13ul, 29ul, 59ul}) {
            auto ideals = primes_above(K, Integer(p));
            if (ideals.front().kind != PrimeIdeal::Kind::Split) continue;
            long v1 = nu_ideal(x, ideals[0]).value;
            long v2 = nu_ideal(x, ideals[1]).value;
            CHECK(v1 + v2 == nu_p(x.norm(), Integer(p)));
        }
    }
}

TEST_CASE("mult_order: spot values and brute-force agreement") {
    CHECK(mult_order(Rational(2), 7) == 3);
    CHECK(mult_order(Rational(2), 5) == 4);
    const QuadraticField& K5 = make_field(5);
    auto p3 = primes_above(K5, 3)[0];
    QuadElement gamma = K5.element(3, 1, 2);
    Integer t = mult_order(gamma, p3);
    CHECK(Integer(80) % t == 0);  // divides N(p)^2 - 1, a fortiori N(p) - 1
    CHECK(t == oracles::brute_residue_order(gamma, p3));
    CHECK(t == 4);  // (2 sqrt5)^2 = 2, 2^2 = 1 in F_9
    CHECK_THROWS_AS(mult_order(Rational(7), 7), std::invalid_argument);
}

TEST_CASE("nu_power_minus_one: rational spot values") {
    CHECK(nu_power_minus_one(Rational(2), 21, 7).value == 2);
    CHECK(nu_power_minus_one(Rational(2), 20, 7).value == 0);
    CHECK(nu_power_minus_one(Rational(2), 20, 7).method == ValuationMethod::OrderLte);
    CHECK(nu_power_minus_one(make_rational(3, 2), 4, 5).value == 1);
    // p = 2 goes through the direct route.
    RationalValuation v2 = nu_power_minus_one(Rational(3), 2, 2);
    CHECK(v2.value == 3);  // 3^2 - 1 = 8
    CHECK(v2.method == ValuationMethod::Direct);
    CHECK_THROWS_AS(nu_power_minus_one(Rational(7), 3, 7), std::invalid_argument);
    CHECK_THROWS_AS(nu_power_minus_one(Rational(-1), 3, 7), std::invalid_argument);
}

TEST_CASE("nu_power_minus_one: quadratic spot value at both ideals above 11") {
    const QuadraticField& K5 = make_field(5);
    QuadElement gamma = K5.element(3, 1, 2);
    for (const auto& P : primes_above(K5, 11)) {
        CHECK(nu_power_minus_one(gamma, 5, P).value == 1);
    }
}

TEST_CASE("nu_direct_oracle: spot values and budget refusal") {
    CHECK(nu_direct_oracle(Rational(2), 21, 7).value == 2);
    CHECK(nu_direct_oracle(make_rational(3, 2), 4, 5).value == 1);
    CHECK(nu_direct_oracle(Rational(2), 1, 3).value == 0);
    CHECK_THROWS_AS(nu_direct_oracle(Rational(2), 1000, 7, 100), std::runtime_error);
}

TEST_CASE("LTE equals the exact oracle on a seeded corpus") {
    const QuadraticField& K5 = make_field(5);
    QuadElement eta = *K5.fundamental_unit();
    std::vector<Rational> rats = {Rational(2), Rational(3), make_rational(3, 2),
                                  make_rational(5, 3)};
    std::vector<QuadElement> quads = {eta, eta.pow(2), eta.pow(3)};
    SplitMix64 rng(1);
    int done = 0;
    while (done < 250) {
        unsigned long n = static_cast<unsigned long>(rng.below(200)) + 1;
        unsigned long pr[] = {3, 5, 7, 11, 13, 19, 29, 31, 41, 101, 199, 509, 997, 2};
        Integer p(pr[rng.below(14)]);
        std::uint64_t pick = rng.below(rats.size() + quads.size());
        if (pick < rats.size()) {
            const Rational& g = rats[pick];
            if (nu_p(g, p) != 0) continue;
            CHECK(nu_power_minus_one(g, n, p).value == nu_direct_oracle(g, n, p).value);
        } else {
            const QuadElement& g = quads[pick - rats.size()];
            auto ideals = primes_above(K5, p);
            const PrimeIdeal& P = ideals[rng.below(ideals.size())];
            CHECK(nu_power_minus_one(g, n, P).value == nu_direct_oracle(g, n, P).value);
        }
        ++done;
    }
}

TEST_CASE("conjugation symmetry for norm +-1 gamma") {
    const QuadraticField& K5 = make_field(5);
    QuadElement gamma = K5.element(3, 1, 2);  // norm 1
    for (unsigned long p : {11ul, 19ul, 29ul}) {
        auto ideals = primes_above(K5, Integer(p));
        for (unsigned long n : {1ul, 2ul, 5ul, 10ul, 15ul, 30ul}) {
            CHECK(nu_power_minus_one(gamma, n, ideals[0]).value ==
                  nu_power_minus_one(gamma, n, ideals[1]).value);
        }
    }
}

TEST_CASE("order-equals-n shortcut matches mult_order") {
    const QuadraticField& K5 = make_field(5);
    QuadElement gamma = K5.element(3, 1, 2);
    for (unsigned long p : {3ul, 7ul, 11ul, 13ul, 19ul, 41ul}) {
        for (const auto& P : primes_above(K5, Integer(p))) {
            Integer t = mult_order(gamma, P);
            std::vector<Integer> divs;
            for (const auto& [q, e] : oracles::brute_factor(t)) divs.push_back(q);
            CHECK(residue_order_equals(gamma, P, t.get_ui(), divs));
            if (t > 1)
                CHECK(!residue_order_equals(gamma, P, 2 * t.get_ui(), {Integer(2)}));
        }
    }
}
