#include <set>

#include "doctest.h"
#include "primdiv/oracles.hpp"
#include "primdiv/primality.hpp"
#include "primdiv/quadfield.hpp"

using namespace primdiv;

TEST_CASE("make_field: spot constants") {
    const QuadraticField& K5 = make_field(5);
    CHECK(K5.discriminant() == 5);
    CHECK(K5.class_number() == 1);
    CHECK(*K5.fundamental_unit() == K5.element(1, 1, 2));
    CHECK(K5.unit_norm() == -1);
    CHECK(K5.torsion_order() == 2);

    const QuadraticField& Ki = make_field(-1);
    CHECK(Ki.discriminant() == -4);
    CHECK(Ki.class_number() == 1);
    CHECK(Ki.torsion_order() == 4);
    CHECK(Ki.mu() == 2);
    CHECK(!Ki.fundamental_unit().has_value());

    const QuadraticField& Km5 = make_field(-5);
    CHECK(Km5.discriminant() == -20);
    CHECK(Km5.class_number() == 2);
    CHECK(Km5.mu() == 1);

    CHECK(make_field(-3).torsion_order() == 6);
    CHECK(make_field(-3).mu() == 3);
}

TEST_CASE("make_field: rejects non-squarefree m naming the square factor") {
    CHECK_THROWS_WITH_AS(make_field(12), doctest::Contains("square factor 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(make_field(0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1), std::invalid_argument);
}

TEST_CASE("fundamental unit: minimality against the ascending search") {
    for (long m : {2L, 3L, 5L, 6L, 7L, 10L, 13L, 14L, 15L, 19L, 21L, 94L}) {
        const QuadraticField& K = make_field(m);
        QuadElement brute = oracles::brute_fundamental_unit(K);
        CHECK(*K.fundamental_unit() == brute);
        Rational n = K.fundamental_unit()->norm();
        CHECK((n == 1 || n == -1));
        CHECK(K.log_eta() > 0);
        // eta >= (1 + sqrt 5)/2 for every real field
        CHECK(K.log_eta() >= 0.4812118250596034 - 1e-12);
    }
}

TEST_CASE("primes_above: splitting spot checks in Q(sqrt 5)") {
    const QuadraticField& K = make_field(5);
    auto at11 = primes_above(K, 11);
    REQUIRE(at11.size() == 2);
    CHECK(at11[0].kind == PrimeIdeal::Kind::Split);
    std::set<Integer> roots = {at11[0].root, at11[1].root};
    CHECK(roots == std::set<Integer>({Integer(4), Integer(7)}));
    CHECK(at11[0].root == 4);  // canonical = smaller root
    CHECK(at11[0].norm() == 11);

    auto at3 = primes_above(K, 3);
    REQUIRE(at3.size() == 1);
    CHECK(at3[0].kind == PrimeIdeal::Kind::Inert);
    CHECK(at3[0].norm() == 9);

    auto at5 = primes_above(K, 5);
    REQUIRE(at5.size() == 1);
    CHECK(at5[0].kind == PrimeIdeal::Kind::Ramified);
    CHECK(at5[0].norm() == 5);

    CHECK_THROWS_AS(primes_above(K, 10), std::invalid_argument);
}

TEST_CASE("primes_above: partition matches Euler's criterion for odd p <= 1e4") {
    for (long m : {5L, 2L, 10L, -5L, -23L, -1L}) {
        const QuadraticField& K = make_field(m);
        const Integer& D = K.discriminant();
        for (unsigned long p = 3; p <= 10000; p += 2) {
            if (!is_prime(Integer(p))) continue;
            auto ideals = primes_above(K, Integer(p));
            Integer Dp = D % Integer(p);
            if (Dp < 0) Dp += Integer(p);
            if (Dp == 0) {
                CHECK(ideals.size() == 1);
                CHECK(ideals[0].kind == PrimeIdeal::Kind::Ramified);
                continue;
            }
            Integer euler = powmod(Dp, (Integer(p) - 1) / 2, Integer(p));
            if (euler == 1) {
                REQUIRE(ideals.size() == 2);
                CHECK(ideals[0].kind == PrimeIdeal::Kind::Split);
                CHECK((ideals[0].root * ideals[0].root - D) % Integer(p) == 0);
                CHECK(ideals[1].root == Integer(p) - ideals[0].root);
            } else {
                REQUIRE(ideals.size() == 1);
                CHECK(ideals[0].kind == PrimeIdeal::Kind::Inert);
            }
        }
    }
}

TEST_CASE("primes_above: p = 2 handled by discriminant class mod 8") {
    // D = -23 = 1 mod 8: split; the pair is distinguished by the root mod 4.
    auto at2 = primes_above(make_field(-23), 2);
    REQUIRE(at2.size() == 2);
    CHECK(at2[0].kind == PrimeIdeal::Kind::Split);
    CHECK(at2[0].root == 1);
    CHECK(at2[1].root == 3);
    // D = 5: 5 mod 8 -> inert.
    CHECK(primes_above(make_field(5), 2)[0].kind == PrimeIdeal::Kind::Inert);
    // D = -20: even -> ramified.
    CHECK(primes_above(make_field(-5), 2)[0].kind == PrimeIdeal::Kind::Ramified);
}

TEST_CASE("QuadElement arithmetic and normalization") {
    const QuadraticField& K = make_field(5);
    QuadElement x = K.element(2, 4, 6);  // reduces to (1 + 2 sqrt5)/3
    CHECK(x.a() == 1);
    CHECK(x.b() == 2);
    CHECK(x.q() == 3);
    CHECK(x.norm() == make_rational(1 - 5 * 4, 9));
    CHECK(x * x.inverse() == K.element(1, 0, 1));
    CHECK((x + (-x)).is_zero());
    CHECK(x.conjugate().conjugate() == x);
    QuadElement gamma = K.element(3, 1, 2);
    CHECK(gamma.pow(2) == K.element(7, 3, 2));
    CHECK(gamma.pow(-1) == gamma.inverse());
    CHECK(gamma.is_integral());
    CHECK(gamma.is_unit());
    CHECK(!gamma.is_root_of_unity());
    CHECK(K.element(-1, 0, 1).is_root_of_unity());
    CHECK(make_field(-1).element(0, 1, 1).is_root_of_unity());
    CHECK(make_field(-3).element(1, 1, 2).is_root_of_unity());
}

TEST_CASE("embedding logs survive unit-power cancellation") {
    const QuadraticField& K = make_field(5);
    QuadElement eta = *K.fundamental_unit();
    QuadElement big = eta.pow(200);
    double le = K.log_eta();
    CHECK(big.log_abs_embedding() == doctest::Approx(200 * le).epsilon(1e-12));
    CHECK(big.log_abs_conjugate_embedding() == doctest::Approx(-200 * le).epsilon(1e-10));
}

TEST_CASE("sqrt_in_field") {
    const QuadraticField& K = make_field(5);
    QuadElement gamma = K.element(3, 1, 2);
    auto r = sqrt_in_field(gamma);  // (3+sqrt5)/2 = golden^2
    REQUIRE(r.has_value());
    CHECK((*r == K.element(1, 1, 2) || -*r == K.element(1, 1, 2)));
    CHECK(!sqrt_in_field(*K.fundamental_unit()).has_value());
    CHECK(!sqrt_in_field(K.element(-1, 0, 1)).has_value());
    auto rat = sqrt_in_field(K.element(9, 0, 4));
    REQUIRE(rat.has_value());
    CHECK(*rat * *rat == K.element(9, 0, 4));
    auto pure = sqrt_in_field(K.element(5, 0, 1));
    REQUIRE(pure.has_value());
    CHECK(*pure * *pure == K.element(5, 0, 1));
    CHECK(!sqrt_in_field(K.element(2, 0, 1)).has_value());
}

TEST_CASE("split_count: spot values") {
    SplitCountReport qi = split_count(make_field(-1), 100);
    CHECK(qi.count == 11);  // p = 1 mod 4 up to 100
    SplitCountReport q5 = split_count(make_field(5), 10);
    CHECK(q5.count == 0);
    CHECK(!qi.density_hypothesis_met);
}

TEST_CASE("field_bounds_check: spot values") {
    auto b5 = field_bounds_check(make_field(5));
    REQUIRE(b5.size() == 3);
    CHECK(b5[0].name == "class_number_regulator_real");
    CHECK(b5[0].lhs == doctest::Approx(0.4812118250596034).epsilon(1e-9));
    CHECK(b5[0].rhs == doctest::Approx(2.569062708860481).epsilon(1e-9));
    CHECK(b5[0].pass);
    auto bm5 = field_bounds_check(make_field(-5));
    CHECK(bm5[0].lhs == doctest::Approx(2.0));
    CHECK(bm5[0].rhs == doctest::Approx(7.111550218512130).epsilon(1e-9));
    CHECK(bm5[0].pass);
    for (const auto& field_m : {5L, 2L, 10L, -1L, -3L, -5L, -23L})
        for (const auto& iq : field_bounds_check(make_field(field_m))) CHECK(iq.pass);
}

TEST_CASE("S(K) membership is strict") {
    const QuadraticField& Km5 = make_field(-5);  // |D| = 20, sqrt = 4.47
    CHECK(!in_split_large_set(Km5, 3));  // split but too small
    CHECK(in_split_large_set(Km5, 7));
    auto first = first_split_large_primes(make_field(5), 3);
    CHECK(first == std::vector<Integer>({Integer(11), Integer(19), Integer(29)}));
}
