#include "doctest.h"
#include "primdiv/ideals.hpp"
#include "primdiv/oracles.hpp"
#include "primdiv/primality.hpp"

using namespace primdiv;

TEST_CASE("imaginary form reduction and counts") {
    CHECK(reduced_forms_imaginary(-4).size() == 1);
    CHECK(reduced_forms_imaginary(-20).size() == 2);
    CHECK(reduced_forms_imaginary(-23).size() == 3);
    BQForm f{7, 6, 2};  // disc -20, reduces to (2, 2, 3)
    BQForm r = reduce_imaginary(f);
    CHECK(r == BQForm{2, 2, 3});
}

TEST_CASE("real form cycles count the narrow class number") {
    CHECK(count_real_form_cycles(5) == 1);
    CHECK(count_real_form_cycles(8) == 1);
    CHECK(count_real_form_cycles(40) == 2);
    CHECK(reduced_forms_real(40).size() == 8);
    // D = 12: norm +1 unit, h = 1, narrow class number 2.
    CHECK(count_real_form_cycles(12) == 2);
    CHECK(make_field(3).class_number() == 1);
}

TEST_CASE("class numbers against independent enumerations, |D| <= 200") {
    for (long m : {-1L, -2L, -3L, -5L, -6L, -7L, -10L, -11L, -13L, -14L, -15L, -17L,
                   -19L, -21L, -23L, -26L, -30L, -33L, -35L, -39L, -41L, -47L,
                   2L,  3L,  5L,  6L,  7L,  10L, 11L, 13L, 14L, 15L, 17L, 19L,
                   21L, 22L, 23L, 26L, 29L, 30L, 31L, 33L, 34L, 35L, 37L, 41L, 46L}) {
        const QuadraticField& K = make_field(m);
        if (abs(K.discriminant()) > 200) continue;
        INFO("m = ", m);
        CHECK(oracles::ideal_class_count(K) == K.class_number());
        if (m < 0) CHECK(oracles::dirichlet_class_number(K.discriminant()) == K.class_number());
    }
}

TEST_CASE("ideal arithmetic: prime ideal representations multiply consistently") {
    const QuadraticField& K = make_field(-5);
    auto p3 = primes_above(K, 3);
    REQUIRE(p3.size() == 2);
    IdealRep I = ideal_of_prime(p3[0]);
    IdealRep J = ideal_of_prime(p3[1]);
    IdealRep prod = ideal_mul(I, J);
    CHECK(prod.norm() == 9);
    CHECK(prod.content == 3);  // p * conj(p) = (3)
    CHECK(prod.a == 1);
    IdealRep sq = ideal_pow(I, 2);
    CHECK(sq.norm() == 9);
    CHECK(sq.content == 1);  // p^2 is primitive for split p
}

TEST_CASE("ideal_in_inverse_class: worked examples") {
    // h = 1: inverse class is principal, the unit ideal comes back.
    const QuadraticField& K5 = make_field(5);
    auto p11 = primes_above(K5, 11)[0];
    IdealRep a1 = ideal_in_inverse_class(p11);
    CHECK(a1.norm() == 1);

    // Q(sqrt -5), p above 3: the inverse class holds the norm-2 ideal.
    const QuadraticField& Km5 = make_field(-5);
    auto p3 = primes_above(Km5, 3)[0];
    IdealRep a2 = ideal_in_inverse_class(p3);
    CHECK(a2.norm() == 2);
    CHECK(a2.a * a2.a < abs(Km5.discriminant()));

    // Q(sqrt -23), p above 2: class group of order 3, norm 2 or 3 below sqrt 23.
    const QuadraticField& Km23 = make_field(-23);
    auto p2 = primes_above(Km23, 2)[0];
    IdealRep a3 = ideal_in_inverse_class(p2);
    CHECK((a3.norm() == 2 || a3.norm() == 3));

    CHECK_THROWS_AS(ideal_in_inverse_class(primes_above(K5, 3)[0]), std::invalid_argument);
}

TEST_CASE("principal_generator: worked examples") {
    const QuadraticField& Km5 = make_field(-5);
    auto p3 = primes_above(Km5, 3)[0];
    IdealRep a = ideal_in_inverse_class(p3);
    IdealRep prod = ideal_mul(ideal_of_prime(p3), a);
    PrincipalSearch s = principal_generator(Km5, prod);
    REQUIRE(s.generator.has_value());
    Rational n = s.generator->norm();
    CHECK((n == 6 || n == -6));
    // 1 + sqrt(-5) up to torsion
    CHECK((*s.generator == Km5.element(1, 1, 1) || *s.generator == Km5.element(1, -1, 1) ||
           *s.generator == Km5.element(-1, 1, 1) || *s.generator == Km5.element(-1, -1, 1)));

    const QuadraticField& K5 = make_field(5);
    auto p11 = primes_above(K5, 11)[0];
    PrincipalSearch s11 = principal_generator(K5, ideal_of_prime(p11));
    REQUIRE(s11.generator.has_value());
    Rational n11 = s11.generator->norm();
    CHECK((n11 == 11 || n11 == -11));

    // Non-principal: p above 3 alone in Q(sqrt -5).
    PrincipalSearch none = principal_generator(Km5, ideal_of_prime(p3));
    CHECK(!none.generator.has_value());
    CHECK(!none.budget_exceeded);
}

TEST_CASE("inverse-class composite is principal with norm N(p) N(a)") {
    for (long m : {5L, 2L, 10L, -5L, -23L}) {
        const QuadraticField& K = make_field(m);
        for (unsigned long p = 3; p <= 60; ++p) {
            if (!is_prime(Integer(p))) continue;
            auto ideals = primes_above(K, Integer(p));
            if (ideals.front().kind != PrimeIdeal::Kind::Split) continue;
            IdealRep a = ideal_in_inverse_class(ideals[0]);
            IdealRep prod = ideal_mul(ideal_of_prime(ideals[0]), a);
            PrincipalSearch s = principal_generator(K, prod);
            REQUIRE(s.generator.has_value());
            Rational nr = s.generator->norm();
            Integer expect = Integer(p) * a.norm();
            CHECK((nr == expect || nr == -expect));
        }
    }
}

TEST_CASE("generator normalization lands in the unit window") {
    const QuadraticField& K = make_field(5);
    for (unsigned long p : {11ul, 19ul, 29ul, 31ul, 41ul}) {
        auto ideals = primes_above(K, Integer(p));
        PrincipalSearch s = principal_generator(K, ideal_of_prime(ideals[0]));
        REQUIRE(s.generator.has_value());
        double lx = s.generator->log_abs_embedding();
        double center = 0.5 * log_abs(Integer(p));
        CHECK(std::abs(lx - center) <= 0.5 * K.log_eta() + 1e-9);
    }
}
