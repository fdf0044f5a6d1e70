#include "doctest.h"
#include "primdiv/height.hpp"
#include "primdiv/theta.hpp"
#include "primdiv/valuation.hpp"

using namespace primdiv;

TEST_CASE("theta(Q(sqrt5), 11): norm 1 exactly and the height window") {
    const QuadraticField& K5 = make_field(5);
    ThetaElement t = theta(K5, 11);
    CHECK(t.value.norm() == 1);
    CHECK(t.auxiliary_ideal.norm() == 1);
    double h = height_quad(t.value).value;
    CHECK(h == doctest::Approx(1.3491380268943114).epsilon(1e-9));
    double center = 0.5 * std::log(11.0);
    double window = 0.25 * std::log(5.0) + 0.5 * K5.log_eta();
    CHECK(window == doctest::Approx(0.6429653906383268).epsilon(1e-9));
    CHECK(std::abs(h - center) <= window + 1e-9);
    // The normalized generator has |norm| 11 and sits in the unit window.
    Rational gn = t.generator.norm();
    CHECK((gn == 11 || gn == -11));
}

TEST_CASE("theta rejects primes outside S(K)") {
    CHECK_THROWS_AS(theta(make_field(-5), 3), std::invalid_argument);   // 3 < sqrt 20
    CHECK_THROWS_AS(theta(make_field(5), 3), std::invalid_argument);    // inert
    CHECK_THROWS_AS(theta(make_field(5), 5), std::invalid_argument);    // ramified
}

TEST_CASE("verify_theta: Q(sqrt -5), p = 7 support is the pair above 7") {
    const QuadraticField& K = make_field(-5);
    ThetaElement t = theta(K, 7);
    ThetaVerification v = verify_theta(t, 100);
    CHECK(v.norm_is_one);
    CHECK(v.item1_pass);
    CHECK(v.sk_support_pass);
    CHECK(!v.item2_in_range);  // threshold astronomically large
    // For this field the auxiliary ideal is ramified, so the full support is
    // exactly the pair above 7 with values +1 and -1.
    REQUIRE(v.support.size() == 2);
    long sum = 0;
    for (const auto& s : v.support) {
        CHECK(s.ideal.p == 7);
        sum += s.value;
        CHECK((s.value == 1 || s.value == -1));
    }
    CHECK(sum == 0);  // antisymmetry forced by norm 1
    CHECK(v.height == doctest::Approx(0.9729550745276566).epsilon(1e-9));
}

TEST_CASE("verify_theta: item 2 threshold for Q(sqrt5) is about e^360") {
    const QuadraticField& K5 = make_field(5);
    ThetaVerification v = verify_theta(theta(K5, 11), 100);
    CHECK(v.item2_threshold_log == doctest::Approx(359.88125777680024).epsilon(1e-9));
    CHECK(!v.item2_in_range);
}

TEST_CASE("independence_rank: block structure") {
    const QuadraticField& K5 = make_field(5);
    ThetaBatch batch = theta_batch_for_primes(K5, {Integer(11), Integer(19), Integer(29)});
    CHECK(independence_rank(batch) == 3);
    ThetaBatch single = theta_batch_for_primes(K5, {Integer(11)});
    CHECK(independence_rank(single) == 1);
    // Synthetic dependent pair: theta and its inverse.
    QuadElement th = batch.thetas[0].value;
    CHECK(valuation_rank(K5, {th, th.inverse()}) == 1);
}

TEST_CASE("square_class_independent: thetas, squares, units") {
    const QuadraticField& K5 = make_field(5);
    QuadElement t11 = theta(K5, 11).value;
    QuadElement t19 = theta(K5, 19).value;
    SquareClassReport r = square_class_independent(K5, {t11, t19});
    CHECK(r.independent);

    // A square is dependent, with itself as witness.
    QuadElement y = K5.element(3, 1, 2);
    SquareClassReport r2 = square_class_independent(K5, {t11, y * y});
    CHECK(!r2.independent);
    REQUIRE(r2.witness.size() == 1);
    CHECK(r2.witness[0] == 1);
    CHECK(r2.witness_root * r2.witness_root == y * y);

    // The fundamental unit is not a square: a singleton is independent.
    SquareClassReport r3 = square_class_independent(K5, {*K5.fundamental_unit()});
    CHECK(r3.independent);

    // x and x * square are jointly dependent.
    SquareClassReport r4 = square_class_independent(K5, {t11, t11 * (y * y)});
    CHECK(!r4.independent);
    CHECK(r4.witness.size() == 2);
}

TEST_CASE("max_root_exponent: unit cases from the golden ratio") {
    const QuadraticField& K5 = make_field(5);
    QuadElement eta = *K5.fundamental_unit();
    auto r4 = max_root_exponent(K5, eta.pow(4));
    CHECK(r4.exponent == 4);
    CHECK(r4.root.pow(4) == eta.pow(4));

    auto r3 = max_root_exponent(K5, -eta.pow(3));
    CHECK(r3.exponent == 3);
    CHECK(r3.root == -eta);

    auto r1 = max_root_exponent(K5, -eta.pow(2));
    CHECK(r1.exponent == 1);
    CHECK(r1.root == -eta.pow(2));

    CHECK_THROWS_AS(max_root_exponent(K5, K5.element(-1, 0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(max_root_exponent(K5, K5.element(2, 0, 1)), std::invalid_argument);
}

TEST_CASE("max_root_exponent: non-unit gamma through ideal decomposition") {
    const QuadraticField& K5 = make_field(5);
    QuadElement th = theta(K5, 11).value;
    auto r = max_root_exponent(K5, th.pow(3));
    CHECK(r.exponent == 3);
    CHECK(r.root.pow(3) == th.pow(3));

    const QuadraticField& Km5 = make_field(-5);
    QuadElement t7 = theta(Km5, 7).value;
    auto r2 = max_root_exponent(Km5, t7 * t7);
    CHECK(r2.exponent == 2);
    CHECK(r2.root.pow(2) == t7 * t7);
    // Negating destroys the square root.
    auto r3 = max_root_exponent(Km5, -(t7 * t7));
    CHECK(r3.exponent == 1);
}

TEST_CASE("theta batch: valuations are +-1 exactly at the source pair") {
    const QuadraticField& K = make_field(-23);
    ThetaBatch batch = theta_batch(K, 4);
    for (const auto& t : batch.thetas) {
        auto pair = primes_above(K, t.source_prime);
        long v0 = nu_ideal(t.value, pair[0]).value;
        long v1 = nu_ideal(t.value, pair[1]).value;
        CHECK(v0 + v1 == 0);
        CHECK((v0 == 1 || v0 == -1));
    }
}
