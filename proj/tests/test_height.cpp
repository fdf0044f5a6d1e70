#include "doctest.h"
#include "primdiv/height.hpp"

using namespace primdiv;

TEST_CASE("height_rational: spot values") {
    CHECK(height_rational(Rational(1)).value == doctest::Approx(0.0));
    CHECK(height_rational(make_rational(3, 2)).value ==
          doctest::Approx(1.0986122886681098).epsilon(1e-12));
    CHECK(height_rational(Rational(2)).value ==
          doctest::Approx(0.6931471805599453).epsilon(1e-12));
    CHECK_THROWS_AS(height_rational(Rational(0)), std::invalid_argument);
}

TEST_CASE("height_quad: frozen spot values") {
    const QuadraticField& K5 = make_field(5);
    CHECK(height_quad(K5.element(1, 1, 2)).value ==
          doctest::Approx(0.24060591252980172).epsilon(1e-9));
    CHECK(height_quad(K5.element(3, 1, 2)).value ==
          doctest::Approx(0.48121182505960345).epsilon(1e-9));
    CHECK(height_quad(K5.element(21, 8, 11)).value ==
          doctest::Approx(1.8303498519539148).epsilon(1e-9));
    // Mahler route agrees.
    CHECK(height_quad_mahler(K5.element(21, 8, 11)).value ==
          doctest::Approx(1.8303498519539148).epsilon(1e-9));
}

TEST_CASE("height invariants: reciprocal, Galois, powers") {
    SplitMix64 rng(5);
    for (long m : {5L, -5L, 10L, -23L}) {
        const QuadraticField& K = make_field(m);
        for (int i = 0; i < 50; ++i) {
            Integer a(static_cast<unsigned long>(rng.below(100000)));
            Integer b(static_cast<unsigned long>(rng.below(100000)) + 1);
            Integer q(static_cast<unsigned long>(rng.below(999)) + 1);
            if (rng.below(2)) a = -a;
            QuadElement x = K.element(a, b, q);
            double h = height_quad(x).value;
            CHECK(height_quad(x.inverse()).value == doctest::Approx(h).epsilon(1e-10));
            CHECK(height_quad(x.conjugate()).value == doctest::Approx(h).epsilon(1e-10));
            CHECK(height_quad(x.pow(3)).value == doctest::Approx(3 * h).epsilon(1e-9));
            CHECK(std::abs(height_quad_mahler(x).value - h) <= 2e-9);
        }
    }
}

TEST_CASE("height_floor_check: equality cases and rejection") {
    FloorCheck f2 = height_floor_check(Rational(2));
    CHECK(f2.pass);
    CHECK(f2.floor == doctest::Approx(0.6931471805599453));
    CHECK(f2.height == doctest::Approx(f2.floor));

    const QuadraticField& K5 = make_field(5);
    FloorCheck fg = height_floor_check(K5.element(1, 1, 2));
    CHECK(fg.pass);
    CHECK(fg.floor == doctest::Approx(0.24060591252980172).epsilon(1e-12));
    CHECK(fg.height == doctest::Approx(fg.floor).epsilon(1e-9));

    CHECK(height_floor_check(make_rational(3, 2)).pass);
    CHECK_THROWS_AS(height_floor_check(Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(height_floor_check(K5.element(-1, 0, 1)), std::invalid_argument);
}

TEST_CASE("cyclotomic_height_residual: spot values") {
    auto r = cyclotomic_height_residual(make_rational(3, 2), 6);
    CHECK(r.residual == doctest::Approx(0.25131442828090608).epsilon(1e-9));
    CHECK(r.bound == doctest::Approx(11.745957420309821).epsilon(1e-9));
    CHECK(r.pass);
    CHECK(r.arch_pass);

    auto r1 = cyclotomic_height_residual(Rational(2), 1);
    CHECK(r1.residual == doctest::Approx(0.6931471805599453).epsilon(1e-9));
    CHECK(r1.bound == doctest::Approx(1.1447298858494002).epsilon(1e-9));
    CHECK(r1.pass);

    const QuadraticField& K5 = make_field(5);
    QuadElement gamma = K5.element(3, 1, 2);
    auto r5 = cyclotomic_height_residual(gamma, 5);
    CHECK(r5.pass);
    CHECK(r5.arch_pass);
}

TEST_CASE("Phi_5((3+sqrt5)/2) is (77+33 sqrt5)/2 with norm 121") {
    const QuadraticField& K5 = make_field(5);
    QuadElement gamma = K5.element(3, 1, 2);
    QuadElement v = eval_poly({Integer(1), Integer(1), Integer(1), Integer(1), Integer(1)}, gamma);
    CHECK(v == K5.element(77, 33, 2));
    CHECK(v.norm() == 121);
}
