#include "doctest.h"
#include "primdiv/cyclotomic.hpp"
#include "primdiv/oracles.hpp"

using namespace primdiv;

TEST_CASE("cyclotomic_coeffs: small orders") {
    CHECK(cyclotomic_coeffs(1).coefficients == std::vector<Integer>({-1, 1}));
    CHECK(cyclotomic_coeffs(2).coefficients == std::vector<Integer>({1, 1}));
    CHECK(cyclotomic_coeffs(6).coefficients == std::vector<Integer>({1, -1, 1}));
    CHECK(cyclotomic_coeffs(12).coefficients == std::vector<Integer>({1, 0, -1, 0, 1}));
}

TEST_CASE("cyclotomic_coeffs: order 105 has a -2 coefficient at degree 7") {
    const CyclotomicPoly& p = cyclotomic_coeffs(105);
    CHECK(p.degree() == 48);
    CHECK(p.coefficients[7] == -2);
    // Long-division route agrees coefficient by coefficient.
    CHECK(p.coefficients == oracles::brute_cyclotomic(105));
}

TEST_CASE("cyclotomic_coeffs: Moebius product matches recursive long division") {
    for (std::uint64_t n : {3ull, 8ull, 30ull, 60ull, 97ull, 100ull, 128ull, 210ull})
        CHECK(cyclotomic_coeffs(n).coefficients == oracles::brute_cyclotomic(n));
}

TEST_CASE("divisor product identity up to 60") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        auto prod = cyclotomic_divisor_product(n);
        REQUIRE(prod.size() == n + 1);
        CHECK(prod[0] == -1);
        CHECK(prod[n] == 1);
        for (std::size_t i = 1; i < n; ++i) CHECK(prod[i] == 0);
    }
}

TEST_CASE("cyclotomic_value: spot values") {
    auto [v1, h1] = cyclotomic_value(1, Rational(2));
    CHECK(v1 == 1);
    CHECK(h1 == 1);
    auto [v2, h2] = cyclotomic_value(12, Rational(2));
    CHECK(v2 == 13);
    CHECK(h2 == 13);
    auto [v3, h3] = cyclotomic_value(4, make_rational(3, 2));
    CHECK(v3 == make_rational(13, 4));
    CHECK(h3 == 13);
}

TEST_CASE("cyclotomic_value: homogenization identity on a corpus, n <= 300") {
    std::vector<Rational> gammas = {Rational(2), Rational(-3), make_rational(3, 2),
                                    make_rational(-5, 3), Rational(10)};
    for (std::uint64_t n = 1; n <= 300; ++n) {
        const auto& coeffs = cyclotomic_coeffs(n).coefficients;
        for (const auto& g : gammas) {
            auto [value, homog] = cyclotomic_value(n, g);
            // Direct evaluation of the coefficient form.
            Rational direct(0);
            Rational pw(1);
            for (const auto& c : coeffs) {
                direct += Rational(c) * pw;
                pw *= g;
            }
            CHECK(value == direct);
            Integer denpow = pow_ui(g.get_den(), static_cast<unsigned long>(coeffs.size() - 1));
            CHECK(Rational(homog) == direct * Rational(denpow));
        }
    }
}
