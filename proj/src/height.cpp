#include "primdiv/height.hpp"

#include <cmath>

#include "primdiv/arith.hpp"
#include "primdiv/cyclotomic.hpp"
#include "primdiv/valuation.hpp"

namespace primdiv {

HeightValue height_rational(const Rational& q) {
    if (q == 0) throw std::invalid_argument("height_rational: zero argument");
    Integer num = abs(q.get_num());
    const Integer& den = q.get_den();
    HeightValue h;
    h.value = log_abs(num >= den ? num : den);
    h.method = HeightMethod::PlacesFormula;
    return h;
}

HeightValue height_quad_mahler(const QuadElement& x) {
    if (x.is_zero()) throw std::invalid_argument("height_quad: zero argument");
    if (x.is_rational()) {
        HeightValue h = height_rational(make_rational(x.a(), x.q()));
        h.method = HeightMethod::MahlerMeasure;
        return h;
    }
    // Primitive minimal polynomial A t^2 + B t + C from q^2 t^2 - 2aq t +
    // (a^2 - m b^2) with the content removed.
    const Integer& a = x.a();
    const Integer& q = x.q();
    Integer A = q * q;
    Integer B = -2 * a * q;
    Integer C = a * a - x.field().radicand() * x.b() * x.b();
    Integer g = gcd(gcd(A, B), C);
    A /= g;
    // log M(f) = log A + log+ |x| + log+ |x^sigma|.
    HeightValue h;
    h.method = HeightMethod::MahlerMeasure;
    h.value = 0.5 * (log_abs(A) + log_plus(x.log_abs_embedding()) +
                     log_plus(x.log_abs_conjugate_embedding()));
    return h;
}

HeightValue height_quad(const QuadElement& x) {
    if (x.is_zero()) throw std::invalid_argument("height_quad: zero argument");
    if (x.is_rational()) return height_rational(make_rational(x.a(), x.q()));
    // Places formula: archimedean part plus the negative-valuation places,
    // which all sit above primes dividing the denominator.
    double finite = 0;
    if (x.q() > 1) {
        Factorization f = factor(x.q());
        if (!f.complete())
            throw std::runtime_error("height_quad: denominator factoring budget exhausted");
        for (const auto& e : f.entries) {
            for (const auto& P : primes_above(x.field(), e.prime)) {
                long v = nu_ideal(x, P).value;
                if (v < 0) finite += static_cast<double>(-v) * log_abs(P.norm());
            }
        }
    }
    HeightValue places;
    places.method = HeightMethod::PlacesFormula;
    places.value = 0.5 * (log_plus(x.log_abs_embedding()) +
                          log_plus(x.log_abs_conjugate_embedding()) + finite);

    HeightValue mahler = height_quad_mahler(x);
    if (std::abs(places.value - mahler.value) > places.error_budget + mahler.error_budget)
        throw std::logic_error("height_quad: places and Mahler routes disagree");
    return places;
}

namespace {

constexpr double kGoldenFloor = 0.24060591252980172;  // log((1+sqrt 5)/2)/2

double degree_any_floor(int d) {
    double lsd = log_star(static_cast<double>(d));
    return 1.0 / (4.0 * d * lsd * lsd * lsd);
}

}  // namespace

FloorCheck height_floor_check(const Rational& x) {
    if (x == 0 || x == 1 || x == -1)
        throw std::invalid_argument("height_floor_check: zero or root of unity");
    FloorCheck out;
    out.height = height_rational(x).value;
    out.floor = std::log(2.0);
    out.floor_any_degree = degree_any_floor(1);
    out.pass = out.height >= std::max(out.floor, out.floor_any_degree) - 1e-9;
    return out;
}

FloorCheck height_floor_check(const QuadElement& x) {
    if (x.is_zero() || x.is_root_of_unity())
        throw std::invalid_argument("height_floor_check: zero or root of unity");
    if (x.is_rational()) return height_floor_check(make_rational(x.a(), x.q()));
    FloorCheck out;
    out.height = height_quad(x).value;
    out.floor = kGoldenFloor;
    out.floor_any_degree = degree_any_floor(2);
    out.pass = out.height >= std::max(out.floor, out.floor_any_degree) - 1e-9;
    return out;
}

namespace {

CycHeightReport assemble(double h_value, double h_gamma, int d, std::uint64_t n,
                         double log_emb, double log_conj) {
    ArithProfile pr = arith_profile(Integer(static_cast<unsigned long>(n)));
    double phi_n = pr.phi.get_d();
    double two_omega = std::pow(2.0, pr.omega);
    CycHeightReport rep;
    rep.residual = std::abs(h_value - phi_n * h_gamma);
    rep.bound = two_omega * std::log(3.14159265358979323846 * static_cast<double>(n));
    rep.pass = rep.residual <= rep.bound + 1e-9;
    rep.arch_floor = -1e14 * std::pow(static_cast<double>(d), 5) * h_gamma * two_omega *
                     log_star(static_cast<double>(n));
    rep.log_value_embedding = log_emb;
    rep.log_value_conjugate = log_conj;
    rep.arch_pass = log_emb >= rep.arch_floor - 1e-9 && log_conj >= rep.arch_floor - 1e-9;
    return rep;
}

}  // namespace

CycHeightReport cyclotomic_height_residual(const Rational& gamma, std::uint64_t n) {
    if (gamma == 0 || gamma == 1 || gamma == -1)
        throw std::invalid_argument("cyclotomic_height_residual: gamma 0 or root of unity");
    auto [value, homog] = cyclotomic_value(n, gamma);
    if (value == 0) throw std::invalid_argument("cyclotomic_height_residual: Phi_n(gamma) = 0");
    double lv = log_abs(value);
    return assemble(height_rational(value).value, height_rational(gamma).value, 1, n, lv, lv);
}

CycHeightReport cyclotomic_height_residual(const QuadElement& gamma, std::uint64_t n) {
    if (gamma.is_zero() || gamma.is_root_of_unity())
        throw std::invalid_argument("cyclotomic_height_residual: gamma 0 or root of unity");
    QuadElement value = eval_poly(cyclotomic_coeffs(n).coefficients, gamma);
    if (value.is_zero())
        throw std::invalid_argument("cyclotomic_height_residual: Phi_n(gamma) = 0");
    double hv = (value.is_rational() ? height_rational(make_rational(value.a(), value.q()))
                                     : height_quad(value))
                    .value;
    double hg = height_quad(gamma).value;
    return assemble(hv, hg, 2, n, value.log_abs_embedding(),
                    value.log_abs_conjugate_embedding());
}

}  // namespace primdiv
