#include "primdiv/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "primdiv/arith.hpp"

namespace primdiv {

namespace {

// f *= (t^d - 1), in place.
void mul_xd_minus_1(std::vector<Integer>& f, std::uint64_t d) {
    std::vector<Integer> g(f.size() + d, Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        g[i + d] += f[i];
        g[i] -= f[i];
    }
    f = std::move(g);
}

// f /= (t^d - 1), exact. With q = f / (t^d - 1): q_i = q_{i-d} - f_i
// scanning upward, since f_i = q_{i-d} - q_i.
void div_xd_minus_1(std::vector<Integer>& f, std::uint64_t d) {
    std::vector<Integer> q(f.size() - d, Integer(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        Integer prev = (i >= d) ? q[i - d] : Integer(0);
        q[i] = prev - f[i];
    }
    // Remainder must vanish: f_i = q_{i-d} for the top d coefficients.
    for (std::size_t i = q.size(); i < f.size(); ++i) {
        Integer prev = (i >= d && i - d < q.size()) ? q[i - d] : Integer(0);
        if (prev != f[i]) throw std::logic_error("cyclotomic: inexact division");
    }
    f = std::move(q);
}

CyclotomicPoly compute(std::uint64_t n) {
    CyclotomicPoly out;
    out.order = n;
    if (n == 1) {
        out.coefficients = {Integer(-1), Integer(1)};
        return out;
    }
    // Phi_n(t) = prod_{d | n} (t^{n/d} - 1)^{mu(d)}, multiplications first.
    std::vector<Integer> f = {Integer(1)};
    auto divs = divisors(n);
    std::vector<std::uint64_t> to_divide;
    for (std::uint64_t d : divs) {
        ArithProfile pr = arith_profile(Integer(static_cast<unsigned long>(d)));
        if (pr.mobius == 1)
            mul_xd_minus_1(f, n / d);
        else if (pr.mobius == -1)
            to_divide.push_back(n / d);
    }
    for (std::uint64_t d : to_divide) div_xd_minus_1(f, d);
    out.coefficients = std::move(f);

    ArithProfile pn = arith_profile(Integer(static_cast<unsigned long>(n)));
    if (Integer(static_cast<unsigned long>(out.degree())) != pn.phi)
        throw std::logic_error("cyclotomic: degree mismatch");
    if (out.coefficients.back() != 1) throw std::logic_error("cyclotomic: leading coefficient");
    if (out.coefficients.front() != 1 && !(n == 1 && out.coefficients.front() == -1))
        throw std::logic_error("cyclotomic: constant term");
    return out;
}

}  // namespace

const CyclotomicPoly& cyclotomic_coeffs(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_coeffs: n must be >= 1");
    static std::map<std::uint64_t, CyclotomicPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute(n)).first;
    return it->second;
}

std::pair<Rational, Integer> cyclotomic_value(std::uint64_t n, const Rational& gamma) {
    if (gamma == 0) throw std::invalid_argument("cyclotomic_value: gamma must be nonzero");
    const CyclotomicPoly& poly = cyclotomic_coeffs(n);
    const Integer& a = gamma.get_num();
    const Integer& b = gamma.get_den();
    // Homogeneous Horner: H = sum c_i a^i b^{deg - i}.
    Integer h = poly.coefficients.back();
    Integer bpow = 1;
    for (std::size_t i = poly.degree(); i-- > 0;) {
        bpow *= b;
        h = h * a + poly.coefficients[i] * bpow;
    }
    Rational value = make_rational(h, pow_ui(b, static_cast<unsigned long>(poly.degree())));
    return {value, h};
}

std::vector<Integer> cyclotomic_divisor_product(std::uint64_t n) {
    std::vector<Integer> f = {Integer(1)};
    for (std::uint64_t d : divisors(n)) {
        const auto& phi_d = cyclotomic_coeffs(d).coefficients;
        std::vector<Integer> g(f.size() + phi_d.size() - 1, Integer(0));
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = 0; j < phi_d.size(); ++j) g[i + j] += f[i] * phi_d[j];
        f = std::move(g);
    }
    return f;
}

}  // namespace primdiv
