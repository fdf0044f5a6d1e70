#include "primdiv/oracles.hpp"

#include <algorithm>
#include <map>

#include "primdiv/ideals.hpp"
#include "primdiv/valuation.hpp"

namespace primdiv {
namespace oracles {

std::vector<std::pair<Integer, unsigned>> brute_factor(const Integer& n) {
    std::vector<std::pair<Integer, unsigned>> out;
    Integer rest = abs(n);
    for (Integer d = 2; d * d <= rest; ++d) {
        unsigned e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (rest > 1) out.emplace_back(rest, 1);
    return out;
}

Integer brute_phi(std::uint64_t n) {
    if (n == 1) return 1;
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
        std::uint64_t a = k, b = n;
        while (a) {
            std::uint64_t t = b % a;
            b = a;
            a = t;
        }
        if (b == 1) ++count;
    }
    return Integer(static_cast<unsigned long>(count));
}

int brute_omega(std::uint64_t n) {
    return static_cast<int>(brute_factor(Integer(static_cast<unsigned long>(n))).size());
}

int brute_mobius(std::uint64_t n) {
    auto f = brute_factor(Integer(static_cast<unsigned long>(n)));
    for (const auto& [p, e] : f)
        if (e > 1) return 0;
    return f.size() % 2 == 0 ? 1 : -1;
}

namespace {

// Exact polynomial long division; throws on nonzero remainder.
std::vector<Integer> poly_divide(std::vector<Integer> num, const std::vector<Integer>& den) {
    if (den.empty() || den.back() != 1) throw std::logic_error("poly_divide: non-monic divisor");
    std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_divide: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<Integer> brute_cyclotomic(std::uint64_t n) {
    static std::map<std::uint64_t, std::vector<Integer>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Integer> result;
    if (n == 1) {
        result = {Integer(-1), Integer(1)};
    } else {
        std::vector<Integer> num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;
        std::vector<Integer> den = {Integer(1)};
        for (std::uint64_t d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            auto phi_d = brute_cyclotomic(d);
            std::vector<Integer> prod(den.size() + phi_d.size() - 1, Integer(0));
            for (std::size_t i = 0; i < den.size(); ++i)
                for (std::size_t j = 0; j < phi_d.size(); ++j) prod[i + j] += den[i] * phi_d[j];
            den = std::move(prod);
        }
        result = poly_divide(std::move(num), den);
    }
    cache[n] = result;
    return result;
}

QuadElement brute_fundamental_unit(const QuadraticField& field, std::uint64_t y_cap) {
    const Integer& m = field.radicand();
    if (m < 0) throw std::invalid_argument("brute_fundamental_unit: imaginary field");
    bool half_basis = (field.discriminant() == m);
    for (Integer y = 1; y <= Integer(static_cast<unsigned long>(y_cap)); ++y) {
        if (half_basis) {
            // (x + y sqrt m)/2, x = y mod 2, x^2 - m y^2 = +-4
            for (int s : {-1, 1}) {
                Integer x2 = m * y * y + 4 * s;
                if (x2 < 0 || !is_perfect_square(x2)) continue;
                Integer x = isqrt(x2);
                if ((x - y) % 2 != 0) continue;
                return QuadElement(field, x, y, 2);
            }
        } else {
            for (int s : {-1, 1}) {
                Integer x2 = m * y * y + s;
                if (x2 < 0 || !is_perfect_square(x2)) continue;
                return QuadElement(field, isqrt(x2), y, 1);
            }
        }
    }
    throw std::runtime_error("brute_fundamental_unit: y cap exceeded");
}

Integer dirichlet_class_number(const Integer& D) {
    if (D >= 0) throw std::invalid_argument("dirichlet_class_number: needs D < 0");
    int w = (D == -4) ? 4 : (D == -3) ? 6 : 2;
    Integer absD = -D;
    Integer sum = 0;
    for (Integer a = 1; a < absD; ++a) sum += Integer(kronecker(D, a)) * a;
    Integer num = abs(sum) * w;
    Integer den = 2 * absD;
    if (num % den != 0) throw std::logic_error("dirichlet_class_number: non-integral result");
    return num / den;
}

Integer ideal_class_count(const QuadraticField& field) {
    const Integer& D = field.discriminant();
    // Minkowski bound: sqrt(D)/2 real, (2/pi) sqrt(|D|) imaginary.
    Integer bound;
    if (D > 0)
        bound = isqrt(D) / 2 + 1;
    else
        bound = (2 * isqrt(-D)) / 3 + 1;
    std::vector<IdealRep> reps;
    for (Integer a = 1; a <= bound; ++a) {
        for (Integer b = 0; b < 2 * a; ++b) {
            if ((b * b - D) % (4 * a) != 0) continue;
            // Any such pair is a primitive integral ideal of norm a.
            IdealRep I;
            I.field = &field;
            I.a = a;
            I.b = b;
            reps.push_back(I);
        }
    }
    std::vector<IdealRep> classes;
    for (const auto& I : reps) {
        bool matched = false;
        for (const auto& C : classes) {
            // [I] = [C] iff I * conj(C) is principal.
            PrincipalSearch s = principal_generator(field, ideal_mul(I, C.conjugate()));
            if (s.budget_exceeded) throw std::runtime_error("ideal_class_count: budget");
            if (s.generator.has_value()) {
                matched = true;
                break;
            }
        }
        if (!matched) classes.push_back(I);
    }
    return Integer(static_cast<unsigned long>(classes.size()));
}

Integer brute_residue_order(const QuadElement& gamma, const PrimeIdeal& P) {
    Integer group = P.norm() - 1;
    QuadElement x = gamma;
    // Compare powers by valuation of x^k - 1 at P.
    QuadElement one = gamma.field().element(1, 0, 1);
    for (Integer k = 1; k <= group; ++k) {
        QuadElement diff = x - one;
        if (!diff.is_zero() && nu_ideal(diff, P).value > 0) return k;
        if (diff.is_zero()) return k;
        x = x * gamma;
    }
    throw std::logic_error("brute_residue_order: no order found");
}

}  // namespace oracles
}  // namespace primdiv
