#include "primdiv/ideals.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace primdiv {

// ---------------------------------------------------------------------------
// Binary quadratic forms

BQForm reduce_imaginary(BQForm f) {
    if (f.discriminant() >= 0) throw std::invalid_argument("reduce_imaginary: D >= 0");
    for (;;) {
        // Normalize: -a < b <= a.
        if (f.b > f.a || f.b <= -f.a) {
            Integer two_a = 2 * f.a;
            Integer r = f.b % two_a;
            if (r > f.a) r -= two_a;
            if (r <= -f.a) r += two_a;
            Integer k = (f.b - r) / two_a;
            f.c = f.c - k * f.b + k * k * f.a;
            f.b = r;
        }
        if (f.a > f.c) {
            std::swap(f.a, f.c);
            f.b = -f.b;
            continue;
        }
        break;
    }
    if (f.b < 0 && (f.a == f.c || f.b == -f.a)) f.b = -f.b;
    return f;
}

bool is_reduced_real(const BQForm& f, const Integer& s) {
    // |sqrt(D) - 2|a|| < b < sqrt(D), exact integer comparisons
    // (sqrt(D) irrational since D is not a square).
    if (f.b <= 0 || f.b > s) return false;
    Integer two_abs_a = 2 * abs(f.a);
    return (two_abs_a - f.b <= s) && (s + 1 <= two_abs_a + f.b);
}

BQForm rho_real(const BQForm& f, const Integer& s) {
    // (a,b,c) -> (c, b', c') with b' = -b mod 2|c| placed in the reduction
    // window: (sqrt(D)-2|c|, sqrt(D)) when |c| <= sqrt(D), else (-|c|, |c|].
    Integer two_c = 2 * abs(f.c);
    Integer target;
    if (abs(f.c) <= s) {
        // integers in the window are [s+1-2|c|, s]
        Integer r = (s + f.b) % two_c;
        if (r < 0) r += two_c;
        target = s - r;
    } else {
        Integer r = (-f.b) % two_c;
        if (r < 0) r += two_c;
        if (r > abs(f.c)) r -= two_c;
        target = r;
    }
    BQForm g;
    g.a = f.c;
    g.b = target;
    g.c = (target * target - f.discriminant()) / (4 * f.c);
    return g;
}

BQForm reduce_real(BQForm f, const Integer& s) {
    int guard = 0;
    while (!is_reduced_real(f, s)) {
        f = rho_real(f, s);
        if (++guard > 100000) throw std::logic_error("reduce_real: no convergence");
    }
    return f;
}

std::vector<BQForm> reduced_forms_imaginary(const Integer& D) {
    if (D >= 0 || !(D % 4 == 0 || ((D % 4) + 4) % 4 == 1))
        throw std::invalid_argument("reduced_forms_imaginary: bad discriminant");
    std::vector<BQForm> out;
    Integer absD = -D;
    for (Integer b = mpz_odd_p(D.get_mpz_t()) ? 1 : 0; 3 * b * b <= absD; b += 2) {
        Integer N = (b * b + absD) / 4;
        for (Integer a = (b > 1 ? b : 1); a * a <= N; a += 1) {
            if (N % a != 0) continue;
            Integer c = N / a;
            if (gcd(gcd(a, b), c) != 1) continue;
            out.push_back(BQForm{a, b, c});
            if (b != 0 && a != b && a != c) out.push_back(BQForm{a, -b, c});
        }
    }
    return out;
}

std::vector<BQForm> reduced_forms_real(const Integer& D) {
    if (D <= 0 || is_perfect_square(D))
        throw std::invalid_argument("reduced_forms_real: bad discriminant");
    Integer s = isqrt(D);
    std::vector<BQForm> out;
    for (Integer b = mpz_odd_p(D.get_mpz_t()) ? 1 : 2; b <= s; b += 2) {
        Integer N = (D - b * b) / 4;  // = -a c > 0
        for (Integer a = 1; a * a <= N; a += 1) {
            if (N % a != 0) continue;
            Integer c = N / a;
            for (const auto& [aa, cc] : {std::pair<Integer, Integer>{a, -c},
                                         {c, -a},
                                         {-a, c},
                                         {-c, a}}) {
                BQForm f{aa, b, cc};
                if (gcd(gcd(f.a, f.b), f.c) != 1) continue;
                if (is_reduced_real(f, s)) out.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const BQForm& x, const BQForm& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Integer count_real_form_cycles(const Integer& D) {
    auto forms = reduced_forms_real(D);
    Integer s = isqrt(D);
    std::set<std::string> seen;
    auto key = [](const BQForm& f) {
        return f.a.get_str() + "|" + f.b.get_str() + "|" + f.c.get_str();
    };
    Integer cycles = 0;
    for (const auto& f : forms) {
        if (seen.count(key(f))) continue;
        ++cycles;
        BQForm g = f;
        int guard = 0;
        do {
            seen.insert(key(g));
            g = rho_real(g, s);
            if (++guard > 1000000) throw std::logic_error("form cycle too long");
        } while (!(g == f));
    }
    return cycles;
}

// ---------------------------------------------------------------------------
// Ideals

IdealRep unit_ideal(const QuadraticField& field) {
    IdealRep I;
    I.field = &field;
    I.a = 1;
    I.b = mpz_odd_p(field.discriminant().get_mpz_t()) ? 1 : 0;
    return I;
}

namespace {

Integer normalize_shift(const Integer& b, const Integer& a) {
    Integer two_a = 2 * a;
    Integer r = b % two_a;
    if (r < 0) r += two_a;
    return r;
}

void check_ideal(const IdealRep& I) {
    const Integer& D = I.field->discriminant();
    if (I.a <= 0 || I.content <= 0) throw std::logic_error("ideal: nonpositive part");
    if ((I.b * I.b - D) % (4 * I.a) != 0) throw std::logic_error("ideal: b^2 != D mod 4a");
}

}  // namespace

IdealRep ideal_of_prime(const PrimeIdeal& P) {
    const QuadraticField& K = *P.field;
    const Integer& D = K.discriminant();
    IdealRep I;
    I.field = &K;
    switch (P.kind) {
        case PrimeIdeal::Kind::Inert: {
            I = unit_ideal(K);
            I.content = P.p;
            return I;
        }
        case PrimeIdeal::Kind::Ramified: {
            I.a = P.p;
            if (mpz_odd_p(D.get_mpz_t())) {
                I.b = P.p;  // p odd, D odd: b = p works (p^2 = D mod 4p)
            } else if (P.p == 2) {
                Integer m = K.radicand();
                Integer mm4 = m % 4;
                if (mm4 < 0) mm4 += 4;
                I.b = (mm4 == 3) ? 2 : 0;  // (2,1+sqrt m) vs (2, sqrt m)
            } else {
                I.b = 0;  // odd p | m, D = 4m
            }
            I.b = normalize_shift(I.b, I.a);
            check_ideal(I);
            return I;
        }
        case PrimeIdeal::Kind::Split: {
            I.a = P.p;
            if (P.p == 2) {
                // root r in {1,3} is the 2-adic square root mod 4; the kernel
                // lattice of sqrt(D) -> r has b = -r mod 4.
                I.b = normalize_shift(-P.root, I.a);
            } else {
                // b = -root mod p, b = D mod 2.
                Integer b = normalize_shift(-P.root, P.p) % (2 * P.p);
                if ((b % 2 + 2) % 2 != ((D % 2) + 2) % 2) b += P.p;
                I.b = normalize_shift(b, I.a);
            }
            check_ideal(I);
            return I;
        }
    }
    throw std::logic_error("ideal_of_prime: unreachable");
}

IdealRep ideal_mul(const IdealRep& x, const IdealRep& y) {
    if (x.field != y.field) throw std::invalid_argument("ideal_mul: different fields");
    const QuadraticField& K = *x.field;
    const Integer& D = K.discriminant();
    // Generators of the product of the primitive parts, in (u, v) coordinates
    // for elements (u + v sqrt D)/2.
    struct UV {
        Integer u, v;
    };
    std::vector<UV> gens = {
        {2 * x.a * y.a, Integer(0)},
        {x.a * y.b, x.a},
        {y.a * x.b, y.a},
        {(x.b * y.b + D) / 2, (x.b + y.b) / 2},
    };
    // Two-column HNF: first clear v via gcd combinations.
    // Find g = gcd of v's with Bezout accumulation.
    Integer vg = 0, uu = 0;
    for (const auto& g : gens) {
        if (g.v == 0) continue;
        if (vg == 0) {
            vg = g.v;
            uu = g.u;
        } else {
            Integer gg, s, t;
            mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), vg.get_mpz_t(),
                       g.v.get_mpz_t());
            uu = s * uu + t * g.u;
            vg = gg;
        }
    }
    if (vg < 0) {
        vg = -vg;
        uu = -uu;
    }
    if (vg == 0) throw std::logic_error("ideal_mul: degenerate lattice");
    // Reduce all generators to pure-u rows; their gcd is A.
    Integer A = 0;
    for (const auto& g : gens) {
        Integer k = g.v / vg;  // exact: vg divides every v
        Integer u_red = g.u - k * uu;
        A = gcd(A, u_red);
    }
    if (A < 0) A = -A;
    if (A == 0) throw std::logic_error("ideal_mul: rank deficient");
    // Lattice = A Z (pure) + (uu + vg sqrt D)/2 ... in (u,v) coords rows
    // [[A,0],[uu,vg]]. Content = vg; primitive part a = A/(2 vg), b = uu/vg.
    if (A % (2 * vg) != 0 || uu % vg != 0)
        throw std::logic_error("ideal_mul: non-integral HNF reduction");
    IdealRep out;
    out.field = x.field;
    out.content = x.content * y.content * vg;
    out.a = A / (2 * vg);
    out.b = normalize_shift(uu / vg, out.a);
    check_ideal(out);
    if (out.norm() != x.norm() * y.norm()) throw std::logic_error("ideal_mul: norm mismatch");
    return out;
}

IdealRep ideal_pow(const IdealRep& x, unsigned long e) {
    IdealRep r = unit_ideal(*x.field);
    IdealRep base = x;
    while (e) {
        if (e & 1) r = ideal_mul(r, base);
        base = ideal_mul(base, base);
        e >>= 1;
    }
    return r;
}

IdealRep ideal_in_inverse_class(const PrimeIdeal& P) {
    if (P.kind != PrimeIdeal::Kind::Split)
        throw std::invalid_argument("ideal_in_inverse_class: prime must be split");
    const QuadraticField& K = *P.field;
    const Integer& D = K.discriminant();
    IdealRep sigma = ideal_of_prime(P.conjugate());
    BQForm f{sigma.a, sigma.b, (sigma.b * sigma.b - D) / (4 * sigma.a)};
    BQForm r = (D < 0) ? reduce_imaginary(f) : reduce_real(f, isqrt(D));

    IdealRep out;
    out.field = &K;
    out.a = abs(r.a);
    out.b = normalize_shift(r.b, out.a);
    check_ideal(out);
    if (out.a * out.a >= abs(D))
        throw std::logic_error("ideal_in_inverse_class: norm bound |D|^(1/2) violated");
    // The composite must be principal; anything else is a bug.
    PrincipalSearch s = principal_generator(K, ideal_mul(ideal_of_prime(P), out));
    if (!s.generator.has_value())
        throw std::logic_error("ideal_in_inverse_class: composite with the prime not principal");
    return out;
}

// ---------------------------------------------------------------------------
// Principal generator search

namespace {

bool member_of(const IdealRep& I, const Integer& U, const Integer& V) {
    // (U + V sqrt D)/2 in content*(a, (b+sqrt D)/2): U = c(2ax + yb), V = c y.
    if (V % I.content != 0) return false;
    Integer y = V / I.content;
    Integer rem = U - y * I.b * I.content;
    return rem % (2 * I.a * I.content) == 0;
}

QuadElement canonical_sign(const QuadElement& x) {
    if (x.a() > 0 || (x.a() == 0 && x.b() > 0)) return x;
    return -x;
}

}  // namespace

PrincipalSearch principal_generator(const QuadraticField& field, const IdealRep& I,
                                    std::uint64_t search_cap) {
    check_ideal(I);
    const Integer& D = field.discriminant();
    Integer N = I.norm();
    PrincipalSearch res;

    auto try_candidate = [&](const Integer& U, const Integer& V) -> bool {
        if (!member_of(I, U, V)) return false;
        QuadElement xi = field.from_half_disc_coords(U, V);
        Rational nr = xi.norm();
        if (nr != N && nr != -N) return false;
        res.generator = xi;
        return true;
    };

    if (D < 0) {
        // (U^2 + |D| V^2)/4 = N; a generator or its negative has V >= 0.
        Integer absD = -D;
        Integer vmax = isqrt(4 * N / absD);
        for (Integer V = 0; V <= vmax && !res.generator; V += 1) {
            Integer U2 = 4 * N - absD * V * V;
            if (U2 < 0 || !is_perfect_square(U2)) continue;
            Integer U = isqrt(U2);
            for (int su : {1, -1}) {
                if (su == -1 && U == 0) break;
                if (try_candidate(su * U, V)) break;
            }
        }
        if (res.generator) {
            // Canonical associate: positive leading coordinate; torsion beyond
            // +-1 (m = -1, -3) is searched for the lexicographically largest.
            QuadElement best = canonical_sign(*res.generator);
            int tor = field.torsion_order();
            if (tor > 2) {
                QuadElement zeta = (field.radicand() == -1)
                                       ? field.element(0, 1, 1)
                                       : field.element(1, 1, 2);  // primitive 6th root
                QuadElement cur = *res.generator;
                for (int i = 1; i < tor; ++i) {
                    cur = cur * zeta;
                    QuadElement cand = canonical_sign(cur);
                    if (cand.a() > best.a() || (cand.a() == best.a() && cand.b() > best.b()))
                        best = cand;
                }
            }
            res.generator = best;
        }
        return res;
    }

    // Real case: a principal I has a generator in the unit-normalized window
    // |log|xi| - (1/2) log N| <= (1/2) log eta, so |V| sqrt(D) = |xi - xi^sigma|
    // <= 2 sqrt(N eta).
    double logN = log_abs(N);
    double vbound_log = 0.5 * (logN + field.log_eta()) + 0.6931471805599453 -
                        0.5 * log_abs(D);
    if (vbound_log > std::log(static_cast<double>(search_cap))) {
        res.budget_exceeded = true;
        return res;
    }
    auto vmax = static_cast<std::uint64_t>(std::ceil(std::exp(std::max(vbound_log, 0.0)))) + 1;
    for (std::uint64_t Vi = 0; Vi <= vmax && !res.generator; ++Vi) {
        Integer V(static_cast<unsigned long>(Vi));
        for (int ns : {1, -1}) {
            Integer U2 = D * V * V + 4 * ns * N;
            if (U2 < 0 || !is_perfect_square(U2)) continue;
            Integer U = isqrt(U2);
            for (int su : {1, -1}) {
                if (su == -1 && U == 0) break;
                if (try_candidate(su * U, V)) break;
            }
            if (res.generator) break;
        }
    }
    if (res.generator) {
        // Unit normalization: integer e minimizing
        // |log|xi eta^e| - (1/2) log N|, ties toward the smaller exponent.
        const QuadElement& eta = *field.fundamental_unit();
        double le = field.log_eta();
        double lx = res.generator->log_abs_embedding();
        double center = 0.5 * logN;
        double e0 = std::round((center - lx) / le);
        long best_e = static_cast<long>(e0);
        double best_d = std::abs(lx + best_e * le - center);
        for (long cand : {best_e - 1, best_e + 1}) {
            double d = std::abs(lx + cand * le - center);
            if (d < best_d - 1e-12 || (std::abs(d - best_d) <= 1e-12 && cand < best_e)) {
                best_d = d;
                best_e = cand;
            }
        }
        res.unit_exponent = best_e;
        QuadElement g = *res.generator * eta.pow(best_e);
        res.generator = canonical_sign(g);
    }
    return res;
}

}  // namespace primdiv
