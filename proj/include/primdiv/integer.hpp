#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace primdiv {

using Integer = mpz_class;

/// Reduced fraction with positive denominator; zero is 0/1.
/// mpq_class canonicalization already enforces the invariants the
/// rest of the library relies on (gcd 1, denominator >= 1).
using Rational = mpq_class;

inline Integer make_int(const std::string& s) { return Integer(s); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "A" or "A/B".
inline Rational parse_rational(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) return make_rational(Integer(s), 1);
    return make_rational(Integer(s.substr(0, pos)), Integer(s.substr(pos + 1)));
}

inline Integer isqrt(const Integer& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer pow_ui(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Inverse of a mod m; throws if not invertible.
inline Integer invmod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("invmod: not invertible");
    return r;
}

/// nu_p(n) for n != 0.
inline long int_valuation(Integer n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("int_valuation: zero argument");
    long v = 0;
    Integer q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

/// Kronecker symbol (a/n).
inline int kronecker(const Integer& a, const Integer& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

/// log|z| for big z, accurate to double precision regardless of magnitude.
inline double log_abs(const Integer& z) {
    if (z == 0) throw std::invalid_argument("log_abs: zero argument");
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::abs(d)) + static_cast<double>(exp2) * 0.6931471805599453;
}

inline double log_abs(const Rational& q) {
    return log_abs(q.get_num()) - log_abs(q.get_den());
}

/// max{log x, 1}; log* with log*(x) = 1 for x <= e.
inline double log_star(double x) { return std::max(std::log(x), 1.0); }

/// max{log, 0} and min{log, 0} of an already-computed log value.
inline double log_plus(double logv) { return std::max(logv, 0.0); }
inline double log_minus(double logv) { return std::min(logv, 0.0); }

/// splitmix64; the deterministic RNG used by factoring and test-case generation.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, bound) for bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

/// FNV-1a over a string; used for config digests.
inline std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace primdiv
