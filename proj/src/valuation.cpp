#include "primdiv/valuation.hpp"

#include <cmath>

namespace primdiv {

long nu_p(const Rational& x, const Integer& p) {
    if (x == 0) throw std::invalid_argument("nu_p: zero argument");
    long v = 0;
    if (x.get_num() % p == 0) v = int_valuation(x.get_num(), p);
    if (x.get_den() % p == 0) v -= int_valuation(x.get_den(), p);
    return v;
}

namespace {

// sqrt(D) mod p^k (Hensel lift of the ideal's distinguished root). For p = 2
// the bitwise lift keeps the residue class mod 4 fixed.
Integer lift_root(const PrimeIdeal& P, const Integer& pk, unsigned long k) {
    const Integer& D = P.field->discriminant();
    if (P.p == 2) {
        Integer r = P.root;  // 1 or 3, valid mod 8 since D = 1 mod 8
        Integer mod = 8;
        unsigned long j = 3;
        while (j < k) {
            Integer next_mod = mod * 2;
            if ((r * r - D) % next_mod != 0) r += mod / 2;
            mod = next_mod;
            ++j;
        }
        return r % pk;
    }
    Integer r = P.root;
    Integer mod = P.p;
    while (mod < pk) {
        mod = mod * mod;
        if (mod > pk) mod = pk;  // cap precision; Newton still contracts
        Integer t = (r * r - D) % mod;
        Integer corr = (t * invmod((2 * r) % mod, mod)) % mod;
        r = (r - corr) % mod;
        if (r < 0) r += mod;
    }
    return r % pk;
}

// Valuation and unit part of the embedding of the integral A + B sqrt(m)
// into Q_p along the split prime P, computed at precision k (result unit is
// defined mod p^{k}). Precision is raised internally until the valuation
// resolves.
struct EmbeddedValue {
    long val = 0;
    Integer unit;  // mod p^k
    Integer pk;
    unsigned long k = 0;
};

EmbeddedValue embed_split(const Integer& A, const Integer& B, const PrimeIdeal& P,
                          unsigned long want_k) {
    const QuadraticField& K = *P.field;
    const Integer& D = K.discriminant();
    // Known finite cap: nu(A + B sqrt m) <= nu_p(norm).
    Integer normv = A * A - K.radicand() * B * B;
    long cap = (normv == 0) ? 0 : int_valuation(normv, P.p);
    if (normv == 0) throw std::invalid_argument("embed_split: zero element");
    unsigned long k = std::max<unsigned long>(want_k + static_cast<unsigned long>(cap), 8);
    for (;;) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), P.p.get_mpz_t(), k);
        Integer root = lift_root(P, pk, k);
        Integer sqrt_m = (D == K.radicand()) ? root : (root * invmod(2, pk)) % pk;
        Integer img = (A + B * sqrt_m) % pk;
        if (img < 0) img += pk;
        if (img == 0) {
            if (static_cast<long>(k) > cap + static_cast<long>(want_k) + 4)
                throw std::logic_error("embed_split: valuation above norm cap");
            k *= 2;
            continue;
        }
        long v = int_valuation(img, P.p);
        if (v + static_cast<long>(want_k) > static_cast<long>(k)) {
            k *= 2;
            continue;
        }
        Integer pv;
        mpz_pow_ui(pv.get_mpz_t(), P.p.get_mpz_t(), static_cast<unsigned long>(v));
        Integer punit;
        mpz_pow_ui(punit.get_mpz_t(), P.p.get_mpz_t(), k - static_cast<unsigned long>(v));
        EmbeddedValue out;
        out.val = v;
        out.unit = (img / pv) % punit;
        out.pk = punit;
        out.k = k - static_cast<unsigned long>(v);
        return out;
    }
}

long nu_p_even_norm_half(const Integer& norm_val, const Integer& p) {
    long v = int_valuation(norm_val, p);
    if (v % 2 != 0) throw std::logic_error("inert valuation: odd norm valuation");
    return v / 2;
}

}  // namespace

ValuationResult nu_ideal(const QuadElement& x, const PrimeIdeal& P) {
    if (x.is_zero()) throw std::invalid_argument("nu_ideal: zero element");
    ValuationResult out;
    out.ideal = P;
    const Integer& p = P.p;
    Integer norm_num = x.a() * x.a() - x.field().radicand() * x.b() * x.b();
    long vq = (x.q() % p == 0) ? int_valuation(x.q(), p) : 0;
    switch (P.kind) {
        case PrimeIdeal::Kind::Inert:
            out.value = nu_p_even_norm_half(norm_num, p) - vq;
            out.method = ValuationMethod::Direct;
            return out;
        case PrimeIdeal::Kind::Ramified:
            out.value = int_valuation(norm_num, p) - 2 * vq;
            out.method = ValuationMethod::Direct;
            return out;
        case PrimeIdeal::Kind::Split: {
            EmbeddedValue e = embed_split(x.a(), x.b(), P, 1);
            out.value = e.val - vq;
            out.method = ValuationMethod::HenselEmbedding;
            return out;
        }
    }
    throw std::logic_error("nu_ideal: unreachable");
}

ValuationResult nu_ideal_norm_descent(const QuadElement& x, const PrimeIdeal& P) {
    if (P.kind != PrimeIdeal::Kind::Split)
        throw std::invalid_argument("norm descent applies to split primes");
    if (x.is_zero()) throw std::invalid_argument("nu_ideal_norm_descent: zero element");
    const Integer& p = P.p;
    Integer A = x.a(), B = x.b();
    long content = 0;
    while (A % p == 0 && B % p == 0) {
        A /= p;
        B /= p;
        ++content;
    }
    Integer normv = A * A - x.field().radicand() * B * B;
    long total = (normv % p == 0) ? int_valuation(normv, p) : 0;
    // At most one of the two conjugate ideals sees the primitive part.
    long here = 0;
    if (total > 0) {
        const Integer& D = x.field().discriminant();
        Integer pk = (p == 2) ? Integer(8) : p;
        Integer root = lift_root(P, pk, (p == 2) ? 3 : 1);
        Integer sqrt_m = (D == x.field().radicand()) ? root : (root * invmod(2, pk)) % pk;
        Integer img = (A + B * sqrt_m) % pk;
        if (img < 0) img += pk;
        here = (img % p == 0) ? total : 0;
    }
    long vq = (x.q() % p == 0) ? int_valuation(x.q(), p) : 0;
    ValuationResult out;
    out.ideal = P;
    out.value = content + here - vq;
    out.method = ValuationMethod::NormDescent;
    return out;
}

// ---------------------------------------------------------------------------
// Residue fields

namespace {

// Work in the integral basis 1, omega with omega = sqrt(m) or (1+sqrt m)/2,
// so that half-integral elements and denominators divisible by p reduce
// correctly. omega^2 = t_rel * omega + n_rel.
struct ResidueContext {
    Integer p;
    bool quadratic = false;  // inert: F_{p^2} as F_p[omega]
    Integer t_rel, n_rel;
    Integer omega_res;  // split/ramified: image of omega in F_p
};

struct ResidueElt {
    Integer x, y;
};

void omega_relation(const QuadraticField& K, Integer& t_rel, Integer& n_rel) {
    if (K.discriminant() == K.radicand()) {
        t_rel = 1;
        n_rel = (K.radicand() - 1) / 4;
    } else {
        t_rel = 0;
        n_rel = K.radicand();
    }
}

ResidueContext residue_context(const PrimeIdeal& P) {
    ResidueContext ctx;
    ctx.p = P.p;
    const QuadraticField& K = *P.field;
    omega_relation(K, ctx.t_rel, ctx.n_rel);
    switch (P.kind) {
        case PrimeIdeal::Kind::Inert: {
            ctx.quadratic = true;
            break;
        }
        case PrimeIdeal::Kind::Split: {
            const Integer& D = K.discriminant();
            if (P.p == 2) {
                // D = m = 1 mod 8; omega = (1+sqrt m)/2 maps to (1+u)/2 with
                // u the 2-adic root: 1 for root 1 mod 4, 0 for root 3.
                ctx.omega_res = (P.root == 1) ? 1 : 0;
            } else {
                Integer root = lift_root(P, P.p, 1);
                Integer inv2 = invmod(2, P.p);
                if (D == K.radicand())
                    ctx.omega_res = ((1 + root) * inv2) % P.p;
                else
                    ctx.omega_res = (root * inv2) % P.p;
            }
            break;
        }
        case PrimeIdeal::Kind::Ramified: {
            if (K.discriminant() == K.radicand()) {
                // odd p | m, omega = (1+sqrt m)/2 -> 1/2 (double root)
                ctx.omega_res = invmod(2, P.p);
            } else {
                // omega = sqrt(m): 0 when p | m; p = 2, m = 3 mod 4: 1.
                Integer mm = K.radicand() % P.p;
                if (mm < 0) mm += P.p;
                ctx.omega_res = (mm == 0) ? 0 : 1;
            }
            break;
        }
    }
    ctx.omega_res %= P.p;
    if (ctx.omega_res < 0) ctx.omega_res += P.p;
    return ctx;
}

// Coordinates (u + v omega)/w of x with the p-part of the denominator
// stripped (valid for unramified/ramified primes when x is a unit at every
// prime above p's relevant side; the divisibility is exact for inert and
// ramified primes by the valuation hypothesis).
struct OmegaCoords {
    Integer u, v, w;
};

OmegaCoords omega_coords_stripped(const QuadElement& x, const Integer& p) {
    const QuadraticField& K = x.field();
    OmegaCoords c;
    c.w = x.q();
    if (K.discriminant() == K.radicand()) {
        c.u = x.a() - x.b();
        c.v = 2 * x.b();
    } else {
        c.u = x.a();
        c.v = x.b();
    }
    if (c.w % p == 0) {
        long k = int_valuation(c.w, p);
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
        if (c.u % pk != 0 || c.v % pk != 0)
            throw std::invalid_argument("residue: element is not integral at p after scaling");
        c.u /= pk;
        c.v /= pk;
        c.w /= pk;
    }
    return c;
}

ResidueElt residue_of(const QuadElement& g, const ResidueContext& ctx) {
    OmegaCoords c = omega_coords_stripped(g, ctx.p);
    Integer winv = invmod(c.w % ctx.p, ctx.p);
    Integer x = (c.u % ctx.p) * winv % ctx.p;
    Integer y = (c.v % ctx.p) * winv % ctx.p;
    if (x < 0) x += ctx.p;
    if (y < 0) y += ctx.p;
    if (!ctx.quadratic) {
        Integer r = (x + y * ctx.omega_res) % ctx.p;
        return {r, 0};
    }
    return {x, y};
}

ResidueElt residue_mul(const ResidueElt& u, const ResidueElt& v, const ResidueContext& ctx) {
    if (!ctx.quadratic) return {(u.x * v.x) % ctx.p, 0};
    // (x1 + y1 w)(x2 + y2 w) with w^2 = t w + n.
    Integer cross = u.x * v.y + u.y * v.x;
    Integer ww = u.y * v.y;
    Integer x = (u.x * v.x + ctx.n_rel * ww) % ctx.p;
    Integer y = (cross + ctx.t_rel * ww) % ctx.p;
    if (x < 0) x += ctx.p;
    if (y < 0) y += ctx.p;
    return {x, y};
}

ResidueElt residue_pow(ResidueElt base, Integer e, const ResidueContext& ctx) {
    ResidueElt r{1, 0};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = residue_mul(r, base, ctx);
        base = residue_mul(base, base, ctx);
        e >>= 1;
    }
    return r;
}

bool residue_is_one(const ResidueElt& u) { return u.x == 1 && u.y == 0; }

Integer order_from_factored_group(const ResidueElt& g, const Integer& group_order,
                                  const Factorization& f, const ResidueContext& ctx) {
    Integer o = group_order;
    for (const auto& e : f.entries) {
        for (unsigned i = 0; i < e.exponent; ++i) {
            Integer cand = o / e.prime;
            if (o % e.prime != 0) break;
            if (residue_is_one(residue_pow(g, cand, ctx)))
                o = cand;
            else
                break;
        }
    }
    return o;
}

// nu_p((num/den)^e - 1) in Z_p via powering mod rising p-powers; den must be
// a p-unit. Terminates since the power is not exactly 1.
long val_rational_power_minus_one(const Integer& num, const Integer& den, const Integer& e_exp,
                                  const Integer& p) {
    unsigned long k = 8;
    for (;;) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
        Integer u = (num % pk) * invmod(den % pk, pk) % pk;
        if (u < 0) u += pk;
        Integer w = powmod(u, e_exp, pk) - 1;
        if (w < 0) w += pk;
        if (w != 0) {
            long v = int_valuation(w, p);
            if (v < static_cast<long>(k)) return v;
        }
        k *= 2;
        if (k > 1u << 22)
            throw std::logic_error("val_rational_power_minus_one: runaway precision");
    }
}

// nu_p(gamma^e - 1) through the split embedding, re-embedding at higher
// precision until the valuation resolves. gamma must be a unit at P.
long split_val_power_minus_one(const QuadElement& g, const PrimeIdeal& P, const Integer& e_exp) {
    const Integer& p = P.p;
    unsigned long want = 8;
    Integer qu = g.q();
    if (qu % p == 0) {
        Integer pv;
        mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(),
                   static_cast<unsigned long>(int_valuation(qu, p)));
        qu /= pv;
    }
    for (;;) {
        EmbeddedValue e = embed_split(g.a(), g.b(), P, want);
        Integer u = (e.unit * invmod(qu % e.pk, e.pk)) % e.pk;
        if (u < 0) u += e.pk;
        Integer w = powmod(u, e_exp, e.pk) - 1;
        if (w < 0) w += e.pk;
        if (w != 0) {
            long v = int_valuation(w, p);
            if (v < static_cast<long>(e.k)) return v;
        }
        want *= 2;
        if (want > 1u << 22)
            throw std::logic_error("split_val_power_minus_one: runaway precision");
    }
}

// nu_p(N(gamma^e - 1)) computed in (Z/p^k)[omega] (integral basis, so inert
// and ramified primes with p in the original denominator reduce correctly).
long val_norm_power_minus_one_quadring(const QuadElement& g, const Integer& n_exp,
                                       const Integer& p) {
    Integer t_rel, n_rel;
    omega_relation(g.field(), t_rel, n_rel);
    OmegaCoords c = omega_coords_stripped(g, p);
    unsigned long k = 8;
    for (;;) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
        Integer winv = invmod(c.w % pk, pk);
        Integer X = (c.u % pk) * winv % pk;
        Integer Y = (c.v % pk) * winv % pk;
        // power (X + Y omega)^e mod (p^k, omega^2 - t omega - n)
        Integer rx = 1, ry = 0, bx = X, by = Y;
        Integer e = n_exp;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) {
                Integer ww = ry * by % pk;
                Integer nx = (rx * bx + n_rel * ww) % pk;
                Integer ny = (rx * by + ry * bx + t_rel * ww) % pk;
                rx = nx;
                ry = ny;
            }
            Integer ww = by * by % pk;
            Integer nbx = (bx * bx + n_rel * ww) % pk;
            Integer nby = (2 * bx * by + t_rel * ww) % pk;
            bx = nbx;
            by = nby;
            e >>= 1;
        }
        rx = (rx - 1) % pk;
        if (rx < 0) rx += pk;
        // N(x + y omega) = x^2 + t xy - n y^2.
        Integer normw = (rx * rx + t_rel * rx * ry - n_rel * ry * ry) % pk;
        if (normw < 0) normw += pk;
        if (normw != 0) {
            long v = int_valuation(normw, p);
            if (v < static_cast<long>(k)) return v;
        }
        k *= 2;
        if (k > 1u << 22)
            throw std::logic_error("val_norm_power_minus_one_quadring: runaway precision");
    }
}

}  // namespace

Integer mult_order(const Rational& gamma, const Integer& p, const FactorEffort& effort) {
    if (gamma == 0) throw std::invalid_argument("mult_order: zero gamma");
    if (nu_p(gamma, p) != 0) throw std::invalid_argument("mult_order: gamma not a unit at p");
    ResidueContext ctx;
    ctx.p = p;
    Integer r = (gamma.get_num() % p) * invmod(gamma.get_den() % p, p) % p;
    if (r < 0) r += p;
    Factorization f = factor(p - 1, effort);
    if (!f.complete()) throw std::runtime_error("mult_order: cannot factor p - 1 within budget");
    return order_from_factored_group({r, 0}, p - 1, f, ctx);
}

namespace {

// F_p residue along a split prime when p divides the reduced denominator
// (only the chosen side is a unit); goes through the p-adic embedding.
Integer split_residue_with_denominator(const QuadElement& gamma, const PrimeIdeal& P) {
    EmbeddedValue e = embed_split(gamma.a(), gamma.b(), P, 1);
    Integer qu = gamma.q();
    long vq = int_valuation(qu, P.p);
    Integer pv;
    mpz_pow_ui(pv.get_mpz_t(), P.p.get_mpz_t(), static_cast<unsigned long>(vq));
    qu /= pv;
    if (e.val != vq) throw std::logic_error("split residue: valuation bookkeeping");
    Integer r = (e.unit % P.p) * invmod(qu % P.p, P.p) % P.p;
    if (r < 0) r += P.p;
    return r;
}

}  // namespace

Integer mult_order(const QuadElement& gamma, const PrimeIdeal& P, const FactorEffort& effort) {
    if (gamma.is_zero()) throw std::invalid_argument("mult_order: zero gamma");
    if (nu_ideal(gamma, P).value != 0)
        throw std::invalid_argument("mult_order: gamma not a unit at the prime");
    ResidueContext ctx = residue_context(P);
    ResidueElt r;
    if (P.kind == PrimeIdeal::Kind::Split && gamma.q() % P.p == 0)
        r = ResidueElt{split_residue_with_denominator(gamma, P), 0};
    else
        r = residue_of(gamma, ctx);
    Integer group_order = P.norm() - 1;
    Factorization f = factor(group_order, effort);
    if (!f.complete()) throw std::runtime_error("mult_order: cannot factor group order");
    return order_from_factored_group(r, group_order, f, ctx);
}

RationalValuation nu_power_minus_one(const Rational& gamma, unsigned long n, const Integer& p,
                                     const FactorEffort& effort) {
    if (gamma == 0 || gamma == 1 || gamma == -1)
        throw std::invalid_argument("nu_power_minus_one: gamma must not be 0 or a root of unity");
    if (nu_p(gamma, p) != 0)
        throw std::invalid_argument("nu_power_minus_one: gamma not a unit at p");
    RationalValuation out;
    out.p = p;
    Integer t = mult_order(gamma, p, effort);
    if (Integer(n) % t != 0) {
        out.value = 0;
        out.method = ValuationMethod::OrderLte;
        return out;
    }
    if (p == 2) {
        out.method = ValuationMethod::Direct;
        out.value = val_rational_power_minus_one(gamma.get_num(), gamma.get_den(), Integer(n), p);
        return out;
    }
    // Odd p: lifting the exponent from the order.
    long s = val_rational_power_minus_one(gamma.get_num(), gamma.get_den(), t, p);
    long vn = (Integer(n) % p == 0) ? int_valuation(Integer(n), p) : 0;
    out.value = s + vn;
    out.method = ValuationMethod::OrderLte;
    return out;
}

ValuationResult nu_power_minus_one(const QuadElement& gamma, unsigned long n, const PrimeIdeal& P,
                                   const FactorEffort& effort) {
    if (gamma.is_zero() || gamma.is_root_of_unity())
        throw std::invalid_argument("nu_power_minus_one: gamma must not be 0 or a root of unity");
    if (nu_ideal(gamma, P).value != 0)
        throw std::invalid_argument("nu_power_minus_one: gamma not a unit at the prime");
    ValuationResult out;
    out.ideal = P;
    Integer t = mult_order(gamma, P, effort);
    if (Integer(n) % t != 0) {
        out.value = 0;
        out.method = ValuationMethod::OrderLte;
        return out;
    }
    const Integer& p = P.p;
    bool odd_unramified = (p != 2) && (P.kind != PrimeIdeal::Kind::Ramified);
    if (odd_unramified) {
        long vn = (Integer(n) % p == 0) ? int_valuation(Integer(n), p) : 0;
        long s = 0;
        if (P.kind == PrimeIdeal::Kind::Split) {
            s = split_val_power_minus_one(gamma, P, t);
        } else {
            // Inert: half the norm valuation.
            long nv = val_norm_power_minus_one_quadring(gamma, t, p);
            if (nv % 2 != 0) throw std::logic_error("nu_power_minus_one: odd inert norm val");
            s = nv / 2;
        }
        out.value = s + vn;
        out.method = ValuationMethod::OrderLte;
        return out;
    }
    // p = 2 or ramified: direct computation modulo rising prime powers.
    out.method = ValuationMethod::Direct;
    if (P.kind == PrimeIdeal::Kind::Split) {
        out.value = split_val_power_minus_one(gamma, P, Integer(n));
        return out;
    }
    long nv = val_norm_power_minus_one_quadring(gamma, Integer(n), p);
    if (P.kind == PrimeIdeal::Kind::Inert) {
        if (nv % 2 != 0) throw std::logic_error("nu_power_minus_one: odd inert norm val");
        out.value = nv / 2;
    } else {
        out.value = nv;
    }
    return out;
}

RationalValuation nu_direct_oracle(const Rational& gamma, unsigned long n, const Integer& p,
                                   std::uint64_t bit_budget) {
    if (gamma == 0) throw std::invalid_argument("nu_direct_oracle: zero gamma");
    std::uint64_t bits = std::max(mpz_sizeinbase(gamma.get_num().get_mpz_t(), 2),
                                  mpz_sizeinbase(gamma.get_den().get_mpz_t(), 2));
    if (bits * n > bit_budget)
        throw std::runtime_error("nu_direct_oracle: exact power exceeds bit budget");
    Rational pw(1);
    Rational base = gamma;
    unsigned long e = n;
    while (e) {
        if (e & 1) pw *= base;
        base *= base;
        e >>= 1;
    }
    pw -= 1;
    if (pw == 0) throw std::invalid_argument("nu_direct_oracle: gamma^n = 1");
    RationalValuation out;
    out.p = p;
    out.value = nu_p(pw, p);
    out.method = ValuationMethod::Direct;
    return out;
}

ValuationResult nu_direct_oracle(const QuadElement& gamma, unsigned long n, const PrimeIdeal& P,
                                 std::uint64_t bit_budget) {
    if (gamma.is_zero()) throw std::invalid_argument("nu_direct_oracle: zero gamma");
    std::uint64_t bits = std::max({mpz_sizeinbase(gamma.a().get_mpz_t(), 2),
                                   mpz_sizeinbase(gamma.b().get_mpz_t(), 2),
                                   mpz_sizeinbase(gamma.q().get_mpz_t(), 2)});
    if (bits * n > bit_budget)
        throw std::runtime_error("nu_direct_oracle: exact power exceeds bit budget");
    QuadElement w = gamma.pow(static_cast<long>(n)) - gamma.field().element(1, 0, 1);
    if (w.is_zero()) throw std::invalid_argument("nu_direct_oracle: gamma^n = 1");
    ValuationResult out = nu_ideal(w, P);
    out.method = ValuationMethod::Direct;
    return out;
}

bool residue_order_equals(const Rational& gamma, const Integer& p, unsigned long n,
                          const std::vector<Integer>& n_prime_divisors) {
    if (nu_p(gamma, p) != 0) return false;
    Integer r = (gamma.get_num() % p) * invmod(gamma.get_den() % p, p) % p;
    if (r < 0) r += p;
    if (powmod(r, Integer(n), p) != 1) return false;
    for (const Integer& q : n_prime_divisors) {
        if (powmod(r, Integer(n) / q, p) == 1) return false;
    }
    return true;
}

bool residue_order_equals(const QuadElement& gamma, const PrimeIdeal& P, unsigned long n,
                          const std::vector<Integer>& n_prime_divisors) {
    if (nu_ideal(gamma, P).value != 0) return false;
    ResidueContext ctx = residue_context(P);
    ResidueElt r;
    if (P.kind == PrimeIdeal::Kind::Split && gamma.q() % P.p == 0)
        r = ResidueElt{split_residue_with_denominator(gamma, P), 0};
    else
        r = residue_of(gamma, ctx);
    if (!residue_is_one(residue_pow(r, Integer(n), ctx))) return false;
    for (const Integer& q : n_prime_divisors) {
        if (residue_is_one(residue_pow(r, Integer(n) / q, ctx))) return false;
    }
    return true;
}

}  // namespace primdiv
