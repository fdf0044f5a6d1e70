#include "primdiv/quadfield.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "primdiv/arith.hpp"
#include "primdiv/factor.hpp"
#include "primdiv/ideals.hpp"
#include "primdiv/primality.hpp"

namespace primdiv {

// ---------------------------------------------------------------------------
// QuadElement

QuadElement::QuadElement(const QuadraticField& field, Integer a, Integer b, Integer q)
    : field_(&field), a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {
    if (q_ == 0) throw std::invalid_argument("QuadElement: zero denominator");
    reduce();
}

void QuadElement::reduce() {
    if (q_ < 0) {
        a_ = -a_;
        b_ = -b_;
        q_ = -q_;
    }
    Integer g = gcd(gcd(a_, b_), q_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        q_ /= g;
    }
}

bool QuadElement::is_integral() const {
    // Integral iff trace and norm are rational integers.
    Rational t = trace();
    Rational n = norm();
    return t.get_den() == 1 && n.get_den() == 1;
}

bool QuadElement::is_unit() const {
    if (!is_integral()) return false;
    Rational n = norm();
    return n == 1 || n == -1;
}

bool QuadElement::is_root_of_unity() const {
    if (is_zero()) return false;
    QuadElement one(*field_, 1, 0, 1);
    // Torsion orders in a quadratic field divide 4 or 6.
    for (int k : {1, 2, 3, 4, 6})
        if (pow(k) == one) return true;
    return false;
}

QuadElement QuadElement::conjugate() const { return QuadElement(*field_, a_, -b_, q_); }

Rational QuadElement::norm() const {
    return make_rational(a_ * a_ - field_->radicand() * b_ * b_, q_ * q_);
}

Rational QuadElement::trace() const { return make_rational(2 * a_, q_); }

QuadElement QuadElement::inverse() const {
    if (is_zero()) throw std::domain_error("QuadElement::inverse of zero");
    Integer n = a_ * a_ - field_->radicand() * b_ * b_;  // q^2 * norm
    return QuadElement(*field_, a_ * q_, -b_ * q_, n);
}

QuadElement QuadElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadElement r(*field_, 1, 0, 1);
    QuadElement base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

QuadElement QuadElement::operator-() const { return QuadElement(*field_, -a_, -b_, q_); }

QuadElement QuadElement::operator+(const QuadElement& o) const {
    return QuadElement(*field_, a_ * o.q_ + o.a_ * q_, b_ * o.q_ + o.b_ * q_, q_ * o.q_);
}

QuadElement QuadElement::operator-(const QuadElement& o) const { return *this + (-o); }

QuadElement QuadElement::operator*(const QuadElement& o) const {
    const Integer& m = field_->radicand();
    return QuadElement(*field_, a_ * o.a_ + m * b_ * o.b_, a_ * o.b_ + b_ * o.a_, q_ * o.q_);
}

QuadElement QuadElement::operator/(const QuadElement& o) const { return *this * o.inverse(); }

bool QuadElement::operator==(const QuadElement& o) const {
    return a_ == o.a_ && b_ == o.b_ && q_ == o.q_;
}

namespace {

// log|a + b sqrt(m)| for m > 0, avoiding the catastrophic cancellation that
// hits unit powers: the cancelling sign combination is recovered from the
// exact norm via |u| = |N| / |conj|.
double log_abs_real_combination(const Integer& a, const Integer& b, const Integer& m) {
    if (b == 0) return log_abs(a);
    if (a == 0) return log_abs(b) + 0.5 * log_abs(m);
    double la = log_abs(a);
    double lb = log_abs(b) + 0.5 * log_abs(m);
    bool same_sign = (a > 0) == (b > 0);
    if (same_sign) {
        // |a| + |b|sqrt(m): no cancellation.
        double hi = std::max(la, lb), lo = std::min(la, lb);
        return hi + std::log1p(std::exp(lo - hi));
    }
    Integer norm = a * a - m * b * b;  // = (a + b sqrt m)(a - b sqrt m)
    double hi = std::max(la, lb), lo = std::min(la, lb);
    double lconj = hi + std::log1p(std::exp(lo - hi));  // |a - b sqrt m| has equal signs
    return log_abs(norm) - lconj;
}

}  // namespace

double QuadElement::log_abs_embedding() const {
    if (is_zero()) throw std::domain_error("log of zero element");
    const Integer& m = field_->radicand();
    if (m > 0) return log_abs_real_combination(a_, b_, m) - log_abs(q_);
    // Complex: |x|^2 = (a^2 + |m| b^2)/q^2, no cancellation.
    Integer s = a_ * a_ - m * b_ * b_;
    return 0.5 * log_abs(s) - log_abs(q_);
}

double QuadElement::log_abs_conjugate_embedding() const {
    if (field_->radicand() < 0) return log_abs_embedding();
    return conjugate().log_abs_embedding();
}

std::string QuadElement::str() const {
    std::ostringstream os;
    os << "(" << a_.get_str();
    if (b_ != 0) os << (b_ > 0 ? "+" : "") << b_.get_str() << "*sqrt(" << field_->radicand() << ")";
    os << ")";
    if (q_ != 1) os << "/" << q_.get_str();
    return os.str();
}

std::string QuadElement::coords() const {
    return a_.get_str() + "," + b_.get_str() + "," + q_.get_str();
}

// ---------------------------------------------------------------------------
// PrimeIdeal

PrimeIdeal PrimeIdeal::conjugate() const {
    PrimeIdeal out = *this;
    if (kind == Kind::Split) out.root = (p == 2) ? Integer(4) - root : p - root;
    return out;
}

bool PrimeIdeal::operator==(const PrimeIdeal& o) const {
    return p == o.p && kind == o.kind && root == o.root && field == o.field;
}

std::string PrimeIdeal::str() const {
    std::ostringstream os;
    os << "(" << p.get_str();
    switch (kind) {
        case Kind::Split: os << ", split, root " << root.get_str(); break;
        case Kind::Inert: os << ", inert"; break;
        case Kind::Ramified: os << ", ramified"; break;
    }
    os << ")";
    return os.str();
}

IdealRep IdealRep::conjugate() const {
    IdealRep out = *this;
    Integer nb = (-b) % (2 * a);
    if (nb < 0) nb += 2 * a;
    out.b = nb;
    return out;
}

std::string IdealRep::str() const {
    std::ostringstream os;
    if (content != 1) os << content.get_str() << "*";
    os << "[" << a.get_str() << ", (" << b.get_str() << "+sqrt(D))/2]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Field construction

QuadElement QuadraticField::element(Integer a, Integer b, Integer q) const {
    return QuadElement(*this, std::move(a), std::move(b), std::move(q));
}

QuadElement QuadraticField::from_half_disc_coords(const Integer& u, const Integer& v) const {
    if (disc_ == m_) return QuadElement(*this, u, v, 2);
    // sqrt(D) = 2 sqrt(m)
    return QuadElement(*this, u, 2 * v, 2);
}

namespace {

// PQa continued-fraction run solving x^2 - D y^2 = +-4; returns (x, y) of the
// fundamental solution and the norm sign.
struct PellSolution {
    Integer x, y;
    int norm_sign;
};

PellSolution fundamental_pell4(const Integer& D) {
    Integer sqrtD = isqrt(D);
    Integer P = mpz_odd_p(D.get_mpz_t()) ? 1 : 0;
    Integer Q = 2;
    Integer G_prev2 = -P, G_prev1 = Q;  // G_{-2} = -P0, G_{-1} = Q0
    Integer B_prev2 = 1, B_prev1 = 0;
    int i = 0;
    const int kMaxSteps = 10'000'000;
    while (true) {
        Integer aq = (P + sqrtD);
        Integer ai;
        mpz_fdiv_q(ai.get_mpz_t(), aq.get_mpz_t(), Q.get_mpz_t());
        Integer G = ai * G_prev1 + G_prev2;
        Integer B = ai * B_prev1 + B_prev2;
        Integer Pn = ai * Q - P;
        Integer Qn = (D - Pn * Pn) / Q;
        ++i;
        if (Qn <= 0) throw std::logic_error("pell: negative Q (non-reduced surd)");
        if (Qn == 2 && i >= 1) {
            // G^2 - D B^2 = (-1)^i * Q_i * Q_0 = +-4 here.
            Integer check = G * G - D * B * B;
            int sign = (i % 2 == 0) ? 1 : -1;
            if (check != Integer(4 * sign))
                throw std::logic_error("pell: identity check failed");
            return {G, B, sign};
        }
        if (i > kMaxSteps) throw std::runtime_error("pell: period cap exceeded");
        G_prev2 = G_prev1;
        G_prev1 = G;
        B_prev2 = B_prev1;
        B_prev1 = B;
        P = Pn;
        Q = Qn;
    }
}

}  // namespace

const QuadraticField& make_field(const Integer& m) {
    static std::map<Integer, QuadraticField> registry;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(m);
    if (it != registry.end()) return it->second;

    if (m == 0 || m == 1) throw std::invalid_argument("make_field: m must not be 0 or 1");
    Factorization f = factor(abs(m));
    if (!f.complete())
        throw std::runtime_error("make_field: cannot certify m squarefree (budget)");
    for (const auto& e : f.entries)
        if (e.exponent > 1)
            throw std::invalid_argument("make_field: m not squarefree, square factor " +
                                        e.prime.get_str());

    QuadraticField K;
    K.m_ = m;
    Integer mod4 = m % 4;
    if (mod4 < 0) mod4 += 4;
    K.disc_ = (mod4 == 1) ? m : 4 * m;
    if (abs(K.disc_) > 1'000'000)
        throw std::invalid_argument("make_field: |D| beyond the configured 1e6 cap");

    if (m < 0) {
        K.torsion_ = (m == -1) ? 4 : (m == -3) ? 6 : 2;
        K.h_ = Integer(static_cast<unsigned long>(reduced_forms_imaginary(K.disc_).size()));
        K.h_narrow_ = K.h_;
        K.unit_norm_ = 1;
        K.log_eta_ = 0.0;
        auto [slot, inserted] = registry.emplace(m, std::move(K));
        return slot->second;
    }
    K.torsion_ = 2;
    PellSolution pell = fundamental_pell4(K.disc_);
    K.unit_norm_ = pell.norm_sign;
    Integer h_plus = count_real_form_cycles(K.disc_);
    K.h_narrow_ = h_plus;
    if (pell.norm_sign == 1 && mpz_odd_p(h_plus.get_mpz_t()))
        throw std::logic_error("make_field: odd narrow class number with norm +1 unit");
    K.h_ = (pell.norm_sign == -1) ? h_plus : h_plus / 2;
    // Insert first so the unit can point at the interned field.
    auto [slot, inserted] = registry.emplace(m, std::move(K));
    QuadraticField& F = slot->second;
    F.unit_ = F.from_half_disc_coords(pell.x, pell.y);
    F.log_eta_ = F.unit_->log_abs_embedding();
    if (F.log_eta_ <= 0) throw std::logic_error("make_field: unit not > 1");
    return F;
}

// ---------------------------------------------------------------------------
// Prime splitting

namespace {

// Tonelli-Shanks square root of a mod odd prime p; a assumed a QR.
Integer sqrt_mod_p(Integer a, const Integer& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Find a quadratic non-residue (deterministic scan).
    Integer z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    Integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q >>= 1;
        ++s;
    }
    Integer c = powmod(z, q, p);
    Integer x = powmod(a, (q + 1) / 2, p);
    Integer t = powmod(a, q, p);
    unsigned long mexp = s;
    while (t != 1) {
        Integer tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = (tt * tt) % p;
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + i + 1 < mexp; ++j) b = (b * b) % p;
        x = (x * b) % p;
        c = (b * b) % p;
        t = (t * c) % p;
        mexp = i;
    }
    return x;
}

}  // namespace

std::vector<PrimeIdeal> primes_above(const QuadraticField& field, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("primes_above: p is not prime");
    const Integer& D = field.discriminant();
    std::vector<PrimeIdeal> out;
    PrimeIdeal base;
    base.field = &field;
    base.p = p;
    if (p == 2) {
        Integer Dm8 = D % 8;
        if (Dm8 < 0) Dm8 += 8;
        if (mpz_even_p(D.get_mpz_t())) {
            base.kind = PrimeIdeal::Kind::Ramified;
            out.push_back(base);
        } else if (Dm8 == 1) {
            base.kind = PrimeIdeal::Kind::Split;
            base.root = 1;  // 2-adic root mod 4 convention
            out.push_back(base);
            out.push_back(base.conjugate());
        } else {
            base.kind = PrimeIdeal::Kind::Inert;
            out.push_back(base);
        }
        return out;
    }
    int k = kronecker(D, p);
    if (k == 0) {
        base.kind = PrimeIdeal::Kind::Ramified;
        out.push_back(base);
    } else if (k == -1) {
        base.kind = PrimeIdeal::Kind::Inert;
        out.push_back(base);
    } else {
        base.kind = PrimeIdeal::Kind::Split;
        Integer t = sqrt_mod_p(D, p);
        if (t > p - t) t = p - t;
        base.root = t;
        out.push_back(base);
        out.push_back(base.conjugate());
    }
    return out;
}

std::vector<PrimeIdeal> prime_ideals_up_to_norm(const QuadraticField& field,
                                                std::uint64_t bound) {
    std::vector<PrimeIdeal> out;
    PrimeSieve sieve(bound);
    for (std::uint64_t p : sieve.primes()) {
        for (auto& P : primes_above(field, Integer(static_cast<unsigned long>(p)))) {
            if (P.norm() <= Integer(static_cast<unsigned long>(bound))) out.push_back(P);
        }
    }
    return out;
}

bool in_split_large_set(const QuadraticField& field, const Integer& p) {
    if (!is_prime(p)) return false;
    if (p * p <= abs(field.discriminant())) return false;  // strict p > sqrt|D|
    return kronecker(field.discriminant(), p) == 1;
}

std::vector<Integer> first_split_large_primes(const QuadraticField& field, int count) {
    std::vector<Integer> out;
    Integer p = 2;
    while (static_cast<int>(out.size()) < count) {
        if (in_split_large_set(field, p)) out.push_back(p);
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    return out;
}

SplitCountReport split_count(const QuadraticField& field, std::uint64_t x,
                             std::uint64_t sieve_cap) {
    if (x < 2) throw std::invalid_argument("split_count: x must be >= 2");
    SplitCountReport rep;
    PrimeSieve sieve(x, sieve_cap);
    const Integer& D = field.discriminant();
    for (std::uint64_t p : sieve.primes()) {
        Integer P(static_cast<unsigned long>(p));
        if (kronecker(D, P) == 1) ++rep.count;
    }
    double xd = static_cast<double>(x);
    double lx = std::log(xd);
    Integer absD = abs(D);
    ArithProfile pr = arith_profile(absD);
    double phiD = pr.phi.get_d();
    rep.density_lower_bound = 0.5 * xd / lx - (phiD / 320.0) * xd / (lx * lx);
    rep.density_hypothesis_met = xd >= 1e10 && lx >= absD.get_d();
    rep.tail_density_lower_bound = 0.49 * xd / lx;
    rep.tail_density_hypothesis_met = lx >= std::max(1e7, absD.get_d());
    return rep;
}

std::vector<FieldInequality> field_bounds_check(const QuadraticField& field) {
    const double kBudget = 1e-9;
    std::vector<FieldInequality> out;
    double absD = std::abs(field.discriminant().get_d());
    double logD = std::log(absD);
    double h = field.class_number().get_d();
    double log_eta = field.log_eta();
    const double pi = 3.14159265358979323846;
    if (!field.is_real()) {
        FieldInequality r;
        r.name = "class_number_imaginary";  // h <= mu/pi sqrt|D| (2 + log|D|)
        r.lhs = h;
        r.rhs = field.mu() / pi * std::sqrt(absD) * (2 + logD);
        r.pass = r.lhs <= r.rhs + kBudget;
        out.push_back(r);
    } else {
        FieldInequality r;
        r.name = "class_number_regulator_real";  // h log eta <= 1/pi sqrt D (2 + log D)
        r.lhs = h * log_eta;
        r.rhs = 1.0 / pi * std::sqrt(absD) * (2 + logD);
        r.pass = r.lhs <= r.rhs + kBudget;
        out.push_back(r);
    }
    FieldInequality u;
    u.name = "class_number_uniform";  // h <= 3 sqrt|D| log|D|
    u.lhs = h;
    u.rhs = 3 * std::sqrt(absD) * logD;
    u.pass = u.lhs <= u.rhs + kBudget;
    out.push_back(u);
    FieldInequality e;
    e.name = "unit_log_bound";  // log eta <= sqrt|D| log|D|
    e.lhs = log_eta;
    e.rhs = std::sqrt(absD) * logD;
    e.pass = e.lhs <= e.rhs + kBudget;
    out.push_back(e);
    return out;
}

std::optional<QuadElement> sqrt_in_field(const QuadElement& x) {
    const QuadraticField& K = x.field();
    if (x.is_zero()) return K.element(0, 0, 1);
    const Integer& m = K.radicand();
    const Integer& a = x.a();
    const Integer& b = x.b();
    const Integer& q = x.q();
    // Ansatz w = (u + v sqrt m)/(2q): w^2 = x forces u^2 + m v^2 = 4qa and
    // uv = 2qb, so u^2 and m v^2 are the roots 2q(a +- s) of a quadratic
    // whose discriminant is 16 q^4 N(x); N(x) must be a rational square.
    Integer n2 = a * a - m * b * b;  // q^2 N(x)
    if (n2 < 0 || !is_perfect_square(n2)) return std::nullopt;
    Integer s = isqrt(n2);
    for (int sign : {1, -1}) {
        Integer T = 2 * q * (a + sign * s);  // candidate u^2
        if (T < 0 || !is_perfect_square(T)) continue;
        Integer u = isqrt(T);
        if (u == 0) {
            if (b != 0) continue;
            // Pure sqrt(m) root: (v sqrt m / 2q)^2 = a/q.
            Integer num = 4 * q * a;
            if (num % m != 0) continue;
            Integer v2 = num / m;
            if (v2 < 0 || !is_perfect_square(v2)) continue;
            QuadElement w(K, 0, isqrt(v2), 2 * q);
            if (w * w == x) return w;
            continue;
        }
        Integer vnum = 2 * q * b;
        if (vnum % u != 0) continue;
        QuadElement w(K, u, vnum / u, 2 * q);
        if (w * w == x) return w;
    }
    return std::nullopt;
}

QuadElement eval_poly(const std::vector<Integer>& coeffs, const QuadElement& x) {
    const QuadraticField& K = x.field();
    QuadElement r = K.element(coeffs.back(), 0, 1);
    for (std::size_t i = coeffs.size() - 1; i-- > 0;)
        r = r * x + K.element(coeffs[i], 0, 1);
    return r;
}

}  // namespace primdiv
