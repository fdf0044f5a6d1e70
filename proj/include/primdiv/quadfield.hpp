#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primdiv/integer.hpp"

namespace primdiv {

class QuadraticField;

/// Exact element (a + b*sqrt(m))/q of a fixed quadratic field, lowest terms,
/// q >= 1, gcd(a, b, q) = 1. Value type; the field outlives all elements
/// (fields are interned by make_field).
class QuadElement {
  public:
    QuadElement() = default;
    QuadElement(const QuadraticField& field, Integer a, Integer b, Integer q = 1);

    const QuadraticField& field() const { return *field_; }
    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& q() const { return q_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_integral() const;
    /// Unit of the ring of integers: integral with norm +-1.
    bool is_unit() const;
    bool is_root_of_unity() const;

    QuadElement conjugate() const;
    Rational norm() const;
    Rational trace() const;
    QuadElement inverse() const;
    QuadElement pow(long e) const;

    QuadElement operator-() const;
    QuadElement operator+(const QuadElement& o) const;
    QuadElement operator-(const QuadElement& o) const;
    QuadElement operator*(const QuadElement& o) const;
    QuadElement operator/(const QuadElement& o) const;
    bool operator==(const QuadElement& o) const;
    bool operator!=(const QuadElement& o) const { return !(*this == o); }

    /// log of |self| under the embedding sending sqrt(m) to +sqrt(m)
    /// (principal complex absolute value when m < 0). Cancellation-safe:
    /// the smaller of |x|, |x^sigma| is recovered through the exact norm.
    double log_abs_embedding() const;
    double log_abs_conjugate_embedding() const;

    std::string str() const;          // human-readable
    std::string coords() const;       // "a,b,q"

  private:
    const QuadraticField* field_ = nullptr;
    Integer a_, b_, q_ = 1;
    void reduce();
};

struct PrimeIdeal {
    enum class Kind { Split, Inert, Ramified };

    const QuadraticField* field = nullptr;
    Integer p;
    Kind kind = Kind::Inert;
    /// Split only. Odd p: the residue t, 0 <= t < p, with t^2 = D mod p;
    /// the canonical ideal of the pair carries min{t, p-t}. For p = 2
    /// (D = 1 mod 8) the pair is indistinguishable mod 2, so root holds the
    /// 2-adic square root of D modulo 4 (1 for the canonical ideal, 3 for
    /// its conjugate).
    Integer root = 0;

    Integer norm() const { return kind == Kind::Inert ? p * p : p; }
    long ramification_index() const { return kind == Kind::Ramified ? 2 : 1; }
    PrimeIdeal conjugate() const;
    bool operator==(const PrimeIdeal& o) const;
    std::string str() const;
};

/// Primitive integral ideal content * (a Z + ((b + sqrt(D))/2) Z).
/// Invariants: a > 0, 0 <= b < 2a, b^2 = D mod 4a, content >= 1;
/// norm = content^2 * a.
struct IdealRep {
    const QuadraticField* field = nullptr;
    Integer a = 1;
    Integer b = 0;
    Integer content = 1;

    Integer norm() const { return content * content * a; }
    IdealRep conjugate() const;
    bool operator==(const IdealRep& o) const {
        return a == o.a && b == o.b && content == o.content;
    }
    std::string str() const;
};

class QuadraticField {
  public:
    const Integer& radicand() const { return m_; }        // squarefree m
    const Integer& discriminant() const { return disc_; }  // m or 4m
    const Integer& class_number() const { return h_; }
    const Integer& narrow_class_number() const { return h_narrow_; }
    bool is_real() const { return m_ > 0; }
    /// None for imaginary fields (the convention eta_K = 1).
    const std::optional<QuadElement>& fundamental_unit() const { return unit_; }
    int unit_norm() const { return unit_norm_; }  // -1 or +1; +1 for imaginary
    int torsion_order() const { return torsion_; }
    int mu() const { return torsion_ / 2; }
    double log_eta() const { return log_eta_; }  // 0 for imaginary

    QuadElement element(Integer a, Integer b, Integer q = 1) const;
    QuadElement from_half_disc_coords(const Integer& u, const Integer& v) const;

  private:
    friend const QuadraticField& make_field(const Integer& m);
    QuadraticField() = default;

    Integer m_, disc_, h_, h_narrow_;
    std::optional<QuadElement> unit_;
    int unit_norm_ = 1;
    int torsion_ = 2;
    double log_eta_ = 0.0;
};

/// Interned construction; rejects non-squarefree m naming the square factor.
/// Real discriminants are supported up to |D| <= 1e6 (class data by form
/// cycles).
const QuadraticField& make_field(const Integer& m);

std::vector<PrimeIdeal> primes_above(const QuadraticField& field, const Integer& p);

/// All prime ideals of norm <= bound, canonical-first within split pairs.
std::vector<PrimeIdeal> prime_ideals_up_to_norm(const QuadraticField& field,
                                                std::uint64_t bound);

/// p in S(K): split and p > |D_K|^{1/2} (strict).
bool in_split_large_set(const QuadraticField& field, const Integer& p);
std::vector<Integer> first_split_large_primes(const QuadraticField& field, int count);

struct SplitCountReport {
    std::uint64_t count = 0;
    double density_lower_bound = 0;      // (1/2) x/log x - phi(|D|)/320 x/(log x)^2
    bool density_hypothesis_met = false;  // x >= max{1e10, e^{|D|}}
    double tail_density_lower_bound = 0;   // 0.49 x/log x
    bool tail_density_hypothesis_met = false;  // x >= exp(max{1e7, |D|})
};
SplitCountReport split_count(const QuadraticField& field, std::uint64_t x,
                             std::uint64_t sieve_cap = 100'000'000);

struct FieldInequality {
    std::string name;
    double lhs = 0, rhs = 0;
    bool pass = true;
};
/// The four class-number/unit inequalities; the signature picks which of the
/// first two applies.
std::vector<FieldInequality> field_bounds_check(const QuadraticField& field);

/// Exact square root in K, if one exists.
std::optional<QuadElement> sqrt_in_field(const QuadElement& x);

/// Horner evaluation of an integer-coefficient polynomial at x.
QuadElement eval_poly(const std::vector<Integer>& coeffs_low_to_high, const QuadElement& x);

inline QuadElement parse_quad_element(const QuadraticField& field, const std::string& coords) {
    auto p1 = coords.find(',');
    auto p2 = coords.find(',', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos)
        return QuadElement(field, Integer(coords), 0, 1);
    Integer a(coords.substr(0, p1));
    if (p2 == std::string::npos) return QuadElement(field, a, Integer(coords.substr(p1 + 1)), 1);
    Integer b(coords.substr(p1 + 1, p2 - p1 - 1));
    Integer q(coords.substr(p2 + 1));
    return QuadElement(field, a, b, q);
}

}  // namespace primdiv
