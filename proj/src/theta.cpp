#include "primdiv/theta.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "primdiv/arith.hpp"
#include "primdiv/height.hpp"
#include "primdiv/valuation.hpp"

namespace primdiv {

ThetaElement theta(const QuadraticField& field, const Integer& p) {
    if (!in_split_large_set(field, p))
        throw std::invalid_argument("theta: p not in S(K) (needs split and p > |D|^(1/2))");
    ThetaElement t;
    t.source_prime = p;
    t.chosen_ideal = primes_above(field, p).front();
    t.auxiliary_ideal = ideal_in_inverse_class(t.chosen_ideal);
    IdealRep composite = ideal_mul(ideal_of_prime(t.chosen_ideal), t.auxiliary_ideal);
    PrincipalSearch s = principal_generator(field, composite);
    if (!s.generator.has_value()) {
        if (s.budget_exceeded)
            throw std::runtime_error("theta: generator search budget exhausted");
        throw std::logic_error("theta: composite ideal not principal");
    }
    t.generator = *s.generator;
    t.unit_exponent = s.unit_exponent;
    t.value = t.generator / t.generator.conjugate();
    if (t.value.norm() != 1) throw std::logic_error("theta: norm not 1");
    long v = nu_ideal(t.value, t.chosen_ideal).value;
    if (v != 1 && v != -1) throw std::logic_error("theta: valuation at chosen ideal not +-1");
    return t;
}

ThetaVerification verify_theta(const ThetaElement& t, std::uint64_t support_norm_bound) {
    const QuadraticField& K = t.value.field();
    ThetaVerification rep;
    rep.norm_is_one = (t.value.norm() == 1);
    rep.height = height_quad(t.value).value;
    rep.height_center = 0.5 * log_abs(t.source_prime);
    Integer absD = abs(K.discriminant());
    double logD = log_abs(absD);
    rep.window = 0.25 * logD + 0.5 * K.log_eta();
    rep.item1_pass = rep.norm_is_one &&
                     std::abs(rep.height - rep.height_center) <= rep.window + 1e-9;
    rep.item2_bound = 0.51 * log_abs(t.source_prime);
    rep.item2_threshold_log = 100.0 * std::sqrt(std::abs(K.discriminant().get_d())) * logD;
    rep.item2_in_range = log_abs(t.source_prime) >= rep.item2_threshold_log;
    rep.item2_holds = rep.height <= rep.item2_bound + 1e-9;

    bool saw_plus = false, saw_minus = false;
    bool stray_sk = false;
    auto scan_list = prime_ideals_up_to_norm(K, support_norm_bound);
    if (t.source_prime > Integer(static_cast<unsigned long>(support_norm_bound))) {
        scan_list.push_back(t.chosen_ideal);
        scan_list.push_back(t.chosen_ideal.conjugate());
    }
    for (const auto& P : scan_list) {
        long v = nu_ideal(t.value, P).value;
        if (v == 0) continue;
        SupportEntry e;
        e.ideal = P;
        e.value = v;
        e.in_split_large_set = in_split_large_set(K, P.p);
        rep.support.push_back(e);
        if (e.in_split_large_set) {
            if (P.p == t.source_prime) {
                if (v == 1) saw_plus = true;
                if (v == -1) saw_minus = true;
                if (v != 1 && v != -1) stray_sk = true;
            } else {
                stray_sk = true;
            }
        }
    }
    rep.sk_support_pass = saw_plus && saw_minus && !stray_sk;
    return rep;
}

ThetaBatch theta_batch_for_primes(const QuadraticField& field,
                                  const std::vector<Integer>& primes) {
    ThetaBatch b;
    b.field = &field;
    for (const Integer& p : primes) b.thetas.push_back(theta(field, p));
    std::sort(b.thetas.begin(), b.thetas.end(),
              [](const ThetaElement& x, const ThetaElement& y) {
                  return x.source_prime < y.source_prime;
              });
    for (std::size_t i = 1; i < b.thetas.size(); ++i)
        if (b.thetas[i].source_prime == b.thetas[i - 1].source_prime)
            throw std::invalid_argument("theta_batch: duplicate source primes");
    return b;
}

ThetaBatch theta_batch(const QuadraticField& field, int count) {
    return theta_batch_for_primes(field, first_split_large_primes(field, count));
}

namespace {

// Exact rank of an integer matrix via fraction-free elimination.
int integer_matrix_rank(std::vector<std::vector<Integer>> m) {
    int rank = 0;
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < rows; ++c) {
        std::size_t pivot = rr;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rr], m[pivot]);
        for (std::size_t r = rr + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Integer f1 = m[rr][c], f2 = m[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[r][cc] = m[r][cc] * f1 - m[rr][cc] * f2;
        }
        ++rr;
        ++rank;
    }
    return rank;
}

// Support primes of an element: primes dividing the numerator norm or the
// denominator.
std::vector<Integer> support_primes(const QuadElement& x) {
    Integer nn = abs(x.a() * x.a() - x.field().radicand() * x.b() * x.b());
    std::vector<Integer> out;
    for (const Integer& n : {nn, x.q()}) {
        if (n <= 1) continue;
        Factorization f = factor(n);
        if (!f.complete())
            throw std::runtime_error("square_class/valuation support: factoring budget");
        for (const auto& e : f.entries) out.push_back(e.prime);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<Integer>> valuation_matrix(const QuadraticField& field,
                                                   const std::vector<QuadElement>& elements,
                                                   std::vector<PrimeIdeal>* columns_out) {
    // Columns: all ideals above the union of support primes.
    std::vector<Integer> primes;
    for (const auto& x : elements) {
        auto s = support_primes(x);
        primes.insert(primes.end(), s.begin(), s.end());
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<PrimeIdeal> columns;
    for (const Integer& p : primes)
        for (const auto& P : primes_above(field, p)) columns.push_back(P);
    std::vector<std::vector<Integer>> m;
    for (const auto& x : elements) {
        std::vector<Integer> row;
        row.reserve(columns.size());
        for (const auto& P : columns) row.push_back(nu_ideal(x, P).value);
        m.push_back(std::move(row));
    }
    if (columns_out) *columns_out = std::move(columns);
    return m;
}

}  // namespace

int valuation_rank(const QuadraticField& field, const std::vector<QuadElement>& elements) {
    return integer_matrix_rank(valuation_matrix(field, elements, nullptr));
}

int independence_rank(const ThetaBatch& batch) {
    if (batch.thetas.empty()) throw std::invalid_argument("independence_rank: empty batch");
    std::vector<QuadElement> vals;
    for (const auto& t : batch.thetas) vals.push_back(t.value);
    return valuation_rank(*batch.field, vals);
}

SquareClassReport square_class_independent(const QuadraticField& field,
                                           const std::vector<QuadElement>& elements) {
    if (elements.empty()) throw std::invalid_argument("square_class_independent: no elements");
    for (const auto& x : elements)
        if (x.is_zero()) throw std::invalid_argument("square_class_independent: zero element");

    auto m = valuation_matrix(field, elements, nullptr);
    std::size_t vcols = m.empty() ? 0 : m[0].size();
    // Sign coordinates at the real embeddings (none for imaginary fields).
    bool real = field.is_real();
    std::size_t cols = vcols + (real ? 2 : 0);
    auto sign_bit = [&](const QuadElement& x, bool conj) {
        // sign of a +- b sqrt(m): decided by comparing a^2 with m b^2.
        Integer a = x.a(), b = conj ? -x.b() : x.b();
        Integer cmp = a * a - field.radicand() * b * b;
        int s;
        if (cmp > 0)
            s = (a > 0) ? 1 : -1;
        else
            s = (b > 0) ? 1 : -1;
        return s < 0 ? 1u : 0u;
    };
    std::vector<std::vector<unsigned>> f2(elements.size(), std::vector<unsigned>(cols, 0));
    for (std::size_t r = 0; r < elements.size(); ++r) {
        for (std::size_t c = 0; c < vcols; ++c)
            f2[r][c] = mpz_odd_p(m[r][c].get_mpz_t()) ? 1u : 0u;
        if (real) {
            f2[r][vcols] = sign_bit(elements[r], false);
            f2[r][vcols + 1] = sign_bit(elements[r], true);
        }
    }
    // Gaussian elimination over F2, tracking row combinations.
    std::size_t nrows = elements.size();
    std::vector<std::vector<unsigned>> combo(nrows, std::vector<unsigned>(nrows, 0));
    for (std::size_t r = 0; r < nrows; ++r) combo[r][r] = 1;
    std::size_t rr = 0;
    for (std::size_t c = 0; c < cols && rr < nrows; ++c) {
        std::size_t pivot = rr;
        while (pivot < nrows && f2[pivot][c] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(f2[rr], f2[pivot]);
        std::swap(combo[rr], combo[pivot]);
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rr || f2[r][c] == 0) continue;
            for (std::size_t cc = 0; cc < cols; ++cc) f2[r][cc] ^= f2[rr][cc];
            for (std::size_t cc = 0; cc < nrows; ++cc) combo[r][cc] ^= combo[rr][cc];
        }
        ++rr;
    }
    // Kernel rows: zero vectors after elimination.
    std::vector<std::vector<unsigned>> kernel;
    for (std::size_t r = 0; r < nrows; ++r) {
        bool zero = std::all_of(f2[r].begin(), f2[r].end(), [](unsigned v) { return v == 0; });
        if (zero) kernel.push_back(combo[r]);
    }
    SquareClassReport rep;
    if (kernel.empty()) {
        rep.independent = true;
        return rep;
    }
    if (kernel.size() > 12)
        throw std::runtime_error("square_class_independent: kernel too large to enumerate");
    // Enumerate nonzero kernel combinations; exact square testing settles the
    // unit part (fundamental-unit parity and torsion) that the valuation and
    // sign coordinates cannot see.
    for (std::uint64_t mask = 1; mask < (1ull << kernel.size()); ++mask) {
        std::vector<unsigned> subset(nrows, 0);
        for (std::size_t i = 0; i < kernel.size(); ++i)
            if (mask & (1ull << i))
                for (std::size_t j = 0; j < nrows; ++j) subset[j] ^= kernel[i][j];
        QuadElement prod = field.element(1, 0, 1);
        bool any = false;
        for (std::size_t j = 0; j < nrows; ++j)
            if (subset[j]) {
                prod = prod * elements[j];
                any = true;
            }
        if (!any) continue;
        auto root = sqrt_in_field(prod);
        if (root.has_value()) {
            rep.independent = false;
            for (std::size_t j = 0; j < nrows; ++j)
                if (subset[j]) rep.witness.push_back(j);
            rep.witness_root = *root;
            return rep;
        }
    }
    rep.independent = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Root exponent

namespace {

// gamma = sign * eta^k decomposition for a real-field unit; throws if gamma
// is not a unit times power.
std::pair<int, long> unit_decompose(const QuadraticField& field, const QuadElement& u) {
    const QuadElement& eta = *field.fundamental_unit();
    double k_est = u.log_abs_embedding() / field.log_eta();
    long k = std::lround(k_est);
    for (long cand : {k, k - 1, k + 1}) {
        QuadElement pw = eta.pow(cand);
        if (pw == u) return {1, cand};
        if (-pw == u) return {-1, cand};
    }
    throw std::logic_error("unit_decompose: element is not +-eta^k");
}

}  // namespace

RootExponentResult max_root_exponent(const QuadraticField& field, const QuadElement& gamma) {
    if (gamma.is_zero()) throw std::invalid_argument("max_root_exponent: zero gamma");
    if (gamma.is_root_of_unity())
        throw std::invalid_argument("max_root_exponent: gamma is a root of unity");
    Rational n = gamma.norm();
    if (n != 1 && n != -1)
        throw std::invalid_argument("max_root_exponent: gamma must have norm +-1");

    const double kGoldenFloor = 0.24060591252980172;
    double h = height_quad(gamma).value;
    long cap = static_cast<long>(std::floor(h / kGoldenFloor + 1e-9));
    if (cap < 1) cap = 1;

    // Valuation data: for norm +-1 the support primes divide the denominator
    // (|norm of numerator| = q^2).
    std::vector<PrimeIdeal> columns;
    std::vector<std::vector<Integer>> m =
        valuation_matrix(field, {gamma}, &columns);
    Integer g = 0;
    for (const auto& v : m[0]) g = gcd(g, v);

    auto unit_root_adjust = [&](const QuadElement& theta0, long r) -> std::optional<QuadElement> {
        // Solve (theta0 * w)^r = gamma with w a unit.
        QuadElement u = gamma / theta0.pow(r);
        if (field.is_real()) {
            auto [sgn, k] = unit_decompose(field, u);
            if (k % r != 0) return std::nullopt;
            QuadElement base = field.fundamental_unit()->pow(k / r);
            if (sgn == 1) {
                QuadElement th = theta0 * base;
                if (th.pow(r) == gamma) return th;
                th = -(theta0 * base);
                if (th.pow(r) == gamma) return th;
                return std::nullopt;
            }
            if (r % 2 == 0) return std::nullopt;
            QuadElement th = -(theta0 * base);
            if (th.pow(r) == gamma) return th;
            return std::nullopt;
        }
        // Imaginary: u must be torsion; try all torsion roots.
        std::vector<QuadElement> torsion = {field.element(1, 0, 1), field.element(-1, 0, 1)};
        if (field.radicand() == -1) {
            torsion.push_back(field.element(0, 1, 1));
            torsion.push_back(field.element(0, -1, 1));
        } else if (field.radicand() == -3) {
            for (int s1 : {1, -1})
                for (const auto& z :
                     {field.element(1, 1, 2), field.element(1, -1, 2), field.element(-1, 1, 2)}) {
                    QuadElement zz = (s1 == 1) ? z : -z;
                    torsion.push_back(zz);
                }
        }
        for (const auto& z : torsion) {
            QuadElement th = theta0 * z;
            if (th.pow(r) == gamma) return th;
        }
        return std::nullopt;
    };

    if (g == 0) {
        // gamma is a unit (real field; imaginary units are torsion, excluded).
        auto [sgn, k] = unit_decompose(field, gamma);
        long ak = std::abs(k);
        for (long r = std::min<long>(cap, ak); r >= 1; --r) {
            if (ak % r != 0) continue;
            if (sgn == -1 && r % 2 == 0) continue;
            long kr = k / r;
            QuadElement th = field.fundamental_unit()->pow(kr);
            if (sgn == -1) th = -th;
            if (th.pow(r) == gamma) return {r, th};
        }
        return {1, gamma};
    }

    for (long r = cap; r >= 2; --r) {
        if (g % r != 0) continue;
        // Integral positive part of (gamma)^{1/r}: prod p^{e/r} over e > 0.
        IdealRep num = unit_ideal(field);
        Integer norm_acc = 1;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            long e = static_cast<long>(m[0][c].get_si());
            if (e <= 0) continue;
            IdealRep Pi = ideal_of_prime(columns[c]);
            num = ideal_mul(num, ideal_pow(Pi, static_cast<unsigned long>(e / r)));
        }
        norm_acc = num.norm();
        // theta0 generates num / sigma(num) = num^2 / N(num) when num^2 is
        // principal.
        IdealRep sq = ideal_mul(num, num);
        PrincipalSearch s = principal_generator(field, sq);
        if (s.budget_exceeded) throw std::runtime_error("max_root_exponent: search budget");
        if (!s.generator.has_value()) continue;
        QuadElement theta0 = *s.generator / field.element(norm_acc, 0, 1);
        auto th = unit_root_adjust(theta0, r);
        if (th.has_value()) return {r, *th};
    }
    return {1, gamma};
}

}  // namespace primdiv
