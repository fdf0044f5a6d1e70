#include "primdiv/factor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace primdiv {

std::string FactorEffort::describe() const {
    std::ostringstream os;
    os << "trial_bound=" << trial_bound << ",rho_iters=" << rho_iterations
       << ",rho_retries=" << rho_retries << ",seed=" << seed;
    return os.str();
}

Integer Factorization::reassemble() const {
    Integer r = unfactored_cofactor;
    for (const auto& e : entries) r *= pow_ui(e.prime, e.exponent);
    return r;
}

unsigned Factorization::exponent_of(const Integer& p) const {
    for (const auto& e : entries)
        if (e.prime == p) return e.exponent;
    return 0;
}

namespace {

// Brent's cycle variant of Pollard rho with batched gcds. Returns a
// nontrivial factor or 0 on budget exhaustion. Deterministic in (n, c, x0).
Integer pollard_brent(const Integer& n, const Integer& c, const Integer& x0,
                      std::uint64_t max_iters) {
    Integer y = x0, ys, q = 1, g = 1, x;
    std::uint64_t r = 1, iters = 0;
    const std::uint64_t batch = 128;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Integer d = x - y;
                if (d < 0) d += n;
                q = (q * d) % n;
            }
            g = gcd(q, n);
            k += lim;
            iters += lim;
            if (iters > max_iters) return 0;
        }
        r <<= 1;
    }
    if (g == n) {
        // Backtrack one step at a time.
        do {
            ys = (ys * ys + c) % n;
            Integer d = x - ys;
            if (d < 0) d += n;
            g = gcd(d, n);
        } while (g == 1);
    }
    if (g == n) return 0;
    return g;
}

// Primes up to the p-1 stage bounds, built once.
const std::vector<std::uint32_t>& stage_primes(std::uint32_t limit) {
    static std::vector<std::uint32_t> primes;
    static std::uint32_t built = 0;
    if (built >= limit) return primes;
    std::vector<bool> comp(limit + 1, false);
    primes.clear();
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
            comp[static_cast<std::size_t>(j)] = true;
    }
    built = limit;
    return primes;
}

constexpr std::uint32_t kP1Stage1 = 1'000'000;
constexpr std::uint32_t kP1Stage2 = 50'000'000;

// Primes in (B1, B2] as the first prime plus half-gaps (gaps below 5e7 stay
// under 256). Built once, ~3 MB.
struct Stage2Gaps {
    std::uint64_t first = 0;
    std::vector<std::uint8_t> half_gaps;
};

const Stage2Gaps& stage2_prime_gaps() {
    static const Stage2Gaps gaps = [] {
        Stage2Gaps out;
        std::vector<std::uint8_t> comp((kP1Stage2 - kP1Stage1) / 2 + 1, 0);
        std::uint64_t lo = kP1Stage1 + 1;  // odd
        auto idx = [&](std::uint64_t v) { return (v - lo) / 2; };
        for (std::uint32_t q : stage_primes(7072)) {
            if (q == 2) continue;
            std::uint64_t start = ((lo + q - 1) / q) * q;
            if (start < static_cast<std::uint64_t>(q) * q)
                start = static_cast<std::uint64_t>(q) * q;
            if (start % 2 == 0) start += q;
            for (std::uint64_t j = start; j <= kP1Stage2; j += 2 * q) comp[idx(j)] = 1;
        }
        std::uint64_t prev = 0;
        for (std::uint64_t v = lo; v <= kP1Stage2; v += 2) {
            if (comp[idx(v)]) continue;
            if (prev == 0) {
                out.first = v;
            } else {
                out.half_gaps.push_back(static_cast<std::uint8_t>((v - prev) / 2));
            }
            prev = v;
        }
        return out;
    }();
    return gaps;
}

// Pollard p-1 with a one-large-prime second stage; returns a nontrivial
// factor or 0. Deterministic in (n, base).
Integer pollard_pm1(const Integer& n, unsigned long base) {
    const auto& primes = stage_primes(kP1Stage1);
    Integer a(base);
    // Stage 1: a <- a^(prod q^{floor(log_q B1)}) mod n, with periodic checks.
    std::size_t i = 0;
    Integer g = 1;
    while (i < primes.size()) {
        std::size_t block_end = std::min(i + 4096, primes.size());
        for (; i < block_end; ++i) {
            std::uint64_t q = primes[i];
            std::uint64_t qe = q;
            while (qe <= kP1Stage1 / q) qe *= q;
            a = powmod(a, Integer(static_cast<unsigned long>(qe)), n);
        }
        g = gcd(a - 1, n);
        if (g == n) return 0;  // too many factors collected at once
        if (g > 1) return g;
    }
    // Stage 2: one prime factor in (B1, B2]. Walk the cached prime gaps with
    // a table of a^(even gap).
    const auto& gaps = stage2_prime_gaps();
    std::vector<Integer> gap_pow(128);
    Integer a2 = (a * a) % n;
    gap_pow[1] = a2;  // a^2
    for (std::size_t k = 2; k < gap_pow.size(); ++k) gap_pow[k] = (gap_pow[k - 1] * a2) % n;
    Integer b = powmod(a, Integer(static_cast<unsigned long>(gaps.first)), n);
    Integer acc = 1;
    int since_gcd = 0;
    Integer d0 = b - 1;
    if (d0 < 0) d0 += n;
    acc = d0 % n;
    for (std::uint8_t half_gap : gaps.half_gaps) {
        if (half_gap < gap_pow.size()) {
            b = (b * gap_pow[half_gap]) % n;
        } else {
            Integer big;
            mpz_pow_ui(big.get_mpz_t(), a2.get_mpz_t(), half_gap);
            b = (b * (big % n)) % n;
        }
        Integer d = b - 1;
        if (d < 0) d += n;
        acc = (acc * d) % n;
        if (++since_gcd >= 8192) {
            since_gcd = 0;
            g = gcd(acc, n);
            if (g == n) return 0;
            if (g > 1) return g;
        }
    }
    g = gcd(acc, n);
    if (g > 1 && g < n) return g;
    return 0;
}

// Splits n (composite, no factor below trial bound) as far as the budget
// allows; pieces failing the budget accumulate into `leftover`.
void split_recursive(const Integer& n, const FactorEffort& eff,
                     std::map<Integer, unsigned>& primes, Integer& leftover,
                     std::map<Integer, bool>& certified) {
    Primality cls = classify_prime(n);
    if (cls != Primality::Composite) {
        primes[n] += 1;
        certified[n] = (cls == Primality::Prime);
        return;
    }
    if (is_perfect_square(n)) {
        Integer r = isqrt(n);
        split_recursive(r, eff, primes, leftover, certified);
        split_recursive(r, eff, primes, leftover, certified);
        return;
    }
    SplitMix64 rng(eff.seed ^ 0x6a09e667f3bcc908ULL);
    for (int attempt = 0; attempt < eff.rho_retries; ++attempt) {
        Integer c = Integer(static_cast<unsigned long>(rng.below(1u << 20)) + 1);
        Integer x0 = Integer(static_cast<unsigned long>(rng.below(1u << 20)) + 2);
        Integer g = pollard_brent(n, c, x0, eff.rho_iterations);
        if (g > 1 && g < n) {
            split_recursive(g, eff, primes, leftover, certified);
            split_recursive(n / g, eff, primes, leftover, certified);
            return;
        }
        if (attempt == 0 && eff.rho_iterations >= 100'000) {
            // p-1 rescue between rho attempts (skipped under starvation
            // budgets); cyclotomic-value factors (p = 1 mod n) are often
            // highly p-1 smooth.
            for (unsigned long base : {2ul, 3ul}) {
                g = pollard_pm1(n, base);
                if (g > 1 && g < n) {
                    split_recursive(g, eff, primes, leftover, certified);
                    split_recursive(n / g, eff, primes, leftover, certified);
                    return;
                }
            }
        }
    }
    leftover *= n;
}

}  // namespace

Factorization factor(const Integer& n, const FactorEffort& effort) {
    if (n < 1) throw std::invalid_argument("factor: argument must be >= 1");
    Factorization out;
    if (n == 1) return out;

    std::map<Integer, unsigned> primes;
    std::map<Integer, bool> certified;
    Integer rest = n;

    // Trial division by 2, 3 and a 2,3-wheel up to the bound.
    for (unsigned long p : {2ul, 3ul}) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes[Integer(p)] += 1;
            certified[Integer(p)] = true;
            rest /= p;
        }
    }
    unsigned long d = 5, step = 2;
    while (d <= effort.trial_bound && rest > 1) {
        if (Integer(d) * d > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            primes[Integer(d)] += 1;
            certified[Integer(d)] = true;
            rest /= d;
        }
        d += step;
        step = 6 - step;
    }
    if (rest > 1) {
        if (Integer(effort.trial_bound) >= isqrt(rest)) {
            // Every candidate divisor up to sqrt(rest) was tried.
            primes[rest] += 1;
            certified[rest] = (classify_prime(rest) == Primality::Prime);
        } else {
            Integer leftover = 1;
            split_recursive(rest, effort, primes, leftover, certified);
            out.unfactored_cofactor = leftover;
        }
    }

    for (const auto& [p, e] : primes)
        out.entries.push_back(FactorEntry{p, e, certified[p]});
    return out;
}

}  // namespace primdiv
