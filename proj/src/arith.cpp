#include "primdiv/arith.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace primdiv {

ArithProfile arith_profile(const Integer& n, const FactorEffort& effort) {
    if (n < 1) throw std::invalid_argument("arith_profile: n must be >= 1");
    ArithProfile out;
    out.phi = 1;
    if (n == 1) return out;
    Factorization f = factor(n, effort);
    if (!f.complete())
        throw std::runtime_error("arith_profile: factoring budget exhausted for n = " + n.get_str());
    for (const auto& e : f.entries) {
        out.phi *= pow_ui(e.prime, e.exponent - 1) * (e.prime - 1);
        out.omega += 1;
        if (e.exponent > 1) out.mobius = 0;
    }
    if (out.mobius != 0) out.mobius = (out.omega % 2 == 0) ? 1 : -1;
    return out;
}

PrimeSieve::PrimeSieve(std::uint64_t limit, std::uint64_t cap) : limit_(limit) {
    if (limit > cap) {
        std::ostringstream os;
        os << "sieve limit " << limit << " exceeds configured cap " << cap
           << " (raise the cap to enumerate this range)";
        throw SieveBudgetError(os.str());
    }
    if (limit >= 2) primes_.push_back(2);
    if (limit >= 3) {
        composite_.assign((limit - 1) / 2, 0);
        for (std::uint64_t i = 0; i < composite_.size(); ++i) {
            if (composite_[i]) continue;
            std::uint64_t p = 2 * i + 3;
            primes_.push_back(p);
            if (p * p > limit) continue;
            for (std::uint64_t j = (p * p - 3) / 2; j < composite_.size(); j += p)
                composite_[j] = 1;
        }
    }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
    if (n > limit_) throw std::out_of_range("PrimeSieve::is_prime beyond limit");
    if (n < 2) return false;
    if (n == 2) return true;
    if (n % 2 == 0) return false;
    return composite_[(n - 3) / 2] == 0;
}

std::uint64_t PrimeSieve::prime_count(std::uint64_t x) const {
    if (x > limit_) throw std::out_of_range("PrimeSieve::prime_count beyond limit");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<std::uint64_t>(it - primes_.begin());
}

std::uint64_t PrimeSieve::prime_count_mod(std::uint64_t x, std::uint64_t m,
                                          std::uint64_t a) const {
    if (x > limit_) throw std::out_of_range("PrimeSieve::prime_count_mod beyond limit");
    std::uint64_t count = 0;
    for (std::uint64_t p : primes_) {
        if (p > x) break;
        if (p % m == a % m) ++count;
    }
    return count;
}

std::uint64_t prime_count(std::uint64_t x) {
    if (x < 2) throw std::invalid_argument("prime_count: x must be >= 2");
    return PrimeSieve(x).prime_count(x);
}

std::uint64_t prime_count_mod(std::uint64_t x, std::uint64_t m, std::uint64_t a) {
    if (x < 2) throw std::invalid_argument("prime_count_mod: x must be >= 2");
    return PrimeSieve(x).prime_count_mod(x, m, a);
}

namespace {

// Distinct-prime-divisor counts for all n <= limit via a smallest-factor sieve.
std::vector<std::uint8_t> omega_table(std::uint64_t limit) {
    std::vector<std::uint8_t> w(limit + 1, 0);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (w[p] != 0) continue;  // p composite already touched
        for (std::uint64_t j = p; j <= limit; j += p) w[j] += 1;
    }
    return w;
}

std::vector<std::uint32_t> phi_table(std::uint64_t limit) {
    std::vector<std::uint32_t> phi(limit + 1);
    for (std::uint64_t i = 0; i <= limit; ++i) phi[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (phi[p] != p) continue;  // composite
        for (std::uint64_t j = p; j <= limit; j += p) phi[j] -= phi[j] / p;
    }
    return phi;
}

}  // namespace

EstimateReport estimate_check(EstimateKind kind, std::uint64_t lo, std::uint64_t hi,
                              std::uint64_t sieve_cap) {
    if (hi < lo) throw std::invalid_argument("estimate_check: empty range");
    EstimateReport rep;
    rep.kind = kind;
    const double kBudget = 1e-9;
    auto record = [&](EstimateRow row, bool keep) {
        ++rep.checked;
        if (!row.pass) {
            ++rep.failures_total;
            if (row.in_claimed_range) {
                ++rep.failures_in_claimed_range;
                if (!rep.first_failure) rep.first_failure = row.argument;
            }
        }
        if ((!row.pass || keep) && rep.rows.size() < EstimateReport::kMaxStoredRows)
            rep.rows.push_back(row);
    };

    switch (kind) {
        case EstimateKind::OmegaBound: {
            if (lo < 3) lo = 3;
            if (hi > sieve_cap)
                throw SieveBudgetError("estimate_check(omega): range exceeds sieve cap");
            auto w = omega_table(hi);
            for (std::uint64_t n = lo; n <= hi; ++n) {
                EstimateRow row;
                row.argument = n;
                row.lhs = w[n];
                double ln = std::log(static_cast<double>(n));
                row.rhs = 1.4 * ln / std::log(ln);
                row.pass = row.lhs <= row.rhs + kBudget;
                record(row, n == lo || n == hi);
            }
            break;
        }
        case EstimateKind::PhiBound: {
            if (lo < 3) lo = 3;
            if (hi > sieve_cap)
                throw SieveBudgetError("estimate_check(phi): range exceeds sieve cap");
            auto phi = phi_table(hi);
            for (std::uint64_t n = lo; n <= hi; ++n) {
                EstimateRow row;
                row.argument = n;
                row.lhs = phi[n];
                double ln = std::log(static_cast<double>(n));
                row.rhs = 0.5 * static_cast<double>(n) / std::log(ln);
                row.pass = row.lhs >= row.rhs - kBudget;
                row.in_claimed_range = false;  // claim starts at 1e20, never enumerable
                record(row, n == lo || n == hi);
            }
            break;
        }
        case EstimateKind::PiBounds: {
            if (lo < 3) lo = 3;
            PrimeSieve sieve(hi, sieve_cap);
            std::uint64_t count = sieve.prime_count(lo > 0 ? lo - 1 : 0);
            for (std::uint64_t x = lo; x <= hi; ++x) {
                if (sieve.is_prime(x)) ++count;
                EstimateRow row;
                row.argument = x;
                row.lhs = static_cast<double>(count);
                double lx = std::log(static_cast<double>(x));
                row.rhs = static_cast<double>(x) / lx;
                row.rhs_upper = 1.3 * static_cast<double>(x) / lx;
                row.lower_pass = row.lhs >= row.rhs - kBudget;
                row.upper_pass = row.lhs <= row.rhs_upper + kBudget;
                row.pass = row.lower_pass && row.upper_pass;
                // The x >= 3 range usually quoted for the lower bound
                // actually fails on 3..16; it holds from 17 on.
                row.in_claimed_range = true;
                record(row, x == lo || x == hi);
            }
            break;
        }
    }
    return rep;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d != n / d) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace primdiv
