#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primdiv/factor.hpp"
#include "primdiv/integer.hpp"

namespace primdiv {

/// Thrown when a requested enumeration exceeds the configured sieve budget.
struct SieveBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArithProfile {
    Integer phi;
    int omega = 0;
    int mobius = 1;  // in {-1, 0, 1}
};

/// Euler totient, number of distinct prime divisors, Moebius value.
ArithProfile arith_profile(const Integer& n, const FactorEffort& effort = {});

/// Eratosthenes over [2, limit], odd-wheel byte sieve. Refuses limits above
/// the configured cap with a diagnostic naming the cap.
class PrimeSieve {
  public:
    explicit PrimeSieve(std::uint64_t limit, std::uint64_t cap = kDefaultCap);

    std::uint64_t limit() const { return limit_; }
    bool is_prime(std::uint64_t n) const;
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    /// pi(x) for x <= limit.
    std::uint64_t prime_count(std::uint64_t x) const;
    /// pi(x; m, a): primes p <= x with p = a mod m.
    std::uint64_t prime_count_mod(std::uint64_t x, std::uint64_t m, std::uint64_t a) const;

    static constexpr std::uint64_t kDefaultCap = 100'000'000;

  private:
    std::uint64_t limit_;
    std::vector<std::uint8_t> composite_;  // odd n >= 3 at index (n-3)/2
    std::vector<std::uint64_t> primes_;
};

std::uint64_t prime_count(std::uint64_t x);
std::uint64_t prime_count_mod(std::uint64_t x, std::uint64_t m, std::uint64_t a);

enum class EstimateKind { OmegaBound, PhiBound, PiBounds };

struct EstimateRow {
    std::uint64_t argument = 0;
    double lhs = 0;   // exact value, as double
    double rhs = 0;   // bound value (for PiBounds: the lower bound x/log x)
    double rhs_upper = 0;  // PiBounds only: 1.3 x/log x
    bool pass = true;
    bool lower_pass = true;  // PiBounds sub-verdicts
    bool upper_pass = true;
    bool in_claimed_range = true;
};

struct EstimateReport {
    EstimateKind kind;
    std::vector<EstimateRow> rows;          // failures plus endpoint samples, capped
    std::optional<std::uint64_t> first_failure;
    std::uint64_t checked = 0;
    std::uint64_t failures_total = 0;
    std::uint64_t failures_in_claimed_range = 0;
    static constexpr std::size_t kMaxStoredRows = 4096;
};

/// Checks the three arithmetical-function estimates over [lo, hi]
/// (integer arguments). omega:  omega(n) <= 1.4 log n / log log n, n >= 3.
/// phi: phi(n) >= 0.5 n / log log n, claimed only for n >= 1e20 (reported).
/// pi: x/log x <= pi(x) <= 1.3 x / log x; the lower bound's stated x >= 3
/// range fails below 17 and the report records that.
EstimateReport estimate_check(EstimateKind kind, std::uint64_t lo, std::uint64_t hi,
                              std::uint64_t sieve_cap = PrimeSieve::kDefaultCap);

/// Divisors of n in increasing order (n within unsigned range).
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace primdiv
