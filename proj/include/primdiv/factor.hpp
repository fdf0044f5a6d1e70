#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primdiv/integer.hpp"
#include "primdiv/primality.hpp"

namespace primdiv {

/// Budget descriptor for factor(). A fixed (effort, seed) pair gives a
/// fully deterministic factorization attempt.
struct FactorEffort {
    std::uint64_t trial_bound = 1'000'000;
    std::uint64_t rho_iterations = 4'000'000;
    int rho_retries = 4;
    std::uint64_t seed = 1;

    std::string describe() const;
};

struct FactorEntry {
    Integer prime;
    unsigned exponent = 0;
    bool certified = true;  // false when primality is only probable (n >= 3.3e24)
};

/// Prime factorization with an explicit leftover: entries are strictly
/// increasing certified-or-flagged primes; unfactored_cofactor is 1 or a
/// composite that exceeded the budget (never silently guessed prime).
struct Factorization {
    std::vector<FactorEntry> entries;
    Integer unfactored_cofactor = 1;

    bool complete() const { return unfactored_cofactor == 1; }
    Integer reassemble() const;
    /// Exponent of p in the factored part (0 if absent).
    unsigned exponent_of(const Integer& p) const;
};

Factorization factor(const Integer& n, const FactorEffort& effort = {});

}  // namespace primdiv
