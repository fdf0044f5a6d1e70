#pragma once

#include <cstddef>
#include <vector>

#include "primdiv/ideals.hpp"
#include "primdiv/quadfield.hpp"

namespace primdiv {

/// Norm-1 element alpha/alpha^sigma built from a generator alpha of p*a,
/// with a a small integral ideal in the inverse class of the canonical prime
/// above the source prime.
struct ThetaElement {
    QuadElement value;
    Integer source_prime;
    PrimeIdeal chosen_ideal;
    IdealRep auxiliary_ideal;
    QuadElement generator;
    long unit_exponent = 0;
};

/// Requires p in S(K) (split, p > |D|^{1/2} strictly).
ThetaElement theta(const QuadraticField& field, const Integer& p);

struct SupportEntry {
    PrimeIdeal ideal;
    long value = 0;
    bool in_split_large_set = false;
};

struct ThetaVerification {
    bool norm_is_one = false;
    double height = 0;
    double height_center = 0;  // (1/2) log p
    double window = 0;         // (1/4) log|D| + (1/2) log eta
    bool item1_pass = false;
    double item2_bound = 0;          // 0.51 log p
    double item2_threshold_log = 0;  // log p0 = 100 |D|^{1/2} log|D|
    bool item2_in_range = false;     // p >= p0, unreachable at desk scale
    bool item2_holds = false;        // evaluated regardless, asserted only in range
    std::vector<SupportEntry> support;  // nonzero valuations at primes of norm <= bound
    bool sk_support_pass = false;  // S(K)-support is exactly the pair above p, values +-1
};

ThetaVerification verify_theta(const ThetaElement& t, std::uint64_t support_norm_bound = 10'000);

struct ThetaBatch {
    const QuadraticField* field = nullptr;
    std::vector<ThetaElement> thetas;  // strictly increasing source primes
};

ThetaBatch theta_batch(const QuadraticField& field, int count);
ThetaBatch theta_batch_for_primes(const QuadraticField& field, const std::vector<Integer>& primes);

/// Rank over Q of the valuation matrix at all ideals above the source primes.
int independence_rank(const ThetaBatch& batch);

/// Rank of arbitrary elements' valuation vectors (used by synthetic tests).
int valuation_rank(const QuadraticField& field, const std::vector<QuadElement>& elements);

struct SquareClassReport {
    bool independent = false;
    std::vector<std::size_t> witness;  // indices whose product is a square (if dependent)
    QuadElement witness_root;          // sqrt of the witness product
};

/// Independence of the images in K^x/(K^x)^2, decided by mod-2 valuation and
/// real-embedding-sign vectors, with candidate kernel products settled by
/// exact square testing.
SquareClassReport square_class_independent(const QuadraticField& field,
                                           const std::vector<QuadElement>& elements);

struct RootExponentResult {
    long exponent = 1;
    QuadElement root;
};

/// Largest r with theta^r = gamma solvable in K; gamma of norm +-1, not a
/// root of unity. The search is capped by h(gamma) over the degree-2 height
/// floor.
RootExponentResult max_root_exponent(const QuadraticField& field, const QuadElement& gamma);

}  // namespace primdiv
