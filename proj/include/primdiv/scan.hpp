#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primdiv/factor.hpp"
#include "primdiv/quadfield.hpp"

namespace primdiv {

struct ScanConfig {
    FactorEffort effort;
    std::uint64_t seed = 1;
};

struct IdealValue {
    std::string ideal;  // printable identity
    long nu = 0;
    bool primitive = false;
    Integer norm_mod_n;
};

struct PrimeRecord {
    Integer p;
    std::string kind;  // rational | split | inert | ramified
    std::vector<IdealValue> ideals;
    Integer p_mod_n;
    bool any_primitive = false;
    bool item1_pass = true;  // N(p) = 1 mod n at primitive ideals
    bool item2_applicable = false;
    bool item2_pass = true;  // p = +-1 mod n (quadratic, norm +1 gamma)
    bool item3_applicable = false;
    bool item3_pass = true;  // nu <= nu_ideal(n) at non-primitive ideals
};

struct ScanRow {
    std::uint64_t n = 0;
    Integer cyclotomic_integer;  // homogenized value (rational) or norm numerator (quadratic)
    bool fully_factored = true;
    Integer unfactored_cofactor = 1;
    /// Every cofactor prime exceeds the trial bound; when that bound is at
    /// least n such a prime cannot divide n, which forces it to be a
    /// primitive divisor (with p > trial bound as a certified lower bound).
    bool cofactor_certifies_primitive = false;
    std::vector<PrimeRecord> primes;
    std::optional<Integer> largest_prime;
    bool largest_is_lower_bound = false;
    double sigma_p = 0;   // (1/d) sum over primitive ideals of nu log N(p)
    double sigma_np = 0;  // same over non-primitive
    double threshold = 0;
    bool checks_pass = true;
};

struct ScanReport {
    std::string kind;  // scan-rational | scan-quad
    std::string gamma;
    Integer field_m = 0;
    std::uint64_t n_min = 0, n_max = 0;
    std::uint64_t seed = 1;
    std::string effort_desc;
    std::string config_digest;
    std::vector<ScanRow> rows;
};

/// Per n: factors the homogenized cyclotomic value, classifies each prime as
/// primitive/non-primitive by residue order, checks the congruence and
/// non-primitive-exponent properties, and accumulates the primitive split of
/// the finite height sum.
ScanReport scan_rational(const Rational& gamma, std::uint64_t n_min, std::uint64_t n_max,
                         const ScanConfig& config = {});

ScanReport scan_quadratic(const QuadraticField& field, const QuadElement& gamma,
                          std::uint64_t n_min, std::uint64_t n_max,
                          const ScanConfig& config = {});

std::string report_to_json(const ScanReport& report);
std::string report_to_csv(const ScanReport& report);

}  // namespace primdiv
