#include "primdiv/scan.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "primdiv/arith.hpp"
#include "primdiv/bounds.hpp"
#include "primdiv/cyclotomic.hpp"
#include "primdiv/valuation.hpp"

namespace primdiv {

namespace {

std::string digest_of(const std::string& kind, const std::string& gamma, const Integer& m,
                      std::uint64_t n_min, std::uint64_t n_max, const ScanConfig& cfg) {
    std::ostringstream os;
    os << kind << "|" << gamma << "|m=" << m.get_str() << "|" << n_min << ".." << n_max << "|"
       << cfg.effort.describe() << "|seed=" << cfg.seed;
    return fnv1a_hex(os.str());
}

std::vector<Integer> prime_divisors_of_n(std::uint64_t n) {
    std::vector<Integer> out;
    Factorization f = factor(Integer(static_cast<unsigned long>(n)));
    for (const auto& e : f.entries) out.push_back(e.prime);
    return out;
}

const char* kind_name(PrimeIdeal::Kind k) {
    switch (k) {
        case PrimeIdeal::Kind::Split: return "split";
        case PrimeIdeal::Kind::Inert: return "inert";
        case PrimeIdeal::Kind::Ramified: return "ramified";
    }
    return "?";
}

}  // namespace

ScanReport scan_rational(const Rational& gamma, std::uint64_t n_min, std::uint64_t n_max,
                         const ScanConfig& config) {
    if (gamma == 0 || gamma == 1 || gamma == -1)
        throw std::invalid_argument("scan_rational: gamma must not be 0 or +-1");
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("scan_rational: bad n range");

    ScanReport rep;
    rep.kind = "scan-rational";
    rep.gamma = gamma.get_str();
    rep.n_min = n_min;
    rep.n_max = n_max;
    rep.seed = config.seed;
    rep.effort_desc = config.effort.describe();
    rep.config_digest = digest_of(rep.kind, rep.gamma, 0, n_min, n_max, config);

    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        ScanRow row;
        row.n = n;
        auto [value, homog] = cyclotomic_value(n, gamma);
        row.cyclotomic_integer = abs(homog);
        if (n >= 3)
            row.threshold = largest_prime_threshold(n, ThresholdVariant::Thm12).threshold;
        if (row.cyclotomic_integer > 1) {
            Factorization f = factor(row.cyclotomic_integer, config.effort);
            row.fully_factored = f.complete();
            row.largest_is_lower_bound = !f.complete();
            if (!f.complete()) {
                row.unfactored_cofactor = f.unfactored_cofactor;
                row.cofactor_certifies_primitive = config.effort.trial_bound >= n;
            }
            auto n_divs = prime_divisors_of_n(n);
            Integer nI(static_cast<unsigned long>(n));
            for (const auto& e : f.entries) {
                PrimeRecord pr;
                pr.p = e.prime;
                pr.kind = "rational";
                pr.p_mod_n = e.prime % nI;
                IdealValue iv;
                iv.ideal = "(" + e.prime.get_str() + ")";
                iv.nu = static_cast<long>(e.exponent);
                iv.primitive = residue_order_equals(gamma, e.prime, n, n_divs);
                iv.norm_mod_n = pr.p_mod_n;
                pr.any_primitive = iv.primitive;
                if (iv.primitive) {
                    pr.item1_pass = (pr.p_mod_n == 1 % nI) || (n == 1);
                    row.sigma_p += iv.nu * log_abs(e.prime);
                } else {
                    row.sigma_np += iv.nu * log_abs(e.prime);
                    if (n >= 4) {  // 2^{d+1} with d = 1
                        pr.item3_applicable = true;
                        long vpn = (nI % e.prime == 0) ? int_valuation(nI, e.prime) : 0;
                        pr.item3_pass = iv.nu <= vpn;
                    }
                }
                pr.ideals.push_back(iv);
                row.checks_pass = row.checks_pass && pr.item1_pass && pr.item3_pass;
                if (!row.largest_prime || e.prime > *row.largest_prime)
                    row.largest_prime = e.prime;
                row.primes.push_back(std::move(pr));
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

ScanReport scan_quadratic(const QuadraticField& field, const QuadElement& gamma,
                          std::uint64_t n_min, std::uint64_t n_max, const ScanConfig& config) {
    if (gamma.is_zero() || gamma.is_root_of_unity())
        throw std::invalid_argument("scan_quadratic: gamma must not be 0 or a root of unity");
    Rational ng = gamma.norm();
    if (ng != 1 && ng != -1)
        throw std::invalid_argument("scan_quadratic: gamma must have norm +-1");
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("scan_quadratic: bad n range");
    bool norm_plus_one = (ng == 1);

    ScanReport rep;
    rep.kind = "scan-quad";
    rep.gamma = gamma.coords();
    rep.field_m = field.radicand();
    rep.n_min = n_min;
    rep.n_max = n_max;
    rep.seed = config.seed;
    rep.effort_desc = config.effort.describe();
    rep.config_digest = digest_of(rep.kind, rep.gamma, field.radicand(), n_min, n_max, config);

    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        ScanRow row;
        row.n = n;
        QuadElement value = eval_poly(cyclotomic_coeffs(n).coefficients, gamma);
        if (value.is_zero()) throw std::logic_error("scan_quadratic: Phi_n(gamma) = 0");
        // For norm +-1 gamma every ideal with a positive valuation of the
        // value lies above a prime of the reduced norm numerator (negative
        // valuations sit exactly at the denominator primes).
        Rational norm_value = value.norm();
        Integer norm_num = abs(norm_value.get_num());
        row.cyclotomic_integer = norm_num;
        if (n >= 3)
            row.threshold =
                largest_prime_threshold(n, ThresholdVariant::Thm13, abs(field.discriminant()))
                    .threshold;
        if (norm_num > 1) {
            Factorization f = factor(norm_num, config.effort);
            row.fully_factored = f.complete();
            row.largest_is_lower_bound = !f.complete();
            if (!f.complete()) {
                row.unfactored_cofactor = f.unfactored_cofactor;
                row.cofactor_certifies_primitive = config.effort.trial_bound >= n;
            }
            auto n_divs = prime_divisors_of_n(n);
            Integer nI(static_cast<unsigned long>(n));
            for (const auto& e : f.entries) {
                PrimeRecord pr;
                pr.p = e.prime;
                pr.p_mod_n = e.prime % nI;
                bool prime_has_positive = false;
                auto ideals = primes_above(field, e.prime);
                pr.kind = kind_name(ideals.front().kind);
                for (const auto& P : ideals) {
                    IdealValue iv;
                    iv.ideal = P.str();
                    iv.nu = nu_ideal(value, P).value;
                    iv.norm_mod_n = P.norm() % nI;
                    if (iv.nu > 0) {
                        prime_has_positive = true;
                        iv.primitive = residue_order_equals(gamma, P, n, n_divs);
                        if (iv.primitive) {
                            pr.any_primitive = true;
                            row.sigma_p += 0.5 * iv.nu * log_abs(P.norm());
                            if (iv.norm_mod_n != 1 % nI && n > 1) pr.item1_pass = false;
                            if (norm_plus_one && n > 2) {
                                pr.item2_applicable = true;
                                Integer pm = pr.p_mod_n;
                                if (pm != 1 % nI && pm != (nI - 1) % nI) pr.item2_pass = false;
                            }
                        } else {
                            row.sigma_np += 0.5 * iv.nu * log_abs(P.norm());
                            if (n >= 8) {  // 2^{d+1} with d = 2
                                pr.item3_applicable = true;
                                long vpn =
                                    (nI % e.prime == 0) ? int_valuation(nI, e.prime) : 0;
                                long nu_n = P.ramification_index() * vpn;
                                if (iv.nu > nu_n) pr.item3_pass = false;
                            }
                        }
                    }
                    pr.ideals.push_back(iv);
                }
                row.checks_pass =
                    row.checks_pass && pr.item1_pass && pr.item2_pass && pr.item3_pass;
                if (prime_has_positive && (!row.largest_prime || e.prime > *row.largest_prime))
                    row.largest_prime = e.prime;
                row.primes.push_back(std::move(pr));
            }
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string report_to_json(const ScanReport& rep) {
    using nlohmann::json;
    json header;
    header["kind"] = rep.kind;
    header["gamma"] = rep.gamma;
    if (rep.kind == "scan-quad") header["field_m"] = rep.field_m.get_str();
    header["n_min"] = rep.n_min;
    header["n_max"] = rep.n_max;
    header["seed"] = rep.seed;
    header["effort"] = rep.effort_desc;
    header["config_digest"] = rep.config_digest;

    json rows = json::array();
    for (const auto& row : rep.rows) {
        json r;
        r["n"] = row.n;
        r["cyclotomic_integer"] = row.cyclotomic_integer.get_str();
        r["fully_factored"] = row.fully_factored;
        if (!row.fully_factored) {
            r["unfactored_cofactor"] = row.unfactored_cofactor.get_str();
            r["cofactor_certifies_primitive"] = row.cofactor_certifies_primitive;
        }
        r["P"] = row.largest_prime ? json(row.largest_prime->get_str()) : json(nullptr);
        r["P_is_lower_bound"] = row.largest_is_lower_bound;
        r["sigma_p"] = row.sigma_p;
        r["sigma_np"] = row.sigma_np;
        r["threshold"] = row.threshold;
        r["checks_pass"] = row.checks_pass;
        json primes = json::array();
        for (const auto& pr : row.primes) {
            json p;
            p["p"] = pr.p.get_str();
            p["kind"] = pr.kind;
            p["p_mod_n"] = pr.p_mod_n.get_str();
            p["primitive"] = pr.any_primitive;
            p["item1_pass"] = pr.item1_pass;
            p["item2_applicable"] = pr.item2_applicable;
            p["item2_pass"] = pr.item2_pass;
            p["item3_applicable"] = pr.item3_applicable;
            p["item3_pass"] = pr.item3_pass;
            json ideals = json::array();
            for (const auto& iv : pr.ideals) {
                json i;
                i["ideal"] = iv.ideal;
                i["nu"] = iv.nu;
                i["primitive"] = iv.primitive;
                i["norm_mod_n"] = iv.norm_mod_n.get_str();
                ideals.push_back(i);
            }
            p["ideals"] = ideals;
            primes.push_back(p);
        }
        r["primes"] = primes;
        rows.push_back(r);
    }
    json doc;
    doc["header"] = header;
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const ScanReport& rep) {
    std::ostringstream os;
    os << "n,cyclotomic_integer,fully_factored,p,kind,nu,nu_conj,primitive,p_mod_n,"
          "norm_mod_n,item1_pass,item2_applicable,item2_pass,item3_applicable,item3_pass,"
          "P,P_is_lower_bound,sigma_p,sigma_np,threshold\n";
    os.precision(17);
    for (const auto& row : rep.rows) {
        auto row_prefix = [&](std::ostream& s) {
            s << row.n << "," << row.cyclotomic_integer.get_str() << ","
              << (row.fully_factored ? 1 : 0) << ",";
        };
        auto row_suffix = [&](std::ostream& s) {
            s << (row.largest_prime ? row.largest_prime->get_str() : "") << ","
              << (row.largest_is_lower_bound ? 1 : 0) << "," << row.sigma_p << ","
              << row.sigma_np << "," << row.threshold << "\n";
        };
        if (row.primes.empty()) {
            row_prefix(os);
            os << ",,,,,,,,,,,,";
            row_suffix(os);
            continue;
        }
        for (const auto& pr : row.primes) {
            row_prefix(os);
            os << pr.p.get_str() << "," << pr.kind << "," << pr.ideals[0].nu << ",";
            if (pr.ideals.size() > 1) os << pr.ideals[1].nu;
            os << "," << (pr.any_primitive ? 1 : 0) << "," << pr.p_mod_n.get_str() << ","
               << pr.ideals[0].norm_mod_n.get_str() << "," << (pr.item1_pass ? 1 : 0) << ","
               << (pr.item2_applicable ? 1 : 0) << "," << (pr.item2_pass ? 1 : 0) << ","
               << (pr.item3_applicable ? 1 : 0) << "," << (pr.item3_pass ? 1 : 0) << ",";
            row_suffix(os);
        }
    }
    return os.str();
}

}  // namespace primdiv
