#include "primdiv/suites.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "primdiv/arith.hpp"
#include "primdiv/bounds.hpp"
#include "primdiv/cyclotomic.hpp"
#include "primdiv/height.hpp"
#include "primdiv/ideals.hpp"
#include "primdiv/oracles.hpp"
#include "primdiv/theta.hpp"
#include "primdiv/valuation.hpp"

namespace primdiv {

namespace {

using Checks = std::vector<CheckResult>;

void add(Checks& cs, const std::string& name, bool pass, const std::string& detail = "") {
    cs.push_back(CheckResult{name, pass, detail});
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// ---------------------------------------------------------------------------

Checks suite_cyclotomic_identity(const ScanConfig&) {
    Checks cs;
    bool all = true;
    std::uint64_t bad = 0;
    for (std::uint64_t n = 1; n <= 300; ++n) {
        auto prod = cyclotomic_divisor_product(n);
        bool ok = prod.size() == n + 1 && prod[0] == -1 && prod[n] == 1;
        if (ok)
            for (std::size_t i = 1; i < n; ++i)
                if (prod[i] != 0) {
                    ok = false;
                    break;
                }
        if (!ok) {
            all = false;
            bad = n;
            break;
        }
    }
    add(cs, "prod over d|n of Phi_d = t^n - 1, n <= 300", all,
        all ? "300/300" : "first failure n = " + std::to_string(bad));
    return cs;
}

// ---------------------------------------------------------------------------

struct LteCorpusStats {
    int compared = 0;
    int mismatches = 0;
    std::string first_mismatch;
};

LteCorpusStats lte_corpus_run(std::uint64_t seed, int target) {
    LteCorpusStats st;
    const QuadraticField& K5 = make_field(5);
    QuadElement eta = *K5.fundamental_unit();
    std::vector<Rational> rational_gammas = {Rational(2), Rational(3), make_rational(3, 2),
                                             make_rational(5, 3)};
    std::vector<QuadElement> quad_gammas = {eta, eta.pow(2), eta.pow(3)};
    PrimeSieve sieve(1000);
    SplitMix64 rng(seed);
    while (st.compared < target) {
        std::uint64_t pick = rng.below(rational_gammas.size() + quad_gammas.size());
        unsigned long n = static_cast<unsigned long>(rng.below(200)) + 1;
        const auto& primes = sieve.primes();
        Integer p(static_cast<unsigned long>(primes[rng.below(primes.size())]));
        if (pick < rational_gammas.size()) {
            const Rational& g = rational_gammas[pick];
            if (nu_p(g, p) != 0) continue;
            long fast = nu_power_minus_one(g, n, p).value;
            long direct = nu_direct_oracle(g, n, p).value;
            ++st.compared;
            if (fast != direct) {
                ++st.mismatches;
                if (st.first_mismatch.empty())
                    st.first_mismatch = "gamma=" + g.get_str() + " n=" + std::to_string(n) +
                                        " p=" + p.get_str();
            }
        } else {
            const QuadElement& g = quad_gammas[pick - rational_gammas.size()];
            auto ideals = primes_above(K5, p);
            const PrimeIdeal& P = ideals[rng.below(ideals.size())];
            if (nu_ideal(g, P).value != 0) continue;
            long fast = nu_power_minus_one(g, n, P).value;
            long direct = nu_direct_oracle(g, n, P).value;
            ++st.compared;
            if (fast != direct) {
                ++st.mismatches;
                if (st.first_mismatch.empty())
                    st.first_mismatch = "gamma=" + g.str() + " n=" + std::to_string(n) +
                                        " p=" + p.get_str();
            }
        }
    }
    return st;
}

Checks suite_lte_oracle(const ScanConfig& cfg) {
    Checks cs;
    LteCorpusStats st = lte_corpus_run(cfg.seed, 1000);
    add(cs, "nu_power_minus_one = nu_direct_oracle on 1000 seeded cases", st.mismatches == 0,
        st.mismatches == 0 ? std::to_string(st.compared) + "/1000 exact"
                           : "first mismatch: " + st.first_mismatch);
    return cs;
}

// ---------------------------------------------------------------------------

Checks suite_primitive_congruences_rational(const ScanConfig& cfg) {
    Checks cs;
    for (const Rational& g :
         {Rational(2), Rational(3), make_rational(3, 2), make_rational(5, 3)}) {
        ScanReport rep = scan_rational(g, 4, 120, cfg);
        std::uint64_t violations = 0, unfactored = 0;
        for (const auto& row : rep.rows) {
            if (!row.fully_factored) {
                ++unfactored;
                continue;
            }
            for (const auto& pr : row.primes)
                if (!pr.item1_pass || !pr.item3_pass) ++violations;
        }
        std::ostringstream os;
        os << "rows 4..120, unfactored " << unfactored << ", violations " << violations;
        add(cs, "items 1 and 3 for gamma = " + g.get_str(), violations == 0, os.str());
    }
    return cs;
}

Checks suite_primitive_congruences_quad(const ScanConfig& cfg) {
    Checks cs;
    const QuadraticField& K = make_field(5);
    QuadElement gamma = K.element(3, 1, 2);  // (3+sqrt5)/2
    ScanReport rep = scan_quadratic(K, gamma, 4, 60, cfg);
    std::uint64_t violations = 0, unfactored = 0;
    for (const auto& row : rep.rows) {
        if (!row.fully_factored) {
            ++unfactored;
            continue;
        }
        for (const auto& pr : row.primes)
            if (!pr.item1_pass || !pr.item2_pass || !pr.item3_pass) ++violations;
    }
    std::ostringstream os;
    os << "rows 4..60, unfactored " << unfactored << ", violations " << violations;
    add(cs, "N(p) = 1 and p = +-1 mod n for primitive primes, gamma = (3+sqrt5)/2",
        violations == 0, os.str());
    return cs;
}

// ---------------------------------------------------------------------------

Checks suite_cyclotomic_height(const ScanConfig&) {
    Checks cs;
    std::uint64_t checked = 0, failures = 0;
    std::string first;
    auto run_rational = [&](const Rational& g) {
        for (std::uint64_t n = 1; n <= 300; ++n) {
            auto repn = cyclotomic_height_residual(g, n);
            ++checked;
            if (!repn.pass || !repn.arch_pass) {
                ++failures;
                if (first.empty()) first = "gamma=" + g.get_str() + " n=" + std::to_string(n);
            }
        }
    };
    auto run_quad = [&](const QuadElement& g) {
        for (std::uint64_t n = 1; n <= 300; ++n) {
            auto repn = cyclotomic_height_residual(g, n);
            ++checked;
            if (!repn.pass || !repn.arch_pass) {
                ++failures;
                if (first.empty()) first = "gamma=" + g.str() + " n=" + std::to_string(n);
            }
        }
    };
    for (const Rational& g :
         {Rational(2), Rational(3), make_rational(3, 2), make_rational(5, 3), Rational(10)})
        run_rational(g);
    for (long m : {5L, 2L, 10L}) {
        const QuadraticField& K = make_field(m);
        run_quad(K.fundamental_unit()->pow(2));
    }
    run_quad(make_field(-5).element(2, 1, 3));     // (2+sqrt(-5))/3, norm 1
    run_quad(make_field(-23).element(11, 1, 12));  // (11+sqrt(-23))/12, norm 1
    std::ostringstream os;
    os << checked << " (gamma, n) pairs, " << failures << " failures";
    if (failures) os << ", first " << first;
    add(cs, "|h(Phi_n(gamma)) - phi(n) h(gamma)| <= 2^omega(n) log(pi n), n <= 300",
        failures == 0, os.str());
    return cs;
}

// ---------------------------------------------------------------------------

Checks suite_theta_prop52(const ScanConfig&) {
    Checks cs;
    for (long m : {5L, 2L, -5L, -23L}) {
        const QuadraticField& K = make_field(m);
        ThetaBatch batch = theta_batch(K, 10);
        bool norms = true, windows = true, support = true;
        for (const auto& t : batch.thetas) {
            ThetaVerification v = verify_theta(t);
            norms = norms && v.norm_is_one;
            windows = windows && v.item1_pass;
            support = support && v.sk_support_pass;
        }
        int rank = independence_rank(batch);
        std::vector<QuadElement> vals;
        for (const auto& t : batch.thetas) vals.push_back(t.value);
        bool sq_indep = square_class_independent(K, vals).independent;
        std::ostringstream os;
        os << "rank " << rank << "/10";
        add(cs, "m = " + std::to_string(m) + ": exact norm 1", norms);
        add(cs, "m = " + std::to_string(m) + ": |h - (1/2)log p| within window", windows);
        add(cs, "m = " + std::to_string(m) + ": S(K)-support = pair above p, values +-1",
            support);
        add(cs, "m = " + std::to_string(m) + ": independence rank = 10", rank == 10, os.str());
        add(cs, "m = " + std::to_string(m) + ": square-class independent", sq_indep);
    }
    return cs;
}

// ---------------------------------------------------------------------------

Checks suite_field_constants(const ScanConfig&) {
    Checks cs;
    struct Expect {
        long m;
        long D;
        long h;
        const char* unit;  // coords or empty for imaginary
    };
    const Expect table[] = {
        {5, 5, 1, "1,1,2"},   {2, 8, 1, "1,1,1"},   {10, 40, 2, "3,1,1"}, {-1, -4, 1, ""},
        {-3, -3, 1, ""},      {-5, -20, 2, ""},     {-23, -23, 3, ""},
    };
    for (const auto& e : table) {
        const QuadraticField& K = make_field(e.m);
        bool ok = (K.discriminant() == e.D) && (K.class_number() == e.h);
        std::string detail = "D=" + K.discriminant().get_str() + " h=" + K.class_number().get_str();
        if (e.m > 0) {
            QuadElement expected = parse_quad_element(K, e.unit);
            ok = ok && (*K.fundamental_unit() == expected);
            // Independent routes: ascending-y Pell search and ideal-class
            // enumeration.
            QuadElement brute = oracles::brute_fundamental_unit(K);
            ok = ok && (brute == *K.fundamental_unit());
            detail += " eta=" + K.fundamental_unit()->str();
        } else {
            ok = ok && (oracles::dirichlet_class_number(K.discriminant()) == e.h);
        }
        ok = ok && (oracles::ideal_class_count(K) == e.h);
        add(cs, "field constants m = " + std::to_string(e.m), ok, detail);
    }
    return cs;
}

// ---------------------------------------------------------------------------

Checks suite_analytic_estimates(const ScanConfig&) {
    Checks cs;
    {
        EstimateReport r = estimate_check(EstimateKind::OmegaBound, 3, 1'000'000);
        add(cs, "omega(n) <= 1.4 log n / log log n for 3 <= n <= 1e6",
            r.failures_in_claimed_range == 0, std::to_string(r.checked) + " checked");
    }
    {
        EstimateReport r = estimate_check(EstimateKind::PiBounds, 3, 1'000'000);
        bool upper_ok = true, lower_low_fail_at_10 = false, lower_ok_from_17 = true;
        for (const auto& row : r.rows) {
            if (!row.upper_pass) upper_ok = false;
            if (!row.lower_pass) {
                if (row.argument == 10) lower_low_fail_at_10 = true;
                if (row.argument >= 17) lower_ok_from_17 = false;
            }
        }
        add(cs, "pi(x) <= 1.3 x/log x for 3 <= x <= 1e6", upper_ok);
        add(cs, "x/log x <= pi(x) for 17 <= x <= 1e6", lower_ok_from_17);
        add(cs, "stated x >= 3 lower range fails at x = 10 (documented)", lower_low_fail_at_10);
    }
    for (long m : {-1L, -3L}) {
        const QuadraticField& K = make_field(m);
        SplitCountReport r = split_count(K, 10'000'000);
        std::ostringstream os;
        os << "count " << r.count << " vs bound " << fmt(r.density_lower_bound)
           << " (smoke check below the x >= 1e10 threshold)";
        add(cs, "split-prime count exceeds the bound expression at x = 1e7, m = " +
                    std::to_string(m),
            static_cast<double>(r.count) > r.density_lower_bound, os.str());
    }
    return cs;
}

// ---------------------------------------------------------------------------

Checks suite_zsygmondy(const ScanConfig& cfg) {
    Checks cs;
    ScanReport six = scan_rational(Rational(2), 6, 6, cfg);
    bool six_no_primitive = true;
    for (const auto& pr : six.rows[0].primes)
        if (pr.any_primitive) six_no_primitive = false;
    add(cs, "n = 6 exception: Phi_6(2) has no primitive prime", six_no_primitive);

    ScanReport rep = scan_rational(Rational(2), 7, 200, cfg);
    std::uint64_t missing = 0, small_p = 0, unfactored = 0;
    for (const auto& row : rep.rows) {
        bool has_primitive = row.cofactor_certifies_primitive;
        for (const auto& pr : row.primes) has_primitive = has_primitive || pr.any_primitive;
        if (!has_primitive) ++missing;
        if (!row.fully_factored) {
            ++unfactored;
            // Cofactor primes exceed the trial bound, so P > 1e6 >= n + 1 is
            // certified even without the full factorization.
            if (!row.cofactor_certifies_primitive ||
                Integer(static_cast<unsigned long>(cfg.effort.trial_bound)) <
                    Integer(static_cast<unsigned long>(row.n)) + 1)
                ++small_p;
            continue;
        }
        if (!row.largest_prime || *row.largest_prime < Integer(static_cast<unsigned long>(row.n)) + 1)
            ++small_p;
    }
    std::ostringstream os;
    os << "unfactored rows " << unfactored << " (P certified by the cofactor bound), "
       << "rows without primitive prime " << missing << ", rows with P < n+1 " << small_p;
    add(cs, "gamma = 2, 7 <= n <= 200: primitive prime exists and P >= n + 1",
        missing == 0 && small_p == 0, os.str());
    return cs;
}

// ---------------------------------------------------------------------------

Checks suite_yu_bound(const ScanConfig& cfg) {
    Checks cs;
    const double kRel = 1e-9;
    {
        // Frozen from a 40-digit closed-form evaluation.
        YuBoundInput in;
        in.k = 1;
        in.d = 1;
        in.heights = {std::log(2.0)};
        in.prime_norm = 101;
        in.underlying_p = 101;
        in.delta = 1;
        in.B = 10;
        BoundReport r = yu_rhs(in);
        bool ok = std::abs(r.rhs - 104785389.4374721721922435437) <= kRel * r.rhs &&
                  std::abs(r.omega_value - 21.88458559888869986) <= kRel * r.omega_value &&
                  r.branch == 1;
        add(cs, "k=1 d=1 h=log2 Np=101 B=10 -> rhs = 1.047853894...e8", ok, fmt(r.rhs));
    }
    {
        YuBoundInput in;
        in.k = 1;
        in.d = 1;
        in.heights = {std::log(2.0)};
        in.prime_norm = 7;
        in.underlying_p = 7;
        in.delta = 1;
        in.B = 1;
        BoundReport r = yu_rhs(in);
        // Omega takes the e^k log Np branch: 5.2895321979910903...
        double expect_omega = 5.289532197991090306477568359;
        double expect_rhs = 1e5 * 30.0 * std::log(2.0) * expect_omega;  // log* B = 1
        bool ok = r.branch == 2 && std::abs(r.omega_value - expect_omega) <= kRel &&
                  std::abs(r.rhs - expect_rhs) <= kRel * expect_rhs;
        add(cs, "k=1 d=1 Np=7 B=1 -> e^k log Np branch, log* B = 1", ok, fmt(r.rhs));
    }
    {
        // Two alphas over a quadratic field.
        YuBoundInput in;
        in.k = 2;
        in.d = 2;
        in.heights = {0.5, 0.25};
        in.prime_norm = Integer(101) * 101;
        in.underlying_p = 101;
        in.delta = 50.0;  // (p-1)/2
        in.B = 1000;
        BoundReport r = yu_rhs(in);
        // Hand evaluation: Omega = max((10201/50)(2/log 10201)^2, e^2 log 10201)
        double logNp = std::log(10201.0);
        double b1 = 10201.0 / 50.0 * std::pow(2.0 / logNp, 2.0);
        double b2 = std::exp(2.0) * logNp;
        double om = std::max(b1, b2);
        double expect = 1e5 * std::pow(2.0, 4) * 1.0 * std::pow(30.0, 2) *
                        std::pow(2.0, 2.5) * 1.0 * 0.5 * 0.25 * om * std::log(1000.0);
        bool ok = std::abs(r.rhs - expect) <= kRel * expect;
        add(cs, "k=2 d=2 delta=(p-1)/2 hand evaluation", ok, fmt(r.rhs));
    }
    {
        // Domination over the measured corpus, k = 1 instances.
        bool dominated = true;
        std::string detail;
        const QuadraticField& K5 = make_field(5);
        QuadElement eta = *K5.fundamental_unit();
        std::vector<QuadElement> quad_gammas = {eta, eta.pow(2), eta.pow(3)};
        std::vector<Rational> rats = {Rational(2), Rational(3), make_rational(3, 2),
                                      make_rational(5, 3)};
        PrimeSieve sieve(1000);
        SplitMix64 rng(cfg.seed ^ 0x9e3779b9);
        for (int i = 0; i < 400; ++i) {
            unsigned long n = static_cast<unsigned long>(rng.below(200)) + 1;
            Integer p(static_cast<unsigned long>(
                sieve.primes()[rng.below(sieve.primes().size())]));
            if (p < 5) continue;
            std::uint64_t pick = rng.below(rats.size() + quad_gammas.size());
            long measured;
            double h;
            int d;
            Integer np;
            if (pick < rats.size()) {
                const Rational& g = rats[pick];
                if (nu_p(g, p) != 0) continue;
                measured = nu_power_minus_one(g, n, p).value;
                h = height_rational(g).value;
                d = 1;
                np = p;
            } else {
                const QuadElement& g = quad_gammas[pick - rats.size()];
                auto ideals = primes_above(K5, p);
                const PrimeIdeal& P = ideals[rng.below(ideals.size())];
                measured = nu_power_minus_one(g, n, P).value;
                h = height_quad(g).value;
                d = 2;
                np = P.norm();
            }
            YuBoundInput in;
            in.k = 1;
            in.d = d;
            in.heights = {h};
            in.prime_norm = np;
            in.underlying_p = p;
            in.delta = 1;
            in.B = Integer(static_cast<unsigned long>(n));
            double rhs = yu_rhs(in).rhs;
            if (static_cast<double>(measured) > rhs) {
                dominated = false;
                detail = "violated at p=" + p.get_str() + " n=" + std::to_string(n);
                break;
            }
        }
        add(cs, "measured nu <= yu_rhs across the corpus (p >= 5, k = 1)", dominated, detail);
    }
    return cs;
}

// ---------------------------------------------------------------------------

Checks suite_heights(const ScanConfig& cfg) {
    Checks cs;
    // Frozen spot values.
    const QuadraticField& K5 = make_field(5);
    QuadElement golden = K5.element(1, 1, 2);
    bool spot = std::abs(height_quad(golden).value - 0.24060591252980172) < 1e-9;
    spot = spot && std::abs(height_quad(K5.element(3, 1, 2)).value - 0.48121182505960345) < 1e-9;
    spot = spot && std::abs(height_quad(K5.element(21, 8, 11)).value - 1.8303498519539148) < 1e-9;
    spot = spot && std::abs(height_rational(make_rational(3, 2)).value - std::log(3.0)) < 1e-12;
    add(cs, "frozen height spot values", spot);

    SplitMix64 rng(cfg.seed ^ 0xabcdef);
    bool agree = true, inv_ok = true, pow_ok = true, galois_ok = true;
    for (long m : {5L, 2L, 10L, -5L, -23L, -1L, -3L}) {
        const QuadraticField& K = make_field(m);
        for (int i = 0; i < 72; ++i) {
            Integer a(static_cast<unsigned long>(rng.below(1'000'000)));
            Integer b(static_cast<unsigned long>(rng.below(1'000'000)) + 1);
            Integer q(static_cast<unsigned long>(rng.below(999'999)) + 1);
            if (rng.below(2)) a = -a;
            if (rng.below(2)) b = -b;
            QuadElement x = K.element(a, b, q);
            if (x.is_zero()) continue;
            double hp = height_quad(x).value;
            double hm = height_quad_mahler(x).value;
            if (std::abs(hp - hm) > 1e-9) agree = false;
            if (std::abs(height_quad(x.inverse()).value - hp) > 1e-9) inv_ok = false;
            if (std::abs(height_quad(x.conjugate()).value - hp) > 1e-9) galois_ok = false;
            if (i % 24 == 0) {
                int k = 2 + static_cast<int>(rng.below(9));
                if (std::abs(height_quad(x.pow(k)).value - k * hp) > 1e-7) pow_ok = false;
            }
        }
    }
    add(cs, "places vs Mahler agreement on random elements", agree);
    add(cs, "h(x) = h(1/x)", inv_ok);
    add(cs, "h(x) = h(x^sigma)", galois_ok);
    add(cs, "h(x^k) = k h(x)", pow_ok);

    bool floors = height_floor_check(Rational(2)).pass &&
                  std::abs(height_floor_check(Rational(2)).height - std::log(2.0)) < 1e-12 &&
                  height_floor_check(golden).pass &&
                  std::abs(height_floor_check(golden).height - 0.24060591252980172) < 1e-9 &&
                  height_floor_check(make_rational(3, 2)).pass;
    add(cs, "height floors (log 2, log(golden)/2) attained and respected", floors);
    return cs;
}

// ---------------------------------------------------------------------------

Checks suite_valuation_props(const ScanConfig& cfg) {
    Checks cs;
    SplitMix64 rng(cfg.seed ^ 0x5eed);
    bool additivity = true, symmetry = true, lte_step = true, descent = true;
    const QuadraticField& K5 = make_field(5);
    QuadElement eta = *K5.fundamental_unit();
    PrimeSieve sieve(1000);
    // Split additivity and norm-descent agreement on random elements.
    for (int i = 0; i < 500; ++i) {
        Integer a(static_cast<unsigned long>(rng.below(100000)));
        Integer b(static_cast<unsigned long>(rng.below(100000)) + 1);
        Integer q(static_cast<unsigned long>(rng.below(9999)) + 1);
        if (rng.below(2)) a = -a;
        QuadElement x = K5.element(a, b, q);
        if (x.is_zero()) continue;
        Integer p(static_cast<unsigned long>(sieve.primes()[rng.below(sieve.primes().size())]));
        auto ideals = primes_above(K5, p);
        if (ideals.front().kind != PrimeIdeal::Kind::Split) continue;
        long v1 = nu_ideal(x, ideals[0]).value;
        long v2 = nu_ideal(x, ideals[1]).value;
        long vn = nu_p(x.norm(), p);
        if (v1 + v2 != vn) additivity = false;
        if (nu_ideal_norm_descent(x, ideals[0]).value != v1) descent = false;
        if (nu_ideal_norm_descent(x, ideals[1]).value != v2) descent = false;
    }
    add(cs, "split additivity nu_P + nu_P^sigma = nu_p(norm) (500 random)", additivity);
    add(cs, "Hensel embedding agrees with norm descent", descent);

    // Conjugation symmetry: by sigma-equivariance, unconditional for norm +1
    // gamma; for norm -1 it holds exactly when n is even (sigma sends
    // gamma^n - 1 to a unit multiple of gamma^n + 1 for odd n).
    for (int i = 0; i < 200 && symmetry; ++i) {
        int e = 1 + static_cast<int>(rng.below(6));
        QuadElement g = eta.pow(e);
        unsigned long n = static_cast<unsigned long>(rng.below(60)) + 1;
        if (e % 2 == 1 && n % 2 == 1) n += 1;
        Integer p(static_cast<unsigned long>(sieve.primes()[rng.below(sieve.primes().size())]));
        auto ideals = primes_above(K5, p);
        if (ideals.front().kind != PrimeIdeal::Kind::Split) continue;
        QuadElement w = g.pow(static_cast<long>(n)) - K5.element(1, 0, 1);
        if (w.is_zero()) continue;
        if (nu_ideal(w, ideals[0]).value != nu_ideal(w, ideals[1]).value) symmetry = false;
    }
    add(cs, "conjugation symmetry of nu(gamma^n - 1) (norm +1; norm -1 with even n)", symmetry);
    // The norm -1, odd n exception is real: eta^5 - 1 has norm -11 and meets
    // only one of the two ideals above 11.
    {
        QuadElement w = eta.pow(5) - K5.element(1, 0, 1);
        auto ideals = primes_above(K5, 11);
        long v0 = nu_ideal(w, ideals[0]).value;
        long v1 = nu_ideal(w, ideals[1]).value;
        add(cs, "norm -1 odd-n asymmetry witness at p = 11", (v0 + v1 == 1) && v0 != v1);
    }

    // LTE step: nu(gamma^n - 1) - nu(gamma^t - 1) = nu_p(n) when t | n, odd
    // unramified p.
    for (int i = 0; i < 200 && lte_step; ++i) {
        Integer p(static_cast<unsigned long>(sieve.primes()[rng.below(sieve.primes().size())]));
        if (p == 2 || p == 5) continue;
        auto ideals = primes_above(K5, p);
        QuadElement g = eta.pow(2);
        Integer t = mult_order(g, ideals[0]);
        if (t > 40) continue;
        unsigned long mult = static_cast<unsigned long>(rng.below(5)) + 1;
        unsigned long n = static_cast<unsigned long>(t.get_ui() * mult);
        long vn = nu_power_minus_one(g, n, ideals[0]).value;
        long vt = nu_power_minus_one(g, static_cast<unsigned long>(t.get_ui()), ideals[0]).value;
        long expected = (Integer(n) % p == 0) ? int_valuation(Integer(n), p) : 0;
        if (vn - vt != expected) lte_step = false;
    }
    add(cs, "LTE step equals nu_p(n) exactly", lte_step);
    return cs;
}

// ---------------------------------------------------------------------------

Checks suite_sigma_sandwich(const ScanConfig& cfg) {
    // Diagnostic only: the primitive-sum sandwich bounds absorb their error
    // terms only for n beyond e^(10^6); at desk scale the comparison is
    // reported, never asserted.
    Checks cs;
    auto report = [&](const std::string& label, double h_gamma, SigmaVariant variant,
                      const ScanReport& rep, int d) {
        std::uint64_t rows = 0, lower_holds = 0, upper_holds = 0;
        for (const auto& row : rep.rows) {
            if (!row.fully_factored || !row.largest_prime || row.n < 3) continue;
            if (*row.largest_prime < 3) continue;  // sigma_bounds needs P >= 3
            ++rows;
            SigmaBounds b =
                sigma_bounds(variant, h_gamma, row.n, row.largest_prime->get_d());
            double full_sigma_p = d * row.sigma_p;  // degree-unnormalized
            if (full_sigma_p >= b.lower - 1e-9) ++lower_holds;
            if (full_sigma_p <= b.upper + 1e-9) ++upper_holds;
        }
        std::ostringstream os;
        os << "lower holds on " << lower_holds << "/" << rows << ", upper on " << upper_holds
           << "/" << rows << " rows (diagnostic; absorption needs n >= e^1e6)";
        add(cs, label, true, os.str());
    };
    report("rational sandwich, gamma = 2, 3 <= n <= 80", std::log(2.0), SigmaVariant::Rational,
           scan_rational(Rational(2), 3, 80, cfg), 1);
    const QuadraticField& K5 = make_field(5);
    QuadElement gamma = K5.element(3, 1, 2);
    report("quadratic sandwich, gamma = (3+sqrt5)/2, 3 <= n <= 60", 0.4812118250596034,
           SigmaVariant::Quadratic, scan_quadratic(K5, gamma, 3, 60, cfg), 2);
    return cs;
}

Checks suite_class_numbers(const ScanConfig&) {
    Checks cs;
    bool all = true;
    std::string detail;
    int tested = 0;
    for (long m = -50; m <= 50; ++m) {
        if (m == 0 || m == 1) continue;
        // squarefree check
        bool sf = true;
        for (long d = 2; d * d <= std::abs(m); ++d)
            if (m % (d * d) == 0) sf = false;
        if (!sf) continue;
        const QuadraticField& K = make_field(m);
        if (abs(K.discriminant()) > 200) continue;
        ++tested;
        if (oracles::ideal_class_count(K) != K.class_number()) {
            all = false;
            if (detail.empty()) detail = "mismatch at m = " + std::to_string(m);
        }
        if (m < 0 && oracles::dirichlet_class_number(K.discriminant()) != K.class_number())
            all = false;
    }
    add(cs, "class numbers match brute-force enumeration, |D| <= 200", all,
        all ? std::to_string(tested) + " fields" : detail);
    return cs;
}

using SuiteFn = Checks (*)(const ScanConfig&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> reg = {
        {"cyclotomic-identity", suite_cyclotomic_identity},
        {"lte-oracle", suite_lte_oracle},
        {"primitive-congruences-rational", suite_primitive_congruences_rational},
        {"primitive-congruences-quad", suite_primitive_congruences_quad},
        {"cyclotomic-height", suite_cyclotomic_height},
        {"theta-prop52", suite_theta_prop52},
        {"field-constants", suite_field_constants},
        {"analytic-estimates", suite_analytic_estimates},
        {"zsygmondy", suite_zsygmondy},
        {"yu-bound", suite_yu_bound},
        {"heights", suite_heights},
        {"valuation-props", suite_valuation_props},
        {"class-numbers", suite_class_numbers},
        {"sigma-sandwich", suite_sigma_sandwich},
    };
    return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

SuiteResult run_suite(const std::string& name, const ScanConfig& config) {
    auto it = registry().find(name);
    if (it == registry().end())
        throw std::invalid_argument("unknown suite '" + name + "'");
    auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    r.suite = name;
    r.checks = it->second(config);
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return r;
}

}  // namespace primdiv
