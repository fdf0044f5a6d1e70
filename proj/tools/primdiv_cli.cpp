#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "primdiv/arith.hpp"
#include "primdiv/bounds.hpp"
#include "primdiv/height.hpp"
#include "primdiv/ideals.hpp"
#include "primdiv/oracles.hpp"
#include "primdiv/scan.hpp"
#include "primdiv/suites.hpp"
#include "primdiv/theta.hpp"
#include "primdiv/valuation.hpp"

namespace {

using nlohmann::json;
using namespace primdiv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailure = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
    std::string format = "json";
    std::string out_path;
    std::uint64_t seed = 1;
    std::string effort;
    bool strict = false;
};

FactorEffort parse_effort(const std::string& desc, std::uint64_t seed) {
    FactorEffort eff;
    eff.seed = seed;
    std::stringstream ss(desc);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--effort expects key=value pairs");
        std::string key = item.substr(0, eq);
        std::uint64_t value = std::stoull(item.substr(eq + 1));
        if (key == "trial_bound")
            eff.trial_bound = value;
        else if (key == "rho_iters")
            eff.rho_iterations = value;
        else if (key == "rho_retries")
            eff.rho_retries = static_cast<int>(value);
        else
            throw CLI::ValidationError("--effort: unknown key '" + key + "'");
    }
    return eff;
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path " + g.out_path);
    f << text;
}

json quad_json(const QuadElement& x) {
    json j;
    j["coords"] = x.coords();
    j["str"] = x.str();
    return j;
}

int run_scan_output(const GlobalOpts& g, const ScanReport& rep) {
    emit(g, g.format == "csv" ? report_to_csv(rep) : report_to_json(rep));
    if (g.strict)
        for (const auto& row : rep.rows)
            if (!row.fully_factored) return kExitBudget;
    for (const auto& row : rep.rows)
        if (!row.checks_pass) return kExitCheckFailure;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for primitive prime divisors of gamma^n - 1 over "
                 "rational and quadratic fields"};
    app.require_subcommand(1);
    app.fallthrough(true);  // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--format", g.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", g.out_path, "write output to PATH");
    app.add_option("--seed", g.seed, "deterministic seed");
    app.add_option("--effort", g.effort,
                   "factoring budget, e.g. trial_bound=1000000,rho_iters=4000000");
    app.add_flag("--strict", g.strict, "budget exhaustion becomes exit code 3");

    // scan-rational
    std::string sr_gamma;
    std::uint64_t sr_nmin = 1, sr_nmax = 1;
    auto* sr = app.add_subcommand("scan-rational", "scan Phi_n(gamma) for rational gamma");
    sr->add_option("--gamma", sr_gamma, "rational gamma as A/B")->required();
    sr->add_option("--n-min", sr_nmin)->required();
    sr->add_option("--n-max", sr_nmax)->required();

    // scan-quad
    long sq_m = 0;
    std::string sq_gamma;
    std::uint64_t sq_nmin = 1, sq_nmax = 1;
    auto* sq = app.add_subcommand("scan-quad", "scan Phi_n(gamma) for quadratic gamma");
    sq->add_option("--field", sq_m, "squarefree m of Q(sqrt m)")->required();
    sq->add_option("--gamma", sq_gamma, "element coords a,b,q")->required();
    sq->add_option("--n-min", sq_nmin)->required();
    sq->add_option("--n-max", sq_nmax)->required();

    // theta
    long th_m = 0;
    int th_count = 1;
    auto* th = app.add_subcommand("theta", "construct norm-1 elements for split primes");
    th->add_option("--field", th_m)->required();
    th->add_option("--count", th_count, "number of S(K) primes")->required();

    // height
    long h_m = 0;
    std::string h_value;
    auto* hc = app.add_subcommand("height", "absolute logarithmic height");
    hc->add_option("--field", h_m, "squarefree m (omit or 0 for rational)");
    hc->add_option("--value", h_value, "a,b,q coords (or A/B when rational)")->required();

    // valuation
    long v_m = 0;
    std::string v_gamma;
    std::uint64_t v_n = 1;
    std::string v_p;
    auto* vc = app.add_subcommand("valuation", "nu(gamma^n - 1) at primes above p");
    vc->add_option("--field", v_m, "squarefree m (omit or 0 for rational)");
    vc->add_option("--gamma", v_gamma)->required();
    vc->add_option("--n", v_n)->required();
    vc->add_option("--p", v_p)->required();

    // yu-bound
    YuBoundInput yu;
    std::string yu_heights, yu_np = "1", yu_p = "5", yu_B = "1";
    auto* yb = app.add_subcommand("yu-bound", "logarithmic-form bound evaluator");
    yb->add_option("--k", yu.k)->required();
    yb->add_option("--d", yu.d)->required();
    yb->add_option("--heights", yu_heights, "comma-separated h(alpha_i)")->required();
    yb->add_option("--prime-norm", yu_np)->required();
    yb->add_option("--p", yu_p, "underlying rational prime")->required();
    yb->add_option("--delta", yu.delta);
    yb->add_option("--B", yu_B);
    yb->add_option("--u", yu.two_power_torsion_order_u);

    // threshold
    std::string t_variant;
    std::uint64_t t_n = 3;
    long t_disc = 0;
    auto* tc = app.add_subcommand("threshold", "largest-prime threshold evaluator");
    tc->add_option("--variant", t_variant)->required()->check(CLI::IsMember({"thm12", "thm13"}));
    tc->add_option("--n", t_n)->required();
    tc->add_option("--abs-disc", t_disc, "|D_K| (thm13)");

    // verify
    std::string suite_name;
    auto* vf = app.add_subcommand("verify", "run a registered invariant suite");
    vf->add_option("--suite", suite_name, "suite name")->required();

    // field-info
    long fi_m = 0;
    auto* fi = app.add_subcommand("field-info", "discriminant, class data, unit, bounds");
    fi->add_option("--m", fi_m)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        ScanConfig cfg;
        cfg.seed = g.seed;
        cfg.effort = g.effort.empty() ? FactorEffort{} : parse_effort(g.effort, g.seed);
        cfg.effort.seed = g.seed;

        if (sr->parsed()) {
            return run_scan_output(g, scan_rational(parse_rational(sr_gamma), sr_nmin, sr_nmax, cfg));
        }
        if (sq->parsed()) {
            const QuadraticField& K = make_field(sq_m);
            return run_scan_output(
                g, scan_quadratic(K, parse_quad_element(K, sq_gamma), sq_nmin, sq_nmax, cfg));
        }
        if (th->parsed()) {
            const QuadraticField& K = make_field(th_m);
            ThetaBatch batch = theta_batch(K, th_count);
            json out;
            out["field_m"] = th_m;
            out["count"] = th_count;
            json arr = json::array();
            bool all_ok = true;
            for (const auto& t : batch.thetas) {
                ThetaVerification v = verify_theta(t);
                json jt;
                jt["p"] = t.source_prime.get_str();
                jt["theta"] = quad_json(t.value);
                jt["generator"] = quad_json(t.generator);
                jt["unit_exponent"] = t.unit_exponent;
                jt["auxiliary_ideal_norm"] = t.auxiliary_ideal.norm().get_str();
                jt["chosen_ideal"] = t.chosen_ideal.str();
                jt["norm_is_one"] = v.norm_is_one;
                jt["height"] = v.height;
                jt["height_center"] = v.height_center;
                jt["window"] = v.window;
                jt["item1_pass"] = v.item1_pass;
                jt["item2_bound"] = v.item2_bound;
                jt["item2_threshold_log"] = v.item2_threshold_log;
                jt["item2_in_range"] = v.item2_in_range;
                jt["item2_holds"] = v.item2_holds;
                jt["sk_support_pass"] = v.sk_support_pass;
                json sup = json::array();
                for (const auto& s : v.support) {
                    json je;
                    je["ideal"] = s.ideal.str();
                    je["nu"] = s.value;
                    je["in_S_K"] = s.in_split_large_set;
                    sup.push_back(je);
                }
                jt["support"] = sup;
                all_ok = all_ok && v.norm_is_one && v.item1_pass && v.sk_support_pass;
                arr.push_back(jt);
            }
            out["thetas"] = arr;
            int rank = independence_rank(batch);
            out["independence_rank"] = rank;
            std::vector<QuadElement> vals;
            for (const auto& t : batch.thetas) vals.push_back(t.value);
            bool sq_ind = square_class_independent(K, vals).independent;
            out["square_class_independent"] = sq_ind;
            emit(g, out.dump(2) + "\n");
            all_ok = all_ok && rank == th_count && sq_ind;
            return all_ok ? kExitOk : kExitCheckFailure;
        }
        if (hc->parsed()) {
            json out;
            if (h_m == 0) {
                Rational x = parse_rational(h_value);
                HeightValue h = height_rational(x);
                out["kind"] = "rational";
                out["value"] = x.get_str();
                out["height"] = h.value;
            } else {
                const QuadraticField& K = make_field(h_m);
                QuadElement x = parse_quad_element(K, h_value);
                out["kind"] = "quadratic";
                out["field_m"] = h_m;
                out["value"] = quad_json(x);
                if (x.is_rational()) {
                    out["height"] = height_rational(make_rational(x.a(), x.q())).value;
                    out["routed_to"] = "height_rational";
                } else {
                    out["height"] = height_quad(x).value;
                    out["height_mahler"] = height_quad_mahler(x).value;
                }
                if (!x.is_zero() && !x.is_root_of_unity()) {
                    FloorCheck fc = height_floor_check(x);
                    out["floor"] = fc.floor;
                    out["floor_pass"] = fc.pass;
                }
            }
            emit(g, out.dump(2) + "\n");
            return kExitOk;
        }
        if (vc->parsed()) {
            json out;
            out["n"] = v_n;
            if (v_m == 0) {
                Rational gamma = parse_rational(v_gamma);
                Integer p(v_p);
                RationalValuation fast = nu_power_minus_one(gamma, v_n, p);
                out["gamma"] = gamma.get_str();
                out["p"] = p.get_str();
                out["nu"] = fast.value;
                out["method"] = fast.method == ValuationMethod::OrderLte ? "order_lte" : "direct";
                try {
                    out["oracle"] = nu_direct_oracle(gamma, v_n, p).value;
                } catch (const std::runtime_error&) {
                    out["oracle"] = nullptr;  // beyond the exact-power budget
                }
            } else {
                const QuadraticField& K = make_field(v_m);
                QuadElement gamma = parse_quad_element(K, v_gamma);
                Integer p(v_p);
                out["gamma"] = quad_json(gamma);
                out["p"] = p.get_str();
                json arr = json::array();
                for (const auto& P : primes_above(K, p)) {
                    json ji;
                    ji["ideal"] = P.str();
                    ValuationResult r = nu_power_minus_one(gamma, v_n, P);
                    ji["nu"] = r.value;
                    ji["method"] =
                        r.method == ValuationMethod::OrderLte ? "order_lte" : "direct";
                    try {
                        ji["oracle"] = nu_direct_oracle(gamma, v_n, P).value;
                    } catch (const std::runtime_error&) {
                        ji["oracle"] = nullptr;
                    }
                    arr.push_back(ji);
                }
                out["ideals"] = arr;
            }
            emit(g, out.dump(2) + "\n");
            return kExitOk;
        }
        if (yb->parsed()) {
            std::stringstream ss(yu_heights);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) yu.heights.push_back(std::stod(item));
            yu.prime_norm = Integer(yu_np);
            yu.underlying_p = Integer(yu_p);
            yu.B = Integer(yu_B);
            BoundReport r = yu_rhs(yu);
            json out;
            out["omega"] = r.omega_value;
            out["omega_branch"] = r.branch;
            out["rhs"] = r.rhs;
            emit(g, out.dump(2) + "\n");
            return kExitOk;
        }
        if (tc->parsed()) {
            ThresholdReport r = largest_prime_threshold(
                t_n, t_variant == "thm12" ? ThresholdVariant::Thm12 : ThresholdVariant::Thm13,
                Integer(t_disc));
            json out;
            out["n"] = t_n;
            out["variant"] = t_variant;
            out["threshold"] = r.threshold;
            out["n0"] = r.n0_expr;
            out[r.n0_is_double_exp ? "log_log_n0" : "log_n0"] = r.n0_log;
            out["hypothesis_met"] = r.hypothesis_met;
            emit(g, out.dump(2) + "\n");
            return kExitOk;
        }
        if (vf->parsed()) {
            SuiteResult r = run_suite(suite_name, cfg);
            std::ostringstream os;
            for (const auto& c : r.checks)
                os << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                   << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
            os << (r.pass() ? "OK" : "FAILED") << "  suite " << r.suite << "  ("
               << r.checks.size() << " checks, " << static_cast<long>(r.elapsed_ms) << " ms)\n";
            emit(g, os.str());
            return r.pass() ? kExitOk : kExitCheckFailure;
        }
        if (fi->parsed()) {
            const QuadraticField& K = make_field(fi_m);
            json out;
            out["m"] = fi_m;
            out["discriminant"] = K.discriminant().get_str();
            out["class_number"] = K.class_number().get_str();
            out["narrow_class_number"] = K.narrow_class_number().get_str();
            out["torsion_order"] = K.torsion_order();
            out["mu"] = K.mu();
            if (K.is_real()) {
                out["fundamental_unit"] = quad_json(*K.fundamental_unit());
                out["unit_norm"] = K.unit_norm();
                out["log_eta"] = K.log_eta();
            }
            json bounds = json::array();
            for (const auto& b : field_bounds_check(K)) {
                json jb;
                jb["name"] = b.name;
                jb["lhs"] = b.lhs;
                jb["rhs"] = b.rhs;
                jb["pass"] = b.pass;
                bounds.push_back(jb);
            }
            out["inequalities"] = bounds;
            json sk = json::array();
            for (const auto& p : first_split_large_primes(K, 10)) sk.push_back(p.get_str());
            out["first_S_K_primes"] = sk;
            emit(g, out.dump(2) + "\n");
            return kExitOk;
        }
        return kExitUsage;
    } catch (const SieveBudgetError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return g.strict ? kExitBudget : kExitCheckFailure;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitOk;
}
