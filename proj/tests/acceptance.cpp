// Acceptance gate: one verification suite per criterion, one pass/fail line
// each, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "primdiv/suites.hpp"

int main() {
    using namespace primdiv;
    struct Criterion {
        const char* label;
        const char* suite;
    };
    const std::vector<Criterion> criteria = {
        {"criterion 1: cyclotomic divisor-product identity, n <= 300", "cyclotomic-identity"},
        {"criterion 2: order/LTE valuation equals the exact oracle on 1000 seeded cases",
         "lte-oracle"},
        {"criterion 3: primitive/non-primitive prime properties, rational scans 4..120",
         "primitive-congruences-rational"},
        {"criterion 4: primitive-prime congruences, Q(sqrt5) scan 4..60", "primitive-congruences-quad"},
        {"criterion 5: cyclotomic height residual bound over the corpus, n <= 300", "cyclotomic-height"},
        {"criterion 6: norm-1 construction suite over four fields, 10 primes each",
         "theta-prop52"},
        {"criterion 7: field constants match independent enumerations", "field-constants"},
        {"criterion 8: arithmetical-function estimates and split-prime counts",
         "analytic-estimates"},
        {"criterion 9: every 7 <= n <= 200 has a primitive prime with P >= n+1 (gamma = 2)",
         "zsygmondy"},
        {"criterion 10: logarithmic-form bound evaluator and corpus domination", "yu-bound"},
    };

    ScanConfig cfg;  // default budgets, seed 1
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        std::string note;
        try {
            SuiteResult r = run_suite(c.suite, cfg);
            pass = r.pass();
            if (!pass) {
                for (const auto& ck : r.checks)
                    if (!ck.pass) {
                        note = ck.name + (ck.detail.empty() ? "" : " [" + ck.detail + "]");
                        break;
                    }
            }
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        std::printf("%s  %s  (%.0f ms)%s%s\n", pass ? "PASS" : "FAIL", c.label, ms,
                    note.empty() ? "" : "  -- ", note.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 10 criteria pass\n");
    return 0;
}
