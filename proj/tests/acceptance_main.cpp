// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "galmod/quad_arith.hpp"
#include "galmod/swan_lattice.hpp"
#include "galmod/verify_suites.hpp"

using namespace galmod;

namespace {

int failures = 0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

void report(int number, const std::string& label, const Outcome& out, double seconds) {
    std::printf("[%s] %2d. %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", number,
                label.c_str(), seconds);
    if (!out.pass) {
        ++failures;
        if (!out.detail.empty()) std::printf("        %s\n", out.detail.c_str());
    }
}

template <typename F>
void criterion(int number, const std::string& label, double budget_seconds, F body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& ex) {
        out.pass = false;
        out.detail = std::string("unexpected exception: ") + ex.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && budget_seconds > 0 && seconds >= budget_seconds) {
        out.pass = false;
        out.detail = "time budget of " + std::to_string(budget_seconds) + "s exceeded";
    }
    report(number, label, out, seconds);
}

Outcome from_suite(const SuiteResult& s) {
    Outcome out;
    out.pass = s.pass;
    if (!s.pass)
        out.detail = s.name + ": " + (s.counterexample.empty() ? "failed" : s.counterexample);
    return out;
}

Outcome merge(std::initializer_list<SuiteResult> suites) {
    Outcome out;
    for (const SuiteResult& s : suites) {
        Outcome one = from_suite(s);
        if (!one.pass) {
            out.pass = false;
            if (!out.detail.empty()) out.detail += "; ";
            out.detail += one.detail;
        }
    }
    return out;
}

}  // namespace

int main() {
    criterion(1, "pairing sum law, all abelian groups of order <= 24", 5.0,
              [] { return from_suite(suite_pair_sum(24)); });

    criterion(2, "lattice restriction transposes the paired families, |G| <= 16", 30.0,
              [] { return from_suite(suite_rag_theta(16)); });

    criterion(3, "cyclic descent over every model, n <= 12, plus odd-order pair sums", 30.0,
              [] { return merge({suite_swan1a(12), suite_ccc(12)}); });

    criterion(4, "paired exponent equals the two-power indicator, |G| <= 16", 0.0,
              [] { return from_suite(suite_swan2b(16)); });

    criterion(5, "ideal certificates for |G| <= 12 with the worked order-two value", 60.0, [] {
        Outcome out = from_suite(suite_swan_certificates(12));
        FinAbGroup c2({2});
        Subgroup whole = subgroup_generated_by(c2, {{1}});
        SwanIdeal ideal = swan_ideal(c2, whole, 3);
        if (ideal.index != 3) {
            out.pass = false;
            out.detail += " worked index != 3;";
        }
        std::vector<Int> gen = local_generator(c2, whole, 3, 3, 2);
        if (gen != std::vector<Int>{2, 8}) {
            out.pass = false;
            out.detail += " worked local generator != 2 - s mod 9;";
        }
        return out;
    });

    criterion(6, "kernel chain with fixed-class and telescoping checks, |A| <= 16", 60.0,
              [] { return merge({suite_criteria_a(16), suite_criteria_b(16),
                                 suite_chain_all(16)}); });

    criterion(7, "order-four witnesses for the conductor-four search up to 100", 10.0, [] {
        Outcome out;
        QuadField k(-1);
        std::vector<SearchWitness> ws = explicit_prime_search_witnessed(k, 100);
        std::vector<Int> expect = {7, 23, 31, 47, 71, 79};
        if (ws.size() != expect.size()) {
            out.pass = false;
            out.detail = "wrong prime count";
            return out;
        }
        for (size_t i = 0; i < ws.size(); ++i)
            if (ws[i].p != expect[i] || !ws[i].has_order_four) {
                out.pass = false;
                out.detail = "prime list or witness mismatch at p = " + std::to_string(ws[i].p);
                return out;
            }
        VpResult v7 = vp_structure(k, 7);
        if (v7.vp_factors != std::vector<Int>{12}) {
            out.pass = false;
            out.detail = "V_7 is not cyclic of order 12";
        }
        return out;
    });

    criterion(8, "odd unit quotients at inert primes three mod four, p <= 100", 10.0,
              [] { return from_suite(suite_remark(100)); });

    criterion(9, "quadratic reciprocity with both supplements, primes <= 200", 5.0,
              [] { return from_suite(suite_qr_laws(200)); });

    criterion(10, "two-power bound grid with the evenness flag, p <= 50", 0.0,
              [] { return from_suite(suite_chevalley_lem3(50)); });

    criterion(11, "cyclic quotients of power groups keep full corank, n <= 6, k <= 3", 0.0,
              [] { return from_suite(suite_cyclic_power_quotient(6, 3)); });

    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
