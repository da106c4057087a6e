// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every comparison is an exact rational equality; the only numeric bounds
// are the wall-clock budgets stated alongside the criteria.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pint/catalog.hpp"
#include "pint/families.hpp"
#include "pint/integrate.hpp"
#include "pint/poly.hpp"

using namespace pint;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what
              << std::endl;
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing golden file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Rng {
    std::uint64_t s = 0x1234abcd5678ef01ull;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

void criterion_1_golden_tables() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    const std::string dir = PINT_GOLDEN_DIR;
    const std::pair<const char*, const char*> tables[] = {
        {"stirling1", "/stirling1.tsv"},
        {"stirling2", "/stirling2.tsv"},
        {"lah-unsigned", "/lah_unsigned.tsv"},
        {"central-even-t", "/central_even_t.tsv"},
        {"central-even-T", "/central_even_T.tsv"},
    };
    try {
        for (const auto& [name, file] : tables) {
            int rows = std::string(name).rfind("central", 0) == 0 ? 6 : 5;
            std::string emitted = emit_table(name, rows, "tsv");
            std::string golden = read_file(dir + file);
            if (emitted != golden) {
                ok = false;
                detail = std::string(" (mismatch in ") + name + ")";
                break;
            }
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string(" (") + e.what() + ")";
    }
    double dt = seconds_since(start);
    if (dt >= 1.0) {
        ok = false;
        detail += " (too slow)";
    }
    std::ostringstream msg;
    msg << "reference tables match the printed tables byte-for-byte" << detail << " ["
        << dt << "s]";
    report(1, ok, msg.str());
}

void criterion_2_value_spot_set() {
    bool ok = true;
    ok = ok && bernoulli(12) == Rational(-691, 2730);
    ok = ok && bernoulli(20) == Rational(-174611, 330);
    ok = ok && sequence(Sequence::EulerStar, 10) == Rational(-50521);
    ok = ok && euler(3) == Rational(1, 4);
    for (long long n = 0; n <= 20 && ok; ++n) {
        Rational d = factorial(n) / Rational(n + 1);
        Rational ch = factorial(n) / Rational(2).pow(n);
        if (n % 2 != 0) {
            d = -d;
            ch = -ch;
        }
        ok = ok && sequence(Sequence::Daehee1, n) == d;
        ok = ok && sequence(Sequence::Changhee1, n) == ch;
    }
    report(2, ok, "value spot-set (B_12, B_20, E*_10, E_3, Daehee and Changhee closed forms)");
}

void criterion_3_dual_route() {
    auto start = std::chrono::steady_clock::now();
    Rng rng;
    bool ok = true;
    int disagreements = 0;
    for (int trial = 0; trial < 200; ++trial) {
        long long d = rng.range(0, 12);
        std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
        for (auto& v : c) v = Rational(rng.range(-100, 100), rng.range(1, 100));
        Polynomial p(Basis::Monomial, std::move(c));
        try {
            if (!volkenborn(p).agrees) ++disagreements;
            if (!fermionic(p).agrees) ++disagreements;
        } catch (const std::exception&) {
            ++disagreements;
        }
    }
    double dt = seconds_since(start);
    ok = disagreements == 0 && dt < 10.0;
    std::ostringstream msg;
    msg << "dual-route agreement on 200 random polynomials, both measures ("
        << disagreements << " disagreements) [" << dt << "s]";
    report(3, ok, msg.str());
}

void criterion_4_full_catalog() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        RunOptions opts;  // default ranges
        std::vector<IdentityResult> results = run_catalog({}, opts);
        int errata_with_reports = 0;
        for (const auto& r : results) {
            if (r.status == CheckStatus::Fail) {
                ok = false;
                detail += " FAIL:" + r.id;
                if (r.counterexample)
                    detail += "(" + r.counterexample->params + " lhs=" + r.counterexample->lhs +
                              " rhs=" + r.counterexample->rhs + ")";
            } else if (r.status == CheckStatus::ErratumCandidate) {
                if (!r.report.empty()) ++errata_with_reports;
                else {
                    ok = false;
                    detail += " EMPTY_REPORT:" + r.id;
                }
            }
        }
        if (errata_with_reports != 2) {
            ok = false;
            detail += " (expected exactly 2 populated erratum reports)";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string(" (") + e.what() + ")";
    }
    double dt = seconds_since(start);
    if (dt >= 300.0) {
        ok = false;
        detail += " (too slow)";
    }
    std::ostringstream msg;
    msg << "full identity catalog passes at default ranges" << detail << " [" << dt << "s]";
    report(4, ok, msg.str());
}

void criterion_5_y_sequences() {
    bool ok = true;
    std::string detail;
    // Y(n,B) = sum_k t(2n,2k) B_{2k} and B_{2n} = sum_k T(2n,2k) Y(k,B), n <= 8
    for (long long n = 0; n <= 8 && ok; ++n) {
        Rational rhs(0);
        for (long long k = 0; k <= n; ++k) rhs += even_central_t(n, k) * bernoulli(2 * k);
        if (sequence(Sequence::YOfB, n) != rhs) {
            ok = false;
            detail = " (t-expansion of Y(n,B) failed at n=" + std::to_string(n) + ")";
        }
        Rational back(0);
        for (long long k = 0; k <= n; ++k)
            back += even_central_T(n, k) * sequence(Sequence::YOfB, k);
        if (ok && bernoulli(2 * n) != back) {
            ok = false;
            detail = " (B_{2n} recurrence failed at n=" + std::to_string(n) + ")";
        }
    }
    // Y(n,E) = 0 for 1 <= n <= 8
    for (long long n = 1; n <= 8 && ok; ++n) {
        if (sequence(Sequence::YOfE, n) != Rational(0)) {
            ok = false;
            detail = " (Y(n,E) nonzero at n=" + std::to_string(n) + ")";
        }
    }
    // displayed expansions, coefficient for coefficient; the x^4 entry of
    // row 5 is -820 (the -870 in circulation is a misprint: expanding
    // x^2(x^2-1)(x^2-4)(x^2-9)(x^2-16) gives -(36+64+144+576) = -820, and
    // the inverse relation against the T matrix forces the same value)
    const std::vector<std::vector<long long>> printed = {
        {1},
        {0, 1},
        {0, -1, 1},
        {0, 4, -5, 1},
        {0, -36, 49, -14, 1},
        {0, 576, -820, 273, -30, 1},
        {0, -14400, 21076, -7645, 1023, -55, 1},
    };
    for (long long n = 0; n < static_cast<long long>(printed.size()) && ok; ++n) {
        const auto& row = printed[static_cast<std::size_t>(n)];
        for (long long k = 0; k < static_cast<long long>(row.size()) && ok; ++k) {
            if (even_central_t(n, k) != Rational(row[static_cast<std::size_t>(k)])) {
                ok = false;
                detail = " (printed coefficient mismatch at n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")";
            }
        }
        Rational expansion(0);
        for (long long k = 0; k < static_cast<long long>(row.size()); ++k)
            expansion += Rational(row[static_cast<std::size_t>(k)]) * bernoulli(2 * k);
        if (ok && sequence(Sequence::YOfB, n) != expansion) {
            ok = false;
            detail = " (printed expansion of Y(n,B) failed at n=" + std::to_string(n) + ")";
        }
    }
    report(5, ok,
           "Y-sequence theorems and displayed expansions (row-5 x^4 coefficient "
           "-820, correcting a known misprint)" +
               detail);
}

void criterion_6_convergence() {
    bool ok = true;
    std::string detail;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (long long n = 0; n <= 6 && ok; ++n) {
            Polynomial f = Polynomial::basis_element(Basis::Monomial, n);
            PadicValuation prev_r = PadicValuation::of(-1000000);
            PadicValuation prev_a = PadicValuation::of(-1000000);
            for (int level = 1; level <= 5 && ok; ++level) {
                PadicValuation vr = ord_p(riemann_sum(f, p, level) - bernoulli(n), p);
                PadicValuation va = ord_p(alternating_sum(f, p, level) - euler(n), p);
                // strictly increasing; an infinite valuation (exact value)
                // satisfies every later comparison by convention
                bool r_ok = prev_r.infinite ? vr.infinite : prev_r < vr;
                bool a_ok = prev_a.infinite ? va.infinite : prev_a < va;
                if (!r_ok || !a_ok) {
                    ok = false;
                    detail = " (stalled at p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                             ", N=" + std::to_string(level) + ")";
                }
                prev_r = vr;
                prev_a = va;
            }
        }
    }
    report(6, ok,
           "p-adic convergence of finite Riemann and alternating sums is strictly "
           "increasing" +
               detail);
}

void criterion_7_distribution_compat() {
    bool ok = true;
    std::string detail;
    for (std::uint32_t p : {3u, 5u}) {
        for (int level = 1; level <= 2 && ok; ++level) {
            long long pn = 1;
            for (int i = 0; i < level; ++i) pn *= p;
            for (long long a = 0; a < pn && ok; ++a) {
                std::vector<Measure> measures = {Measure::haar(p), Measure::mazur(p),
                                                 Measure::dirac(p, Rational(7))};
                for (long long k = 0; k <= 4; ++k)
                    measures.push_back(Measure::bernoulli_k(p, k));
                for (const Measure& m : measures) {
                    if (additivity_residual(m, a, level) != Rational(0)) {
                        ok = false;
                        detail = " (nonzero residual at p=" + std::to_string(p) +
                                 ", N=" + std::to_string(level) + ", a=" + std::to_string(a) +
                                 ")";
                        break;
                    }
                }
            }
        }
    }
    report(7, ok, "distribution refinement residuals vanish" + detail);
}

}  // namespace

int main() {
    criterion_1_golden_tables();
    criterion_2_value_spot_set();
    criterion_3_dual_route();
    criterion_4_full_catalog();
    criterion_5_y_sequences();
    criterion_6_convergence();
    criterion_7_distribution_compat();
    if (g_failures != 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria satisfied" << std::endl;
    return 0;
}
