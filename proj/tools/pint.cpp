// pint - command line front end for the padicint shared library.
// Talks to the core exclusively through the C API in padicint.h.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padicint.h"

namespace {

[[noreturn]] void die(int rc) {
    std::cerr << "error: " << pint_last_error() << "\n";
    std::exit(rc == PINT_OK ? 1 : 2);
}

struct StringOut {
    char* s = nullptr;
    ~StringOut() { pint_string_free(s); }
};

struct RatHandle {
    pint_rat* r = nullptr;
    ~RatHandle() { pint_rat_free(r); }
};

struct PolyHandle {
    pint_poly* p = nullptr;
    ~PolyHandle() { pint_poly_free(p); }
};

std::string rat_str(const pint_rat* r) {
    StringOut s;
    if (int rc = pint_rat_to_string(r, &s.s)) die(rc);
    return s.s;
}

int cmd_series(const std::string& kind, int order) {
    pint_series* s = nullptr;
    if (int rc = pint_series_std(kind.c_str(), order, &s)) die(rc);
    for (int n = 0; n <= order; ++n) {
        RatHandle c;
        if (int rc = pint_series_coeff(s, n, &c.r)) die(rc);
        std::cout << n << '\t' << rat_str(c.r) << '\n';
    }
    pint_series_free(s);
    return 0;
}

int cmd_table(const std::string& family, int max_n, const std::string& param,
              const std::string& format) {
    RatHandle p;
    if (!param.empty()) {
        if (int rc = pint_rat_parse(param.c_str(), &p.r)) die(rc);
    }
    StringOut out;
    if (int rc = pint_render_triangle(family.c_str(), max_n, p.r, format.c_str(), &out.s))
        die(rc);
    std::cout << out.s;
    return 0;
}

int cmd_seq(const std::string& family, int max_n, const std::string& format) {
    StringOut out;
    if (int rc = pint_render_sequence(family.c_str(), max_n, format.c_str(), &out.s)) die(rc);
    std::cout << out.s;
    return 0;
}

int cmd_poly_parse(const std::string& text) {
    PolyHandle p;
    if (int rc = pint_poly_parse(text.c_str(), &p.p)) die(rc);
    StringOut s;
    if (int rc = pint_poly_to_string(p.p, &s.s)) die(rc);
    std::cout << s.s << '\n';
    return 0;
}

int cmd_integrate(const std::string& measure, const std::string& poly_text,
                  const std::string& approx) {
    PolyHandle p;
    if (int rc = pint_poly_parse(poly_text.c_str(), &p.p)) die(rc);
    RatHandle exact;
    if (int rc = pint_poly_integral(p.p, measure.c_str(), &exact.r)) die(rc);
    std::cout << "exact\t" << rat_str(exact.r) << '\n';
    if (!approx.empty()) {
        std::size_t comma = approx.find(',');
        if (comma == std::string::npos) {
            std::cerr << "error: --approx expects p,N\n";
            return 2;
        }
        unsigned prime = static_cast<unsigned>(std::stoul(approx.substr(0, comma)));
        int level = std::stoi(approx.substr(comma + 1));
        RatHandle finite;
        if (int rc = pint_poly_finite_sum(p.p, measure.c_str(), prime, level, &finite.r))
            die(rc);
        std::cout << "finite(p=" << prime << ",N=" << level << ")\t" << rat_str(finite.r)
                  << '\n';
        RatHandle diff;
        if (int rc = pint_rat_sub(finite.r, exact.r, &diff.r)) die(rc);
        int inf = 0;
        long long ord = 0;
        if (int rc = pint_rat_ord_p(diff.r, prime, &inf, &ord)) die(rc);
        std::cout << "ord_" << prime << "(finite - exact)\t" << (inf ? "INF" : std::to_string(ord))
                  << '\n';
    }
    return 0;
}

int cmd_verify(const std::vector<std::string>& ids, int max_n, const std::string& format,
               bool errata) {
    std::string csv;
    for (const auto& id : ids) {
        if (!csv.empty()) csv += ',';
        csv += id;
    }
    StringOut report;
    int fails = 0;
    if (int rc = pint_verify(csv.empty() ? nullptr : csv.c_str(), max_n, format.c_str(),
                             errata ? 1 : 0, &report.s, &fails))
        die(rc);
    std::cout << report.s;
    return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic integral engine and identity verifier"};
    app.require_subcommand(1);

    auto* series = app.add_subcommand("series", "print standard series coefficients");
    std::string series_kind;
    int series_order = 16;
    series->add_option("kind", series_kind, "exp | log1p | t-over-log1p")->required();
    series->add_option("--order", series_order, "truncation order K");

    auto* table = app.add_subcommand("table", "print a special-number triangle");
    std::string table_family, table_param, table_format = "tsv";
    int table_max = 8;
    table->add_option("family", table_family, "triangle family name")->required();
    table->add_option("--max", table_max, "largest row index N");
    table->add_option("--param", table_param, "rational parameter (lambda families)");
    table->add_option("--format", table_format, "tsv | json");

    auto* seq = app.add_subcommand("seq", "print a special-number sequence");
    std::string seq_family, seq_format = "tsv";
    int seq_max = 12;
    seq->add_option("family", seq_family, "sequence family name")->required();
    seq->add_option("--max", seq_max, "largest index N");
    seq->add_option("--format", seq_format, "tsv | json");

    auto* poly = app.add_subcommand("poly", "polynomial utilities");
    auto* poly_parse = poly->add_subcommand("parse", "parse and print canonical form");
    std::string poly_text;
    poly_parse->add_option("expr", poly_text, "polynomial expression")->required();

    auto* integ = app.add_subcommand("integrate", "exact p-adic integral of a polynomial");
    std::string integ_measure = "volkenborn", integ_poly, integ_approx;
    integ->add_option("--measure", integ_measure, "volkenborn | fermionic");
    integ->add_option("--poly", integ_poly, "polynomial expression")->required();
    integ->add_option("--approx", integ_approx, "p,N: also print the finite level-N sum");

    auto* verify = app.add_subcommand("verify", "run the identity catalog");
    std::vector<std::string> verify_ids;
    int verify_max_n = 0;
    std::string verify_format = "tsv";
    bool verify_errata = false;
    verify->add_option("--id", verify_ids, "check only these ids (repeatable)");
    verify->add_option("--max-n", verify_max_n, "principal index bound (default 10)");
    verify->add_option("--format", verify_format, "tsv | json");
    verify->add_flag("--errata", verify_errata, "include erratum-candidate reports");

    auto* tables = app.add_subcommand("reference-table", "byte-stable reference tables");
    std::string ref_which, ref_format = "tsv";
    int ref_max = 5;
    tables->add_option("which", ref_which,
                       "stirling1 | stirling2 | lah-unsigned | central-even-t | central-even-T")
        ->required();
    tables->add_option("--max", ref_max, "largest row index");
    tables->add_option("--format", ref_format, "tsv | json");

    CLI11_PARSE(app, argc, argv);

    if (series->parsed()) return cmd_series(series_kind, series_order);
    if (table->parsed()) return cmd_table(table_family, table_max, table_param, table_format);
    if (seq->parsed()) return cmd_seq(seq_family, seq_max, seq_format);
    if (poly->parsed() && poly_parse->parsed()) return cmd_poly_parse(poly_text);
    if (integ->parsed()) return cmd_integrate(integ_measure, integ_poly, integ_approx);
    if (verify->parsed()) return cmd_verify(verify_ids, verify_max_n, verify_format, verify_errata);
    if (tables->parsed()) {
        StringOut out;
        if (int rc = pint_emit_table(ref_which.c_str(), ref_max, ref_format.c_str(), &out.s))
            die(rc);
        std::cout << out.s;
        return 0;
    }
    return 1;
}
