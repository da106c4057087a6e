#include <doctest.h>

#include <string>

#include "padicint.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    pint_string_free(s);
    return out;
}

std::string rat_text(pint_rat* r) {
    char* s = nullptr;
    REQUIRE(pint_rat_to_string(r, &s) == PINT_OK);
    std::string out = take(s);
    pint_rat_free(r);
    return out;
}

}  // namespace

TEST_CASE("rational handles") {
    pint_rat* a = nullptr;
    pint_rat* b = nullptr;
    REQUIRE(pint_rat_parse("1/6", &a) == PINT_OK);
    REQUIRE(pint_rat_parse("-1/2", &b) == PINT_OK);
    pint_rat* sum = nullptr;
    REQUIRE(pint_rat_add(a, b, &sum) == PINT_OK);
    CHECK(rat_text(sum) == "-1/3");
    pint_rat* quot = nullptr;
    pint_rat* zero = nullptr;
    REQUIRE(pint_rat_from_ll(0, &zero) == PINT_OK);
    CHECK(pint_rat_div(a, zero, &quot) == PINT_ERR_DOMAIN);
    CHECK(std::string(pint_last_error()).find("zero") != std::string::npos);
    int cmp = 0;
    REQUIRE(pint_rat_cmp(b, a, &cmp) == PINT_OK);
    CHECK(cmp == -1);
    CHECK(pint_rat_parse("abc", nullptr) == PINT_ERR_INVALID);
    pint_rat* bad = nullptr;
    CHECK(pint_rat_parse("abc", &bad) != PINT_OK);
    pint_rat_free(a);
    pint_rat_free(b);
    pint_rat_free(zero);
}

TEST_CASE("valuation and norm through the C surface") {
    pint_rat* x = nullptr;
    REQUIRE(pint_rat_parse("50", &x) == PINT_OK);
    int inf = 0;
    long long ord = 0;
    REQUIRE(pint_rat_ord_p(x, 5, &inf, &ord) == PINT_OK);
    CHECK(inf == 0);
    CHECK(ord == 2);
    pint_rat* nrm = nullptr;
    REQUIRE(pint_rat_norm_p(x, 5, &nrm) == PINT_OK);
    CHECK(rat_text(nrm) == "1/25");
    CHECK(pint_rat_ord_p(x, 6, &inf, &ord) == PINT_ERR_INVALID);
    pint_rat* zero = nullptr;
    REQUIRE(pint_rat_from_ll(0, &zero) == PINT_OK);
    REQUIRE(pint_rat_ord_p(zero, 7, &inf, &ord) == PINT_OK);
    CHECK(inf == 1);
    pint_rat_free(zero);
    pint_rat_free(x);
}

TEST_CASE("series handles") {
    pint_series* s = nullptr;
    REQUIRE(pint_series_std("log1p", 4, &s) == PINT_OK);
    int order = 0;
    REQUIRE(pint_series_order(s, &order) == PINT_OK);
    CHECK(order == 4);
    pint_rat* c3 = nullptr;
    REQUIRE(pint_series_coeff(s, 3, &c3) == PINT_OK);
    CHECK(rat_text(c3) == "1/3");
    pint_rat* out_of_range = nullptr;
    CHECK(pint_series_coeff(s, 9, &out_of_range) == PINT_ERR_INVALID);
    pint_series_free(s);
    CHECK(pint_series_std("sinh", 4, &s) == PINT_ERR_INVALID);
}

TEST_CASE("polynomial parse, canonical text, integrals") {
    pint_poly* p = nullptr;
    REQUIRE(pint_poly_parse("x*ff(2)", &p) == PINT_OK);
    char* text = nullptr;
    REQUIRE(pint_poly_to_string(p, &text) == PINT_OK);
    CHECK(take(text) == "x^3 - x^2");
    pint_rat* v = nullptr;
    REQUIRE(pint_poly_integral(p, "volkenborn", &v) == PINT_OK);
    CHECK(rat_text(v) == "-1/6");
    pint_rat* f = nullptr;
    REQUIRE(pint_poly_integral(p, "fermionic", &f) == PINT_OK);
    CHECK(rat_text(f) == "1/4");
    pint_rat* finite = nullptr;
    REQUIRE(pint_poly_finite_sum(p, "volkenborn", 3, 2, &finite) == PINT_OK);
    pint_rat_free(finite);
    CHECK(pint_poly_finite_sum(p, "fermionic", 2, 2, &finite) == PINT_ERR_INVALID);
    pint_poly* bad = nullptr;
    CHECK(pint_poly_parse("ff(", &bad) == PINT_ERR_PARSE);
    pint_poly_free(p);
}

TEST_CASE("tables and sequences through the C surface") {
    pint_rat* e = nullptr;
    REQUIRE(pint_triangle_entry("stirling1", 4, 2, nullptr, &e) == PINT_OK);
    CHECK(rat_text(e) == "11");
    pint_rat* lam = nullptr;
    REQUIRE(pint_rat_from_ll(1, &lam) == PINT_OK);
    pint_rat* ls = nullptr;
    REQUIRE(pint_triangle_entry("lambda-stirling2", 4, 2, lam, &ls) == PINT_OK);
    CHECK(rat_text(ls) == "7");
    pint_rat_free(lam);
    CHECK(pint_triangle_entry("lambda-stirling2", 4, 2, nullptr, &ls) == PINT_ERR_INVALID);
    pint_rat* b12 = nullptr;
    REQUIRE(pint_sequence_value("bernoulli", 12, &b12) == PINT_OK);
    CHECK(rat_text(b12) == "-691/2730");
    char* table = nullptr;
    REQUIRE(pint_emit_table("lah-unsigned", 5, "tsv", &table) == PINT_OK);
    std::string t = take(table);
    CHECK(t.find("0\t24\t36\t12\t1\t0") != std::string::npos);
    char* rendered = nullptr;
    REQUIRE(pint_render_sequence("changhee", 3, "tsv", &rendered) == PINT_OK);
    CHECK(take(rendered) == "0\t1\n1\t-1/2\n2\t1/2\n3\t-3/4\n");
    char* tri = nullptr;
    REQUIRE(pint_render_triangle("central-t", 3, nullptr, "tsv", &tri) == PINT_OK);
    CHECK(take(tri) == "1\n0\t1\n0\t0\t1\n0\t-1/4\t0\t1\n");
    CHECK(pint_render_triangle("nope", 3, nullptr, "tsv", &tri) == PINT_ERR_INVALID);
}

TEST_CASE("verification through the C surface") {
    char* ids = nullptr;
    REQUIRE(pint_catalog_ids(&ids) == PINT_OK);
    std::string id_list = take(ids);
    CHECK(id_list.find("SEQ.YB_CF\n") != std::string::npos);
    char* report = nullptr;
    int fails = -1;
    REQUIRE(pint_verify("VOLK.C7,FERM.EST3", 6, "tsv", 0, &report, &fails) == PINT_OK);
    std::string rep = take(report);
    CHECK(fails == 0);
    CHECK(rep.find("VOLK.C7\t(C7)\tPASS\t7") != std::string::npos);
    REQUIRE(pint_verify("FAC.SCHLOMILCH", 6, "json", 1, &report, &fails) == PINT_OK);
    rep = take(report);
    CHECK(fails == 0);
    CHECK(rep.find("ERRATUM_CANDIDATE") != std::string::npos);
    CHECK(rep.find("report") != std::string::npos);
    CHECK(pint_verify("NO.SUCH", 6, "tsv", 0, &report, &fails) == PINT_ERR_INVALID);
}
