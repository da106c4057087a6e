#include "padicint.h"

#include <cstring>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pint/catalog.hpp"
#include "pint/families.hpp"
#include "pint/integrate.hpp"
#include "pint/poly.hpp"
#include "pint/rational.hpp"
#include "pint/series.hpp"

struct pint_rat {
    pint::Rational v;
};
struct pint_poly {
    pint::Polynomial v;
};
struct pint_series {
    pint::TruncatedSeries v;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
int guard(F&& f) {
    try {
        f();
        return PINT_OK;
    } catch (const std::domain_error& e) {
        t_last_error = e.what();
        return PINT_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        t_last_error = e.what();
        return PINT_ERR_INVALID;
    } catch (const std::logic_error& e) {
        t_last_error = e.what();
        return PINT_ERR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return PINT_ERR_INTERNAL;
    }
}

int require(bool cond, const char* msg) {
    if (!cond) {
        t_last_error = msg;
        return PINT_ERR_INVALID;
    }
    return PINT_OK;
}

pint::MeasureKind measure_by_name(const char* name) {
    std::string m = name ? name : "";
    if (m == "volkenborn") return pint::MeasureKind::Haar;
    if (m == "fermionic") return pint::MeasureKind::MinusOne;
    throw std::invalid_argument("unknown measure: " + m);
}

}  // namespace

extern "C" {

const char* pint_version(void) { return "1.0.0"; }

const char* pint_last_error(void) { return t_last_error.c_str(); }

void pint_string_free(char* s) { std::free(s); }

int pint_rat_parse(const char* text, pint_rat** out) {
    if (int rc = require(text && out, "null argument")) return rc;
    return guard([&] {
        *out = new pint_rat{pint::Rational::parse(text)};
    });
}

int pint_rat_from_ll(long long value, pint_rat** out) {
    if (int rc = require(out != nullptr, "null argument")) return rc;
    *out = new pint_rat{pint::Rational(value)};
    return PINT_OK;
}

void pint_rat_free(pint_rat* r) { delete r; }

int pint_rat_to_string(const pint_rat* r, char** out) {
    if (int rc = require(r && out, "null argument")) return rc;
    return guard([&] { *out = dup_string(r->v.to_string()); });
}

#define PINT_RAT_BINOP(name, expr)                                        \
    int name(const pint_rat* a, const pint_rat* b, pint_rat** out) {      \
        if (int rc = require(a && b && out, "null argument")) return rc;  \
        return guard([&] { *out = new pint_rat{expr}; });                 \
    }

PINT_RAT_BINOP(pint_rat_add, a->v + b->v)
PINT_RAT_BINOP(pint_rat_sub, a->v - b->v)
PINT_RAT_BINOP(pint_rat_mul, a->v * b->v)
PINT_RAT_BINOP(pint_rat_div, a->v / b->v)
#undef PINT_RAT_BINOP

int pint_rat_neg(const pint_rat* a, pint_rat** out) {
    if (int rc = require(a && out, "null argument")) return rc;
    return guard([&] { *out = new pint_rat{-a->v}; });
}

int pint_rat_pow(const pint_rat* a, long long e, pint_rat** out) {
    if (int rc = require(a && out, "null argument")) return rc;
    return guard([&] { *out = new pint_rat{a->v.pow(e)}; });
}

int pint_rat_cmp(const pint_rat* a, const pint_rat* b, int* out) {
    if (int rc = require(a && b && out, "null argument")) return rc;
    *out = a->v < b->v ? -1 : (b->v < a->v ? 1 : 0);
    return PINT_OK;
}

int pint_rat_ord_p(const pint_rat* x, unsigned prime, int* is_infinite, long long* ord) {
    if (int rc = require(x && is_infinite && ord, "null argument")) return rc;
    return guard([&] {
        pint::PadicValuation v = pint::ord_p(x->v, prime);
        *is_infinite = v.infinite ? 1 : 0;
        *ord = v.infinite ? 0 : v.value;
    });
}

int pint_rat_norm_p(const pint_rat* x, unsigned prime, pint_rat** out) {
    if (int rc = require(x && out, "null argument")) return rc;
    return guard([&] { *out = new pint_rat{pint::p_norm(x->v, prime)}; });
}

int pint_series_std(const char* kind, int order, pint_series** out) {
    if (int rc = require(kind && out, "null argument")) return rc;
    return guard([&] {
        std::string k = kind;
        pint::StdSeries which;
        if (k == "exp") which = pint::StdSeries::Exp;
        else if (k == "log1p") which = pint::StdSeries::Log1p;
        else if (k == "t-over-log1p") which = pint::StdSeries::TOverLog1p;
        else throw std::invalid_argument("unknown series kind: " + k);
        *out = new pint_series{pint::std_series(which, order)};
    });
}

int pint_series_binom_pow(const pint_rat* alpha, int order, pint_series** out) {
    if (int rc = require(alpha && out, "null argument")) return rc;
    return guard([&] { *out = new pint_series{pint::binom_pow(alpha->v, order)}; });
}

void pint_series_free(pint_series* s) { delete s; }

int pint_series_order(const pint_series* s, int* out) {
    if (int rc = require(s && out, "null argument")) return rc;
    *out = s->v.order();
    return PINT_OK;
}

int pint_series_coeff(const pint_series* s, int n, pint_rat** out) {
    if (int rc = require(s && out, "null argument")) return rc;
    return guard([&] {
        if (n < 0 || n > s->v.order()) throw std::invalid_argument("coefficient index out of range");
        *out = new pint_rat{s->v.coeff(n)};
    });
}

int pint_poly_parse(const char* text, pint_poly** out) {
    if (int rc = require(text && out, "null argument")) return rc;
    try {
        *out = new pint_poly{pint::parse_polynomial(text)};
        return PINT_OK;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return PINT_ERR_PARSE;
    }
}

void pint_poly_free(pint_poly* p) { delete p; }

int pint_poly_to_string(const pint_poly* p, char** out) {
    if (int rc = require(p && out, "null argument")) return rc;
    return guard([&] { *out = dup_string(p->v.to_string()); });
}

int pint_poly_eval(const pint_poly* p, const pint_rat* x, pint_rat** out) {
    if (int rc = require(p && x && out, "null argument")) return rc;
    return guard([&] { *out = new pint_rat{p->v.evaluate(x->v)}; });
}

int pint_poly_add(const pint_poly* a, const pint_poly* b, pint_poly** out) {
    if (int rc = require(a && b && out, "null argument")) return rc;
    return guard([&] { *out = new pint_poly{a->v + b->v}; });
}

int pint_poly_mul(const pint_poly* a, const pint_poly* b, pint_poly** out) {
    if (int rc = require(a && b && out, "null argument")) return rc;
    return guard([&] { *out = new pint_poly{a->v * b->v}; });
}

int pint_poly_integral(const pint_poly* p, const char* measure, pint_rat** out) {
    if (int rc = require(p && measure && out, "null argument")) return rc;
    return guard([&] {
        pint::MeasureKind kind = measure_by_name(measure);
        pint::Rational v = (kind == pint::MeasureKind::Haar) ? pint::volkenborn_value(p->v)
                                                             : pint::fermionic_value(p->v);
        *out = new pint_rat{std::move(v)};
    });
}

int pint_poly_finite_sum(const pint_poly* p, const char* measure, unsigned prime, int level,
                         pint_rat** out) {
    if (int rc = require(p && measure && out, "null argument")) return rc;
    return guard([&] {
        pint::MeasureKind kind = measure_by_name(measure);
        pint::Rational v = (kind == pint::MeasureKind::Haar)
                               ? pint::riemann_sum(p->v, prime, level)
                               : pint::alternating_sum(p->v, prime, level);
        *out = new pint_rat{std::move(v)};
    });
}

int pint_triangle_entry(const char* family, long long n, long long k, const pint_rat* param,
                        pint_rat** out) {
    if (int rc = require(family && out, "null argument")) return rc;
    return guard([&] {
        // render_triangle owns the name mapping; reuse it entry-wise through a
        // one-row render would be wasteful, so map names here too.
        std::string f = family;
        pint::Rational v;
        if (f == "stirling1") v = pint::triangle(pint::Triangle::S1, n, k);
        else if (f == "stirling2") v = pint::triangle(pint::Triangle::S2, n, k);
        else if (f == "stirling1-unsigned") v = pint::triangle(pint::Triangle::CUnsigned, n, k);
        else if (f == "lah") v = pint::triangle(pint::Triangle::Lah, n, k);
        else if (f == "lah-unsigned") v = pint::triangle(pint::Triangle::LahUnsigned, n, k);
        else if (f == "central-t") v = pint::triangle(pint::Triangle::CfSmall, n, k);
        else if (f == "central-T") v = pint::triangle(pint::Triangle::CfBig, n, k);
        else if (f == "central-even-t") v = pint::even_central_t(n, k);
        else if (f == "central-even-T") v = pint::even_central_T(n, k);
        else if (f == "lambda-stirling2") {
            if (!param) throw std::invalid_argument("lambda-stirling2 needs a parameter");
            v = pint::stirling2_lambda(n, k, param->v);
        } else {
            throw std::invalid_argument("unknown triangle family: " + f);
        }
        *out = new pint_rat{std::move(v)};
    });
}

int pint_sequence_value(const char* family, long long n, pint_rat** out) {
    if (int rc = require(family && out, "null argument")) return rc;
    return guard([&] {
        std::string f = family;
        pint::Sequence s;
        if (f == "bernoulli") s = pint::Sequence::Bernoulli;
        else if (f == "euler") s = pint::Sequence::Euler;
        else if (f == "euler-star") s = pint::Sequence::EulerStar;
        else if (f == "daehee") s = pint::Sequence::Daehee1;
        else if (f == "daehee2") s = pint::Sequence::Daehee2;
        else if (f == "changhee") s = pint::Sequence::Changhee1;
        else if (f == "changhee2") s = pint::Sequence::Changhee2;
        else if (f == "harmonic") s = pint::Sequence::Harmonic;
        else if (f == "fubini") s = pint::Sequence::Fubini;
        else if (f == "cauchy-b2") s = pint::Sequence::CauchyB2;
        else if (f == "y-b") s = pint::Sequence::YOfB;
        else if (f == "y-e") s = pint::Sequence::YOfE;
        else throw std::invalid_argument("unknown sequence family: " + f);
        *out = new pint_rat{pint::sequence(s, n)};
    });
}

int pint_render_triangle(const char* family, int max_n, const pint_rat* param,
                         const char* format, char** out) {
    if (int rc = require(family && format && out, "null argument")) return rc;
    return guard([&] {
        const pint::Rational* p = param ? &param->v : nullptr;
        *out = dup_string(pint::render_triangle(family, max_n, p, format));
    });
}

int pint_render_sequence(const char* family, int max_n, const char* format, char** out) {
    if (int rc = require(family && format && out, "null argument")) return rc;
    return guard([&] { *out = dup_string(pint::render_sequence(family, max_n, format)); });
}

int pint_emit_table(const char* which, int max_rows, const char* format, char** out) {
    if (int rc = require(which && format && out, "null argument")) return rc;
    return guard([&] { *out = dup_string(pint::emit_table(which, max_rows, format)); });
}

int pint_catalog_ids(char** out) {
    if (int rc = require(out != nullptr, "null argument")) return rc;
    return guard([&] {
        std::ostringstream s;
        for (const auto& row : pint::manifest()) s << row.id << '\n';
        *out = dup_string(s.str());
    });
}

int pint_verify(const char* ids_csv, int max_n, const char* format, int include_errata,
                char** report, int* fail_count) {
    if (int rc = require(format && report && fail_count, "null argument")) return rc;
    return guard([&] {
        std::vector<std::string> ids;
        if (ids_csv && *ids_csv) {
            std::istringstream in(ids_csv);
            std::string id;
            while (std::getline(in, id, ',')) {
                if (!id.empty()) ids.push_back(id);
            }
        }
        pint::RunOptions opts;
        if (max_n > 0) opts.max_n = max_n;
        std::vector<pint::IdentityResult> results = pint::run_catalog(ids, opts);
        int fails = 0;
        for (const auto& r : results) {
            if (r.status == pint::CheckStatus::Fail) ++fails;
        }
        *fail_count = fails;
        std::string fmt = format;
        if (fmt == "tsv") {
            std::ostringstream outs;
            for (const auto& r : results) {
                outs << r.id << '\t' << r.eq << '\t' << pint::status_name(r.status) << '\t'
                     << r.tested;
                if (r.counterexample) {
                    outs << '\t' << r.counterexample->params
                         << " lhs=" << r.counterexample->lhs
                         << " rhs=" << r.counterexample->rhs;
                }
                outs << '\n';
                if (include_errata && r.status == pint::CheckStatus::ErratumCandidate) {
                    for (const auto& line : r.report) outs << "  # " << line << '\n';
                }
            }
            *report = dup_string(outs.str());
        } else if (fmt == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : results) {
                nlohmann::json j;
                j["id"] = r.id;
                j["paper_eq"] = r.eq;
                j["tested"] = r.tested;
                j["status"] = pint::status_name(r.status);
                if (r.counterexample) {
                    j["counterexample"] = {{"params", r.counterexample->params},
                                           {"lhs", r.counterexample->lhs},
                                           {"rhs", r.counterexample->rhs}};
                }
                if (include_errata && r.status == pint::CheckStatus::ErratumCandidate)
                    j["report"] = r.report;
                arr.push_back(std::move(j));
            }
            *report = dup_string(arr.dump(2) + "\n");
        } else {
            throw std::invalid_argument("unknown report format: " + fmt);
        }
    });
}

}  // extern "C"
