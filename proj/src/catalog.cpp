#include "pint/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pint/families.hpp"
#include "src/manifest_embedded.hpp"

namespace pint {

const std::vector<Rational>& CheckContext::lambda_samples() const {
    static const std::vector<Rational> s = {Rational(2), Rational(3), Rational(-2),
                                            Rational(1, 2)};
    return s;
}

const std::vector<Rational>& CheckContext::theta_samples() const {
    static const std::vector<Rational> s = {Rational(2), Rational(3)};
    return s;
}

bool CheckContext::point(const std::string& params, const Rational& lhs, const Rational& rhs) {
    if (failed) return false;
    ++tested;
    if (lhs != rhs) {
        failed = true;
        cx = Counterexample{params, lhs.to_string(), rhs.to_string()};
        return false;
    }
    return true;
}

void CheckContext::observe(const std::string& params, const Rational& lhs, const Rational& rhs) {
    ++tested;
    report.push_back(params + ": lhs=" + lhs.to_string() + " rhs=" + rhs.to_string() +
                     (lhs == rhs ? " (equal)" : " (differ)"));
}

void CheckContext::note(const std::string& line) { report.push_back(line); }

namespace {

std::vector<ManifestRow> parse_manifest_text(const std::string& text) {
    std::vector<ManifestRow> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t t1 = line.find('\t');
        std::size_t t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            throw std::runtime_error("malformed manifest line: " + line);
        rows.push_back(ManifestRow{line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1),
                                   line.substr(t2 + 1)});
    }
    return rows;
}

std::vector<ManifestRow> load_manifest() {
    std::string text;
    if (const char* path = std::getenv("PINT_MANIFEST")) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error(std::string("cannot open manifest file ") + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        text = detail::kEmbeddedManifest;
    }
    std::vector<ManifestRow> rows = parse_manifest_text(text);
    const auto& cat = identity_catalog();
    if (rows.size() != cat.size())
        throw std::runtime_error("manifest row count does not match the check registry");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].id != cat[i].id)
            throw std::runtime_error("manifest id mismatch at row " + std::to_string(i + 1) +
                                     ": " + rows[i].id + " vs " + cat[i].id);
    }
    return rows;
}

}  // namespace

const std::vector<ManifestRow>& manifest() {
    static const std::vector<ManifestRow> rows = load_manifest();
    return rows;
}

std::vector<IdentityResult> run_catalog(const std::vector<std::string>& ids,
                                        const RunOptions& opts) {
    const auto& cat = identity_catalog();
    manifest();  // validate registry against the shipped manifest up front
    std::vector<char> selected(cat.size(), ids.empty() ? 1 : 0);
    for (const auto& id : ids) {
        bool found = false;
        for (std::size_t i = 0; i < cat.size(); ++i) {
            if (cat[i].id == id) {
                selected[i] = 1;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("unknown identity id: " + id);
    }
    std::vector<IdentityResult> results;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        if (!selected[i]) continue;
        const IdentitySpec& spec = cat[i];
        CheckContext ctx(opts);
        spec.check(ctx);
        IdentityResult r;
        r.id = spec.id;
        r.eq = spec.eq;
        r.tested = ctx.tested;
        if (spec.erratum) {
            r.status = CheckStatus::ErratumCandidate;
            r.report = ctx.report;
        } else if (ctx.failed) {
            r.status = CheckStatus::Fail;
            r.counterexample = ctx.cx;
        } else {
            r.status = CheckStatus::Pass;
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::ErratumCandidate: return "ERRATUM_CANDIDATE";
    }
    return "?";
}

namespace {

std::vector<std::vector<Rational>> triangle_grid(Triangle fam, int rows, int cols) {
    std::vector<std::vector<Rational>> g;
    for (int n = 0; n < rows; ++n) {
        std::vector<Rational> row;
        for (int k = 0; k < cols; ++k) row.push_back(triangle(fam, n, k));
        g.push_back(std::move(row));
    }
    return g;
}

std::vector<std::vector<Rational>> even_central_grid(bool big, int size) {
    std::vector<std::vector<Rational>> g;
    for (int i = 0; i < size; ++i) {
        std::vector<Rational> row;
        for (int j = 0; j < size; ++j)
            row.push_back(big ? even_central_T(i, j) : even_central_t(i, j));
        g.push_back(std::move(row));
    }
    return g;
}

std::string grid_to_tsv(const std::vector<std::vector<Rational>>& g) {
    std::ostringstream out;
    for (const auto& row : g) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out << '\t';
            out << row[k].to_string();
        }
        out << '\n';
    }
    return out.str();
}

std::string grid_to_json(const std::string& name, const std::vector<std::vector<Rational>>& g) {
    nlohmann::json j;
    j["table"] = name;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : g) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& v : row) r.push_back(v.to_string());
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump() + "\n";
}

}  // namespace

std::string emit_table(const std::string& which, int max_rows, const std::string& format) {
    std::vector<std::vector<Rational>> g;
    if (which == "stirling1") {
        g = triangle_grid(Triangle::S1, max_rows + 1, max_rows + 1);
    } else if (which == "stirling2") {
        g = triangle_grid(Triangle::S2, max_rows + 1, max_rows + 1);
    } else if (which == "lah-unsigned") {
        g = triangle_grid(Triangle::LahUnsigned, max_rows + 1, max_rows + 1);
    } else if (which == "central-even-t") {
        g = even_central_grid(false, max_rows + 1);
    } else if (which == "central-even-T") {
        g = even_central_grid(true, max_rows + 1);
    } else {
        throw std::invalid_argument("unknown reference table: " + which);
    }
    if (format == "tsv") return grid_to_tsv(g);
    if (format == "json") return grid_to_json(which, g);
    throw std::invalid_argument("unknown table format: " + format);
}

namespace {

Rational triangle_by_name(const std::string& family, long long n, long long k,
                          const Rational* param) {
    if (family == "stirling1") return triangle(Triangle::S1, n, k);
    if (family == "stirling2") return triangle(Triangle::S2, n, k);
    if (family == "stirling1-unsigned") return triangle(Triangle::CUnsigned, n, k);
    if (family == "lah") return triangle(Triangle::Lah, n, k);
    if (family == "lah-unsigned") return triangle(Triangle::LahUnsigned, n, k);
    if (family == "central-t") return triangle(Triangle::CfSmall, n, k);
    if (family == "central-T") return triangle(Triangle::CfBig, n, k);
    if (family == "central-even-t") return even_central_t(n, k);
    if (family == "central-even-T") return even_central_T(n, k);
    if (family == "lambda-stirling2") {
        if (!param) throw std::invalid_argument("lambda-stirling2 needs --param");
        return stirling2_lambda(n, k, *param);
    }
    throw std::invalid_argument("unknown triangle family: " + family);
}

Sequence sequence_by_name(const std::string& family) {
    if (family == "bernoulli") return Sequence::Bernoulli;
    if (family == "euler") return Sequence::Euler;
    if (family == "euler-star") return Sequence::EulerStar;
    if (family == "daehee") return Sequence::Daehee1;
    if (family == "daehee2") return Sequence::Daehee2;
    if (family == "changhee") return Sequence::Changhee1;
    if (family == "changhee2") return Sequence::Changhee2;
    if (family == "harmonic") return Sequence::Harmonic;
    if (family == "fubini") return Sequence::Fubini;
    if (family == "cauchy-b2") return Sequence::CauchyB2;
    if (family == "y-b") return Sequence::YOfB;
    if (family == "y-e") return Sequence::YOfE;
    throw std::invalid_argument("unknown sequence family: " + family);
}

}  // namespace

std::string render_triangle(const std::string& family, int max_n, const Rational* param,
                            const std::string& format) {
    if (max_n < 0) throw std::invalid_argument("negative table size");
    std::vector<std::vector<Rational>> g;
    for (long long n = 0; n <= max_n; ++n) {
        std::vector<Rational> row;
        for (long long k = 0; k <= n; ++k) row.push_back(triangle_by_name(family, n, k, param));
        g.push_back(std::move(row));
    }
    if (format == "tsv") return grid_to_tsv(g);
    if (format == "json") return grid_to_json(family, g);
    throw std::invalid_argument("unknown table format: " + format);
}

std::string render_sequence(const std::string& family, int max_n, const std::string& format) {
    if (max_n < 0) throw std::invalid_argument("negative sequence length");
    Sequence fam = sequence_by_name(family);
    if (format == "tsv") {
        std::ostringstream out;
        for (long long n = 0; n <= max_n; ++n)
            out << n << '\t' << sequence(fam, n).to_string() << '\n';
        return out.str();
    }
    if (format == "json") {
        nlohmann::json j;
        j["sequence"] = family;
        nlohmann::json vals = nlohmann::json::array();
        for (long long n = 0; n <= max_n; ++n) vals.push_back(sequence(fam, n).to_string());
        j["values"] = std::move(vals);
        return j.dump() + "\n";
    }
    throw std::invalid_argument("unknown sequence format: " + format);
}

}  // namespace pint
