#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pint/rational.hpp"

namespace pint {

/**
 * Declarative catalog of exact identities between p-adic integrals and
 * special-number families. Every check is a pair of independently computed
 * rational (or polynomial) sides, compared exactly; there is no tolerance
 * anywhere.
 *
 * A few entries are erratum candidates: they evaluate a formula exactly as
 * printed in the source material and publish both sides instead of a
 * pass/fail verdict. They never fail the suite.
 */

enum class CheckStatus { Pass, Fail, ErratumCandidate };

struct Counterexample {
    std::string params;
    std::string lhs;
    std::string rhs;
};

struct IdentityResult {
    std::string id;
    std::string eq;  // citation label of the source display
    long long tested = 0;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Counterexample> counterexample;
    std::vector<std::string> report;  // populated for erratum candidates
};

struct RunOptions {
    int max_n = 10;  // principal index bound; the secondary bounds
                     // (m <= 6, r <= 3, mu <= 3) scale off the manifest defaults
};

class CheckContext {
public:
    explicit CheckContext(const RunOptions& opts) : opts_(opts) {}

    int max_n() const { return opts_.max_n; }
    const std::vector<Rational>& lambda_samples() const;
    const std::vector<Rational>& theta_samples() const;

    // Record one evaluation point. Returns false once a counterexample has
    // been captured, so loops can bail out early.
    bool point(const std::string& params, const Rational& lhs, const Rational& rhs);
    // Erratum-candidate entries publish both sides without a verdict.
    void observe(const std::string& params, const Rational& lhs, const Rational& rhs);
    void note(const std::string& line);

    long long tested = 0;
    bool failed = false;
    Counterexample cx;
    std::vector<std::string> report;

private:
    RunOptions opts_;
};

struct IdentitySpec {
    std::string id;
    std::string eq;
    std::string anchor;
    bool erratum = false;
    std::function<void(CheckContext&)> check;
};

// The full registry, in manifest order.
const std::vector<IdentitySpec>& identity_catalog();

// Runs a selection (empty = all). Throws std::invalid_argument for an
// unknown id. Deterministic: results come back in manifest order.
std::vector<IdentityResult> run_catalog(const std::vector<std::string>& ids,
                                        const RunOptions& opts);

// Machine-readable manifest (id, citation, anchor), embedded at build time
// from data/identities.tsv; the PINT_MANIFEST environment variable may point
// to a replacement file. Loaded once, validated against the registry (same
// ids, same order).
struct ManifestRow {
    std::string id;
    std::string eq;
    std::string anchor;
};
const std::vector<ManifestRow>& manifest();

// Byte-stable reference tables ("stirling1", "stirling2", "lah-unsigned",
// "central-even-t", "central-even-T") in "tsv" or "json" format. Triangles
// print rows 0..max_rows padded with zeros to a fixed width, matching the
// printed tables they reproduce.
std::string emit_table(const std::string& which, int max_rows, const std::string& format);

// Row-major rendering of any triangle family / sequence family for the CLI.
std::string render_triangle(const std::string& family, int max_n, const Rational* param,
                            const std::string& format);
std::string render_sequence(const std::string& family, int max_n, const std::string& format);

std::string status_name(CheckStatus s);

}  // namespace pint
