#pragma once

#include <cstdint>

#include "pint/poly.hpp"
#include "pint/rational.hpp"

namespace pint {

/**
 * Exact Volkenborn and fermionic p-adic integrals of polynomials, their
 * finite-level approximants, coset/restricted integrals, and distribution
 * (measure) values on cosets of Z_p.
 *
 * Each integral is computed twice, by independent routes:
 *   Mahler route: expand in binom(x,n); termwise weights (-1)^n/(n+1)
 *       (Volkenborn) or (-1)^n 2^(-n) (fermionic). Pure combinatorics.
 *   Witt route: expand in monomials; termwise weights B_n or E_n.
 * The Mahler route is the reference; a disagreement is a hard internal
 * error (it would mean a conversion-table bug), never a silent result.
 */

enum class MeasureKind {
    Haar,      // mu_1: every level-N coset has mass 1/p^N
    MinusOne,  // mu_{-1}: coset a + p^N Z_p has mass (-1)^a
    Dirac,     // point mass at alpha
    Mazur,     // a/p^N - 1/2
    BernoulliK,
    EulerK,
};

struct Measure {
    MeasureKind kind = MeasureKind::Haar;
    std::uint32_t prime = 3;
    long long k = 0;        // order for BernoulliK / EulerK
    Rational alpha;         // point for Dirac (p-adic integer: denominator coprime to p)

    static Measure haar(std::uint32_t p) { return {MeasureKind::Haar, p, 0, Rational(0)}; }
    static Measure minus_one(std::uint32_t p) { return {MeasureKind::MinusOne, p, 0, Rational(0)}; }
    static Measure dirac(std::uint32_t p, Rational a) { return {MeasureKind::Dirac, p, 0, std::move(a)}; }
    static Measure mazur(std::uint32_t p) { return {MeasureKind::Mazur, p, 0, Rational(0)}; }
    static Measure bernoulli_k(std::uint32_t p, long long k) { return {MeasureKind::BernoulliK, p, k, Rational(0)}; }
    static Measure euler_k(std::uint32_t p, long long k) { return {MeasureKind::EulerK, p, k, Rational(0)}; }
};

enum class IntegralRoute { Mahler, Witt };

struct IntegralResult {
    Rational value;
    IntegralRoute route = IntegralRoute::Mahler;
    bool agrees = false;  // always true on return; disagreement throws
};

IntegralResult volkenborn(const Polynomial& p);
IntegralResult fermionic(const Polynomial& p);

// Convenience accessors for the values alone.
Rational volkenborn_value(const Polynomial& p);
Rational fermionic_value(const Polynomial& p);

// (1/p^N) sum_{x=0}^{p^N-1} f(x), exact, no limit taken. N >= 1.
Rational riemann_sum(const Polynomial& f, std::uint32_t prime, int level);

// sum_{x=0}^{p^N-1} (-1)^x f(x); requires odd prime, N >= 1.
Rational alternating_sum(const Polynomial& f, std::uint32_t prime, int level);

// LHS - RHS of the shift equation for the given measure kind (Haar or
// MinusOne); exactly zero when the table machinery is healthy.
//   Haar:     I(f(x+m)) - I(f) - sum_{j<m} f'(j)
//   MinusOne: I(f(x+m)) + (-1)^(m+1) I(f) - 2 sum_{j<m} (-1)^(m-1-j) f(j)
Rational shift_equation_residual(const Polynomial& f, long long m, MeasureKind kind);

// Volkenborn integral of an odd polynomial is -f'(0)/2; checks oddness and
// cross-checks against the full integral before returning.
Rational odd_rule(const Polynomial& f);

// Integral over the coset j + p^n Z_p: (1/p^n) I(f(j + p^n x)).
// Cross-checked against the termwise closed form p^(n(m-1)) B_m(j/p^n).
Rational coset_integral(const Polynomial& f, long long j, int n, std::uint32_t prime);

// Volkenborn integral of x^m over the units Z_p \ pZ_p, m >= 1:
// direct coset subtraction, (1 - p^(m-1)) B_m.
Rational unit_integral_monomial(long long m, std::uint32_t prime);
// The zeta-flavoured variant with the extra 1/m; reported alongside, never
// asserted equal to the direct value.
Rational unit_integral_zeta_variant(long long m, std::uint32_t prime);

// Fermionic integral of lambda^x x^n: the Apostol-Euler number E_n(lambda).
// lambda = -1 rejected.
Rational twisted_fermionic_monomial(long long n, const Rational& lambda);
// Finite alternating sum sum_{x<p^N} (-1)^x lambda^x x^n, for the p-adic
// convergence cross-check with lambda in 1 + pZ.
Rational twisted_alternating_sum(long long n, const Rational& lambda, std::uint32_t prime, int level);

// Value of the distribution on the coset a + p^N Z_p, 0 <= a < p^N.
Rational measure_value(const Measure& m, long long a, int level);

// mu(a + p^N Z_p) - sum_{j<p} mu(a + j p^N + p^(N+1) Z_p); the distribution
// refinement relation demands exactly zero (fermionic kinds need odd p).
Rational additivity_residual(const Measure& m, long long a, int level);

// Integral of a polynomial against a whole measure: the Volkenborn integral
// for Haar, the fermionic integral for mu_{-1}, and plain evaluation at the
// point for Dirac (a point mass integrates by evaluation).
Rational measure_integral(const Measure& m, const Polynomial& f);

// Double integrals of a bivariate polynomial, one measure per variable.
Rational double_integral(const BiPolynomial& f, MeasureKind x_kind, MeasureKind y_kind);
// Integrate out one variable of a bivariate polynomial.
Polynomial integrate_out(const BiPolynomial& f, BiPolynomial::Var which, MeasureKind kind);

}  // namespace pint
