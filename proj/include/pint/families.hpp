#pragma once

#include <cstdint>
#include <vector>

#include "pint/poly.hpp"
#include "pint/rational.hpp"
#include "pint/series.hpp"

namespace pint {

/**
 * Special-number families: Stirling/Lah/central-factorial triangles, the
 * classical sequences (Bernoulli, Euler, Daehee, Changhee, harmonic, Fubini,
 * ...), the Apostol/Frobenius parametric families, Peters and Y-type
 * combinatorial families, and the two central-factorial-weighted sequences
 * built from p-adic integrals of x_(n) * x^(n).
 *
 * Triangle and sequence tables are memoized and grow monotonically. Access
 * goes through a module-wide mutex, so concurrent callers see each entry as
 * if it were computed exactly once; returned values are plain Rationals and
 * can be shared freely.
 */

enum class Triangle {
    S1,           // signed Stirling, first kind
    S2,           // Stirling, second kind
    CUnsigned,    // |S1|
    Lah,          // signed Lah
    LahUnsigned,  // |L|
    CfSmall,      // central factorial t(n,k): x^[n] = sum t(n,k) x^k
    CfBig,        // central factorial T(n,k): x^n  = sum T(n,k) x^[k]
};

// Exact triangle entry; 0 outside 0 <= k <= n (matching the boundary
// conventions of the tables themselves).
Rational triangle(Triangle family, long long n, long long k);

// Even-index sub-triangles t(2i,2j) and T(2i,2j). These are what the
// printed 7x7 central-factorial matrices tabulate, and what the Y-sequence
// recurrences consume.
Rational even_central_t(long long i, long long j);
Rational even_central_T(long long i, long long j);

// lambda-Stirling numbers S2(n,k;lambda) = (1/k!) sum_j (-1)^(k-j) C(k,j) lambda^j j^n.
Rational stirling2_lambda(long long n, long long k, const Rational& lambda);
// lambda-array polynomial value S_k^n(x;lambda).
Rational array_poly(long long n, long long k, const Rational& x, const Rational& lambda);

enum class Sequence {
    Bernoulli,
    Euler,
    EulerStar,  // Euler numbers of the second kind, 2^n E_n(1/2)
    Daehee1,
    Daehee2,    // Volkenborn integral of the rising factorial
    Changhee1,
    Changhee2,  // fermionic integral of the rising factorial
    Harmonic,   // H_n = sum_{k<=n} 1/(k+1)
    Fubini,
    CauchyB2,   // Bernoulli numbers of the second kind b_n(0)
    YOfB,       // integral of x_(n) x^(n) against the Haar measure
    YOfE,       // same against the fermionic measure
};

Rational sequence(Sequence family, long long n);

// Shorthands for the two most used sequences.
Rational bernoulli(long long n);
Rational euler(long long n);

// B_n(x) and E_n(x) in monomial basis: sum_j binom(n,j) B_j x^(n-j), same
// shape for E.
Polynomial bernoulli_poly(long long n);
Polynomial euler_poly(long long n);

enum class ParamFamily { ApostolB, ApostolE, Frobenius };

// Apostol-Bernoulli / Apostol-Euler / Frobenius-Euler numbers at an explicit
// rational parameter, by their defining recurrences. ApostolB and Frobenius
// reject param 1; ApostolE rejects param -1.
Rational apostol(ParamFamily family, long long n, const Rational& param);

// Peters numbers s_n(lambda, mu): n! [t^n] (1 + (1+t)^lambda)^(-mu).
Rational peters_number(long long n, const Rational& lambda, long long mu);
// Peters polynomial value s_n(x; lambda, mu) at rational x.
Rational peters_value(long long n, const Rational& x, const Rational& lambda, long long mu);
// The same polynomial in falling-factorial basis:
// s_n(x) = sum_v binom(n,v) s_v(lambda,mu) x_(n-v).
Polynomial peters_poly(long long n, const Rational& lambda, long long mu);

// y_1(n,k;lambda) = (1/k!) sum_j C(k,j) j^n lambda^j.
Rational y1_number(long long n, long long k, const Rational& lambda);
// Y_{n,2}(lambda) via its generating function 2/(lambda^2 t + 2(lambda-1));
// rejects lambda = 1.
Rational y2_number(long long n, const Rational& lambda);
// Y_{n,2}(x;lambda) at rational x.
Rational y2_value(long long n, const Rational& x, const Rational& lambda);
// Y_{n,2}(x;lambda) in falling-factorial basis:
// sum_j binom(n,j) lambda^(n-j) Y_{j,2}(lambda) x_(n-j).
Polynomial y2_poly(long long n, const Rational& lambda);

// B(n,k) = k! y_1(n,k;1), the inner weights of the y_1 inversion formulas.
Rational y1_b_number(long long n, long long k);

// Harmonic binomial coefficient hbinom(H_k, n) = |S1(k+1, n+1)| / k!.
Rational harmonic_binom(long long k, long long n);

}  // namespace pint
