#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pint/rational.hpp"

namespace pint {

/**
 * Exact univariate polynomials in one of five bases:
 *
 *   Monomial  c_n * x^n
 *   Falling   c_n * x_(n)        = x(x-1)...(x-n+1)
 *   Rising    c_n * x^(n)        = x(x+1)...(x+n-1)
 *   Mahler    c_n * binom(x, n)  = x_(n)/n!
 *   Central   c_n * x^[n]        = x(x+n/2-1)(x+n/2-2)...(x-n/2+1)
 *
 * Trailing zero coefficients are stripped on construction; the zero
 * polynomial is the empty coefficient vector in any basis and its degree is
 * the "none" sentinel (empty optional), never -1.
 *
 * All products route through the monomial basis: one multiplication kernel,
 * with the basis-specific product formulas kept as identity-catalog oracles.
 */
enum class Basis { Monomial, Falling, Rising, Mahler, Central };

class Polynomial {
public:
    Polynomial() : basis_(Basis::Monomial) {}
    Polynomial(Basis basis, std::vector<Rational> coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c);
    // Single basis element: coefficient 1 on degree n of the given basis.
    static Polynomial basis_element(Basis basis, long long n);

    Basis basis() const { return basis_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Coefficient of degree n in this polynomial's own basis (0 past the end).
    Rational coeff(long long n) const;
    std::optional<long long> degree() const;
    bool is_zero() const { return c_.empty(); }

    Polynomial convert(Basis target) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;  // result in monomial basis
    Polynomial operator*(const Rational& s) const;
    Polynomial operator-() const;
    Polynomial pow(long long e) const;

    // Basis-independent equality (compares monomial forms).
    bool equals(const Polynomial& o) const;

    // Evaluation is performed directly in the stored basis.
    Rational evaluate(const Rational& a) const;

    // The following return monomial-basis results.
    Polynomial shift(const Rational& m) const;  // p(x+m)
    Polynomial forward_diff() const;            // p(x+1) - p(x)
    Polynomial central_diff() const;            // p(x+1/2) - p(x-1/2)
    Polynomial derivative() const;
    // p(a + b*x)
    Polynomial affine(const Rational& a, const Rational& b) const;

    Rational definite_integral_01() const;  // exact integral over [0,1]

    // p = even + odd with even(-x)=even(x), odd(-x)=-odd(x).
    // Requires monomial basis.
    std::pair<Polynomial, Polynomial> parity_split() const;

    std::string to_string() const;  // canonical monomial-basis text

private:
    Basis basis_;
    std::vector<Rational> c_;
    void strip();
};

// Grammar: sum of terms; a term is an optional rational coefficient joined
// with '*' to a generator, or a bare coefficient / bare generator.
// Generators: x, x^n, ff(n) = x_(n), rf(n) = x^(n), binom(n) = binom(x,n),
// cf(n) = x^[n]. Example: "3/2*x^4 - x + 2*ff(3)".
// The result is monomial-basis canonical; parse(to_string(p)) preserves p.
Polynomial parse_polynomial(const std::string& text);

/**
 * Polynomial in x whose coefficients are monomial polynomials in y.
 * coeffs()[k] multiplies x^k.
 */
class BiPolynomial {
public:
    BiPolynomial() = default;
    explicit BiPolynomial(std::vector<Polynomial> x_coeffs);

    static BiPolynomial zero() { return BiPolynomial(); }
    // p(x) viewed as bivariate (coefficients constant in y).
    static BiPolynomial from_x(const Polynomial& p);
    // p(y) viewed as bivariate (single x^0 coefficient).
    static BiPolynomial from_y(const Polynomial& p);
    // p(x+y) for monomial-basis-convertible p.
    static BiPolynomial substitute_sum(const Polynomial& p);
    // p(x*y).
    static BiPolynomial substitute_product(const Polynomial& p);

    const std::vector<Polynomial>& x_coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    BiPolynomial operator+(const BiPolynomial& o) const;
    BiPolynomial operator-(const BiPolynomial& o) const;
    BiPolynomial operator*(const BiPolynomial& o) const;

    bool equals(const BiPolynomial& o) const;

    Rational evaluate(const Rational& x, const Rational& y) const;

    // Replace one variable by the linear functional given by its moment
    // sequence on monomials (e.g. Bernoulli or Euler numbers), leaving a
    // polynomial in the other variable. Used by the integral layer.
    enum class Var { X, Y };
    Polynomial apply_moments(Var which, const std::vector<Rational>& moments) const;
    long long max_degree(Var which) const;

private:
    std::vector<Polynomial> c_;  // monomial polys in y, index = x-degree
    void strip();
};

}  // namespace pint
