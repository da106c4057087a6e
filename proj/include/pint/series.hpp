#pragma once

#include <stdexcept>
#include <vector>

#include "pint/rational.hpp"

namespace pint {

/**
 * Formal power series over Rational, truncated uniformly at order K.
 * coeffs()[n] is the coefficient of t^n, 0 <= n <= K. All arithmetic stays
 * inside order K; nothing is ever read or written past it.
 *
 * This is the generating-function oracle: exact EGF coefficients for the
 * special-number families, checked against their closed forms elsewhere.
 */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(int n) const { return c_.at(static_cast<std::size_t>(n)); }
    void set_coeff(int n, Rational v) { c_.at(static_cast<std::size_t>(n)) = std::move(v); }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;  // Cauchy product
    TruncatedSeries operator*(const Rational& s) const;

    // Multiplicative inverse up to order K; requires nonzero constant term.
    TruncatedSeries inverse() const;

    // this(inner); requires inner constant term 0.
    TruncatedSeries compose(const TruncatedSeries& inner) const;

    TruncatedSeries pow(long long e) const;  // negative e inverts first

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

private:
    std::vector<Rational> c_;
    void check_same_order(const TruncatedSeries& o) const;
};

enum class StdSeries { Exp, Log1p, TOverLog1p };

// Exp: sum t^n/n!.  Log1p: log(1+t).  TOverLog1p: t/log(1+t), the EGF of the
// Bernoulli numbers of the second kind b_n(0).
TruncatedSeries std_series(StdSeries kind, int order);

// (1+t)^alpha = sum binom(alpha, n) t^n, alpha rational.
TruncatedSeries binom_pow(const Rational& alpha, int order);

// e^t - 1 (constant term zero, usable as a composition inner).
TruncatedSeries expm1_series(int order);

// Constant series c + 0t + ...
TruncatedSeries constant_series(const Rational& c, int order);

// The series t itself.
TruncatedSeries identity_series(int order);

}  // namespace pint
