#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pint/bigint.hpp"

namespace pint {

/**
 * p-adic valuation of a rational: an integer, or infinity exactly for 0.
 */
struct PadicValuation {
    bool infinite = false;
    long long value = 0;

    static PadicValuation infinity() { return PadicValuation{true, 0}; }
    static PadicValuation of(long long v) { return PadicValuation{false, v}; }

    bool operator==(const PadicValuation& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    // infinity compares greater than every finite valuation
    bool operator<(const PadicValuation& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
    std::string to_string() const { return infinite ? "INF" : std::to_string(value); }
};

/**
 * Exact rational number, the scalar type of the whole library.
 *
 * Invariants (enforced on construction, never lazily):
 *   - gcd(|num|, den) = 1
 *   - den >= 1; zero is 0/1
 * Canonical form makes operator== structural, so rationals can key memo
 * tables directly.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    // Accepts "num", "num/den", optional sign, arbitrary width.
    static Rational parse(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws std::domain_error on /0

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Integer exponent; negative exponents invert (zero base rejected).
    Rational pow(long long e) const;

    Rational abs() const { return is_negative() ? -*this : *this; }
    Rational reciprocal() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    std::string to_string() const;  // "num" or "num/den"

private:
    BigInt num_;
    BigInt den_;
    void reduce();
};

Rational operator*(long long a, const Rational& b);

// Deterministic trial-division primality check for test-parameter primes.
// Accepts 2 <= p < 10^6; anything else is rejected by validate_prime.
bool is_small_prime(std::uint32_t p);
void validate_prime(std::uint32_t p);  // throws std::invalid_argument

// ord_p(a/b) = ord_p(a) - ord_p(b); infinity for 0.
PadicValuation ord_p(const Rational& x, std::uint32_t p);

// |x|_p = p^(-ord_p(x)) as an exact rational, 0 for x = 0.
Rational p_norm(const Rational& x, std::uint32_t p);

// n! as a rational (integer-valued), and binomial coefficients.
Rational factorial(long long n);
// Generalized binomial: a_(k)/k! for rational a, 0 for k < 0.
Rational binom(const Rational& a, long long k);
// Integer binomial with the usual conventions (0 outside 0 <= k <= n).
Rational binom_int(long long n, long long k);
// Falling and rising factorials of a rational argument.
Rational falling(const Rational& a, long long k);
Rational rising(const Rational& a, long long k);

}  // namespace pint
