#include "pint/rational.hpp"

#include <stdexcept>

namespace pint {

void Rational::reduce() {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_.abs(), den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_decimal(text));
    BigInt n = BigInt::from_decimal(text.substr(0, slash));
    BigInt d = BigInt::from_decimal(text.substr(slash + 1));
    return Rational(std::move(n), std::move(d));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::pow(long long e) const {
    if (e == 0) return Rational(1);
    if (e > 0) {
        Rational r;
        r.num_ = num_.pow(static_cast<unsigned long long>(e));
        r.den_ = den_.pow(static_cast<unsigned long long>(e));
        return r;  // already coprime
    }
    if (is_zero()) throw std::domain_error("zero to a negative power");
    return reciprocal().pow(-e);
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(den_, num_);
}

bool Rational::operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

bool is_small_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint32_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

void validate_prime(std::uint32_t p) {
    if (p >= 1000000u) throw std::invalid_argument("prime parameter out of supported range");
    if (!is_small_prime(p)) throw std::invalid_argument("parameter p is not prime");
}

PadicValuation ord_p(const Rational& x, std::uint32_t p) {
    validate_prime(p);
    if (x.is_zero()) return PadicValuation::infinity();
    BigInt n = x.num().abs();
    BigInt d = x.den();
    long long vn = n.strip_factor(p);
    long long vd = d.strip_factor(p);
    return PadicValuation::of(vn - vd);
}

Rational p_norm(const Rational& x, std::uint32_t p) {
    PadicValuation v = ord_p(x, p);
    if (v.infinite) return Rational(0);
    return Rational(static_cast<long long>(p)).pow(-v.value);
}

Rational factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    BigInt r(1);
    for (long long i = 2; i <= n; ++i) r *= BigInt(i);
    return Rational(std::move(r));
}

Rational falling(const Rational& a, long long k) {
    if (k < 0) throw std::invalid_argument("falling factorial with negative length");
    Rational r(1);
    for (long long i = 0; i < k; ++i) r *= a - Rational(i);
    return r;
}

Rational rising(const Rational& a, long long k) {
    if (k < 0) throw std::invalid_argument("rising factorial with negative length");
    Rational r(1);
    for (long long i = 0; i < k; ++i) r *= a + Rational(i);
    return r;
}

Rational binom(const Rational& a, long long k) {
    if (k < 0) return Rational(0);
    return falling(a, k) / factorial(k);
}

Rational binom_int(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    return binom(Rational(n), k);
}

}  // namespace pint
