#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pint {

/**
 * Arbitrary-precision signed integer.
 *
 * Sign-magnitude representation: `limbs_` holds the magnitude in base 2^32,
 * least significant limb first, with no trailing zero limbs. Zero is the
 * empty limb vector with sign 0. Every public operation returns a value in
 * this canonical form.
 *
 * Scale target is "desk" number theory: numerators of Bernoulli numbers,
 * factorials up to a few hundred, finite p-adic Riemann sums. Schoolbook
 * multiplication and shift-subtract division are plenty at that size.
 */
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt from_decimal(const std::string& text);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const;
    bool is_even() const;
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;

    // Truncated division (quotient rounds toward zero, C semantics).
    // Throws std::domain_error on zero divisor.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    static BigInt gcd(BigInt a, BigInt b);  // always >= 0
    BigInt pow(unsigned long long e) const;

    // Largest k with p^k | *this, for nonzero *this; also divides it out.
    // `p` must fit one limb. Used for p-adic valuations.
    long long strip_factor(std::uint32_t p);

    bool fits_longlong() const;
    long long to_longlong() const;  // throws std::overflow_error if too wide

    std::string to_decimal() const;

private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::uint32_t divmod_small_mag(std::vector<std::uint32_t>& a, std::uint32_t d);
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    void set_bit(std::size_t i);
    void shift_left_one();
};

}  // namespace pint
