#include "pint/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace pint {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with LLONG_MIN: negate in unsigned space
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

BigInt BigInt::from_decimal(const std::string& text) {
    std::size_t i = 0;
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') sign = -1;
        ++i;
    }
    if (i >= text.size()) throw std::invalid_argument("empty integer literal");
    BigInt out;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
        // out = out*10 + digit, in-place on the magnitude
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (std::size_t j = 0; j < out.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(out.limbs_[j]) * 10u + carry;
            out.limbs_[j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry != 0) {
            out.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }
    out.sign_ = out.limbs_.empty() ? 0 : sign;
    out.trim();
    return out;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

bool BigInt::is_one() const {
    return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1;
}

bool BigInt::is_even() const {
    return limbs_.empty() || (limbs_[0] & 1u) == 0;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const std::vector<std::uint32_t>& lo = a.size() >= b.size() ? b : a;
    const std::vector<std::uint32_t>& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> r;
    r.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r.push_back(static_cast<std::uint32_t>(cur & 0xffffffffu));
        carry = cur >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(cur));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i + j]) + ai * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry != 0) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[k]) + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.limbs_ = add_mag(limbs_, o.limbs_);
        r.sign_ = sign_;
    } else {
        int c = cmp_mag(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.limbs_ = sub_mag(limbs_, o.limbs_);
            r.sign_ = sign_;
        } else {
            r.limbs_ = sub_mag(o.limbs_, limbs_);
            r.sign_ = o.sign_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.limbs_ = mul_mag(limbs_, o.limbs_);
    r.sign_ = r.limbs_.empty() ? 0 : sign_ * o.sign_;
    return r;
}

bool BigInt::operator==(const BigInt& o) const {
    return sign_ == o.sign_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_;
    int c = cmp_mag(limbs_, o.limbs_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigInt::bit(std::size_t i) const {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

void BigInt::set_bit(std::size_t i) {
    std::size_t limb = i / 32;
    if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
    limbs_[limb] |= (1u << (i % 32));
    if (sign_ == 0) sign_ = 1;
}

void BigInt::shift_left_one() {
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint32_t next = limbs_[i] >> 31;
        limbs_[i] = (limbs_[i] << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("integer division by zero");
    q = BigInt();
    r = BigInt();
    if (a.sign_ == 0) return;
    if (cmp_mag(a.limbs_, b.limbs_) < 0) {
        r = a;
        return;
    }
    // shift-subtract long division on magnitudes
    BigInt rem;
    BigInt quo;
    std::size_t n = a.bit_length();
    for (std::size_t i = n; i-- > 0;) {
        rem.shift_left_one();
        if (a.bit(i)) {
            if (rem.limbs_.empty()) rem.limbs_.push_back(0);
            rem.limbs_[0] |= 1u;
        }
        rem.sign_ = rem.limbs_.empty() || (rem.limbs_.size() == 1 && rem.limbs_[0] == 0) ? 0 : 1;
        rem.trim();
        if (cmp_mag(rem.limbs_, b.limbs_) >= 0 && rem.sign_ != 0) {
            rem.limbs_ = sub_mag(rem.limbs_, b.limbs_);
            rem.trim();
            quo.set_bit(i);
        }
    }
    quo.trim();
    rem.trim();
    // fix signs: truncated toward zero
    quo.sign_ = quo.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    rem.sign_ = rem.limbs_.empty() ? 0 : a.sign_;
    q = quo;
    r = rem;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    // binary gcd: no general division needed
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto shift_right_one = [](BigInt& x) {
        std::uint32_t carry = 0;
        for (std::size_t i = x.limbs_.size(); i-- > 0;) {
            std::uint32_t next = x.limbs_[i] & 1u;
            x.limbs_[i] = (x.limbs_[i] >> 1) | (carry << 31);
            carry = next;
        }
        x.trim();
    };
    int shift = 0;
    while (a.is_even() && b.is_even()) {
        shift_right_one(a);
        shift_right_one(b);
        ++shift;
    }
    while (a.is_even()) shift_right_one(a);
    while (!b.is_zero()) {
        while (b.is_even()) shift_right_one(b);
        if (cmp_mag(a.limbs_, b.limbs_) > 0) std::swap(a, b);
        b = b - a;
        b.sign_ = b.limbs_.empty() ? 0 : 1;
    }
    for (int i = 0; i < shift; ++i) a.shift_left_one();
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    return a;
}

BigInt BigInt::pow(unsigned long long e) const {
    BigInt base = *this;
    BigInt out(1);
    while (e != 0) {
        if (e & 1ull) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

std::uint32_t BigInt::divmod_small_mag(std::vector<std::uint32_t>& a, std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        a[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return static_cast<std::uint32_t>(rem);
}

long long BigInt::strip_factor(std::uint32_t p) {
    if (is_zero()) throw std::domain_error("strip_factor on zero");
    long long count = 0;
    for (;;) {
        std::vector<std::uint32_t> trial = limbs_;
        std::uint32_t rem = divmod_small_mag(trial, p);
        if (rem != 0) break;
        limbs_ = std::move(trial);
        ++count;
    }
    trim();
    return count;
}

bool BigInt::fits_longlong() const {
    if (limbs_.size() < 2) return true;
    if (limbs_.size() > 2) return false;
    std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    if (sign_ > 0) return mag <= 0x7fffffffffffffffull;
    return mag <= 0x8000000000000000ull;
}

long long BigInt::to_longlong() const {
    if (!fits_longlong()) throw std::overflow_error("BigInt too wide for long long");
    std::uint64_t mag = 0;
    if (limbs_.size() > 1) mag = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) mag |= limbs_[0];
    if (sign_ < 0) return -static_cast<long long>(mag - 1) - 1;
    return static_cast<long long>(mag);
}

std::string BigInt::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> mag = limbs_;
    std::string digits;
    while (!mag.empty()) {
        std::uint32_t chunk = divmod_small_mag(mag, 1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

}  // namespace pint
