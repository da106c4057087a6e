#include <doctest.h>

#include <cstdint>
#include <thread>
#include <vector>

#include "pint/bigint.hpp"
#include "pint/rational.hpp"

using namespace pint;

namespace {

// deterministic xorshift for property sampling
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Rational rnd_rational(Rng& rng) {
    long long num = rng.range(-100, 100);
    long long den = rng.range(1, 100);
    return Rational(num, den);
}

}  // namespace

TEST_CASE("bigint round trips decimal text") {
    const char* samples[] = {"0",
                             "1",
                             "-1",
                             "4294967295",
                             "4294967296",
                             "-340282366920938463463374607431768211456",
                             "123456789012345678901234567890123456789"};
    for (const char* s : samples) {
        CHECK(BigInt::from_decimal(s).to_decimal() == s);
    }
}

TEST_CASE("bigint arithmetic agrees with 64-bit arithmetic on small values") {
    Rng rng;
    for (int i = 0; i < 2000; ++i) {
        long long a = rng.range(-1000000, 1000000);
        long long b = rng.range(-1000000, 1000000);
        CHECK((BigInt(a) + BigInt(b)).to_longlong() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_longlong() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_longlong() == a * b);
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q.to_longlong() == a / b);
            CHECK(r.to_longlong() == a % b);
        }
    }
}

TEST_CASE("bigint division invariant a = q*b + r on wide operands") {
    Rng rng;
    for (int i = 0; i < 100; ++i) {
        BigInt a = BigInt(rng.range(-1000000, 1000000)).pow(5);
        BigInt b = BigInt(rng.range(1, 100000)).pow(2) * BigInt(rng.range(0, 1) ? 1 : -1);
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("bigint extreme and degenerate cases") {
    long long most_negative = -9223372036854775807ll - 1;
    BigInt m(most_negative);
    CHECK(m.to_decimal() == "-9223372036854775808");
    CHECK(m.fits_longlong());
    CHECK(m.to_longlong() == most_negative);
    CHECK((m - BigInt(1)).fits_longlong() == false);
    // divisor wider than dividend
    BigInt q, r;
    BigInt::divmod(BigInt(7), BigInt::from_decimal("123456789123456789"), q, r);
    CHECK(q.is_zero());
    CHECK(r == BigInt(7));
    // truncation toward zero for negative operands
    BigInt::divmod(BigInt(-7), BigInt(2), q, r);
    CHECK(q == BigInt(-3));
    CHECK(r == BigInt(-1));
    BigInt::divmod(BigInt(7), BigInt(-2), q, r);
    CHECK(q == BigInt(-3));
    CHECK(r == BigInt(1));
    CHECK_THROWS_AS(BigInt::divmod(BigInt(1), BigInt(0), q, r), std::domain_error);
    CHECK(BigInt(0).pow(0) == BigInt(1));
    CHECK(BigInt(-3).pow(3) == BigInt(-27));
    CHECK(BigInt::gcd(BigInt(0), BigInt(-6)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(0)).is_zero());
    CHECK_THROWS_AS((void)BigInt::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS((void)BigInt::from_decimal("12x"), std::invalid_argument);
}

TEST_CASE("bigint gcd matches the Euclidean definition") {
    Rng rng;
    for (int i = 0; i < 500; ++i) {
        long long a = rng.range(0, 1000000);
        long long b = rng.range(0, 1000000);
        long long x = a, y = b;
        while (y != 0) {
            long long t = x % y;
            x = y;
            y = t;
        }
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)).to_longlong() == x);
    }
}

TEST_CASE("rationals are always canonical") {
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-691, 2730).to_string() == "-691/2730");
    CHECK(Rational::parse("-691/2730") == Rational(-691, 2730));
    CHECK(Rational::parse("42").to_string() == "42");
}

TEST_CASE("field operations") {
    CHECK(Rational(1, 6) + Rational(-1, 2) == Rational(-1, 3));
    CHECK(Rational(-691, 2730) * Rational(2730) == Rational(-691));
    CHECK(Rational(3, 4) / Rational(3, 4) == Rational(1));
    CHECK(Rational(1, 2).pow(-2) == Rational(4));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("p-adic valuation") {
    CHECK(ord_p(Rational(50), 5) == PadicValuation::of(2));
    CHECK(ord_p(Rational(1, 9), 3) == PadicValuation::of(-2));
    CHECK(ord_p(Rational(0), 7).infinite);
    CHECK(ord_p(Rational(9, 2), 3) == PadicValuation::of(2));
    CHECK_THROWS_AS(ord_p(Rational(1), 4), std::invalid_argument);
    CHECK_THROWS_AS(ord_p(Rational(1), 1), std::invalid_argument);
    CHECK_THROWS_AS(ord_p(Rational(1), 1000003), std::invalid_argument);
}

TEST_CASE("p-adic norm") {
    CHECK(p_norm(Rational(1, 6), 2) == Rational(2));
    CHECK(p_norm(Rational(50), 5) == Rational(1, 25));
    CHECK(p_norm(Rational(0), 3) == Rational(0));
}

TEST_CASE("ultrametric inequality with equality off the diagonal") {
    Rng rng;
    const std::uint32_t primes[] = {2, 3, 5, 7, 13};
    for (int i = 0; i < 300; ++i) {
        Rational x = rnd_rational(rng);
        Rational y = rnd_rational(rng);
        for (std::uint32_t p : primes) {
            Rational nx = p_norm(x, p), ny = p_norm(y, p);
            Rational nsum = p_norm(x + y, p);
            Rational mx = nx < ny ? ny : nx;
            CHECK(nsum <= mx);
            if (nx != ny) CHECK(nsum == mx);
            CHECK(p_norm(x * y, p) == nx * ny);
        }
    }
}

TEST_CASE("product formula over the primes of the numerator and denominator") {
    for (Rational x : {Rational(-691, 2730), Rational(1, 6)}) {
        // factor num*den by trial division (all factors are small here)
        BigInt m = (x.num() * x.den()).abs();
        Rational prod = x.abs();
        for (std::uint32_t p = 2; p < 3000; ++p) {
            if (!is_small_prime(p)) continue;
            BigInt probe = m;
            if (probe.strip_factor(p) > 0) prod *= p_norm(x, p);
        }
        CHECK(prod == Rational(1));
    }
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(12) == Rational(479001600));
    CHECK(binom(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binom(Rational(-1), 3) == Rational(-1));
    CHECK(binom(Rational(5), 7) == Rational(0));
    CHECK(binom_int(5, 2) == Rational(10));
    CHECK(binom_int(5, 7) == Rational(0));
    CHECK(binom_int(-1, 0) == Rational(0));  // integer convention: 0 outside 0<=k<=n
    CHECK(falling(Rational(5), 3) == Rational(60));
    CHECK(rising(Rational(3), 2) == Rational(12));
}

TEST_CASE("rationals are safe to use from several threads") {
    std::vector<std::thread> workers;
    std::vector<Rational> results(8);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([t, &results] {
            Rational acc(0);
            for (long long k = 1; k <= 200; ++k) acc += Rational(1, k + t);
            results[static_cast<std::size_t>(t)] = acc;
        });
    }
    for (auto& w : workers) w.join();
    for (int t = 0; t < 8; ++t) {
        Rational acc(0);
        for (long long k = 1; k <= 200; ++k) acc += Rational(1, k + t);
        CHECK(results[static_cast<std::size_t>(t)] == acc);
    }
}
