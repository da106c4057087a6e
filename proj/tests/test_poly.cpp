#include <doctest.h>

#include <cstdint>

#include "pint/families.hpp"
#include "pint/poly.hpp"

using namespace pint;

namespace {

struct Rng {
    std::uint64_t s = 0xabcdef987654321ull;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Polynomial random_poly(Rng& rng, Basis basis, long long max_deg) {
    long long d = rng.range(0, max_deg);
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = Rational(rng.range(-30, 30), rng.range(1, 12));
    return Polynomial(basis, std::move(c));
}

const Basis kBases[] = {Basis::Monomial, Basis::Falling, Basis::Rising, Basis::Mahler,
                        Basis::Central};

}  // namespace

TEST_CASE("canonical form strips trailing zeros and keeps the zero sentinel") {
    Polynomial p(Basis::Monomial, {Rational(1), Rational(0), Rational(0)});
    CHECK(p.degree() == 0);
    Polynomial z(Basis::Falling, {Rational(0), Rational(0)});
    CHECK(z.is_zero());
    CHECK(!z.degree().has_value());
    CHECK(z.to_string() == "0");
    CHECK((z * p).is_zero());
}

TEST_CASE("simple conversions against the Stirling rows") {
    // x_(2) = x^2 - x
    Polynomial f2 = Polynomial::basis_element(Basis::Falling, 2).convert(Basis::Monomial);
    CHECK(f2.coeff(2) == Rational(1));
    CHECK(f2.coeff(1) == Rational(-1));
    // x^4 in the falling basis: S2 row 4 = 0,1,7,6,1
    Polynomial x4 = Polynomial::basis_element(Basis::Monomial, 4).convert(Basis::Falling);
    long long row[] = {0, 1, 7, 6, 1};
    for (long long k = 0; k <= 4; ++k) CHECK(x4.coeff(k) == Rational(row[k]));
}

TEST_CASE("conversion round trips over all five bases") {
    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        for (Basis src : kBases) {
            Polynomial p = random_poly(rng, src, 12);
            for (Basis dst : kBases) {
                Polynomial back = p.convert(dst).convert(src);
                CHECK(back.basis() == src);
                CHECK(back.coeffs() == p.coeffs());
            }
        }
    }
}

TEST_CASE("evaluate commutes with convert") {
    Rng rng;
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = random_poly(rng, Basis::Monomial, 10);
        Rational a(rng.range(-40, 40), rng.range(1, 9));
        Rational direct = p.evaluate(a);
        for (Basis dst : kBases) CHECK(p.convert(dst).evaluate(a) == direct);
    }
}

TEST_CASE("native evaluation in each basis") {
    CHECK(Polynomial::basis_element(Basis::Falling, 3).evaluate(Rational(5)) == Rational(60));
    CHECK(Polynomial::basis_element(Basis::Mahler, 2).evaluate(Rational(1, 2)) ==
          Rational(-1, 8));
    CHECK(Polynomial::basis_element(Basis::Rising, 2).evaluate(Rational(3)) == Rational(12));
    CHECK(Polynomial::basis_element(Basis::Central, 4).evaluate(Rational(3)) == Rational(72));
    CHECK(bernoulli_poly(2).evaluate(Rational(0)) == Rational(1, 6));
}

TEST_CASE("products route through the monomial basis") {
    Polynomial f2 = Polynomial::basis_element(Basis::Falling, 2);
    Polynomial sq = f2 * f2;
    CHECK(sq.basis() == Basis::Monomial);
    CHECK(sq.coeff(4) == Rational(1));
    CHECK(sq.coeff(3) == Rational(-2));
    CHECK(sq.coeff(2) == Rational(1));
    // x_(1) + x^(1) = 2x
    Polynomial s = Polynomial::basis_element(Basis::Falling, 1) +
                   Polynomial::basis_element(Basis::Rising, 1);
    CHECK(s.convert(Basis::Monomial).coeff(1) == Rational(2));
    // falling product identity as an oracle for the multiplication kernel
    Polynomial rhs;
    for (long long k = 0; k <= 2; ++k) {
        Rational w = binom_int(2, k) * binom_int(2, k) * factorial(k);
        rhs = rhs + Polynomial::basis_element(Basis::Falling, 4 - k) * w;
    }
    CHECK(sq.equals(rhs));
}

TEST_CASE("shift, differences, derivative, definite integral") {
    Polynomial f3 = Polynomial::basis_element(Basis::Falling, 3);
    // Delta x_(n) = n x_(n-1)
    Polynomial delta = f3.forward_diff();
    CHECK(delta.equals(Polynomial::basis_element(Basis::Falling, 2) * Rational(3)));
    // delta{x^2} = 2x
    Polynomial cd = Polynomial::basis_element(Basis::Monomial, 2).central_diff();
    CHECK(cd.coeff(1) == Rational(2));
    CHECK(cd.coeff(0) == Rational(0));
    CHECK(Polynomial::basis_element(Basis::Monomial, 3).derivative().coeff(2) == Rational(3));
    // integral of u_(2) over [0,1]
    CHECK(Polynomial::basis_element(Basis::Falling, 2).definite_integral_01() ==
          Rational(-1, 6));
    // affine substitution: p(1+2x) for p = x^2
    Polynomial aff = Polynomial::basis_element(Basis::Monomial, 2).affine(Rational(1), Rational(2));
    CHECK(aff.coeff(0) == Rational(1));
    CHECK(aff.coeff(1) == Rational(4));
    CHECK(aff.coeff(2) == Rational(4));
}

TEST_CASE("parity split") {
    Polynomial p(Basis::Monomial, {Rational(0), Rational(0), Rational(1), Rational(1)});
    auto [even, odd] = p.parity_split();
    CHECK(even.equals(Polynomial::basis_element(Basis::Monomial, 2)));
    CHECK(odd.equals(Polynomial::basis_element(Basis::Monomial, 3)));
    auto [ceven, codd] = Polynomial::constant(Rational(1)).parity_split();
    CHECK(ceven.equals(Polynomial::constant(Rational(1))));
    CHECK(codd.is_zero());
    // x^[5] is odd: even part vanishes
    auto parts = Polynomial::basis_element(Basis::Central, 5)
                     .convert(Basis::Monomial)
                     .parity_split();
    CHECK(parts.first.is_zero());
    CHECK_THROWS_AS((void)Polynomial::basis_element(Basis::Falling, 2).parity_split(),
                    std::invalid_argument);
}

TEST_CASE("Bernstein alternating-sum identity (1-2x)^n") {
    for (long long n = 0; n <= 10; ++n) {
        Polynomial acc;
        Polynomial one_minus_x(Basis::Monomial, {Rational(1), Rational(-1)});
        for (long long k = 0; k <= n; ++k) {
            Polynomial b = Polynomial::basis_element(Basis::Monomial, k) *
                           one_minus_x.pow(n - k) * binom_int(n, k);
            acc = acc + (k % 2 == 0 ? b : -b);
        }
        Polynomial rhs(Basis::Monomial, {Rational(1), Rational(-2)});
        CHECK(acc.equals(rhs.pow(n)));
    }
}

TEST_CASE("bivariate expansions") {
    // (x+y)_(2) = x^2 + 2xy + y^2 - x - y
    BiPolynomial s = BiPolynomial::substitute_sum(Polynomial::basis_element(Basis::Falling, 2));
    CHECK(s.evaluate(Rational(3), Rational(2)) == falling(Rational(5), 2));
    CHECK(s.x_coeffs()[2].coeff(0) == Rational(1));
    CHECK(s.x_coeffs()[1].coeff(1) == Rational(2));
    CHECK(s.x_coeffs()[1].coeff(0) == Rational(-1));
    CHECK(s.x_coeffs()[0].coeff(2) == Rational(1));
    CHECK(s.x_coeffs()[0].coeff(1) == Rational(-1));
    // (xy)_(2) = x^2 y^2 - xy
    BiPolynomial p = BiPolynomial::substitute_product(Polynomial::basis_element(Basis::Falling, 2));
    CHECK(p.x_coeffs()[2].coeff(2) == Rational(1));
    CHECK(p.x_coeffs()[1].coeff(1) == Rational(-1));
    // Chu-Vandermonde at n=3, bivariate equality
    BiPolynomial lhs;
    for (long long k = 0; k <= 3; ++k)
        lhs = lhs + BiPolynomial::from_x(Polynomial::basis_element(Basis::Mahler, k)) *
                        BiPolynomial::from_y(Polynomial::basis_element(Basis::Mahler, 3 - k));
    CHECK(lhs.equals(BiPolynomial::substitute_sum(Polynomial::basis_element(Basis::Mahler, 3))));
}

TEST_CASE("parse round trips canonical text") {
    Rng rng;
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = random_poly(rng, Basis::Monomial, 9);
        Polynomial q = parse_polynomial(p.to_string());
        CHECK(q.equals(p));
    }
    CHECK(parse_polynomial("0").is_zero());
    Polynomial mixed = parse_polynomial("3/2*x^4 - x + 2*ff(3) + binom(2) - rf(2) + cf(3)");
    Polynomial manual = Polynomial::basis_element(Basis::Monomial, 4) * Rational(3, 2) -
                        Polynomial::basis_element(Basis::Monomial, 1) +
                        Polynomial::basis_element(Basis::Falling, 3) * Rational(2) +
                        Polynomial::basis_element(Basis::Mahler, 2) -
                        Polynomial::basis_element(Basis::Rising, 2) +
                        Polynomial::basis_element(Basis::Central, 3);
    CHECK(mixed.equals(manual));
    Polynomial prod = parse_polynomial("x*ff(2)");
    CHECK(prod.equals(Polynomial::basis_element(Basis::Monomial, 1) *
                      Polynomial::basis_element(Basis::Falling, 2)));
    CHECK_THROWS_AS((void)parse_polynomial("ff(2"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_polynomial("2 +"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_polynomial(""), std::invalid_argument);
}

TEST_CASE("Osgood-Wu bivariate identity for small k") {
    auto c_coeff = [](long long k, long long l, long long m) {
        Rational acc(0);
        for (long long j = 1; j <= k; ++j)
            acc += triangle(Triangle::S1, k, j) * triangle(Triangle::S2, j, l) *
                   triangle(Triangle::S2, j, m);
        return acc;
    };
    CHECK(c_coeff(1, 1, 1) == Rational(1));
    CHECK(c_coeff(2, 1, 1) == Rational(0));
    CHECK(c_coeff(3, 1, 2) == Rational(0));
    for (long long k = 1; k <= 6; ++k) {
        BiPolynomial rhs;
        for (long long l = 1; l <= k; ++l) {
            for (long long m = 1; m <= k; ++m) {
                Rational c = c_coeff(k, l, m);
                if (c.is_zero()) continue;
                rhs = rhs + BiPolynomial::from_x(Polynomial::basis_element(Basis::Falling, l) * c) *
                                BiPolynomial::from_y(Polynomial::basis_element(Basis::Falling, m));
            }
        }
        CHECK(BiPolynomial::substitute_product(Polynomial::basis_element(Basis::Falling, k))
                  .equals(rhs));
    }
}

TEST_CASE("Chu-Vandermonde and Gould identities, coefficient-wise") {
    // binom(x+m,n) = sum_k binom(x,k) binom(m,n-k)
    for (long long n = 0; n <= 8; ++n) {
        for (long long m = 0; m <= 4; ++m) {
            Polynomial rhs;
            for (long long k = 0; k <= n; ++k)
                rhs = rhs + Polynomial::basis_element(Basis::Mahler, k) * binom_int(m, n - k);
            CHECK(Polynomial::basis_element(Basis::Mahler, n).shift(Rational(m)).equals(rhs));
        }
    }
    // x binom(x-2,n-1) = sum_{k=1..n} (-1)^(k-n) k binom(x,k)
    for (long long n = 1; n <= 8; ++n) {
        Polynomial lhs = Polynomial::basis_element(Basis::Monomial, 1) *
                         Polynomial::basis_element(Basis::Mahler, n - 1).shift(Rational(-2));
        Polynomial rhs;
        for (long long k = 1; k <= n; ++k) {
            Rational w = Rational(k);
            if ((k - n) % 2 != 0) w = -w;
            rhs = rhs + Polynomial::basis_element(Basis::Mahler, k) * w;
        }
        CHECK(lhs.equals(rhs));
    }
    // half-integer shifts stay exact: binom(x+n+1/2, n) has rational coefficients
    Polynomial half = Polynomial::basis_element(Basis::Mahler, 2)
                          .shift(Rational(2) + Rational(1, 2));
    CHECK(half.evaluate(Rational(0)) == binom(Rational(5, 2), 2));
}
