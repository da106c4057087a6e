#include "pint/integrate.hpp"

#include <stdexcept>

#include "pint/families.hpp"

namespace pint {

namespace {

Rational mahler_weight_volkenborn(long long n) {
    Rational w(1, n + 1);
    return (n % 2 != 0) ? -w : w;
}

Rational mahler_weight_fermionic(long long n) {
    Rational w = Rational(2).pow(-n);
    return (n % 2 != 0) ? -w : w;
}

IntegralResult dual_route(const Polynomial& p, bool volk) {
    Polynomial mahler = p.convert(Basis::Mahler);
    Rational via_mahler(0);
    for (std::size_t n = 0; n < mahler.coeffs().size(); ++n) {
        const Rational& c = mahler.coeffs()[n];
        if (c.is_zero()) continue;
        long long d = static_cast<long long>(n);
        via_mahler += c * (volk ? mahler_weight_volkenborn(d) : mahler_weight_fermionic(d));
    }
    Polynomial mono = p.convert(Basis::Monomial);
    Rational via_witt(0);
    for (std::size_t j = 0; j < mono.coeffs().size(); ++j) {
        const Rational& a = mono.coeffs()[j];
        if (a.is_zero()) continue;
        long long d = static_cast<long long>(j);
        via_witt += a * (volk ? bernoulli(d) : euler(d));
    }
    if (via_mahler != via_witt)
        throw std::logic_error("integral route disagreement: Mahler vs Witt");
    return IntegralResult{via_mahler, IntegralRoute::Mahler, true};
}

long long checked_prime_power(std::uint32_t p, int n) {
    long long m = 1;
    for (int i = 0; i < n; ++i) {
        if (m > 100000000ll / p) throw std::invalid_argument("level p^N too large for exact summation");
        m *= p;
    }
    return m;
}

Rational bernoulli_poly_at(long long m, const Rational& x) {
    Rational acc(0);
    for (long long l = 0; l <= m; ++l)
        acc += binom_int(m, l) * bernoulli(l) * x.pow(m - l);
    return acc;
}

Rational euler_poly_at(long long m, const Rational& x) {
    Rational acc(0);
    for (long long l = 0; l <= m; ++l)
        acc += binom_int(m, l) * euler(l) * x.pow(m - l);
    return acc;
}

// a mod p^N for a p-adic integer rational (denominator coprime to p).
long long residue_mod(const Rational& x, long long modulus) {
    BigInt m(modulus);
    BigInt num_mod = x.num() % m;
    long long u = ((num_mod.to_longlong() % modulus) + modulus) % modulus;
    BigInt den_mod = x.den() % m;
    long long v = ((den_mod.to_longlong() % modulus) + modulus) % modulus;
    // extended Euclid for v^{-1} mod modulus
    long long a = v, b = modulus, x0 = 1, x1 = 0;
    while (b != 0) {
        long long q = a / b;
        long long t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (a != 1) throw std::invalid_argument("Dirac point is not a p-adic integer for this p");
    long long inv = ((x0 % modulus) + modulus) % modulus;
    return static_cast<long long>((__int128)u * inv % modulus);
}

}  // namespace

IntegralResult volkenborn(const Polynomial& p) { return dual_route(p, true); }
IntegralResult fermionic(const Polynomial& p) { return dual_route(p, false); }

Rational volkenborn_value(const Polynomial& p) { return volkenborn(p).value; }
Rational fermionic_value(const Polynomial& p) { return fermionic(p).value; }

Rational riemann_sum(const Polynomial& f, std::uint32_t prime, int level) {
    validate_prime(prime);
    if (level < 1) throw std::invalid_argument("riemann_sum needs level N >= 1");
    long long count = checked_prime_power(prime, level);
    Polynomial mono = f.convert(Basis::Monomial);
    Rational acc(0);
    for (long long x = 0; x < count; ++x) acc += mono.evaluate(Rational(x));
    return acc / Rational(count);
}

Rational alternating_sum(const Polynomial& f, std::uint32_t prime, int level) {
    validate_prime(prime);
    if (prime == 2) throw std::invalid_argument("alternating_sum needs an odd prime");
    if (level < 1) throw std::invalid_argument("alternating_sum needs level N >= 1");
    long long count = checked_prime_power(prime, level);
    Polynomial mono = f.convert(Basis::Monomial);
    Rational acc(0);
    for (long long x = 0; x < count; ++x) {
        Rational v = mono.evaluate(Rational(x));
        acc += (x % 2 != 0) ? -v : v;
    }
    return acc;
}

Rational shift_equation_residual(const Polynomial& f, long long m, MeasureKind kind) {
    if (m < 1) throw std::invalid_argument("shift equation needs m >= 1");
    Polynomial shifted = f.shift(Rational(m));
    if (kind == MeasureKind::Haar) {
        Polynomial df = f.derivative();
        Rational rhs(0);
        for (long long j = 0; j < m; ++j) rhs += df.evaluate(Rational(j));
        return volkenborn_value(shifted) - volkenborn_value(f) - rhs;
    }
    if (kind == MeasureKind::MinusOne) {
        Rational rhs(0);
        for (long long j = 0; j < m; ++j) {
            Rational v = f.evaluate(Rational(j));
            rhs += ((m - 1 - j) % 2 != 0) ? -v : v;
        }
        Rational lhs = fermionic_value(shifted);
        Rational base = fermionic_value(f);
        lhs += (m % 2 != 0) ? base : -base;
        return lhs - Rational(2) * rhs;
    }
    throw std::invalid_argument("shift equation defined for Haar and mu_{-1} only");
}

Rational odd_rule(const Polynomial& f) {
    Polynomial mono = f.convert(Basis::Monomial);
    auto [even, odd] = mono.parity_split();
    if (!even.is_zero()) throw std::invalid_argument("odd_rule needs an odd polynomial");
    Rational v = -(mono.derivative().evaluate(Rational(0)) / Rational(2));
    if (v != volkenborn_value(f))
        throw std::logic_error("odd rule disagrees with the full integral");
    return v;
}

Rational coset_integral(const Polynomial& f, long long j, int n, std::uint32_t prime) {
    validate_prime(prime);
    if (n < 0) throw std::invalid_argument("coset level must be nonnegative");
    long long pn = checked_prime_power(prime, n);
    if (j < 0 || j >= pn) throw std::invalid_argument("coset representative out of range");
    Rational scale(pn);
    Polynomial g = f.affine(Rational(j), scale);
    Rational value = volkenborn_value(g) / scale;
    // termwise closed form p^{n(m-1)} B_m(j/p^n)
    Polynomial mono = f.convert(Basis::Monomial);
    Rational check(0);
    Rational ratio = Rational(j) / scale;
    for (std::size_t m = 0; m < mono.coeffs().size(); ++m) {
        const Rational& a = mono.coeffs()[m];
        if (a.is_zero()) continue;
        long long d = static_cast<long long>(m);
        check += a * scale.pow(d - 1) * bernoulli_poly_at(d, ratio);
    }
    if (value != check) throw std::logic_error("coset integral disagrees with closed form");
    return value;
}

Rational unit_integral_monomial(long long m, std::uint32_t prime) {
    if (m < 1) throw std::invalid_argument("unit integral defined for m >= 1");
    Polynomial xm = Polynomial::basis_element(Basis::Monomial, m);
    return volkenborn_value(xm) - coset_integral(xm, 0, 1, prime);
}

Rational unit_integral_zeta_variant(long long m, std::uint32_t prime) {
    return unit_integral_monomial(m, prime) / Rational(m);
}

Rational twisted_fermionic_monomial(long long n, const Rational& lambda) {
    if (lambda == Rational(-1))
        throw std::domain_error("twisted fermionic integral needs lambda != -1");
    return apostol(ParamFamily::ApostolE, n, lambda);
}

Rational twisted_alternating_sum(long long n, const Rational& lambda, std::uint32_t prime,
                                 int level) {
    validate_prime(prime);
    if (prime == 2) throw std::invalid_argument("alternating sum needs an odd prime");
    if (level < 1) throw std::invalid_argument("level N >= 1");
    long long count = checked_prime_power(prime, level);
    Rational acc(0);
    Rational power(1);
    for (long long x = 0; x < count; ++x) {
        Rational v = power * Rational(x).pow(n);
        acc += (x % 2 != 0) ? -v : v;
        power *= lambda;
    }
    return acc;
}

Rational measure_value(const Measure& m, long long a, int level) {
    validate_prime(m.prime);
    if (level < 0) throw std::invalid_argument("negative coset level");
    long long pn = checked_prime_power(m.prime, level);
    if (a < 0 || a >= pn) throw std::invalid_argument("coset representative out of range");
    switch (m.kind) {
        case MeasureKind::Haar:
            return Rational(1, pn);
        case MeasureKind::MinusOne:
            return Rational(a % 2 != 0 ? -1 : 1);
        case MeasureKind::Dirac:
            return Rational(residue_mod(m.alpha, pn) == a ? 1 : 0);
        case MeasureKind::Mazur:
            return Rational(a, pn) - Rational(1, 2);
        case MeasureKind::BernoulliK:
            return Rational(pn).pow(m.k - 1) * bernoulli_poly_at(m.k, Rational(a, pn));
        case MeasureKind::EulerK: {
            Rational v = Rational(pn).pow(m.k) * euler_poly_at(m.k, Rational(a, pn));
            return (a % 2 != 0) ? -v : v;
        }
    }
    throw std::logic_error("unreachable measure kind");
}

Rational additivity_residual(const Measure& m, long long a, int level) {
    validate_prime(m.prime);
    if ((m.kind == MeasureKind::MinusOne || m.kind == MeasureKind::EulerK) && m.prime == 2)
        throw std::invalid_argument("fermionic distributions need an odd prime");
    long long pn = checked_prime_power(m.prime, level);
    Rational whole = measure_value(m, a, level);
    Rational refined(0);
    for (long long j = 0; j < static_cast<long long>(m.prime); ++j)
        refined += measure_value(m, a + j * pn, level + 1);
    return whole - refined;
}

Rational measure_integral(const Measure& m, const Polynomial& f) {
    switch (m.kind) {
        case MeasureKind::Haar: return volkenborn_value(f);
        case MeasureKind::MinusOne: return fermionic_value(f);
        case MeasureKind::Dirac: return f.evaluate(m.alpha);
        default:
            throw std::invalid_argument("integration is defined for Haar, mu_{-1} and Dirac");
    }
}

Polynomial integrate_out(const BiPolynomial& f, BiPolynomial::Var which, MeasureKind kind) {
    if (kind != MeasureKind::Haar && kind != MeasureKind::MinusOne)
        throw std::invalid_argument("integrate_out supports Haar and mu_{-1}");
    long long d = f.max_degree(which);
    std::vector<Rational> moments;
    for (long long k = 0; k <= std::max<long long>(d, 0); ++k) {
        Polynomial xk = Polynomial::basis_element(Basis::Monomial, k);
        moments.push_back(kind == MeasureKind::Haar ? volkenborn_value(xk)
                                                    : fermionic_value(xk));
    }
    return f.apply_moments(which, moments);
}

Rational double_integral(const BiPolynomial& f, MeasureKind x_kind, MeasureKind y_kind) {
    Polynomial in_y = integrate_out(f, BiPolynomial::Var::X, x_kind);
    Polynomial as_bi = integrate_out(BiPolynomial::from_y(in_y), BiPolynomial::Var::Y, y_kind);
    // the result is a constant polynomial
    return as_bi.coeff(0);
}

}  // namespace pint
