#include "pint/families.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>

#include "pint/integrate.hpp"

namespace pint {

namespace {

// Monomial coefficients of x^[n] = x(x+n/2-1)(x+n/2-2)...(x-n/2+1).
// Rational entries: odd n brings in half-integer shifts.
std::vector<Rational> central_t_row(long long n) {
    if (n == 0) return {Rational(1)};
    std::vector<Rational> c = {Rational(0), Rational(1)};  // the leading x
    Rational half_n(n, 2);
    for (long long i = 1; i <= n - 1; ++i) {
        Rational s = half_n - Rational(i);  // factor (x + n/2 - i)
        std::vector<Rational> next(c.size() + 1);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j] += c[j] * s;
            next[j + 1] += c[j];
        }
        c = std::move(next);
    }
    return c;
}

struct TriangleStore {
    std::mutex mu;
    std::vector<std::vector<Rational>> rows;
};

// Self-contained row fillers; each extends `rows` to hold row n.

void fill_s1(std::vector<std::vector<Rational>>& rows, long long n) {
    if (rows.empty()) rows.push_back({Rational(1)});
    while (static_cast<long long>(rows.size()) <= n) {
        long long m = static_cast<long long>(rows.size());  // filling row m from row m-1
        std::vector<Rational> row(static_cast<std::size_t>(m) + 1);
        const auto& prev = rows.back();
        for (long long k = 0; k <= m; ++k) {
            Rational v(0);
            if (k <= m - 1) v = prev[k] * Rational(-(m - 1));
            if (k >= 1 && k - 1 <= m - 1) v += prev[k - 1];
            row[k] = v;
        }
        rows.push_back(std::move(row));
    }
}

void fill_s2(std::vector<std::vector<Rational>>& rows, long long n) {
    if (rows.empty()) rows.push_back({Rational(1)});
    while (static_cast<long long>(rows.size()) <= n) {
        long long m = static_cast<long long>(rows.size());
        std::vector<Rational> row(static_cast<std::size_t>(m) + 1);
        const auto& prev = rows.back();
        for (long long k = 0; k <= m; ++k) {
            Rational v(0);
            if (k <= m - 1) v = prev[k] * Rational(k);
            if (k >= 1 && k - 1 <= m - 1) v += prev[k - 1];
            row[k] = v;
        }
        rows.push_back(std::move(row));
    }
}

void fill_cf_t(std::vector<std::vector<Rational>>& rows, long long n) {
    while (static_cast<long long>(rows.size()) <= n) {
        rows.push_back(central_t_row(static_cast<long long>(rows.size())));
    }
}

// Back-substitution against the unitriangular t rows: x^n = sum T(n,k) x^[k].
void fill_cf_T(std::vector<std::vector<Rational>>& rows, long long n) {
    while (static_cast<long long>(rows.size()) <= n) {
        long long m = static_cast<long long>(rows.size());
        std::vector<Rational> residual(static_cast<std::size_t>(m) + 1);
        residual[static_cast<std::size_t>(m)] = Rational(1);  // x^m
        std::vector<Rational> row(static_cast<std::size_t>(m) + 1);
        for (long long k = m; k >= 0; --k) {
            Rational coeff = residual[static_cast<std::size_t>(k)];
            row[static_cast<std::size_t>(k)] = coeff;  // t(k,k) = 1
            if (!coeff.is_zero()) {
                std::vector<Rational> t_row = central_t_row(k);
                for (std::size_t j = 0; j < t_row.size(); ++j)
                    residual[j] -= coeff * t_row[j];
            }
        }
        rows.push_back(std::move(row));
    }
}

Rational triangle_get(TriangleStore& store, void (*fill)(std::vector<std::vector<Rational>>&, long long),
                      long long n, long long k) {
    std::lock_guard<std::mutex> lock(store.mu);
    fill(store.rows, n);
    return store.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

TriangleStore g_s1, g_s2, g_cf_t, g_cf_T;

Rational lah_signed(long long n, long long k) {
    if (n == 0 && k == 0) return Rational(1);
    if (k == 0 || k > n) return Rational(0);
    Rational v = factorial(n) / factorial(k) * binom_int(n - 1, k - 1);
    return (n % 2 != 0) ? -v : v;
}

struct SequenceStore {
    std::mutex mu;
    std::vector<std::optional<Rational>> values;
};

SequenceStore g_seq[12];

std::vector<Rational> egf_prefix(const TruncatedSeries& s) {
    std::vector<Rational> out(static_cast<std::size_t>(s.order()) + 1);
    Rational f(1);
    for (int n = 0; n <= s.order(); ++n) {
        if (n > 0) f *= Rational(n);
        out[static_cast<std::size_t>(n)] = s.coeff(n) * f;
    }
    return out;
}

Rational compute_sequence(Sequence family, long long n) {
    int order = static_cast<int>(n);
    switch (family) {
        case Sequence::Bernoulli: {
            // t/(e^t - 1): invert sum t^k/(k+1)!
            TruncatedSeries g(order);
            for (int k = 0; k <= order; ++k)
                g.set_coeff(k, factorial(k + 1).reciprocal());
            return egf_prefix(g.inverse())[static_cast<std::size_t>(n)];
        }
        case Sequence::Euler: {
            // 2/(e^t + 1)
            TruncatedSeries h = std_series(StdSeries::Exp, order);
            h.set_coeff(0, Rational(2));
            return egf_prefix((h * Rational(1, 2)).inverse())[static_cast<std::size_t>(n)];
        }
        case Sequence::EulerStar: {
            // 2^n E_n(1/2) = sum_j binom(n,j) 2^j E_j
            Rational acc(0);
            for (long long j = 0; j <= n; ++j)
                acc += binom_int(n, j) * Rational(2).pow(j) * euler(j);
            return acc;
        }
        case Sequence::Daehee1: {
            Rational v = factorial(n) / Rational(n + 1);
            return (n % 2 != 0) ? -v : v;
        }
        case Sequence::Daehee2:
            return volkenborn_value(Polynomial::basis_element(Basis::Rising, n));
        case Sequence::Changhee1: {
            Rational v = factorial(n) / Rational(2).pow(n);
            return (n % 2 != 0) ? -v : v;
        }
        case Sequence::Changhee2:
            return fermionic_value(Polynomial::basis_element(Basis::Rising, n));
        case Sequence::Harmonic: {
            Rational acc(0);
            for (long long k = 0; k <= n; ++k) acc += Rational(1, k + 1);
            return acc;
        }
        case Sequence::Fubini: {
            // 1/(2 - e^t)
            TruncatedSeries g = std_series(StdSeries::Exp, order) * Rational(-1);
            g.set_coeff(0, Rational(1));
            return egf_prefix(g.inverse())[static_cast<std::size_t>(n)];
        }
        case Sequence::CauchyB2:
            return Polynomial::basis_element(Basis::Falling, n).definite_integral_01();
        case Sequence::YOfB:
            return volkenborn_value(Polynomial::basis_element(Basis::Falling, n) *
                                    Polynomial::basis_element(Basis::Rising, n));
        case Sequence::YOfE:
            return fermionic_value(Polynomial::basis_element(Basis::Falling, n) *
                                   Polynomial::basis_element(Basis::Rising, n));
    }
    throw std::logic_error("unreachable sequence family");
}

}  // namespace

Rational triangle(Triangle family, long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return Rational(0);
    switch (family) {
        case Triangle::S1: return triangle_get(g_s1, fill_s1, n, k);
        case Triangle::S2: return triangle_get(g_s2, fill_s2, n, k);
        case Triangle::CUnsigned: return triangle_get(g_s1, fill_s1, n, k).abs();
        case Triangle::Lah: return lah_signed(n, k);
        case Triangle::LahUnsigned: return lah_signed(n, k).abs();
        case Triangle::CfSmall: return triangle_get(g_cf_t, fill_cf_t, n, k);
        case Triangle::CfBig: return triangle_get(g_cf_T, fill_cf_T, n, k);
    }
    throw std::logic_error("unreachable triangle family");
}

Rational even_central_t(long long i, long long j) {
    return triangle(Triangle::CfSmall, 2 * i, 2 * j);
}

Rational even_central_T(long long i, long long j) {
    return triangle(Triangle::CfBig, 2 * i, 2 * j);
}

Rational stirling2_lambda(long long n, long long k, const Rational& lambda) {
    if (n < 0 || k < 0) return Rational(0);
    Rational acc(0);
    for (long long j = 0; j <= k; ++j) {
        Rational term = binom_int(k, j) * lambda.pow(j) * Rational(j).pow(n);
        acc += ((k - j) % 2 != 0) ? -term : term;
    }
    return acc / factorial(k);
}

Rational array_poly(long long n, long long k, const Rational& x, const Rational& lambda) {
    Rational acc(0);
    for (long long j = 0; j <= k; ++j) {
        Rational term = binom_int(k, j) * lambda.pow(j) * (Rational(j) + x).pow(n);
        acc += ((k - j) % 2 != 0) ? -term : term;
    }
    return acc / factorial(k);
}

Rational sequence(Sequence family, long long n) {
    if (n < 0) throw std::invalid_argument("negative sequence index");
    SequenceStore& store = g_seq[static_cast<int>(family)];
    {
        std::lock_guard<std::mutex> lock(store.mu);
        if (static_cast<std::size_t>(n) < store.values.size() &&
            store.values[static_cast<std::size_t>(n)])
            return *store.values[static_cast<std::size_t>(n)];
    }
    // Computed outside the lock: several families recurse into other
    // modules (integrals, triangles) that take their own locks.
    Rational v = compute_sequence(family, n);
    std::lock_guard<std::mutex> lock(store.mu);
    if (static_cast<std::size_t>(n) >= store.values.size())
        store.values.resize(static_cast<std::size_t>(n) + 1);
    store.values[static_cast<std::size_t>(n)] = v;
    return v;
}

Rational bernoulli(long long n) { return sequence(Sequence::Bernoulli, n); }
Rational euler(long long n) { return sequence(Sequence::Euler, n); }

Polynomial bernoulli_poly(long long n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long long j = 0; j <= n; ++j)
        c[static_cast<std::size_t>(n - j)] = binom_int(n, j) * bernoulli(j);
    return Polynomial(Basis::Monomial, std::move(c));
}

Polynomial euler_poly(long long n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long long j = 0; j <= n; ++j)
        c[static_cast<std::size_t>(n - j)] = binom_int(n, j) * euler(j);
    return Polynomial(Basis::Monomial, std::move(c));
}

Rational apostol(ParamFamily family, long long n, const Rational& param) {
    if (n < 0) throw std::invalid_argument("negative index");
    switch (family) {
        case ParamFamily::ApostolB: {
            if (param == Rational(1))
                throw std::domain_error("Apostol-Bernoulli numbers need lambda != 1");
            std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
            b[0] = Rational(0);
            if (n >= 1) b[1] = (param - Rational(1)).reciprocal();
            Rational front = param / (Rational(1) - param);
            for (long long m = 2; m <= n; ++m) {
                Rational acc(0);
                for (long long j = 0; j < m; ++j)
                    acc += binom_int(m, j) * b[static_cast<std::size_t>(j)];
                b[static_cast<std::size_t>(m)] = front * acc;
            }
            return b[static_cast<std::size_t>(n)];
        }
        case ParamFamily::ApostolE: {
            if (param == Rational(-1))
                throw std::domain_error("Apostol-Euler numbers need lambda != -1");
            std::vector<Rational> e(static_cast<std::size_t>(n) + 1);
            e[0] = Rational(2) / (param + Rational(1));
            Rational front = -(param / (Rational(1) + param));
            for (long long m = 1; m <= n; ++m) {
                Rational acc(0);
                for (long long j = 0; j < m; ++j)
                    acc += binom_int(m, j) * e[static_cast<std::size_t>(j)];
                e[static_cast<std::size_t>(m)] = front * acc;
            }
            return e[static_cast<std::size_t>(n)];
        }
        case ParamFamily::Frobenius: {
            if (param == Rational(1))
                throw std::domain_error("Frobenius-Euler numbers need u != 1");
            std::vector<Rational> h(static_cast<std::size_t>(n) + 1);
            h[0] = Rational(1);
            Rational front = (param - Rational(1)).reciprocal();
            for (long long m = 1; m <= n; ++m) {
                Rational acc(0);
                for (long long j = 0; j < m; ++j)
                    acc += binom_int(m, j) * h[static_cast<std::size_t>(j)];
                h[static_cast<std::size_t>(m)] = front * acc;
            }
            return h[static_cast<std::size_t>(n)];
        }
    }
    throw std::logic_error("unreachable parametric family");
}

Rational peters_number(long long n, const Rational& lambda, long long mu) {
    if (n < 0 || mu < 0) throw std::invalid_argument("Peters numbers need n, mu >= 0");
    int order = static_cast<int>(n);
    TruncatedSeries g = binom_pow(lambda, order);
    g.set_coeff(0, g.coeff(0) + Rational(1));  // 1 + (1+t)^lambda
    TruncatedSeries s = g.pow(-mu);
    return s.coeff(order) * factorial(n);
}

Rational peters_value(long long n, const Rational& x, const Rational& lambda, long long mu) {
    Rational acc(0);
    for (long long v = 0; v <= n; ++v)
        acc += binom_int(n, v) * falling(x, n - v) * peters_number(v, lambda, mu);
    return acc;
}

Polynomial peters_poly(long long n, const Rational& lambda, long long mu) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long long v = 0; v <= n; ++v)
        c[static_cast<std::size_t>(n - v)] = binom_int(n, v) * peters_number(v, lambda, mu);
    return Polynomial(Basis::Falling, std::move(c));
}

Rational y1_number(long long n, long long k, const Rational& lambda) {
    if (n < 0 || k < 0) throw std::invalid_argument("y1 needs n, k >= 0");
    Rational acc(0);
    for (long long j = 0; j <= k; ++j)
        acc += binom_int(k, j) * Rational(j).pow(n) * lambda.pow(j);
    return acc / factorial(k);
}

Rational y1_b_number(long long n, long long k) {
    Rational acc(0);
    for (long long j = 0; j <= k; ++j) acc += binom_int(k, j) * Rational(j).pow(n);
    return acc;
}

Rational y2_number(long long n, const Rational& lambda) {
    if (lambda == Rational(1)) throw std::domain_error("Y_{n,2} needs lambda != 1");
    int order = static_cast<int>(n);
    // 2 / (lambda^2 t + 2(lambda - 1))
    TruncatedSeries den(order);
    den.set_coeff(0, Rational(2) * (lambda - Rational(1)));
    if (order >= 1) den.set_coeff(1, lambda * lambda);
    return den.inverse().coeff(order) * Rational(2) * factorial(n);
}

Rational y2_value(long long n, const Rational& x, const Rational& lambda) {
    Rational acc(0);
    for (long long j = 0; j <= n; ++j)
        acc += binom_int(n, j) * lambda.pow(n - j) * y2_number(j, lambda) * falling(x, n - j);
    return acc;
}

Polynomial y2_poly(long long n, const Rational& lambda) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (long long j = 0; j <= n; ++j)
        c[static_cast<std::size_t>(n - j)] = binom_int(n, j) * lambda.pow(n - j) * y2_number(j, lambda);
    return Polynomial(Basis::Falling, std::move(c));
}

Rational harmonic_binom(long long k, long long n) {
    return triangle(Triangle::CUnsigned, k + 1, n + 1) / factorial(k);
}

}  // namespace pint
