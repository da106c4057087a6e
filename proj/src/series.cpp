#include "pint/series.hpp"

#include <stdexcept>

namespace pint {

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (order < 0 || c_.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("series coefficient count must be order+1");
}

void TruncatedSeries::check_same_order(const TruncatedSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("series order mismatch");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_same_order(o);
    TruncatedSeries r(order());
    for (int n = 0; n <= order(); ++n) r.c_[n] = c_[n] + o.c_[n];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    check_same_order(o);
    TruncatedSeries r(order());
    for (int n = 0; n <= order(); ++n) r.c_[n] = c_[n] - o.c_[n];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_same_order(o);
    TruncatedSeries r(order());
    for (int i = 0; i <= order(); ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
    TruncatedSeries r(order());
    for (int n = 0; n <= order(); ++n) r.c_[n] = c_[n] * s;
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("series inverse needs nonzero constant term");
    TruncatedSeries b(order());
    Rational inv0 = c_[0].reciprocal();
    b.c_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += c_[k] * b.c_[n - k];
        b.c_[n] = -(inv0 * acc);
    }
    return b;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    check_same_order(inner);
    if (!inner.c_[0].is_zero())
        throw std::domain_error("series composition needs inner constant term 0");
    // Horner in the inner series
    TruncatedSeries acc = constant_series(c_[order()], order());
    for (int j = order() - 1; j >= 0; --j) {
        acc = acc * inner;
        acc.c_[0] += c_[j];
    }
    return acc;
}

TruncatedSeries TruncatedSeries::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    TruncatedSeries base = *this;
    TruncatedSeries out = constant_series(Rational(1), order());
    while (e != 0) {
        if (e & 1ll) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

TruncatedSeries std_series(StdSeries kind, int order) {
    TruncatedSeries s(order);
    switch (kind) {
        case StdSeries::Exp: {
            Rational c(1);
            s.set_coeff(0, c);
            for (int n = 1; n <= order; ++n) {
                c = c / Rational(n);
                s.set_coeff(n, c);
            }
            return s;
        }
        case StdSeries::Log1p: {
            for (int n = 1; n <= order; ++n) {
                Rational c(1, n);
                s.set_coeff(n, (n % 2 == 0) ? -c : c);
            }
            return s;
        }
        case StdSeries::TOverLog1p: {
            // log(1+t)/t has constant term 1, so it inverts cleanly.
            TruncatedSeries g(order);
            for (int n = 0; n <= order; ++n) {
                Rational c(1, n + 1);
                g.set_coeff(n, (n % 2 == 1) ? -c : c);
            }
            return g.inverse();
        }
    }
    throw std::invalid_argument("unknown standard series kind");
}

TruncatedSeries binom_pow(const Rational& alpha, int order) {
    TruncatedSeries s(order);
    Rational c(1);
    s.set_coeff(0, c);
    for (int n = 1; n <= order; ++n) {
        c = c * (alpha - Rational(n - 1)) / Rational(n);
        s.set_coeff(n, c);
    }
    return s;
}

TruncatedSeries expm1_series(int order) {
    TruncatedSeries s = std_series(StdSeries::Exp, order);
    s.set_coeff(0, Rational(0));
    return s;
}

TruncatedSeries constant_series(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.set_coeff(0, c);
    return s;
}

TruncatedSeries identity_series(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.set_coeff(1, Rational(1));
    return s;
}

}  // namespace pint
