#include "pint/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "pint/families.hpp"

namespace pint {

Polynomial::Polynomial(Basis basis, std::vector<Rational> coeffs)
    : basis_(basis), c_(std::move(coeffs)) {
    strip();
}

void Polynomial::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(Basis::Monomial, {c});
}

Polynomial Polynomial::basis_element(Basis basis, long long n) {
    if (n < 0) throw std::invalid_argument("negative basis degree");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    c.back() = Rational(1);
    return Polynomial(basis, std::move(c));
}

Rational Polynomial::coeff(long long n) const {
    if (n < 0 || static_cast<std::size_t>(n) >= c_.size()) return Rational(0);
    return c_[static_cast<std::size_t>(n)];
}

std::optional<long long> Polynomial::degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<long long>(c_.size()) - 1;
}

namespace {

// Expansion of basis element number n in monomials, as a coefficient column.
Rational to_monomial_entry(Basis b, long long n, long long k) {
    switch (b) {
        case Basis::Monomial: return n == k ? Rational(1) : Rational(0);
        case Basis::Falling: return triangle(Triangle::S1, n, k);
        case Basis::Rising: return triangle(Triangle::CUnsigned, n, k);
        case Basis::Mahler: return triangle(Triangle::S1, n, k) / factorial(n);
        case Basis::Central: return triangle(Triangle::CfSmall, n, k);
    }
    throw std::logic_error("unreachable basis");
}

// Expansion of x^n in basis b, coefficient of basis element k.
Rational from_monomial_entry(Basis b, long long n, long long k) {
    switch (b) {
        case Basis::Monomial: return n == k ? Rational(1) : Rational(0);
        case Basis::Falling: return triangle(Triangle::S2, n, k);
        case Basis::Rising: {
            Rational v = triangle(Triangle::S2, n, k);
            return ((n - k) % 2 != 0) ? -v : v;
        }
        case Basis::Mahler: return triangle(Triangle::S2, n, k) * factorial(k);
        case Basis::Central: return triangle(Triangle::CfBig, n, k);
    }
    throw std::logic_error("unreachable basis");
}

}  // namespace

Polynomial Polynomial::convert(Basis target) const {
    if (target == basis_) return *this;
    if (c_.empty()) return Polynomial(target, {});
    long long d = static_cast<long long>(c_.size()) - 1;
    // into monomials
    std::vector<Rational> mono(c_.size());
    if (basis_ == Basis::Monomial) {
        mono = c_;
    } else {
        for (long long n = 0; n <= d; ++n) {
            if (c_[n].is_zero()) continue;
            for (long long k = 0; k <= n; ++k) {
                Rational e = to_monomial_entry(basis_, n, k);
                if (!e.is_zero()) mono[k] += c_[n] * e;
            }
        }
    }
    if (target == Basis::Monomial) return Polynomial(Basis::Monomial, std::move(mono));
    // out of monomials
    std::vector<Rational> out(c_.size());
    for (long long n = 0; n <= d; ++n) {
        if (mono[n].is_zero()) continue;
        for (long long k = 0; k <= n; ++k) {
            Rational e = from_monomial_entry(target, n, k);
            if (!e.is_zero()) out[k] += mono[n] * e;
        }
    }
    return Polynomial(target, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (basis_ == o.basis_) {
        std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < c_.size()) c[i] += c_[i];
            if (i < o.c_.size()) c[i] += o.c_[i];
        }
        return Polynomial(basis_, std::move(c));
    }
    return convert(Basis::Monomial) + o.convert(Basis::Monomial);
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Polynomial(basis_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial a = convert(Basis::Monomial);
    Polynomial b = o.convert(Basis::Monomial);
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(Basis::Monomial, std::move(c));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
    return Polynomial(basis_, std::move(c));
}

Polynomial Polynomial::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial out = constant(Rational(1));
    Polynomial base = *this;
    while (e != 0) {
        if (e & 1ll) out = out * base;
        if ((e >>= 1) != 0) base = base * base;
    }
    return out;
}

bool Polynomial::equals(const Polynomial& o) const {
    return convert(Basis::Monomial).c_ == o.convert(Basis::Monomial).c_;
}

Rational Polynomial::evaluate(const Rational& a) const {
    Rational acc(0);
    for (std::size_t n = 0; n < c_.size(); ++n) {
        if (c_[n].is_zero()) continue;
        long long d = static_cast<long long>(n);
        Rational term;
        switch (basis_) {
            case Basis::Monomial: term = a.pow(d); break;
            case Basis::Falling: term = falling(a, d); break;
            case Basis::Rising: term = rising(a, d); break;
            case Basis::Mahler: term = binom(a, d); break;
            case Basis::Central: {
                // x * (x + n/2 - 1)(x + n/2 - 2)...(x - n/2 + 1), empty product for n = 0
                if (d == 0) {
                    term = Rational(1);
                } else {
                    term = a;
                    Rational half_d(d, 2);
                    for (long long i = 1; i <= d - 1; ++i)
                        term *= a + half_d - Rational(i);
                }
                break;
            }
        }
        acc += c_[n] * term;
    }
    return acc;
}

Polynomial Polynomial::affine(const Rational& a, const Rational& b) const {
    Polynomial mono = convert(Basis::Monomial);
    if (mono.is_zero()) return mono;
    Polynomial lin(Basis::Monomial, {a, b});
    Polynomial acc = constant(mono.c_.back());
    for (std::size_t i = mono.c_.size() - 1; i-- > 0;) {
        acc = acc * lin + constant(mono.c_[i]);
    }
    return acc;
}

Polynomial Polynomial::shift(const Rational& m) const { return affine(m, Rational(1)); }

Polynomial Polynomial::forward_diff() const {
    return shift(Rational(1)) - convert(Basis::Monomial);
}

Polynomial Polynomial::central_diff() const {
    return shift(Rational(1, 2)) - shift(Rational(-1, 2));
}

Polynomial Polynomial::derivative() const {
    Polynomial mono = convert(Basis::Monomial);
    if (mono.c_.size() <= 1) return Polynomial();
    std::vector<Rational> c(mono.c_.size() - 1);
    for (std::size_t i = 1; i < mono.c_.size(); ++i)
        c[i - 1] = mono.c_[i] * Rational(static_cast<long long>(i));
    return Polynomial(Basis::Monomial, std::move(c));
}

Rational Polynomial::definite_integral_01() const {
    Polynomial mono = convert(Basis::Monomial);
    Rational acc(0);
    for (std::size_t i = 0; i < mono.c_.size(); ++i)
        acc += mono.c_[i] / Rational(static_cast<long long>(i) + 1);
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::parity_split() const {
    if (basis_ != Basis::Monomial)
        throw std::invalid_argument("parity_split requires monomial basis");
    std::vector<Rational> even(c_.size()), odd(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        (i % 2 == 0 ? even : odd)[i] = c_[i];
    }
    return {Polynomial(Basis::Monomial, std::move(even)),
            Polynomial(Basis::Monomial, std::move(odd))};
}

std::string Polynomial::to_string() const {
    Polynomial mono = convert(Basis::Monomial);
    if (mono.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = mono.c_.size(); i-- > 0;) {
        const Rational& c = mono.c_[i];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.is_negative()) out << "-";
            first = false;
        } else {
            out << (c.is_negative() ? " - " : " + ");
        }
        bool unit = mag == Rational(1);
        if (i == 0) {
            out << mag.to_string();
        } else {
            if (!unit) out << mag.to_string() << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw std::invalid_argument(std::string("expected '") + c + "' in polynomial");
    }

    long long parse_index() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("expected integer in polynomial");
        return std::stoll(s.substr(start, i - start));
    }

    Rational parse_number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("expected number in polynomial");
        std::string numerator = s.substr(start, i - start);
        if (accept('/')) {
            skip_ws();
            std::size_t dstart = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (dstart == i) throw std::invalid_argument("expected denominator in polynomial");
            return Rational(BigInt::from_decimal(numerator),
                            BigInt::from_decimal(s.substr(dstart, i - dstart)));
        }
        return Rational(BigInt::from_decimal(numerator));
    }

    bool accept_word(const char* w) {
        skip_ws();
        std::size_t n = 0;
        while (w[n] != '\0') ++n;
        if (s.compare(i, n, w) == 0) {
            i += n;
            return true;
        }
        return false;
    }

    Polynomial parse_factor() {
        skip_ws();
        if (i >= s.size()) throw std::invalid_argument("unexpected end of polynomial");
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(parse_number());
        if (accept_word("ff")) return parse_gen(Basis::Falling);
        if (accept_word("rf")) return parse_gen(Basis::Rising);
        if (accept_word("binom")) return parse_gen(Basis::Mahler);
        if (accept_word("cf")) return parse_gen(Basis::Central);
        if (c == 'x') {
            ++i;
            long long e = 1;
            if (accept('^')) e = parse_index();
            return Polynomial::basis_element(Basis::Monomial, e);
        }
        throw std::invalid_argument("unexpected character in polynomial");
    }

    Polynomial parse_gen(Basis b) {
        expect('(');
        long long n = parse_index();
        expect(')');
        return Polynomial::basis_element(b, n);
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_sum() {
        Polynomial acc;
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        for (;;) {
            Polynomial t = parse_term();
            acc = neg ? acc - t : acc + t;
            if (eof()) break;
            if (accept('+')) neg = false;
            else if (accept('-')) neg = true;
            else throw std::invalid_argument("expected '+' or '-' in polynomial");
        }
        return acc;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("empty polynomial");
    Polynomial out = p.parse_sum();
    return out.convert(Basis::Monomial);
}

BiPolynomial::BiPolynomial(std::vector<Polynomial> x_coeffs) : c_(std::move(x_coeffs)) {
    for (auto& q : c_) q = q.convert(Basis::Monomial);
    strip();
}

void BiPolynomial::strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPolynomial BiPolynomial::from_x(const Polynomial& p) {
    Polynomial mono = p.convert(Basis::Monomial);
    std::vector<Polynomial> c;
    c.reserve(mono.coeffs().size());
    for (const Rational& v : mono.coeffs()) c.push_back(Polynomial::constant(v));
    return BiPolynomial(std::move(c));
}

BiPolynomial BiPolynomial::from_y(const Polynomial& p) {
    return BiPolynomial({p.convert(Basis::Monomial)});
}

BiPolynomial BiPolynomial::substitute_sum(const Polynomial& p) {
    Polynomial mono = p.convert(Basis::Monomial);
    if (mono.is_zero()) return BiPolynomial();
    long long d = *mono.degree();
    std::vector<Polynomial> out(static_cast<std::size_t>(d) + 1);
    for (long long n = 0; n <= d; ++n) {
        Rational cn = mono.coeff(n);
        if (cn.is_zero()) continue;
        for (long long k = 0; k <= n; ++k) {
            // c_n binom(n,k) x^k y^(n-k)
            Polynomial ypart = Polynomial::basis_element(Basis::Monomial, n - k) *
                               (cn * binom_int(n, k));
            out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k)] + ypart;
        }
    }
    return BiPolynomial(std::move(out));
}

BiPolynomial BiPolynomial::substitute_product(const Polynomial& p) {
    Polynomial mono = p.convert(Basis::Monomial);
    if (mono.is_zero()) return BiPolynomial();
    long long d = *mono.degree();
    std::vector<Polynomial> out(static_cast<std::size_t>(d) + 1);
    for (long long n = 0; n <= d; ++n) {
        Rational cn = mono.coeff(n);
        if (cn.is_zero()) continue;
        out[static_cast<std::size_t>(n)] = Polynomial::basis_element(Basis::Monomial, n) * cn;
    }
    return BiPolynomial(std::move(out));
}

BiPolynomial BiPolynomial::operator+(const BiPolynomial& o) const {
    std::vector<Polynomial> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] = c[i] + c_[i];
        if (i < o.c_.size()) c[i] = c[i] + o.c_[i];
    }
    return BiPolynomial(std::move(c));
}

BiPolynomial BiPolynomial::operator-(const BiPolynomial& o) const {
    std::vector<Polynomial> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] = c[i] + c_[i];
        if (i < o.c_.size()) c[i] = c[i] - o.c_[i];
    }
    return BiPolynomial(std::move(c));
}

BiPolynomial BiPolynomial::operator*(const BiPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return BiPolynomial();
    std::vector<Polynomial> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            c[i + j] = c[i + j] + c_[i] * o.c_[j];
        }
    }
    return BiPolynomial(std::move(c));
}

bool BiPolynomial::equals(const BiPolynomial& o) const {
    const std::size_t n = std::max(c_.size(), o.c_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial a = i < c_.size() ? c_[i] : Polynomial();
        const Polynomial b = i < o.c_.size() ? o.c_[i] : Polynomial();
        if (!a.equals(b)) return false;
    }
    return true;
}

Rational BiPolynomial::evaluate(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        acc += x.pow(static_cast<long long>(i)) * c_[i].evaluate(y);
    }
    return acc;
}

long long BiPolynomial::max_degree(Var which) const {
    if (c_.empty()) return -1;
    if (which == Var::X) return static_cast<long long>(c_.size()) - 1;
    long long d = -1;
    for (const auto& q : c_) {
        if (auto qd = q.degree()) d = std::max(d, *qd);
    }
    return d;
}

Polynomial BiPolynomial::apply_moments(Var which, const std::vector<Rational>& moments) const {
    if (max_degree(which) >= static_cast<long long>(moments.size()))
        throw std::invalid_argument("not enough moments for bivariate degree");
    Polynomial out;
    if (which == Var::X) {
        for (std::size_t i = 0; i < c_.size(); ++i) out = out + c_[i] * moments[i];
        return out;
    }
    // replace y^j by moments[j] inside each coefficient, keep x structure
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Rational acc(0);
        const auto& q = c_[i].coeffs();
        for (std::size_t j = 0; j < q.size(); ++j) acc += q[j] * moments[j];
        c[i] = acc;
    }
    return Polynomial(Basis::Monomial, std::move(c));
}

}  // namespace pint
