#include <algorithm>
#include <string>
#include <vector>

#include "pint/catalog.hpp"
#include "pint/families.hpp"
#include "pint/integrate.hpp"
#include "pint/poly.hpp"
#include "pint/series.hpp"

// The check registry: one entry per catalogued identity, in manifest order.
// Each check computes both sides independently and compares exactly.

namespace pint {

namespace {

// -- shorthand builders -----------------------------------------------------

Polynomial mono(long long n) { return Polynomial::basis_element(Basis::Monomial, n); }
Polynomial ff(long long n) { return Polynomial::basis_element(Basis::Falling, n); }
Polynomial rf(long long n) { return Polynomial::basis_element(Basis::Rising, n); }
Polynomial mb(long long n) { return Polynomial::basis_element(Basis::Mahler, n); }
Polynomial cfp(long long n) { return Polynomial::basis_element(Basis::Central, n); }

Rational S1(long long n, long long k) { return triangle(Triangle::S1, n, k); }
Rational S2(long long n, long long k) { return triangle(Triangle::S2, n, k); }
Rational Cu(long long n, long long k) { return triangle(Triangle::CUnsigned, n, k); }
Rational Lsgn(long long n, long long k) { return triangle(Triangle::Lah, n, k); }
Rational Labs(long long n, long long k) { return triangle(Triangle::LahUnsigned, n, k); }
Rational cft(long long n, long long k) { return triangle(Triangle::CfSmall, n, k); }
Rational cfT(long long n, long long k) { return triangle(Triangle::CfBig, n, k); }

Rational B(long long n) { return bernoulli(n); }
Rational E(long long n) { return euler(n); }
Rational D(long long n) { return sequence(Sequence::Daehee1, n); }
Rational Ch(long long n) { return sequence(Sequence::Changhee1, n); }
Rational H(long long n) { return sequence(Sequence::Harmonic, n); }

Rational sgn(long long k) { return Rational(((k % 2) + 2) % 2 == 0 ? 1 : -1); }
Rational pow2(long long k) { return Rational(2).pow(k); }
Rational bi(long long n, long long k) { return binom_int(n, k); }

Rational vol(const Polynomial& p) { return volkenborn_value(p); }
Rational frm(const Polynomial& p) { return fermionic_value(p); }

std::string ps(const std::string& name, long long v) { return name + "=" + std::to_string(v); }

// Osgood-Wu connection coefficients C^(k)_{l,m} = sum_j S1(k,j) S2(j,l) S2(j,m).
Rational osgood_c(long long k, long long l, long long m) {
    Rational acc(0);
    for (long long j = 1; j <= k; ++j) acc += S1(k, j) * S2(j, l) * S2(j, m);
    return acc;
}

// binom(n,k) x^k (1-x)^(n-k)
Polynomial bernstein(long long k, long long n) {
    Polynomial one_minus_x(Basis::Monomial, {Rational(1), Rational(-1)});
    return mono(k) * one_minus_x.pow(n - k) * bi(n, k);
}

// x_(n+1)/x = (x-1)(x-2)...(x-n), a polynomial.
Polynomial falling_over_x(long long n) {
    Polynomial acc = Polynomial::constant(Rational(1));
    for (long long i = 1; i <= n; ++i)
        acc = acc * Polynomial(Basis::Monomial, {Rational(-i), Rational(1)});
    return acc;
}

// x^2 (x^2-1)(x^2-2^2)...(x^2-(n-1)^2), the even central factorial x^[2n].
Polynomial even_central_product(long long n) {
    Polynomial x2 = mono(2);
    Polynomial acc = x2;
    for (long long k = 1; k <= n - 1; ++k)
        acc = acc * (x2 - Polynomial::constant(Rational(k * k)));
    return acc;
}

// x prod_{k=1..n} (x^2 - (2k-1)^2/4), the odd central factorial x^[2n+1].
Polynomial odd_central_product(long long n) {
    Polynomial acc = mono(1);
    for (long long k = 1; k <= n; ++k)
        acc = acc * (mono(2) - Polynomial::constant(Rational((2 * k - 1) * (2 * k - 1), 4)));
    return acc;
}

bool poly_point(CheckContext& ctx, const std::string& params, const Polynomial& lhs,
                const Polynomial& rhs) {
    Polynomial a = lhs.convert(Basis::Monomial);
    Polynomial b = rhs.convert(Basis::Monomial);
    long long d = std::max(a.degree().value_or(-1), b.degree().value_or(-1));
    for (long long i = 0; i <= d; ++i) {
        if (a.coeff(i) != b.coeff(i))
            return ctx.point(params + " at coeff x^" + std::to_string(i), a.coeff(i), b.coeff(i));
    }
    return ctx.point(params, Rational(0), Rational(0));
}

bool bipoly_point(CheckContext& ctx, const std::string& params, const BiPolynomial& lhs,
                  const BiPolynomial& rhs) {
    long long dx = std::max(lhs.max_degree(BiPolynomial::Var::X), rhs.max_degree(BiPolynomial::Var::X));
    for (long long i = 0; i <= dx; ++i) {
        Polynomial a = i < static_cast<long long>(lhs.x_coeffs().size()) ? lhs.x_coeffs()[i]
                                                                         : Polynomial();
        Polynomial b = i < static_cast<long long>(rhs.x_coeffs().size()) ? rhs.x_coeffs()[i]
                                                                         : Polynomial();
        if (!a.equals(b)) {
            long long dy = std::max(a.degree().value_or(-1), b.degree().value_or(-1));
            for (long long j = 0; j <= dy; ++j) {
                if (a.coeff(j) != b.coeff(j))
                    return ctx.point(params + " at coeff x^" + std::to_string(i) + " y^" +
                                         std::to_string(j),
                                     a.coeff(j), b.coeff(j));
            }
        }
    }
    return ctx.point(params, Rational(0), Rational(0));
}

// Apostol-Bernoulli / Euler / Frobenius shorthands.
Rational apB(long long n, const Rational& lam) { return apostol(ParamFamily::ApostolB, n, lam); }
Rational apE(long long n, const Rational& lam) { return apostol(ParamFamily::ApostolE, n, lam); }
Rational frob(long long n, const Rational& u) { return apostol(ParamFamily::Frobenius, n, u); }

struct Reg {
    std::vector<IdentitySpec> specs;
    void add(const char* id, const char* eq, const char* anchor,
             std::function<void(CheckContext&)> f, bool erratum = false) {
        specs.push_back(IdentitySpec{id, eq, anchor, erratum, std::move(f)});
    }
};

void register_fac(Reg& reg) {
    reg.add("FAC.RO", "(Ro)", "x x_(n) = x_(n+1) + n x_(n)", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            if (!poly_point(ctx, ps("n", n), mono(1) * ff(n), ff(n + 1) + ff(n) * Rational(n)))
                return;
        }
    });

    reg.add("FAC.IDD1", "(IDD-1)", "x_(n+1) = x sum (-1)^(n-k) n_(n-k) x_(k)",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Polynomial rhs;
                    for (long long k = 0; k <= n; ++k)
                        rhs = rhs + ff(k) * (sgn(n - k) * falling(Rational(n), n - k));
                    if (!poly_point(ctx, ps("n", n), ff(n + 1), mono(1) * rhs)) return;
                }
            });

    reg.add("FAC.AB6", "(ab6)", "(x+1)_(n+1) = x x_(n) + x_(n)", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            if (!poly_point(ctx, ps("n", n), ff(n + 1).shift(Rational(1)),
                            mono(1) * ff(n) + ff(n)))
                return;
        }
    });

    reg.add("FAC.AB6A", "(ab6a)", "(x+1)_(n) = x_(n) + n x_(n-1)", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            if (!poly_point(ctx, ps("n", n), ff(n).shift(Rational(1)),
                            ff(n) + ff(n - 1) * Rational(n)))
                return;
        }
    });

    reg.add("FAC.LF1C", "(LamdaFun-1c)", "falling factorial product expansion",
            [](CheckContext& ctx) {
                for (long long m = 0; m <= 6; ++m) {
                    for (long long n = 0; n <= ctx.max_n(); ++n) {
                        Polynomial rhs;
                        for (long long k = 0; k <= m; ++k)
                            rhs = rhs + ff(m + n - k) * (bi(m, k) * bi(n, k) * factorial(k));
                        if (!poly_point(ctx, ps("m", m) + " " + ps("n", n), ff(m) * ff(n), rhs))
                            return;
                    }
                }
            });

    reg.add("FAC.CV", "(cv)", "Chu-Vandermonde, bivariate", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            BiPolynomial lhs;
            for (long long k = 0; k <= n; ++k)
                lhs = lhs + BiPolynomial::from_x(mb(k)) * BiPolynomial::from_y(mb(n - k));
            if (!bipoly_point(ctx, ps("n", n), lhs, BiPolynomial::substitute_sum(mb(n)))) return;
        }
    });

    reg.add("FAC.V1A", "(v1-A)", "Pascal rule for binom(x+1,n)", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            if (!poly_point(ctx, ps("n", n), mb(n).shift(Rational(1)), mb(n) + mb(n - 1))) return;
        }
    });

    reg.add("FAC.GG1", "(Gg1)", "x binom(x-2,n-1) as alternating k-weighted sum",
            [](CheckContext& ctx) {
                for (long long n = 1; n <= ctx.max_n(); ++n) {
                    Polynomial rhs;
                    for (long long k = 1; k <= n; ++k)
                        rhs = rhs + mb(k) * (sgn(k - n) * Rational(k));
                    if (!poly_point(ctx, ps("n", n), mono(1) * mb(n - 1).shift(Rational(-2)), rhs))
                        return;
                }
            });

    reg.add("FAC.GG2", "(Gg2)", "binom(n-x,n) = sum (-1)^k binom(x,k)", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Polynomial rhs;
            for (long long k = 0; k <= n; ++k) rhs = rhs + mb(k) * sgn(k);
            if (!poly_point(ctx, ps("n", n), mb(n).affine(Rational(n), Rational(-1)), rhs))
                return;
        }
    });

    reg.add("FAC.ID7", "(Id-7)", "binom(mx,n) Mahler expansion", [](CheckContext& ctx) {
        for (long long m = 1; m <= 6; ++m) {
            for (long long n = 0; n <= std::min<long long>(ctx.max_n(), 8); ++n) {
                Polynomial rhs;
                for (long long k = 0; k <= n; ++k) {
                    Rational inner(0);
                    for (long long j = 0; j <= k; ++j)
                        inner += sgn(j) * bi(k, j) * bi(m * k - m * j, n);
                    rhs = rhs + mb(k) * inner;
                }
                if (!poly_point(ctx, ps("m", m) + " " + ps("n", n),
                                mb(n).affine(Rational(0), Rational(m)), rhs))
                    return;
            }
        }
    });

    reg.add("FAC.ID5", "(Id-5)", "binom(x,n)^r Mahler expansion", [](CheckContext& ctx) {
        for (long long r = 0; r <= 3; ++r) {
            for (long long n = 0; n <= 6; ++n) {
                Polynomial rhs;
                for (long long k = 0; k <= n * r; ++k) {
                    Rational inner(0);
                    for (long long j = 0; j <= k; ++j)
                        inner += sgn(j) * bi(k, j) * bi(k - j, n).pow(r);
                    rhs = rhs + mb(k) * inner;
                }
                if (!poly_point(ctx, ps("n", n) + " " + ps("r", r), mb(n).pow(r), rhs)) return;
            }
        }
    });

    reg.add("FAC.ID6", "(Id-6)", "k^2-weighted alternating Mahler sum", [](CheckContext& ctx) {
        for (long long n = 2; n <= ctx.max_n(); ++n) {
            Polynomial lhs = mono(1) * mb(n - 1).shift(Rational(-2)) +
                             mono(1) * mono(1).shift(Rational(-1)) * mb(n - 2).shift(Rational(-3));
            Polynomial rhs;
            for (long long k = 0; k <= n; ++k)
                rhs = rhs + mb(k) * (sgn(k - n) * Rational(k * k));
            if (!poly_point(ctx, ps("n", n), lhs, rhs)) return;
        }
    });

    reg.add("FAC.ID1A", "(Id-1a)", "binom(x+n,n) Mahler expansion", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Polynomial rhs;
            for (long long k = 0; k <= n; ++k) {
                Rational inner(0);
                for (long long j = 0; j <= k; ++j)
                    inner += sgn(j) * bi(k, j) * bi(k - j + n, n);
                rhs = rhs + mb(k) * inner;
            }
            if (!poly_point(ctx, ps("n", n), mb(n).shift(Rational(n)), rhs)) return;
        }
    });

    reg.add("FAC.ID2B", "(Id-2b)", "binom(x+n,n) monomial expansion via S1",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Polynomial rhs;
                    for (long long k = 0; k <= n; ++k) {
                        Rational inner(0);
                        for (long long j = 0; j <= n; ++j)
                            inner += bi(n, j) * S1(j, k) / factorial(j);
                        rhs = rhs + mono(k) * inner;
                    }
                    if (!poly_point(ctx, ps("n", n), mb(n).shift(Rational(n)), rhs)) return;
                }
            });

    reg.add("FAC.BIAA", "(1BIaa)", "half-integer shifted binomial expansion",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Polynomial rhs;
                    for (long long k = 0; k <= n; ++k) {
                        Rational w = bi(n, k) * pow2(2 * k - 2 * n) /
                                     (Rational(2 * k + 1) * bi(2 * k, k));
                        rhs = rhs + mb(k) * w;
                    }
                    rhs = rhs * (Rational(2 * n + 1) * bi(2 * n, n));
                    Polynomial lhs = mb(n).shift(Rational(n) + Rational(1, 2));
                    if (!poly_point(ctx, ps("n", n), lhs, rhs)) return;
                }
            });

    reg.add("FAC.BI1B3", "(1BIb3)", "restatement of (Gg1)", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            Polynomial rhs;
            for (long long k = 1; k <= n; ++k) rhs = rhs + mb(k) * (sgn(k - n) * Rational(k));
            if (!poly_point(ctx, ps("n", n), mono(1) * mb(n - 1).shift(Rational(-2)), rhs))
                return;
        }
    });

    reg.add("FAC.BI1B4", "(1BIb4)", "binom(n-x,n) - 1 = sum_{k>=1} (-1)^k binom(x,k)",
            [](CheckContext& ctx) {
                for (long long n = 1; n <= ctx.max_n(); ++n) {
                    Polynomial rhs;
                    for (long long k = 1; k <= n; ++k) rhs = rhs + mb(k) * sgn(k);
                    Polynomial lhs = mb(n).affine(Rational(n), Rational(-1)) -
                                     Polynomial::constant(Rational(1));
                    if (!poly_point(ctx, ps("n", n), lhs, rhs)) return;
                }
            });

    reg.add(
        "FAC.SCHLOMILCH", "(Schlomilch)", "S1(n,k) double-binomial formula, checked verbatim",
        [](CheckContext& ctx) {
            ctx.note("formula checked exactly as printed; both sides reported");
            for (long long n = 1; n <= std::min<long long>(ctx.max_n(), 8); ++n) {
                for (long long k = 1; k <= n; ++k) {
                    Rational rhs(0);
                    for (long long j = 0; j <= n - k; ++j) {
                        Rational term = binom(Rational(n + j - 1), k - 1) *
                                        bi(2 * n - k, n - k - j) * S2(n - k + j, j);
                        rhs += sgn(j) * term;
                    }
                    ctx.observe(ps("n", n) + " " + ps("k", k), S1(n, k), rhs);
                }
            }
            ctx.note("boundary n=k=0 is outside the formula: the empty sum gives 0, S1(0,0)=1");
        },
        /*erratum=*/true);

    reg.add("FAC.OSGOOD", "(LamdaFun-1v)", "(xy)_(k) in the x_(l) y_(m) grid",
            [](CheckContext& ctx) {
                for (long long k = 1; k <= 6; ++k) {
                    BiPolynomial rhs;
                    for (long long l = 1; l <= k; ++l) {
                        for (long long m = 1; m <= k; ++m) {
                            Rational c = osgood_c(k, l, m);
                            if (c.is_zero()) continue;
                            rhs = rhs + BiPolynomial::from_x(ff(l) * c) * BiPolynomial::from_y(ff(m));
                        }
                    }
                    if (!bipoly_point(ctx, ps("k", k), BiPolynomial::substitute_product(ff(k)),
                                      rhs))
                        return;
                }
            });

    reg.add("FAC.LAH_DEF", "(Lah)/(LahLAH)", "Lah connection between the factorial bases",
            [](CheckContext& ctx) {
                for (long long n = 1; n <= ctx.max_n(); ++n) {
                    Polynomial neg;
                    Polynomial ris;
                    for (long long k = 1; k <= n; ++k) {
                        neg = neg + ff(k) * Lsgn(n, k);
                        ris = ris + ff(k) * Labs(n, k);
                    }
                    if (!poly_point(ctx, ps("n", n) + " signed",
                                    ff(n).affine(Rational(0), Rational(-1)), neg))
                        return;
                    if (!poly_point(ctx, ps("n", n) + " unsigned", rf(n), ris)) return;
                }
            });

    reg.add("FAC.CF_RT", "(acnum1t)/(acnum1T)", "t and T invert each other",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= 12; ++n) {
                    for (long long m = 0; m <= n; ++m) {
                        Rational acc(0);
                        for (long long k = m; k <= n; ++k) acc += cfT(n, k) * cft(k, m);
                        if (!ctx.point(ps("n", n) + " " + ps("m", m), acc,
                                       Rational(n == m ? 1 : 0)))
                            return;
                    }
                }
            });

    reg.add("FAC.BUTZER_EVEN", "(aBuT)", "even central factorial as a product",
            [](CheckContext& ctx) {
                for (long long n = 1; 2 * n <= ctx.max_n() + 2; ++n) {
                    if (!poly_point(ctx, ps("n", n), cfp(2 * n), even_central_product(n))) return;
                }
            });

    reg.add("FAC.BUTZER_ODD", "(aBuT1)", "odd central factorial as a product",
            [](CheckContext& ctx) {
                for (long long n = 0; 2 * n + 1 <= ctx.max_n() + 1; ++n) {
                    if (!poly_point(ctx, ps("n", n), cfp(2 * n + 1), odd_central_product(n)))
                        return;
                }
            });

    reg.add("FAC.BUTZER_REC", "(ABuTFAL.)", "two-step central factorial recurrence",
            [](CheckContext& ctx) {
                for (long long n = 2; n <= ctx.max_n(); ++n) {
                    Rational c = Rational(n - 2, 2).pow(2);
                    Polynomial rhs = (mono(2) - Polynomial::constant(c)) * cfp(n - 2);
                    if (!poly_point(ctx, ps("n", n), cfp(n), rhs)) return;
                }
            });

    reg.add("FAC.DELTA_T", "(delta^j x^n)", "central difference / derivative at 0 read off t, T",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= std::min<long long>(ctx.max_n(), 8); ++n) {
                    Polynomial dj = mono(n);
                    Polynomial pj = cfp(n).convert(Basis::Monomial);
                    for (long long j = 0; j <= n; ++j) {
                        if (!ctx.point(ps("n", n) + " " + ps("j", j) + " delta",
                                       dj.evaluate(Rational(0)), factorial(j) * cfT(n, j)))
                            return;
                        if (!ctx.point(ps("n", n) + " " + ps("j", j) + " D",
                                       pj.evaluate(Rational(0)), factorial(j) * cft(n, j)))
                            return;
                        dj = dj.central_diff();
                        pj = pj.derivative();
                    }
                }
            });
}

void register_gf(Reg& reg) {
    reg.add("GF.APB_VALUES", "(ABP2a)", "Apostol-Bernoulli closed forms vs recurrence",
            [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    Rational d = lam - Rational(1);
                    std::vector<Rational> closed = {
                        Rational(0),
                        d.reciprocal(),
                        Rational(-2) * lam / d.pow(2),
                        Rational(3) * lam * (lam + Rational(1)) / d.pow(3),
                        Rational(-4) * lam * (lam.pow(2) + 4 * lam + Rational(1)) / d.pow(4),
                        Rational(5) * lam *
                            (lam.pow(3) + 11 * lam.pow(2) + 11 * lam + Rational(1)) / d.pow(5),
                        Rational(-6) * lam *
                            (lam.pow(4) + 26 * lam.pow(3) + 66 * lam.pow(2) + 26 * lam +
                             Rational(1)) /
                            d.pow(6),
                        Rational(7) * lam *
                            (lam.pow(5) + 57 * lam.pow(4) + 302 * lam.pow(3) + 302 * lam.pow(2) +
                             57 * lam + Rational(1)) /
                            d.pow(7),
                    };
                    for (long long n = 0; n < static_cast<long long>(closed.size()); ++n) {
                        if (!ctx.point("lambda=" + lam.to_string() + " " + ps("n", n),
                                       apB(n, lam), closed[static_cast<std::size_t>(n)]))
                            return;
                    }
                }
            });

    reg.add("GF.APB_INITIAL", "(Ap.B)", "lambda B_n(1;lambda) vs B_n(lambda)",
            [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    auto b_at_1 = [&](long long n) {
                        Rational acc(0);
                        for (long long j = 0; j <= n; ++j) acc += bi(n, j) * apB(j, lam);
                        return acc;
                    };
                    if (!ctx.point("lambda=" + lam.to_string() + " n=1", lam * b_at_1(1),
                                   Rational(1) + apB(1, lam)))
                        return;
                    for (long long n = 2; n <= ctx.max_n(); ++n) {
                        if (!ctx.point("lambda=" + lam.to_string() + " " + ps("n", n),
                                       lam * b_at_1(n), apB(n, lam)))
                            return;
                    }
                }
            });

    reg.add("GF.APE_VALUES", "(AEP2a)", "Apostol-Euler closed forms vs recurrence",
            [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    Rational s = lam + Rational(1);
                    std::vector<Rational> closed = {
                        Rational(2) / s,
                        Rational(-2) * lam / s.pow(2),
                        Rational(2) * lam * (lam - Rational(1)) / s.pow(3),
                        Rational(-2) * lam * (lam.pow(2) - 4 * lam + Rational(1)) / s.pow(4),
                    };
                    for (long long n = 0; n < static_cast<long long>(closed.size()); ++n) {
                        if (!ctx.point("lambda=" + lam.to_string() + " " + ps("n", n),
                                       apE(n, lam), closed[static_cast<std::size_t>(n)]))
                            return;
                    }
                }
            });

    reg.add("GF.REL_APBE", "(RelationApostolEnBn)",
            "E_n(lambda) = -(2/(n+1)) B_{n+1}(-lambda)", [](CheckContext& ctx) {
                const std::vector<Rational> lams = {Rational(2), Rational(3), Rational(1, 2)};
                for (const Rational& lam : lams) {
                    for (long long n = 0; n <= ctx.max_n(); ++n) {
                        Rational rhs = Rational(-2, n + 1) * apB(n + 1, -lam);
                        if (!ctx.point("lambda=" + lam.to_string() + " " + ps("n", n),
                                       apE(n, lam), rhs))
                            return;
                    }
                }
            });

    reg.add("GF.FROB_EULER", "(aii2)", "E_n = H_n(-1)", [](CheckContext& ctx) {
        for (long long n = 0; n <= 12; ++n) {
            if (!ctx.point(ps("n", n), E(n), frob(n, Rational(-1)))) return;
        }
    });

    reg.add("GF.APB_FROB", "(B vs H)", "B_n(lambda) = n H_{n-1}(1/lambda)/(lambda-1)",
            [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    for (long long n = 1; n <= ctx.max_n(); ++n) {
                        Rational rhs = Rational(n) * frob(n - 1, lam.reciprocal()) /
                                       (lam - Rational(1));
                        if (!ctx.point("lambda=" + lam.to_string() + " " + ps("n", n),
                                       apB(n, lam), rhs))
                            return;
                    }
                }
            });

    reg.add("GF.CAUCHY_B2", "(Be-1t)/(LamdaFun-1p)",
            "t/log(1+t) coefficients vs the [0,1] integral", [](CheckContext& ctx) {
                TruncatedSeries s = std_series(StdSeries::TOverLog1p, 16);
                for (long long n = 0; n <= 12; ++n) {
                    Rational via_series = s.coeff(static_cast<int>(n)) * factorial(n);
                    if (!ctx.point(ps("n", n), via_series, sequence(Sequence::CauchyB2, n)))
                        return;
                }
            });

    reg.add("GF.FUBINI_W", "(1aSs1d)", "w-torsion Fubini generating identity",
            [](CheckContext& ctx) {
                const int K = 10;
                for (long long w = 1; w <= 3; ++w) {
                    for (long long yv = 1; yv <= 2; ++yv) {
                        Rational y(yv);
                        TruncatedSeries u = expm1_series(K).pow(w) * y.pow(w);
                        TruncatedSeries den = constant_series(Rational(1), K) - u;
                        TruncatedSeries lhs = den.inverse() * Rational(2);
                        for (int n = 0; n <= K; ++n) {
                            Rational rhs(0);
                            for (long long m = 0; w * m <= n; ++m)
                                rhs += y.pow(w * m) * factorial(w * m) * S2(n, w * m);
                            rhs = Rational(2) * rhs / factorial(n);
                            if (!ctx.point(ps("w", w) + " y=" + y.to_string() + " " + ps("n", n),
                                           lhs.coeff(n), rhs))
                                return;
                        }
                    }
                }
            });

    reg.add("GF.CHANGHEE_STIRLING", "(ChEuler)", "Ch_n = sum S1(n,k) E_k",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= 12; ++n) {
                    Rational rhs(0);
                    for (long long k = 0; k <= n; ++k) rhs += S1(n, k) * E(k);
                    if (!ctx.point(ps("n", n), Ch(n), rhs)) return;
                }
            });

    reg.add("GF.PETERS_SPECIAL", "(PP)/(A2)", "s_n(0;1,1) against Changhee and Y_{n,2}",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational s = peters_number(n, Rational(1), 1);
                    if (!ctx.point(ps("n", n) + " vs Ch/2", s, Ch(n) / Rational(2))) return;
                    for (const Rational& th : ctx.theta_samples()) {
                        Rational rhs = (th - Rational(1)).pow(n + 1) /
                                       (Rational(2) * th.pow(2 * n)) * y2_number(n, th);
                        if (!ctx.point(ps("n", n) + " theta=" + th.to_string(), s, rhs)) return;
                    }
                }
            });

    reg.add("GF.AY1B", "(ay1B)", "x_(n) recovered from the Peters family",
            [](CheckContext& ctx) {
                for (long long mu = 1; mu <= 3; ++mu) {
                    for (const Rational& lam : ctx.lambda_samples()) {
                        for (long long n = 0; n <= 6; ++n) {
                            Polynomial rhs;
                            for (long long v = 0; v <= n; ++v) {
                                Rational w(0);
                                for (long long j = 0; j <= mu; ++j)
                                    w += bi(mu, j) * falling(lam * Rational(j), v);
                                rhs = rhs + peters_poly(n - v, lam, mu) * (bi(n, v) * w);
                            }
                            if (!poly_point(ctx,
                                            ps("mu", mu) + " lambda=" + lam.to_string() + " " +
                                                ps("n", n),
                                            ff(n), rhs))
                                return;
                        }
                    }
                }
            });

    reg.add("GF.AY1C", "(ay1C)", "x_(n) recovered via B(k,mu) and S1",
            [](CheckContext& ctx) {
                for (long long mu = 1; mu <= 3; ++mu) {
                    for (const Rational& lam : ctx.lambda_samples()) {
                        for (long long n = 0; n <= 6; ++n) {
                            Polynomial rhs;
                            for (long long v = 0; v <= n; ++v) {
                                Rational w(0);
                                for (long long k = 0; k <= v; ++k)
                                    w += lam.pow(k) * y1_b_number(k, mu) * S1(v, k);
                                rhs = rhs + peters_poly(n - v, lam, mu) * (bi(n, v) * w);
                            }
                            if (!poly_point(ctx,
                                            ps("mu", mu) + " lambda=" + lam.to_string() + " " +
                                                ps("n", n),
                                            ff(n), rhs))
                                return;
                        }
                    }
                }
            });

    reg.add("GF.A1A3", "(A1)/(A3)", "Y_{n,2}(x;lambda) two expansions", [](CheckContext& ctx) {
        for (const Rational& lam : ctx.lambda_samples()) {
            Rational d = Rational(2) * lam - Rational(2);
            for (long long n = 0; n <= ctx.max_n(); ++n) {
                Polynomial closed;
                for (long long j = 0; j <= n; ++j) {
                    Rational w = Rational(2) * sgn(j) * factorial(j) * bi(n, j) *
                                 lam.pow(n + j) / d.pow(j + 1);
                    closed = closed + ff(n - j) * w;
                }
                if (!poly_point(ctx, "lambda=" + lam.to_string() + " " + ps("n", n),
                                y2_poly(n, lam), closed))
                    return;
            }
        }
    });
}

// continued in register_volk / register_ferm / register_ident / register_seq

void register_volk(Reg& reg);
void register_ferm(Reg& reg);
void register_ident(Reg& reg);
void register_seq(Reg& reg);

std::vector<IdentitySpec> build_catalog() {
    Reg reg;
    register_fac(reg);
    register_gf(reg);
    register_volk(reg);
    register_ferm(reg);
    register_ident(reg);
    register_seq(reg);
    return std::move(reg.specs);
}

}  // namespace

const std::vector<IdentitySpec>& identity_catalog() {
    static const std::vector<IdentitySpec> cat = build_catalog();
    return cat;
}

namespace {

void register_volk(Reg& reg) {
    reg.add("VOLK.C7", "(C7)", "I1(binom(x,n)) = (-1)^n/(n+1)", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            if (!ctx.point(ps("n", n), vol(mb(n)), sgn(n) / Rational(n + 1))) return;
        }
    });

    reg.add("VOLK.AK1", "(ak1)", "I1(x_(n)) = (-1)^n n!/(n+1)", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            if (!ctx.point(ps("n", n), vol(ff(n)), sgn(n) * factorial(n) / Rational(n + 1)))
                return;
        }
    });

    reg.add("VOLK.C0", "(C0)", "I1(binom(x+n-1,n)) alternating sum", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long m = 0; m <= n; ++m)
                rhs += sgn(m) * binom(Rational(n - 1), n - m) / Rational(m + 1);
            if (!ctx.point(ps("n", n), vol(mb(n).shift(Rational(n - 1))), rhs)) return;
        }
    });

    reg.add("VOLK.BI1", "(1BI)", "I1((x+n-1)_(n)) alternating sum", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long m = 0; m <= n; ++m)
                rhs += sgn(m) * binom(Rational(n - 1), n - m) / Rational(m + 1);
            if (!ctx.point(ps("n", n), vol(ff(n).shift(Rational(n - 1))), factorial(n) * rhs))
                return;
        }
    });

    reg.add("VOLK.L1", "(L1)", "I1(x x_(n)) closed form", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs = sgn(n + 1) * factorial(n) / Rational(n * n + 3 * n + 2);
            if (!ctx.point(ps("n", n), vol(mono(1) * ff(n)), rhs)) return;
        }
    });

    reg.add("VOLK.L1A", "(L1-A)", "I1(x x_(n)) via S1 and B", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs = B(n + 1);
            for (long long k = 1; k <= n; ++k) rhs += S1(n, k - 1) * B(k);
            if (!ctx.point(ps("n", n), vol(mono(1) * ff(n)), rhs)) return;
        }
    });

    reg.add("VOLK.LL1A", "(LL-1a)", "I1(x x^(n)) closed form", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 1; k <= n; ++k)
                rhs += sgn(k + 1) * bi(n - 1, k - 1) * factorial(n) /
                       Rational(k * k + 3 * k + 2);
            if (!ctx.point(ps("n", n), vol(mono(1) * rf(n)), rhs)) return;
        }
    });

    reg.add("VOLK.LL1B", "(LL-1b)", "I1(x x^(n)) via C(n,k)", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 1; k <= n; ++k) rhs += Cu(n, k) * B(k + 1);
            if (!ctx.point(ps("n", n), vol(mono(1) * rf(n)), rhs)) return;
        }
    });

    reg.add("VOLK.XRATIO", "(x_(n+1)/x)", "I1(x_(n+1)/x)", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 0; k <= n; ++k)
                rhs += falling(Rational(n), n - k) * factorial(k) / Rational(k + 1);
            if (!ctx.point(ps("n", n), vol(falling_over_x(n)), sgn(n) * rhs)) return;
        }
    });

    reg.add("VOLK.COMBSUM", "((n+1)!/(n+2))", "combinatorial sum collapse",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational lhs(0);
                    for (long long k = 0; k <= n; ++k)
                        lhs += falling(Rational(n), n - k) * factorial(k) /
                               Rational(k * k + 3 * k + 2);
                    if (!ctx.point(ps("n", n), lhs, factorial(n + 1) / Rational(n + 2))) return;
                }
            });

    reg.add("VOLK.X1N1", "((x+1)_(n+1))", "I1((x+1)_(n+1)) = (-1)^n n!/(n+2)",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    if (!ctx.point(ps("n", n), vol(ff(n + 1).shift(Rational(1))),
                                   sgn(n) * factorial(n) / Rational(n + 2)))
                        return;
                }
            });

    reg.add("VOLK.AI0A3", "(ai0a3)", "I1(binom(x+m,n))", [](CheckContext& ctx) {
        for (long long m = 0; m <= 6; ++m) {
            for (long long n = 0; n <= ctx.max_n(); ++n) {
                Rational rhs(0);
                for (long long k = 0; k <= n; ++k)
                    rhs += sgn(k) * bi(m, n - k) / Rational(k + 1);
                if (!ctx.point(ps("m", m) + " " + ps("n", n), vol(mb(n).shift(Rational(m))),
                               rhs))
                    return;
            }
        }
    });

    reg.add("VOLK.LF1A", "(LamdaFun-1a)", "double integral of binom(x+y,n)",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational lhs = double_integral(BiPolynomial::substitute_sum(mb(n)),
                                                   MeasureKind::Haar, MeasureKind::Haar);
                    Rational rhs(0);
                    for (long long k = 0; k <= n; ++k)
                        rhs += sgn(n) / Rational((k + 1) * (n - k + 1));
                    if (!ctx.point(ps("n", n), lhs, rhs)) return;
                }
            });

    reg.add("VOLK.LF1B", "(LamdaFun-1b)", "double integral of binom(x+y,n) via S1",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational lhs = double_integral(BiPolynomial::substitute_sum(mb(n)),
                                                   MeasureKind::Haar, MeasureKind::Haar);
                    Rational rhs(0);
                    for (long long k = 0; k <= n; ++k) {
                        for (long long j = 0; j <= k; ++j)
                            rhs += bi(k, j) * S1(n, k) * B(j) * B(k - j);
                    }
                    if (!ctx.point(ps("n", n), lhs, rhs / factorial(n))) return;
                }
            });

    reg.add("VOLK.V1A_INT", "(v1a)", "I1(binom(x+1,n))", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            if (!ctx.point(ps("n", n), vol(mb(n).shift(Rational(1))),
                           sgn(n + 1) / Rational(n * n + n)))
                return;
        }
    });

    reg.add("VOLK.X1N", "((x+1)_(n))", "I1((x+1)_(n))", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            if (!ctx.point(ps("n", n), vol(ff(n).shift(Rational(1))),
                           sgn(n + 1) * factorial(n) / Rational(n * n + n)))
                return;
        }
    });

    reg.add("VOLK.DELTA_INT", "(Delta x_(n))", "I1(Delta x_(n)) = (-1)^(n+1)(n-1)!",
            [](CheckContext& ctx) {
                for (long long n = 1; n <= ctx.max_n(); ++n) {
                    if (!ctx.point(ps("n", n), vol(ff(n).forward_diff()),
                                   sgn(n + 1) * factorial(n - 1)))
                        return;
                }
            });

    reg.add("VOLK.NEGX", "((-x)_(n))", "I1((-x)_(n))", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 1; k <= n; ++k)
                rhs += sgn(k + n) * bi(n - 1, k - 1) * factorial(n) / Rational(k + 1);
            if (!ctx.point(ps("n", n), vol(ff(n).affine(Rational(0), Rational(-1))), rhs))
                return;
        }
    });

    reg.add("VOLK.V1B", "(v1b)", "I1(binom(x+1,n+1))", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            if (!ctx.point(ps("n", n), vol(mb(n + 1).shift(Rational(1))),
                           sgn(n) / Rational(n * n + 3 * n + 2)))
                return;
        }
    });

    reg.add("VOLK.LF1S", "(LamdaFun-1s)", "double integral of (xy)_(k), Osgood grid",
            [](CheckContext& ctx) {
                for (long long k = 1; k <= 6; ++k) {
                    Rational lhs = double_integral(BiPolynomial::substitute_product(ff(k)),
                                                   MeasureKind::Haar, MeasureKind::Haar);
                    Rational rhs(0);
                    for (long long l = 1; l <= k; ++l) {
                        for (long long m = 1; m <= k; ++m)
                            rhs += sgn(l + m) * factorial(l) * factorial(m) * osgood_c(k, l, m) /
                                   Rational((l + 1) * (m + 1));
                    }
                    if (!ctx.point(ps("k", k), lhs, rhs)) return;
                }
            });

    reg.add("VOLK.LF1U", "(LamdaFun-1u)", "double integral of (xy)_(k) via S1, B^2",
            [](CheckContext& ctx) {
                for (long long k = 0; k <= 8; ++k) {
                    Rational lhs = double_integral(BiPolynomial::substitute_product(ff(k)),
                                                   MeasureKind::Haar, MeasureKind::Haar);
                    Rational rhs(0);
                    for (long long m = 0; m <= k; ++m) rhs += S1(k, m) * B(m).pow(2);
                    if (!ctx.point(ps("k", k), lhs, rhs)) return;
                }
            });

    reg.add("VOLK.GG1_INT", "(Gg1 integral)", "I1(x binom(x-2,n-1))", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 1; k <= n; ++k) rhs += Rational(k, k + 1);
            if (!ctx.point(ps("n", n), vol(mono(1) * mb(n - 1).shift(Rational(-2))),
                           sgn(n) * rhs))
                return;
        }
    });

    reg.add("VOLK.HARM_INT", "(Gg2 integral)", "I1(binom(n-x,n)) = H_n", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            if (!ctx.point(ps("n", n), vol(mb(n).affine(Rational(n), Rational(-1))), H(n)))
                return;
        }
    });

    reg.add("VOLK.ID7_INT", "(Id-7 integral)", "I1(binom(mx,n))", [](CheckContext& ctx) {
        for (long long m = 1; m <= 6; ++m) {
            for (long long n = 0; n <= std::min<long long>(ctx.max_n(), 8); ++n) {
                Rational rhs(0);
                for (long long k = 0; k <= n; ++k) {
                    Rational inner(0);
                    for (long long j = 0; j <= k; ++j)
                        inner += sgn(j) * bi(k, j) * bi(m * k - m * j, n);
                    rhs += sgn(k) / Rational(k + 1) * inner;
                }
                if (!ctx.point(ps("m", m) + " " + ps("n", n),
                               vol(mb(n).affine(Rational(0), Rational(m))), rhs))
                    return;
            }
        }
    });

    reg.add("VOLK.IR2", "(IR-2)", "I1(binom(x,n)^r)", [](CheckContext& ctx) {
        for (long long r = 0; r <= 3; ++r) {
            for (long long n = 0; n <= 6; ++n) {
                Rational rhs(0);
                for (long long k = 0; k <= n * r; ++k) {
                    Rational inner(0);
                    for (long long j = 0; j <= k; ++j)
                        inner += sgn(j) * bi(k, j) * bi(k - j, n).pow(r);
                    rhs += sgn(k) / Rational(k + 1) * inner;
                }
                if (!ctx.point(ps("n", n) + " " + ps("r", r), vol(mb(n).pow(r)), rhs)) return;
            }
        }
    });

    reg.add("VOLK.ID6_INT", "(Id-6 integral)", "k^2/(k+1) alternating sum",
            [](CheckContext& ctx) {
                for (long long n = 2; n <= ctx.max_n(); ++n) {
                    Polynomial lhs = mono(1) * mb(n - 1).shift(Rational(-2)) +
                                     mono(1) * mono(1).shift(Rational(-1)) *
                                         mb(n - 2).shift(Rational(-3));
                    Rational rhs(0);
                    for (long long k = 0; k <= n; ++k) rhs += Rational(k * k, k + 1);
                    if (!ctx.point(ps("n", n), vol(lhs), sgn(n) * rhs)) return;
                }
            });

    reg.add("VOLK.ID1_ID2", "(Id-1)/(Id-2)", "I1(binom(x+n,n)) both expansions",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational v = vol(mb(n).shift(Rational(n)));
                    Rational r1(0);
                    for (long long k = 0; k <= n; ++k) {
                        Rational inner(0);
                        for (long long j = 0; j <= k; ++j)
                            inner += sgn(j) * bi(k, j) * bi(k - j + n, n);
                        r1 += sgn(k) / Rational(k + 1) * inner;
                    }
                    if (!ctx.point(ps("n", n) + " (Id-1)", v, r1)) return;
                    Rational r2(0);
                    for (long long k = 0; k <= n; ++k) {
                        Rational inner(0);
                        for (long long j = 0; j <= n; ++j)
                            inner += bi(n, j) * S1(j, k) / factorial(j);
                        r2 += B(k) * inner;
                    }
                    if (!ctx.point(ps("n", n) + " (Id-2)", v, r2)) return;
                }
            });

    reg.add("VOLK.BIAA_INT", "(1BIaa integral)", "I1(binom(x+n+1/2,n))", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 0; k <= n; ++k)
                rhs += sgn(k) * bi(n, k) * pow2(2 * k - 2 * n) * Rational(2 * n + 1) /
                       (Rational(k + 1) * Rational(2 * k + 1) * bi(2 * k, k));
            rhs = bi(2 * n, n) * rhs;
            if (!ctx.point(ps("n", n), vol(mb(n).shift(Rational(n) + Rational(1, 2))), rhs))
                return;
        }
    });

    reg.add("VOLK.AS1B", "(aS1B)", "I1(x^m x_(n)) = sum S1(n,k) B_{k+m}", [](CheckContext& ctx) {
        for (long long m = 0; m <= 6; ++m) {
            for (long long n = 0; n <= 6; ++n) {
                Rational rhs(0);
                for (long long k = 0; k <= n; ++k) rhs += S1(n, k) * B(k + m);
                if (!ctx.point(ps("m", m) + " " + ps("n", n), vol(mono(m) * ff(n)), rhs))
                    return;
            }
        }
    });

    reg.add("VOLK.LF1H", "(LamdaFun-1h)", "I1(x_(n) x_(m)) via S1 x S1", [](CheckContext& ctx) {
        for (long long n = 0; n <= 6; ++n) {
            for (long long m = 0; m <= 6; ++m) {
                Rational rhs(0);
                for (long long j = 0; j <= n; ++j) {
                    for (long long l = 0; l <= m; ++l) rhs += S1(n, j) * S1(m, l) * B(j + l);
                }
                if (!ctx.point(ps("n", n) + " " + ps("m", m), vol(ff(n) * ff(m)), rhs)) return;
            }
        }
    });

    reg.add("VOLK.LAHV", "(1LaHv)", "I1(x_(n) x_(m)) closed form", [](CheckContext& ctx) {
        for (long long n = 0; n <= 6; ++n) {
            for (long long m = 0; m <= 6; ++m) {
                Rational rhs(0);
                for (long long k = 0; k <= m; ++k)
                    rhs += sgn(m + n - k) * bi(m, k) * bi(n, k) * factorial(k) *
                           factorial(m + n - k) / Rational(m + n - k + 1);
                if (!ctx.point(ps("n", n) + " " + ps("m", m), vol(ff(n) * ff(m)), rhs)) return;
            }
        }
    });

    reg.add("VOLK.LF1I", "(LamdaFun-1i)", "I1(x_(n) x_(m)) via the product expansion",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= 6; ++n) {
                    for (long long m = 0; m <= 6; ++m) {
                        Rational rhs(0);
                        for (long long k = 0; k <= m; ++k) {
                            Rational inner(0);
                            for (long long l = 0; l <= m + n - k; ++l)
                                inner += S1(m + n - k, l) * B(l);
                            rhs += bi(m, k) * bi(n, k) * factorial(k) * inner;
                        }
                        if (!ctx.point(ps("n", n) + " " + ps("m", m), vol(ff(n) * ff(m)), rhs))
                            return;
                    }
                }
            });

    reg.add("VOLK.BIAB", "(1BIab)", "I1(x_(m)(x-m)_(n))", [](CheckContext& ctx) {
        for (long long m = 0; m <= 6; ++m) {
            for (long long n = 0; n <= 6; ++n) {
                Polynomial p = ff(m) * ff(n).shift(Rational(-m));
                Rational rhs = sgn(m + n) * factorial(m + n) / Rational(m + n + 1);
                if (!ctx.point(ps("m", m) + " " + ps("n", n), vol(p), rhs)) return;
            }
        }
    });

    reg.add("VOLK.CFT_INT", "(acnum1Tt)", "I1(x^[n]) = sum t(n,k) B_k", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 0; k <= n; ++k) rhs += cft(n, k) * B(k);
            if (!ctx.point(ps("n", n), vol(cfp(n)), rhs)) return;
        }
    });

    reg.add("VOLK.CF2_INT", "(x^2 x^[n-2])", "central two-step integral", [](CheckContext& ctx) {
        for (long long n = 2; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 0; k <= n; ++k) rhs += cft(n, k) * B(k);
            Rational tail(0);
            for (long long k = 0; k <= n - 2; ++k) tail += cft(n - 2, k) * B(k);
            rhs += Rational(n - 2, 2).pow(2) * tail;
            if (!ctx.point(ps("n", n), vol(mono(2) * cfp(n - 2)), rhs)) return;
        }
    });

    reg.add("VOLK.CF_EVEN_INT", "(x^[2n])", "even central product integral",
            [](CheckContext& ctx) {
                for (long long n = 1; 2 * n <= ctx.max_n() + 2; ++n) {
                    Rational rhs(0);
                    for (long long k = 1; k <= n; ++k) rhs += cft(2 * n, 2 * k) * B(2 * k);
                    if (!ctx.point(ps("n", n), vol(even_central_product(n)), rhs)) return;
                }
            });

    reg.add("VOLK.CF_ODD_INT", "(x^[2n+1])", "odd rule on x^[2n+1]", [](CheckContext& ctx) {
        for (long long n = 0; 2 * n + 1 <= ctx.max_n() + 1; ++n) {
            Rational via_rule = odd_rule(cfp(2 * n + 1).convert(Basis::Monomial));
            if (!ctx.point(ps("n", n), vol(cfp(2 * n + 1)), via_rule)) return;
        }
    });

    reg.add("VOLK.XVBINR_V", "(x^v binom^r)", "I1(x^v binom(x,n)^r)", [](CheckContext& ctx) {
        for (long long v = 0; v <= 3; ++v) {
            for (long long n = 0; n <= 4; ++n) {
                for (long long r = 0; r <= 3; ++r) {
                    Rational rhs(0);
                    for (long long k = 0; k <= n * r; ++k) {
                        Rational s1sum(0);
                        for (long long l = 0; l <= k; ++l) s1sum += S1(k, l) * B(v + l);
                        Rational inner(0);
                        for (long long j = 0; j <= k; ++j)
                            inner += sgn(j) * bi(k, j) * bi(k - j, n).pow(r);
                        rhs += inner * s1sum / factorial(k);
                    }
                    if (!ctx.point(ps("v", v) + " " + ps("n", n) + " " + ps("r", r),
                                   vol(mono(v) * mb(n).pow(r)), rhs))
                        return;
                }
            }
        }
    });

    reg.add("VOLK.BERN_SUM_V", "(A.Berns.8b/9/9a)", "alternating Bernstein integrals",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational lhs(0);
                    for (long long k = 0; k <= n; ++k) lhs += sgn(k) * vol(bernstein(k, n));
                    Rational r1(0);
                    for (long long j = 0; j <= n; ++j)
                        r1 += bi(n, j) * Rational(-2).pow(n - j) * B(n - j);
                    if (!ctx.point(ps("n", n) + " direct", lhs, r1)) return;
                    Rational r2(0), r3(0);
                    for (long long j = 0; j <= n; ++j) {
                        for (long long m = 0; m <= n - j; ++m) {
                            r2 += bi(n, j) * sgn(n + m - j) * pow2(n - j) * S2(n - j, m) *
                                  factorial(m) / Rational(m + 1);
                            r3 += bi(n, j) * Rational(-2).pow(n - j) * S2(n - j, m) * D(m);
                        }
                    }
                    if (!ctx.point(ps("n", n) + " via x_(m)", lhs, r2)) return;
                    if (!ctx.point(ps("n", n) + " via D_m", lhs, r3)) return;
                }
            });

    reg.add("VOLK.PETERS_V", "(1aS1/1aS2/1aS3/1aS5)", "I1 of the Peters polynomials",
            [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    for (long long mu = 1; mu <= 3; ++mu) {
                        for (long long n = 0; n <= 5; ++n) {
                            Rational v = vol(peters_poly(n, lam, mu));
                            std::string tag = "lambda=" + lam.to_string() + " " + ps("mu", mu) +
                                              " " + ps("n", n);
                            Rational r1(0), r2(0), r3(0);
                            for (long long w = 0; w <= n; ++w) {
                                Rational s = peters_number(w, lam, mu);
                                r1 += bi(n, w) * s * D(n - w);
                                r2 += sgn(n - w) * bi(n, w) * s * factorial(n - w) /
                                      Rational(n - w + 1);
                                Rational inner(0);
                                for (long long l = 0; l <= n - w; ++l)
                                    inner += S1(n - w, l) * B(l);
                                r3 += bi(n, w) * s * inner;
                            }
                            if (!ctx.point(tag + " via D", v, r1)) return;
                            if (!ctx.point(tag + " factorial form", v, r2)) return;
                            if (!ctx.point(tag + " via S1,B", v, r3)) return;
                            Rational lhs5(0);
                            for (long long w = 0; w <= n; ++w) {
                                Rational weight(0);
                                for (long long j = 0; j <= mu; ++j)
                                    weight += bi(mu, j) * falling(lam * Rational(j), w);
                                lhs5 += bi(n, w) * weight * vol(peters_poly(n - w, lam, mu));
                            }
                            if (!ctx.point(tag + " inversion", lhs5,
                                           sgn(n) * factorial(n) / Rational(n + 1)))
                                return;
                        }
                    }
                }
            });

    reg.add("VOLK.HARMPROD_V", "(AF5s)", "I1(prod (1+jx)) via harmonic binomials",
            [](CheckContext& ctx) {
                for (long long k = 1; k <= 8; ++k) {
                    Polynomial prod = Polynomial::constant(Rational(1));
                    for (long long j = 1; j <= k; ++j)
                        prod = prod * Polynomial(Basis::Monomial, {Rational(1), Rational(j)});
                    Rational rhs(0);
                    for (long long n = 0; n <= k; ++n)
                        rhs += factorial(k) * harmonic_binom(k, k - n) * B(n);
                    if (!ctx.point(ps("k", k), vol(prod), rhs)) return;
                }
            });

    reg.add(
        "VOLK.UNIT_TP", "(T_p units integral)",
        "integral of x^n over the units: direct value vs printed 1/n variant",
        [](CheckContext& ctx) {
            ctx.note("direct = I1(x^n) - coset integral over pZ_p = (1-p^(n-1)) B_n;");
            ctx.note("variant = (1-p^(n-1)) B_n/n, which matches p-adic zeta special values");
            for (std::uint32_t p : {2u, 3u, 5u}) {
                for (long long m = 1; m <= 8; ++m) {
                    Rational direct = unit_integral_monomial(m, p);
                    Rational variant = unit_integral_zeta_variant(m, p);
                    Rational closed = (Rational(1) - Rational(p).pow(m - 1)) * B(m);
                    if (direct != closed)
                        ctx.note("direct value disagrees with (1-p^(n-1))B_n at p=" +
                                 std::to_string(p) + " n=" + std::to_string(m));
                    ctx.observe("p=" + std::to_string(p) + " " + ps("n", m), direct, variant);
                }
            }
        },
        /*erratum=*/true);
}

void register_ferm(Reg& reg) {
    reg.add("FERM.EST3", "(est-3)", "Im(binom(x,n)) = (-1)^n 2^-n", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            if (!ctx.point(ps("n", n), frm(mb(n)), sgn(n) * pow2(-n))) return;
        }
    });

    reg.add("FERM.AK2", "(ak2)", "Im(x_(n)) = (-1)^n 2^-n n!", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            if (!ctx.point(ps("n", n), frm(ff(n)), sgn(n) * pow2(-n) * factorial(n))) return;
        }
    });

    reg.add("FERM.CA1", "(Ca-1)", "Im(binom(x+n-1,n))", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long m = 0; m <= n; ++m)
                rhs += sgn(m) * binom(Rational(n - 1), n - m) * pow2(-m);
            if (!ctx.point(ps("n", n), frm(mb(n).shift(Rational(n - 1))), rhs)) return;
        }
    });

    reg.add("FERM.FI1", "(1FI)", "Im((x+n-1)_(n))", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long m = 0; m <= n; ++m)
                rhs += sgn(m) * binom(Rational(n - 1), n - m) * pow2(-m);
            if (!ctx.point(ps("n", n), frm(ff(n).shift(Rational(n - 1))), factorial(n) * rhs))
                return;
        }
    });

    reg.add("FERM.AB7", "(ab7)", "Im(x x_(n)) closed form", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs = sgn(n) * Rational(n - 1) * factorial(n) / pow2(n + 1);
            if (!ctx.point(ps("n", n), frm(mono(1) * ff(n)), rhs)) return;
        }
    });

    reg.add("FERM.AB7A", "(ab7a)", "Im(x x^(n))", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 1; k <= n; ++k)
                rhs += sgn(k) * bi(n - 1, k - 1) * Rational(k - 1) * factorial(n) / pow2(k + 1);
            if (!ctx.point(ps("n", n), frm(mono(1) * rf(n)), rhs)) return;
        }
    });

    reg.add("FERM.V1B_F", "(v1-B)", "Im((x+1)_(n))", [](CheckContext& ctx) {
        for (long long n = 1; n <= ctx.max_n(); ++n) {
            if (!ctx.point(ps("n", n), frm(ff(n).shift(Rational(1))),
                           sgn(n + 1) * factorial(n) / pow2(n)))
                return;
        }
    });

    reg.add("FERM.XRATIO_F", "(x_(n+1)/x)", "Im(x_(n+1)/x)", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 0; k <= n; ++k)
                rhs += falling(Rational(n), n - k) * factorial(k) / pow2(k);
            if (!ctx.point(ps("n", n), frm(falling_over_x(n)), sgn(n) * rhs)) return;
        }
    });

    reg.add("FERM.LF1Y", "(LamdaFun-1y)", "double fermionic integral of (xy)_(k), grid",
            [](CheckContext& ctx) {
                for (long long k = 1; k <= 6; ++k) {
                    Rational lhs = double_integral(BiPolynomial::substitute_product(ff(k)),
                                                   MeasureKind::MinusOne, MeasureKind::MinusOne);
                    Rational rhs(0);
                    for (long long l = 1; l <= k; ++l) {
                        for (long long m = 1; m <= k; ++m)
                            rhs += sgn(l + m) * pow2(-m - l) * factorial(l) * factorial(m) *
                                   osgood_c(k, l, m);
                    }
                    if (!ctx.point(ps("k", k), lhs, rhs)) return;
                }
            });

    reg.add("FERM.LF1Z", "(LamdaFun-1z)", "double fermionic integral of (xy)_(k) via E^2",
            [](CheckContext& ctx) {
                for (long long k = 0; k <= 8; ++k) {
                    Rational lhs = double_integral(BiPolynomial::substitute_product(ff(k)),
                                                   MeasureKind::MinusOne, MeasureKind::MinusOne);
                    Rational rhs(0);
                    for (long long m = 0; m <= k; ++m) rhs += S1(k, m) * E(m).pow(2);
                    if (!ctx.point(ps("k", k), lhs, rhs)) return;
                }
            });

    reg.add("FERM.ID6_F", "(Id-6 fermionic)", "k^2/2^k alternating sum", [](CheckContext& ctx) {
        for (long long n = 2; n <= ctx.max_n(); ++n) {
            Polynomial lhs = mono(1) * mb(n - 1).shift(Rational(-2)) +
                             mono(1) * mono(1).shift(Rational(-1)) *
                                 mb(n - 2).shift(Rational(-3));
            Rational rhs(0);
            for (long long k = 0; k <= n; ++k) rhs += Rational(k * k) / pow2(k);
            if (!ctx.point(ps("n", n), frm(lhs), sgn(n) * rhs)) return;
        }
    });

    reg.add("FERM.ID3_ID4", "(Id-3)/(Id-4)", "Im(binom(x+n,n)) both expansions",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational v = frm(mb(n).shift(Rational(n)));
                    Rational r1(0);
                    for (long long k = 0; k <= n; ++k) {
                        Rational inner(0);
                        for (long long j = 0; j <= k; ++j)
                            inner += sgn(j) * bi(k, j) * bi(k - j + n, n);
                        r1 += sgn(k) * pow2(-k) * inner;
                    }
                    if (!ctx.point(ps("n", n) + " (Id-3)", v, r1)) return;
                    Rational r2(0);
                    for (long long k = 0; k <= n; ++k) {
                        Rational inner(0);
                        for (long long j = 0; j <= n; ++j)
                            inner += bi(n, j) * S1(j, k) / factorial(j);
                        r2 += E(k) * inner;
                    }
                    if (!ctx.point(ps("n", n) + " (Id-4)", v, r2)) return;
                }
            });

    reg.add("FERM.ID7_F", "(Id-7 fermionic)", "Im(binom(mx,n))", [](CheckContext& ctx) {
        for (long long m = 1; m <= 6; ++m) {
            for (long long n = 0; n <= std::min<long long>(ctx.max_n(), 8); ++n) {
                Rational rhs(0);
                for (long long k = 0; k <= n; ++k) {
                    Rational inner(0);
                    for (long long j = 0; j <= k; ++j)
                        inner += sgn(j) * bi(k, j) * bi(m * k - m * j, n);
                    rhs += sgn(k) * pow2(-k) * inner;
                }
                if (!ctx.point(ps("m", m) + " " + ps("n", n),
                               frm(mb(n).affine(Rational(0), Rational(m))), rhs))
                    return;
            }
        }
    });

    reg.add("FERM.IR1", "(IR-1)", "Im(binom(x,n)^r)", [](CheckContext& ctx) {
        for (long long r = 0; r <= 3; ++r) {
            for (long long n = 0; n <= 6; ++n) {
                Rational rhs(0);
                for (long long k = 0; k <= n * r; ++k) {
                    Rational inner(0);
                    for (long long j = 0; j <= k; ++j)
                        inner += sgn(j) * bi(k, j) * bi(k - j, n).pow(r);
                    rhs += sgn(k) * pow2(-k) * inner;
                }
                if (!ctx.point(ps("n", n) + " " + ps("r", r), frm(mb(n).pow(r)), rhs)) return;
            }
        }
    });

    reg.add("FERM.HARM_F", "(2^-k sum)", "Im(binom(n-x,n)) = sum 2^-k", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 0; k <= n; ++k) rhs += pow2(-k);
            if (!ctx.point(ps("n", n), frm(mb(n).affine(Rational(n), Rational(-1))), rhs))
                return;
        }
    });

    reg.add("FERM.BIAA_F", "(1BIaa fermionic)", "Im(binom(x+n+1/2,n))", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 0; k <= n; ++k)
                rhs += sgn(k) * bi(n, k) * pow2(k - 2 * n) /
                       (Rational(2 * k + 1) * bi(2 * k, k));
            rhs = Rational(2 * n + 1) * bi(2 * n, n) * rhs;
            if (!ctx.point(ps("n", n), frm(mb(n).shift(Rational(n) + Rational(1, 2))), rhs))
                return;
        }
    });

    reg.add("FERM.BERNSTEIN_F", "(A.Berns.1/3/4)", "fermionic Bernstein integrals",
            [](CheckContext& ctx) {
                Polynomial one_minus_x(Basis::Monomial, {Rational(1), Rational(-1)});
                for (long long n = 1; n <= ctx.max_n(); ++n) {
                    if (!ctx.point(ps("n", n) + " reflection", frm(one_minus_x.pow(n)),
                                   Rational(2) + frm(mono(n))))
                        return;
                    if (!ctx.point(ps("n", n) + " k=0", frm(bernstein(0, n)),
                                   Rational(2) + E(n)))
                        return;
                    for (long long k = 1; k <= n; ++k) {
                        Rational rhs(0);
                        for (long long j = 0; j <= n - k; ++j)
                            rhs += sgn(n - k - j) * bi(n - k, j) * E(n - j);
                        rhs = bi(n, k) * rhs;
                        if (!ctx.point(ps("n", n) + " " + ps("k", k), frm(bernstein(k, n)), rhs))
                            return;
                    }
                }
            });

    reg.add("FERM.AS11A", "(aS11a)", "Im(x^m x_(n)) = sum S1(n,k) E_{k+m}",
            [](CheckContext& ctx) {
                for (long long m = 0; m <= 6; ++m) {
                    for (long long n = 0; n <= 6; ++n) {
                        Rational rhs(0);
                        for (long long k = 0; k <= n; ++k) rhs += S1(n, k) * E(k + m);
                        if (!ctx.point(ps("m", m) + " " + ps("n", n), frm(mono(m) * ff(n)),
                                       rhs))
                            return;
                    }
                }
            });

    reg.add("FERM.CFT_F", "(acnum1Ttt)", "Im(x^[n]) = sum t(n,k) E_k", [](CheckContext& ctx) {
        for (long long n = 0; n <= ctx.max_n(); ++n) {
            Rational rhs(0);
            for (long long k = 0; k <= n; ++k) rhs += cft(n, k) * E(k);
            if (!ctx.point(ps("n", n), frm(cfp(n)), rhs)) return;
        }
    });

    reg.add("FERM.CF2_F", "(x^2 x^[n-2])", "central two-step fermionic integral",
            [](CheckContext& ctx) {
                for (long long n = 2; n <= ctx.max_n(); ++n) {
                    Rational rhs(0);
                    for (long long k = 0; k <= n; ++k) rhs += cft(n, k) * E(k);
                    Rational tail(0);
                    for (long long k = 0; k <= n - 2; ++k) tail += cft(n - 2, k) * E(k);
                    rhs += Rational(n - 2, 2).pow(2) * tail;
                    if (!ctx.point(ps("n", n), frm(mono(2) * cfp(n - 2)), rhs)) return;
                }
            });

    reg.add("FERM.CF_EVEN_F", "(x^[2n])", "even central fermionic integral",
            [](CheckContext& ctx) {
                for (long long n = 1; 2 * n <= ctx.max_n() + 2; ++n) {
                    Rational rhs(0);
                    for (long long k = 1; k <= n; ++k) rhs += cft(2 * n, 2 * k) * E(2 * k);
                    if (!ctx.point(ps("n", n), frm(even_central_product(n)), rhs)) return;
                }
            });

    reg.add("FERM.BIAC", "(1BIac)", "Im(x_(m)(x-m)_(n))", [](CheckContext& ctx) {
        for (long long m = 0; m <= 6; ++m) {
            for (long long n = 0; n <= 6; ++n) {
                Polynomial p = ff(m) * ff(n).shift(Rational(-m));
                Rational rhs = sgn(m + n) * factorial(m + n) / pow2(m + n);
                if (!ctx.point(ps("m", m) + " " + ps("n", n), frm(p), rhs)) return;
            }
        }
    });

    reg.add("FERM.LAH_F", "(1LaH)", "Im(x_(n) x_(m)) closed form", [](CheckContext& ctx) {
        for (long long n = 0; n <= 6; ++n) {
            for (long long m = 0; m <= 6; ++m) {
                Rational rhs(0);
                for (long long k = 0; k <= m; ++k)
                    rhs += sgn(m + n - k) * bi(m, k) * bi(n, k) * factorial(k) *
                           factorial(m + n - k) / pow2(m + n - k);
                if (!ctx.point(ps("n", n) + " " + ps("m", m), frm(ff(n) * ff(m)), rhs)) return;
            }
        }
    });

    reg.add("FERM.XVBINR_F", "(x^v binom^r)", "Im(x^v binom(x,n)^r)", [](CheckContext& ctx) {
        for (long long v = 0; v <= 3; ++v) {
            for (long long n = 0; n <= 4; ++n) {
                for (long long r = 0; r <= 3; ++r) {
                    Rational rhs(0);
                    for (long long k = 0; k <= n * r; ++k) {
                        Rational s1sum(0);
                        for (long long l = 0; l <= k; ++l) s1sum += S1(k, l) * E(v + l);
                        Rational inner(0);
                        for (long long j = 0; j <= k; ++j)
                            inner += sgn(j) * bi(k, j) * bi(k - j, n).pow(r);
                        rhs += inner * s1sum / factorial(k);
                    }
                    if (!ctx.point(ps("v", v) + " " + ps("n", n) + " " + ps("r", r),
                                   frm(mono(v) * mb(n).pow(r)), rhs))
                        return;
                }
            }
        }
    });

    reg.add("FERM.BERN_SUM_F", "(A.Berns.5/6/7/8a)", "alternating fermionic Bernstein sums",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational lhs(0);
                    for (long long k = 0; k <= n; ++k) lhs += sgn(k) * frm(bernstein(k, n));
                    Rational r1(0);
                    for (long long j = 0; j <= n; ++j)
                        r1 += bi(n, j) * Rational(-2).pow(n - j) * E(n - j);
                    if (!ctx.point(ps("n", n) + " direct", lhs, r1)) return;
                    Rational r2(0), r3(0);
                    for (long long j = 0; j <= n; ++j) {
                        for (long long m = 0; m <= n - j; ++m) {
                            r2 += bi(n, j) * sgn(m + n - j) * pow2(n - j - m) * S2(n - j, m) *
                                  factorial(m);
                            r3 += bi(n, j) * Rational(-2).pow(n - j) * S2(n - j, m) * Ch(m);
                        }
                    }
                    if (!ctx.point(ps("n", n) + " via x_(m)", lhs, r2)) return;
                    if (!ctx.point(ps("n", n) + " via Ch_m", lhs, r3)) return;
                }
            });

    reg.add("FERM.PETERS_F", "(AF1s/AF2/AF3s/AF4s/1aSs1/1aSs1a)",
            "Im of the Peters polynomials", [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    for (long long mu = 1; mu <= 3; ++mu) {
                        for (long long n = 0; n <= 5; ++n) {
                            Rational v = frm(peters_poly(n, lam, mu));
                            std::string tag = "lambda=" + lam.to_string() + " " + ps("mu", mu) +
                                              " " + ps("n", n);
                            Rational r1(0), r2(0);
                            for (long long w = 0; w <= n; ++w) {
                                Rational s = peters_number(w, lam, mu);
                                r1 += bi(n, w) * s * Ch(n - w);
                                r2 += sgn(n - w) * bi(n, w) * s * factorial(n - w) / pow2(n - w);
                            }
                            if (!ctx.point(tag + " via Ch", v, r1)) return;
                            if (!ctx.point(tag + " factorial form", v, r2)) return;
                            Rational lhs_b(0);
                            for (long long w = 0; w <= n; ++w) {
                                Rational weight(0);
                                for (long long j = 0; j <= mu; ++j)
                                    weight += bi(mu, j) * falling(lam * Rational(j), w);
                                lhs_b += bi(n, w) * weight * frm(peters_poly(n - w, lam, mu));
                            }
                            if (!ctx.point(tag + " inversion vs Im(x_(n))", lhs_b, frm(ff(n))))
                                return;
                            if (!ctx.point(tag + " inversion closed", lhs_b,
                                           sgn(n) * factorial(n) / pow2(n)))
                                return;
                            Rational lhs_c(0);
                            for (long long w = 0; w <= n; ++w) {
                                Rational weight(0);
                                for (long long k = 0; k <= w; ++k)
                                    weight += lam.pow(k) * y1_b_number(k, mu) * S1(w, k);
                                lhs_c += bi(n, w) * weight * frm(peters_poly(n - w, lam, mu));
                            }
                            if (!ctx.point(tag + " S1-inversion vs Ch", lhs_c, Ch(n))) return;
                            if (!ctx.point(tag + " S1-inversion closed", lhs_c,
                                           sgn(n) * factorial(n) / pow2(n)))
                                return;
                        }
                    }
                }
            });

    reg.add("FERM.HARMPROD_F", "(AF5s fermionic)", "Im(prod (1+jx)) via harmonic binomials",
            [](CheckContext& ctx) {
                for (long long k = 1; k <= 8; ++k) {
                    Polynomial prod = Polynomial::constant(Rational(1));
                    for (long long j = 1; j <= k; ++j)
                        prod = prod * Polynomial(Basis::Monomial, {Rational(1), Rational(j)});
                    Rational rhs(0);
                    for (long long n = 0; n <= k; ++n)
                        rhs += factorial(k) * harmonic_binom(k, k - n) * E(n);
                    if (!ctx.point(ps("k", k), frm(prod), rhs)) return;
                }
            });
}

void register_ident(Reg& reg) {
    reg.add("IDENT.AF6B", "(AF6b)", "binomial B_{j+l}/(j+l) transform", [](CheckContext& ctx) {
        for (long long l = 1; l <= 4; ++l) {
            for (long long n = 0; n <= ctx.max_n(); ++n) {
                Rational lhs(0);
                for (long long j = 0; j <= n; ++j) lhs += bi(n, j) * B(j + l) / Rational(j + l);
                Rational rhs(0);
                for (long long k = 1; k <= l; ++k) {
                    Rational b1 = bernoulli_poly(n + k).evaluate(Rational(1));
                    rhs += sgn(l - k) * bi(l - 1, l - k) * (b1 - Rational(1)) / Rational(n + k);
                }
                if (!ctx.point(ps("l", l) + " " + ps("n", n), lhs, rhs)) return;
            }
        }
    });

    reg.add("IDENT.AF8E", "(Af8e)", "binomial E_{j+l}/(j+l) transform", [](CheckContext& ctx) {
        for (long long l = 1; l <= 4; ++l) {
            for (long long n = 0; n <= ctx.max_n(); ++n) {
                Rational lhs(0);
                for (long long j = 0; j <= n; ++j) lhs += bi(n, j) * E(j + l) / Rational(j + l);
                Rational rhs(0);
                for (long long k = 1; k <= l; ++k) {
                    Rational e1 = euler_poly(n + k).evaluate(Rational(1));
                    rhs += sgn(l - k) * bi(l - 1, l - k) * (e1 - Rational(1)) / Rational(n + k);
                }
                if (!ctx.point(ps("l", l) + " " + ps("n", n), lhs, rhs)) return;
            }
        }
    });

    reg.add("IDENT.CF_TB", "(acnum1TB)", "B_n through the central triangles",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational rhs(0);
                    for (long long k = 0; k <= n; ++k) {
                        Rational inner(0);
                        for (long long j = 0; j <= k; ++j) inner += cft(k, j) * B(j);
                        rhs += cfT(n, k) * inner;
                    }
                    if (!ctx.point(ps("n", n), B(n), rhs)) return;
                }
            });

    reg.add("IDENT.CF_TE", "(acnum1TtE)", "E_n through the central triangles",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational rhs(0);
                    for (long long k = 0; k <= n; ++k) {
                        Rational inner(0);
                        for (long long j = 0; j <= k; ++j) inner += cft(k, j) * E(j);
                        rhs += cfT(n, k) * inner;
                    }
                    if (!ctx.point(ps("n", n), E(n), rhs)) return;
                }
            });

    reg.add("IDENT.EULER_BERNSTEIN_REL", "(A.Berns. consequence)",
            "E_n isolated from the Bernstein sums", [](CheckContext& ctx) {
                for (long long n = 1; n <= ctx.max_n(); ++n) {
                    Rational first(0);
                    for (long long j = 0; j <= n; ++j)
                        first += bi(n, j) * Rational(-2).pow(n - j) * E(n - j);
                    Rational second(0);
                    for (long long k = 1; k <= n; ++k) {
                        Rational inner(0);
                        for (long long j = 0; j <= n - k; ++j)
                            inner += sgn(n - k - j) * bi(n - k, j) * E(n - j);
                        second += sgn(k) * bi(n, k) * inner;
                    }
                    if (!ctx.point(ps("n", n), E(n), first - second - Rational(2))) return;
                }
            });

    reg.add("IDENT.BERNSTEIN_ZERO_SUM", "(S2-Ch)", "telescoped Bernstein difference",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational acc(0);
                    for (long long j = 0; j <= n; ++j) {
                        Rational inner(0);
                        for (long long m = 0; m <= n - j; ++m) inner += S2(n - j, m) * Ch(m);
                        acc += bi(n, j) * Rational(-2).pow(n - j) * (E(n - j) - inner);
                    }
                    if (!ctx.point(ps("n", n), acc, Rational(0))) return;
                }
            });

    reg.add("IDENT.STIRLING_BERN_DOUBLE", "(A.Berns.9 vs 9a)", "two double S2 expansions",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= ctx.max_n(); ++n) {
                    Rational lhs(0), rhs(0);
                    for (long long j = 0; j <= n; ++j) {
                        for (long long m = 0; m <= n - j; ++m) {
                            lhs += bi(n, j) * sgn(n + m - j) * pow2(n - j) * S2(n - j, m) *
                                   factorial(m) / Rational(m + 1);
                            for (long long l = 0; l <= m; ++l)
                                rhs += bi(n, j) * Rational(-2).pow(n - j) * S2(n - j, m) *
                                       S1(m, l) * B(l);
                        }
                    }
                    if (!ctx.point(ps("n", n), lhs, rhs)) return;
                }
            });

    reg.add("IDENT.DAEHEE_PETERS", "(ay1C chain)", "D_n through the Peters chain",
            [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    for (long long mu = 1; mu <= 3; ++mu) {
                        for (long long n = 0; n <= 5; ++n) {
                            Rational expr(0);
                            for (long long v = 0; v <= n; ++v) {
                                Rational weight(0);
                                for (long long k = 0; k <= v; ++k)
                                    weight += lam.pow(k) * y1_b_number(k, mu) * S1(v, k);
                                Rational inner(0);
                                for (long long m = 0; m <= n - v; ++m) {
                                    Rational tail(0);
                                    for (long long l = 0; l <= n - v - m; ++l)
                                        tail += S1(n - v - m, l) * B(l);
                                    inner += bi(n - v, m) * peters_number(m, lam, mu) * tail;
                                }
                                expr += bi(n, v) * weight * inner;
                            }
                            std::string tag = "lambda=" + lam.to_string() + " " + ps("mu", mu) +
                                              " " + ps("n", n);
                            if (!ctx.point(tag + " = D_n", expr, D(n))) return;
                            if (!ctx.point(tag + " closed", expr,
                                           sgn(n) * factorial(n) / Rational(n + 1)))
                                return;
                            Rational s1b(0);
                            for (long long v = 0; v <= n; ++v) s1b += S1(n, v) * B(v);
                            if (!ctx.point(tag + " = sum S1 B", expr, s1b)) return;
                        }
                    }
                }
            });

    reg.add("IDENT.PETERS_FACT", "(ay1B chain)", "(-1)^n n!/(n+1) through the Peters chain",
            [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    for (long long mu = 1; mu <= 3; ++mu) {
                        for (long long n = 0; n <= 5; ++n) {
                            Rational target = sgn(n) * factorial(n) / Rational(n + 1);
                            std::string tag = "lambda=" + lam.to_string() + " " + ps("mu", mu) +
                                              " " + ps("n", n);
                            auto outer = [&](auto inner_of) {
                                Rational acc(0);
                                for (long long v = 0; v <= n; ++v) {
                                    Rational weight(0);
                                    for (long long j = 0; j <= mu; ++j)
                                        weight += bi(mu, j) * falling(lam * Rational(j), v);
                                    acc += bi(n, v) * weight * inner_of(n - v);
                                }
                                return acc;
                            };
                            Rational f1 = outer([&](long long i) {
                                Rational inner(0);
                                for (long long l = 0; l <= i; ++l)
                                    inner += bi(i, l) * peters_number(l, lam, mu) * D(i - l);
                                return inner;
                            });
                            if (!ctx.point(tag + " via D", f1, target)) return;
                            Rational f2 = outer([&](long long i) {
                                Rational inner(0);
                                for (long long l = 0; l <= i; ++l) {
                                    Rational tail(0);
                                    for (long long k = 0; k <= i - l; ++k)
                                        tail += S1(i - l, k) * B(k);
                                    inner += bi(i, l) * peters_number(l, lam, mu) * tail;
                                }
                                return inner;
                            });
                            if (!ctx.point(tag + " via S1,B", f2, target)) return;
                            Rational f3 = outer([&](long long i) {
                                Rational inner(0);
                                for (long long l = 0; l <= i; ++l)
                                    inner += sgn(i - l) * bi(i, l) * peters_number(l, lam, mu) *
                                             factorial(i - l) / Rational(i - l + 1);
                                return inner;
                            });
                            if (!ctx.point(tag + " factorial form", f3, target)) return;
                        }
                    }
                }
            });

    reg.add("IDENT.CHANGHEE_PETERS", "(yy3)", "Ch_n through the Peters chain",
            [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    for (long long mu = 1; mu <= 3; ++mu) {
                        for (long long n = 0; n <= 5; ++n) {
                            Rational expr(0);
                            for (long long v = 0; v <= n; ++v) {
                                Rational weight(0);
                                for (long long k = 0; k <= v; ++k)
                                    weight += lam.pow(k) * y1_b_number(k, mu) * S1(v, k);
                                Rational inner(0);
                                for (long long m = 0; m <= n - v; ++m)
                                    inner += bi(n - v, m) * peters_number(m, lam, mu) *
                                             Ch(n - v - m);
                                expr += bi(n, v) * weight * inner;
                            }
                            std::string tag = "lambda=" + lam.to_string() + " " + ps("mu", mu) +
                                              " " + ps("n", n);
                            if (!ctx.point(tag + " = Ch_n", expr, Ch(n))) return;
                            if (!ctx.point(tag + " closed", expr,
                                           sgn(n) * factorial(n) / pow2(n)))
                                return;
                        }
                    }
                }
            });

    reg.add("IDENT.CHANGHEE_Y2", "(aii3Yc)/(aii3Y1c)", "Im(Y_{n,2}(x;lambda)), two routes",
            [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    for (long long n = 0; n <= ctx.max_n(); ++n) {
                        Rational direct = frm(y2_poly(n, lam));
                        Rational r1(0);
                        for (long long j = 0; j <= n; ++j)
                            r1 += bi(n, j) * lam.pow(n - j) * y2_number(j, lam) * Ch(n - j);
                        Rational r2(0);
                        for (long long j = 0; j <= n; ++j)
                            r2 += sgn(n) * factorial(j) * factorial(n - j) * bi(n, j) *
                                  lam.pow(n + j) /
                                  (pow2(n) * (lam - Rational(1)).pow(j + 1));
                        std::string tag = "lambda=" + lam.to_string() + " " + ps("n", n);
                        if (!ctx.point(tag + " Changhee route", direct, r1)) return;
                        if (!ctx.point(tag + " closed route", direct, r2)) return;
                    }
                }
            });

    reg.add("IDENT.DAEHEE_Y2", "(aii3Y)/(aii3Y1)", "I1(Y_{n,2}(x;lambda)), two routes",
            [](CheckContext& ctx) {
                for (const Rational& lam : ctx.lambda_samples()) {
                    Rational d = Rational(2) * lam - Rational(2);
                    for (long long n = 0; n <= ctx.max_n(); ++n) {
                        Rational direct = vol(y2_poly(n, lam));
                        Rational r1(0);
                        for (long long j = 0; j <= n; ++j)
                            r1 += bi(n, j) * lam.pow(n - j) * y2_number(j, lam) * D(n - j);
                        Rational r2(0);
                        for (long long j = 0; j <= n; ++j) {
                            Rational inner(0);
                            for (long long l = 0; l <= n - j; ++l)
                                inner += S1(n - j, l) * B(l);
                            r2 += Rational(2) * sgn(j) * factorial(j) * bi(n, j) *
                                  lam.pow(n + j) * inner / d.pow(j + 1);
                        }
                        std::string tag = "lambda=" + lam.to_string() + " " + ps("n", n);
                        if (!ctx.point(tag + " Daehee route", direct, r1)) return;
                        if (!ctx.point(tag + " S1,B route", direct, r2)) return;
                    }
                }
            });
}

void register_seq(Reg& reg) {
    reg.add("SEQ.YB_VALUES", "(Ad-1 list)", "displayed expansions of Y(n,B)",
            [](CheckContext& ctx) {
                // coefficient lists over B_0, B_2, B_4, ...; the x^4 entry of
                // row 5 is -820 (the displayed -870 fails the product
                // expansion of x^[10] and the inverse-triangle relation)
                const std::vector<std::vector<long long>> rows = {
                    {1},
                    {0, 1},
                    {0, -1, 1},
                    {0, 4, -5, 1},
                    {0, -36, 49, -14, 1},
                    {0, 576, -820, 273, -30, 1},
                    {0, -14400, 21076, -7645, 1023, -55, 1},
                };
                for (long long n = 0; n < static_cast<long long>(rows.size()); ++n) {
                    Rational rhs(0);
                    const auto& row = rows[static_cast<std::size_t>(n)];
                    for (long long k = 0; k < static_cast<long long>(row.size()); ++k)
                        rhs += Rational(row[static_cast<std::size_t>(k)]) * B(2 * k);
                    if (!ctx.point(ps("n", n), sequence(Sequence::YOfB, n), rhs)) return;
                }
            });

    reg.add("SEQ.YE_VALUES", "(Ad-2 list)", "displayed expansions of Y(n,E)",
            [](CheckContext& ctx) {
                const std::vector<std::vector<long long>> rows = {
                    {1},
                    {0, 1},
                    {0, -1, 1},
                    {0, 4, -5, 1},
                    {0, -36, 49, -14, 1},
                    {0, 576, -820, 273, -30, 1},
                    {0, -14400, 21076, -7645, 1023, -55, 1},
                };
                for (long long n = 0; n < static_cast<long long>(rows.size()); ++n) {
                    Rational rhs(0);
                    const auto& row = rows[static_cast<std::size_t>(n)];
                    for (long long k = 0; k < static_cast<long long>(row.size()); ++k)
                        rhs += Rational(row[static_cast<std::size_t>(k)]) * E(2 * k);
                    if (!ctx.point(ps("n", n), sequence(Sequence::YOfE, n), rhs)) return;
                }
            });

    reg.add("SEQ.YB_CF", "(t(2n,2k) row)", "Y(n,B) = sum t(2n,2k) B_{2k}",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= 8; ++n) {
                    Rational rhs(0);
                    for (long long k = 0; k <= n; ++k) rhs += even_central_t(n, k) * B(2 * k);
                    if (!ctx.point(ps("n", n), sequence(Sequence::YOfB, n), rhs)) return;
                }
            });

    reg.add("SEQ.YE_ZERO", "(Y(n,E)=0)", "Y(n,E) vanishes for n >= 1", [](CheckContext& ctx) {
        for (long long n = 1; n <= 8; ++n) {
            if (!ctx.point(ps("n", n), sequence(Sequence::YOfE, n), Rational(0))) return;
        }
    });

    reg.add("SEQ.B2N_REC", "(NN1)", "B_{2n} = sum T(2n,2k) Y(k,B)", [](CheckContext& ctx) {
        for (long long n = 0; n <= 8; ++n) {
            Rational rhs(0);
            for (long long k = 0; k <= n; ++k)
                rhs += even_central_T(n, k) * sequence(Sequence::YOfB, k);
            if (!ctx.point(ps("n", n), B(2 * n), rhs)) return;
        }
    });

    reg.add("SEQ.E2N_REC", "(NN1 fermionic)", "E_{2n} = sum T(2n,2k) Y(k,E)",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= 8; ++n) {
                    Rational rhs(0);
                    for (long long k = 0; k <= n; ++k)
                        rhs += even_central_T(n, k) * sequence(Sequence::YOfE, k);
                    if (!ctx.point(ps("n", n), E(2 * n), rhs)) return;
                }
            });

    reg.add("SEQ.YB_STIRLAH", "(S1/Lah double sum)", "Y(n,B) via S1 and Lah",
            [](CheckContext& ctx) {
                for (long long n = 1; n <= 8; ++n) {
                    Rational rhs(0);
                    for (long long j = 0; j <= n; ++j) {
                        for (long long k = 1; k <= n; ++k) {
                            for (long long m = 0; m <= k; ++m)
                                rhs += S1(n, j) * S1(k, m) * B(j + m) * Labs(n, k);
                        }
                    }
                    if (!ctx.point(ps("n", n), sequence(Sequence::YOfB, n), rhs)) return;
                }
            });

    reg.add("SEQ.YE_STIRLAH", "(S1/Lah double sum)", "Y(n,E) via S1 and Lah",
            [](CheckContext& ctx) {
                for (long long n = 1; n <= 8; ++n) {
                    Rational rhs(0);
                    for (long long j = 0; j <= n; ++j) {
                        for (long long k = 1; k <= n; ++k) {
                            for (long long m = 0; m <= k; ++m)
                                rhs += S1(n, j) * S1(k, m) * E(j + m) * Labs(n, k);
                        }
                    }
                    if (!ctx.point(ps("n", n), sequence(Sequence::YOfE, n), rhs)) return;
                }
            });

    reg.add("SEQ.XNXM_V", "(x_(n) x^(m) Volkenborn)", "mixed factorial Volkenborn integral",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= 6; ++n) {
                    for (long long m = 1; m <= 6; ++m) {
                        Rational rhs(0);
                        for (long long k = 1; k <= m; ++k) {
                            for (long long j = 0; j <= n; ++j)
                                rhs += sgn(k + n - j) * bi(n, j) * bi(k, j) * factorial(j) *
                                       factorial(n + k - j) * Labs(m, k) /
                                       Rational(n + k - j + 1);
                        }
                        if (!ctx.point(ps("n", n) + " " + ps("m", m), vol(ff(n) * rf(m)), rhs))
                            return;
                    }
                }
            });

    reg.add("SEQ.XNXM_F", "(x_(n) x^(m) fermionic)", "mixed factorial fermionic integral",
            [](CheckContext& ctx) {
                for (long long n = 0; n <= 6; ++n) {
                    for (long long m = 1; m <= 6; ++m) {
                        Rational rhs(0);
                        for (long long k = 1; k <= m; ++k) {
                            for (long long j = 0; j <= n; ++j)
                                rhs += sgn(n + k - j) * bi(n, j) * bi(k, j) * factorial(j) *
                                       factorial(n + k - j) * Labs(m, k) / pow2(n + k - j);
                        }
                        if (!ctx.point(ps("n", n) + " " + ps("m", m), frm(ff(n) * rf(m)), rhs))
                            return;
                    }
                }
            });
}

}  // namespace

}  // namespace pint
