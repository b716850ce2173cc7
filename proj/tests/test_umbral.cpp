#include <catch_amalgamated.hpp>

#include <vector>

#include <dpb/families.hpp>
#include <dpb/umbral.hpp>

#include "generators.hpp"

using dpb::LambdaPoly;
using dpb::LambdaPolynomial;
using dpb::LambdaSeries;
using dpb::Rational;
using dpb::RationalPolynomial;
using dpb::RationalSeries;

namespace
{

RationalPolynomial poly(std::vector<Rational> coeffs)
{
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial xn(std::size_t n)
{
    return RationalPolynomial::monomial(n);
}

RationalSeries tk(std::size_t k, std::size_t precision)
{
    return RationalSeries::monomial(1, k, precision);
}

Rational nth_derivative_at_zero(RationalPolynomial p, std::size_t k)
{
    for (std::size_t i = 0; i < k; ++i) {
        p = dpb::derivative(p);
    }
    return p.coeff(0);
}

} // namespace

TEST_CASE("polynomial basics", "[umbral]")
{
    const RationalPolynomial p({1, -2, 0, 3});
    CHECK(p.degree() == 3);
    CHECK(p(2) == 21);
    CHECK(p.to_string() == "3*x^3 - 2*x + 1");
    CHECK(RationalPolynomial().degree() == -1);
    CHECK(RationalPolynomial().to_string() == "0");
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(dpb::derivative(p) == poly({-2, 0, 9}));
    CHECK(dpb::pow(poly({1, 1}), 3) == poly({1, 3, 3, 1}));
    CHECK(xn(2).to_string() == "x^2");
    const LambdaPolynomial lp(
        std::vector<LambdaPoly>{LambdaPoly({Rational(17, 36), Rational(3, 4)}), LambdaPoly(Rational(-3, 2)), 1});
    CHECK(lp.to_string() == "x^2 - 3/2*x + (3/4*lambda + 17/36)");
}

TEST_CASE("pair", "[umbral]")
{
    for (std::size_t k = 0; k < 6; ++k) {
        for (std::size_t n = 0; n < 6; ++n) {
            CHECK(dpb::pair(tk(k, 8), xn(n)) == (n == k ? Rational(dpb::factorial(n)) : Rational(0)));
        }
    }
    const RationalPolynomial p({Rational(1, 2), -3, 0, 2});
    for (const Rational &y : {Rational(0), Rational(1), Rational(-2), Rational(3, 5)}) {
        CHECK(dpb::pair(dpb::exp_linear(y, 8), p) == p(y));
    }
    CHECK(dpb::pair(RationalSeries::constant(1, 8), p) == p(0));
    CHECK(dpb::pair(dpb::Functional<Rational>(dpb::exp_linear(2, 5)), p) == p(2));
    CHECK_THROWS_AS(dpb::pair(RationalSeries::constant(1, 3), p), dpb::PrecisionExceeded);
    CHECK(dpb::pair(RationalSeries::constant(1, 4), p) == p(0));
}

TEST_CASE("op_apply", "[umbral]")
{
    CHECK(dpb::op_apply(tk(1, 5), xn(3)) == poly({0, 0, 3}));
    const RationalPolynomial p({4, Rational(1, 3), -1, 2});
    CHECK(dpb::op_apply(RationalSeries::constant(1, 5), p) == p);
    for (const Rational &y : {Rational(1), Rational(-2), Rational(3, 5)}) {
        CHECK(dpb::op_apply(dpb::exp_linear(y, 5), p) == dpb::shift(p, y));
    }
    CHECK_THROWS_AS(dpb::op_apply(tk(1, 3), p), dpb::PrecisionExceeded);
}

TEST_CASE("shift", "[umbral]")
{
    const RationalPolynomial p({4, Rational(1, 3), -1, 2});
    CHECK(dpb::shift(p, Rational(0)) == p);
    CHECK(dpb::shift(xn(2), Rational(1)) == poly({1, 2, 1}));
    CHECK(dpb::shift(dpb::shift(p, Rational(2)), Rational(-1, 2)) == dpb::shift(p, Rational(3, 2)));
    CHECK(dpb::shift(RationalPolynomial(), Rational(5)).is_zero());
}

TEST_CASE("invariant integral", "[umbral]")
{
    CHECK(dpb::invariant_integral(RationalPolynomial(1)) == 1);
    CHECK(dpb::invariant_integral(xn(1)) == Rational(-1, 2));
    CHECK(dpb::invariant_integral(xn(2)) == Rational(1, 6));
    const auto b = dpb::bernoulli(21);
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(LambdaPoly(dpb::invariant_integral(xn(n))) == b[n]);
    }
    // Two-fold: the Norlund numbers B_n^{(2)}: 1, -1, 5/6, -1/2.
    CHECK(dpb::invariant_integral(xn(1), 2) == -1);
    CHECK(dpb::invariant_integral(xn(2), 2) == Rational(5, 6));
    CHECK(dpb::invariant_integral(xn(3), 2) == Rational(-1, 2));
    CHECK_THROWS_AS(dpb::invariant_integral(xn(5), 1, 5), dpb::PrecisionExceeded);
    CHECK_THROWS_AS(dpb::invariant_integral(xn(1), 0), dpb::InvalidArgument);
    // Over Q[lambda] as well.
    const LambdaPolynomial lp(std::vector<LambdaPoly>{LambdaPoly::lambda(), 1});
    CHECK(dpb::invariant_integral(lp) == LambdaPoly({Rational(-1, 2), Rational(1)}));
}

TEST_CASE("integral of ((e^t - 1)/t) p is p(0)", "[umbral]")
{
    const auto h = dpb::div(dpb::exp_linear(1, 12) - RationalSeries::constant(1, 12), tk(1, 12));
    gen::Gen g(41);
    for (int i = 0; i < gen::cases; ++i) {
        const auto p = g.polynomial(10);
        CHECK(dpb::invariant_integral(dpb::op_apply(h, p)) == p(0));
    }
}

TEST_CASE("difference property", "[umbral]")
{
    CHECK(dpb::difference_property(xn(2)) == std::pair{Rational(0), Rational(0)});
    CHECK(dpb::difference_property(xn(1)) == std::pair{Rational(1), Rational(1)});
    CHECK(dpb::difference_property(RationalPolynomial(1)) == std::pair{Rational(0), Rational(0)});
    for (std::size_t n = 0; n <= 16; ++n) {
        const auto [lhs, rhs] = dpb::difference_property(xn(n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("sheffer check", "[umbral]")
{
    const std::size_t nmax = 8;
    std::vector<RationalPolynomial> monomials;
    for (std::size_t n = 0; n <= nmax; ++n) {
        monomials.push_back(xn(n));
    }
    const auto one = RationalSeries::constant(1, 12);
    const auto t = tk(1, 12);
    CHECK(dpb::sheffer_verify<Rational>(one, t, monomials, nmax));

    // Bernoulli polynomials ~ ((e^t - 1)/t, t).
    const auto b = dpb::bernoulli(nmax + 1);
    std::vector<RationalPolynomial> bern;
    for (std::size_t n = 0; n <= nmax; ++n) {
        std::vector<Rational> v(n + 1);
        for (std::size_t l = 0; l <= n; ++l) {
            v[n - l] = *dpb::as_rational(b[l]) * Rational(dpb::binomial(n, l));
        }
        bern.emplace_back(v);
    }
    const auto g = dpb::div(dpb::exp_linear(1, 13) - RationalSeries::constant(1, 13), tk(1, 13));
    CHECK(dpb::sheffer_verify<Rational>(g, t, bern, nmax));
    CHECK_FALSE(dpb::sheffer_verify<Rational>(one, t, bern, nmax));

    // Lower factorials ~ (1, e^t - 1).
    std::vector<RationalPolynomial> falling{RationalPolynomial(1)};
    for (std::size_t n = 1; n <= nmax; ++n) {
        falling.push_back(falling.back() * poly({-Rational(n - 1), 1}));
    }
    CHECK(dpb::sheffer_verify<Rational>(one, dpb::exp_linear(1, 12) - one, falling, nmax));
    CHECK_FALSE(dpb::sheffer_verify<Rational>(one, dpb::log_series(one + t), falling, nmax));
}

TEST_CASE("sheffer check failures and errors", "[umbral]")
{
    const std::size_t nmax = 4;
    std::vector<RationalPolynomial> s;
    for (std::size_t n = 0; n <= nmax; ++n) {
        s.push_back(xn(n));
    }
    const auto one = RationalSeries::constant(1, 8);
    const auto t = tk(1, 8);
    auto broken = s;
    broken[3] = broken[3] + RationalPolynomial(1);
    const auto failure = dpb::sheffer_check<Rational>(one, t, broken, nmax);
    REQUIRE(failure.has_value());
    CHECK(failure->kind == dpb::ShefferFailure::Kind::orthogonality);
    CHECK(failure->n == 3);
    CHECK(failure->k == 0);
    CHECK(failure->lhs == "1");
    CHECK(failure->rhs == "0");

    CHECK_THROWS_AS(dpb::sheffer_check<Rational>(one, one, s, nmax), dpb::NotDelta);
    CHECK_THROWS_AS(dpb::sheffer_check<Rational>(one, tk(2, 8), s, nmax), dpb::NotDelta);
    CHECK_THROWS_AS(dpb::sheffer_check<Rational>(t, t, s, nmax), dpb::NotInvertible);
    CHECK_THROWS_AS(dpb::sheffer_check<Rational>(one, t, s, nmax + 1), dpb::InvalidArgument);
    CHECK_THROWS_AS(dpb::sheffer_check<Rational>(one.truncated(4), t, s, nmax), dpb::PrecisionExceeded);
    auto wrong_degree = s;
    wrong_degree[2] = xn(3);
    CHECK_THROWS_AS(dpb::sheffer_check<Rational>(one, t, wrong_degree, nmax), dpb::InvalidArgument);
}

TEST_CASE("property: pairing is bilinear", "[umbral][property]")
{
    gen::Gen g(42);
    for (int i = 0; i < gen::cases; ++i) {
        const auto f = g.series(12), h = g.series(12);
        const auto p = g.polynomial(11), q = g.polynomial(11);
        const auto a = g.rational(), b = g.rational();
        CHECK(dpb::pair(dpb::scale(f, a) + dpb::scale(h, b), p) == a * dpb::pair(f, p) + b * dpb::pair(h, p));
        CHECK(dpb::pair(f, dpb::scale(p, a) + dpb::scale(q, b)) == a * dpb::pair(f, p) + b * dpb::pair(f, q));
    }
}

TEST_CASE("property: adjointness of pair and op_apply", "[umbral][property]")
{
    gen::Gen g(43);
    for (int i = 0; i < gen::cases; ++i) {
        const auto f = g.series(12), h = g.series(12);
        const auto p = g.polynomial(11);
        const auto lhs = dpb::pair(f * h, p);
        CHECK(lhs == dpb::pair(h, dpb::op_apply(f, p)));
        CHECK(lhs == dpb::pair(f, dpb::op_apply(h, p)));
    }
}

TEST_CASE("property: Taylor reconstruction", "[umbral][property]")
{
    gen::Gen g(44);
    for (int i = 0; i < gen::cases; ++i) {
        const auto p = g.polynomial(12);
        RationalPolynomial rebuilt;
        for (std::size_t k = 0; k <= 12; ++k) {
            const Rational c = dpb::pair(tk(k, 13), p) / Rational(dpb::factorial(k));
            rebuilt += RationalPolynomial::monomial(k, c);
        }
        CHECK(rebuilt == p);
    }
}

TEST_CASE("property: pairing with t^k is the k-th derivative at 0", "[umbral][property]")
{
    gen::Gen g(45);
    for (int i = 0; i < gen::cases; ++i) {
        const auto p = g.polynomial(10);
        for (std::size_t k = 0; k <= 11; ++k) {
            CHECK(dpb::pair(tk(k, 12), p) == nth_derivative_at_zero(p, k));
        }
    }
}

TEST_CASE("property: operators compose as series multiply", "[umbral][property]")
{
    gen::Gen g(46);
    for (int i = 0; i < gen::cases; ++i) {
        const auto f = g.series(12), h = g.series(12);
        const auto p = g.polynomial(11);
        CHECK(dpb::op_apply(f, dpb::op_apply(h, p)) == dpb::op_apply(f * h, p));
    }
}

TEST_CASE("property: lambda-valued adjointness", "[umbral][property]")
{
    gen::Gen g(47);
    for (int i = 0; i < gen::cases / 2; ++i) {
        const auto f = g.lambda_series(9), h = g.lambda_series(9);
        const auto p = g.lambda_polynomial(8);
        CHECK(dpb::pair(f * h, p) == dpb::pair(h, dpb::op_apply(f, p)));
    }
}
