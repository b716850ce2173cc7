#ifndef DPB_FAMILIES_HPP
#define DPB_FAMILIES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <dpb/error.hpp>
#include <dpb/lambda_poly.hpp>
#include <dpb/polynomial.hpp>
#include <dpb/rational.hpp>
#include <dpb/series.hpp>

namespace dpb
{

enum class Family { bernoulli, daehee, carlitz, poly_bernoulli, dpb, dpb_higher };

inline constexpr std::array<Family, 6> all_families = {Family::bernoulli,      Family::daehee, Family::carlitz,
                                                       Family::poly_bernoulli, Family::dpb,    Family::dpb_higher};

inline std::string_view family_name(Family f)
{
    switch (f) {
        case Family::bernoulli:
            return "bernoulli";
        case Family::daehee:
            return "daehee";
        case Family::carlitz:
            return "carlitz";
        case Family::poly_bernoulli:
            return "poly-bernoulli";
        case Family::dpb:
            return "dpb";
        case Family::dpb_higher:
            return "dpb-higher";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view name)
{
    for (auto f : all_families) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

// Exact values n! [t^n] of a family's generating function, n = 0, 1, ...
struct SequenceTable {
    Family family = Family::bernoulli;
    long k = 0;
    long r = 1;
    std::vector<LambdaPoly> values;

    std::size_t size() const noexcept
    {
        return values.size();
    }
    const LambdaPoly &operator[](std::size_t n) const
    {
        return values.at(n);
    }

    friend bool operator==(const SequenceTable &, const SequenceTable &) = default;
};

namespace detail
{

inline void require_index(std::size_t n, std::size_t precision)
{
    if (n >= precision) {
        throw PrecisionExceeded("index " + std::to_string(n) + " needs precision above " + std::to_string(precision));
    }
}

template <CoefficientRing R>
SequenceTable make_table(Family family, long k, long r, const TruncatedSeries<R> &gf)
{
    SequenceTable t{family, k, r, {}};
    t.values.reserve(gf.precision());
    for (const auto &v : sequence(gf)) {
        t.values.emplace_back(v);
    }
    return t;
}

} // namespace detail

// (1 + lambda t)^{c/lambda}: the t^n coefficient is c (c - lambda) ... (c - (n-1) lambda) / n!.
inline LambdaSeries elam(const Rational &c, std::size_t precision)
{
    std::vector<LambdaPoly> out(precision);
    LambdaPoly term(1);
    for (std::size_t n = 0; n < precision; ++n) {
        out[n] = term;
        term = scale(term * LambdaPoly({c, Rational(-static_cast<long>(n))}), Rational(1) / Rational(n + 1));
    }
    return LambdaSeries(std::move(out));
}

// t / (e^t - 1).
inline RationalSeries bernoulli_gf(std::size_t precision)
{
    const auto e = exp_linear(Rational(1), precision + 1);
    return div(RationalSeries::variable(precision + 1), e - RationalSeries::constant(Rational(1), precision + 1));
}

// log(1 + t) / t.
inline RationalSeries daehee_gf(std::size_t precision)
{
    const std::size_t m = precision + 1;
    const auto one_plus_t = RationalSeries::constant(Rational(1), m) + RationalSeries::variable(m);
    return div(log_series(one_plus_t), RationalSeries::variable(m));
}

// t / ((1 + lambda t)^{1/lambda} - 1).
inline LambdaSeries carlitz_gf(std::size_t precision)
{
    const std::size_t m = precision + 1;
    return div(LambdaSeries::variable(m), elam(Rational(1), m) - LambdaSeries::constant(LambdaPoly(1), m));
}

// Li_k(x) = sum_{n>=1} x^n / n^k for any integer k.
inline RationalSeries polylog_series(long k, std::size_t precision)
{
    std::vector<Rational> out(precision);
    for (std::size_t n = 1; n < precision; ++n) {
        out[n] = pow(Rational(n), -k);
    }
    return RationalSeries(std::move(out));
}

// Li_k(1 - e^{-t}) / (e^t - 1).
inline RationalSeries poly_bernoulli_gf(long k, std::size_t precision)
{
    const std::size_t m = precision + 1;
    const auto one = RationalSeries::constant(Rational(1), m);
    const auto inner = one - exp_linear(Rational(-1), m);
    return div(compose(polylog_series(k, m), inner), exp_linear(Rational(1), m) - one);
}

// Li_k(1 - (1 + lambda t)^{-1/lambda}) / ((1 + lambda t)^{1/lambda} - 1).
inline LambdaSeries dpb_gf(long k, std::size_t precision)
{
    const std::size_t m = precision + 1;
    const auto one = LambdaSeries::constant(LambdaPoly(1), m);
    const auto inner = one - elam(Rational(-1), m);
    return div(compose(promote(polylog_series(k, m)), inner), elam(Rational(1), m) - one);
}

// r-th power of dpb_gf.
inline LambdaSeries dpb_higher_gf(long k, long r, std::size_t precision)
{
    if (r < 1) {
        throw InvalidArgument("order r must be at least 1, got " + std::to_string(r));
    }
    return pow(dpb_gf(k, precision), r);
}

inline SequenceTable bernoulli(std::size_t precision)
{
    return detail::make_table(Family::bernoulli, 0, 1, bernoulli_gf(precision));
}

inline SequenceTable daehee(std::size_t precision)
{
    return detail::make_table(Family::daehee, 0, 1, daehee_gf(precision));
}

inline SequenceTable carlitz_beta(std::size_t precision)
{
    return detail::make_table(Family::carlitz, 0, 1, carlitz_gf(precision));
}

inline SequenceTable poly_bernoulli(long k, std::size_t precision)
{
    return detail::make_table(Family::poly_bernoulli, k, 1, poly_bernoulli_gf(k, precision));
}

inline SequenceTable dpb_numbers(long k, std::size_t precision)
{
    return detail::make_table(Family::dpb, k, 1, dpb_gf(k, precision));
}

inline SequenceTable dpb_higher_numbers(long k, long r, std::size_t precision)
{
    return detail::make_table(Family::dpb_higher, k, r, dpb_higher_gf(k, r, precision));
}

// Table of any family with `precision` rows. k and r are ignored where the
// family does not use them.
inline SequenceTable family_table(Family family, long k, long r, std::size_t precision)
{
    switch (family) {
        case Family::bernoulli:
            return bernoulli(precision);
        case Family::daehee:
            return daehee(precision);
        case Family::carlitz:
            return carlitz_beta(precision);
        case Family::poly_bernoulli:
            return poly_bernoulli(k, precision);
        case Family::dpb:
            return dpb_numbers(k, precision);
        case Family::dpb_higher:
            return dpb_higher_numbers(k, r, precision);
    }
    throw InvalidArgument("unknown family");
}

using LambdaPolynomial = Polynomial<LambdaPoly>;

// sum_{l=0}^{n} C(n, l) a_l x^{n-l} for the table's numbers a_l.
inline LambdaPolynomial binomial_polynomial(const SequenceTable &table, std::size_t n)
{
    detail::require_index(n, table.size());
    std::vector<LambdaPoly> v(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
        v[n - l] = scale(table[l], binomial(n, l));
    }
    return LambdaPolynomial(std::move(v));
}

// x (x - lambda) ... (x - (n-1) lambda), so that
// (1 + lambda t)^{x/lambda} = sum_n (x)_{n,lambda} t^n / n!.
inline LambdaPolynomial degenerate_falling_factorial(std::size_t n)
{
    LambdaPolynomial p(LambdaPoly(1));
    for (std::size_t j = 0; j < n; ++j) {
        const LambdaPoly shift = LambdaPoly::monomial(Rational(-static_cast<long>(j)), 1);
        p = p * LambdaPolynomial(std::vector<LambdaPoly>{shift, LambdaPoly(1)});
    }
    return p;
}

// beta_{n,lambda}(x) = sum_l C(n, l) beta_{l,lambda} (x)_{n-l,lambda}.
inline LambdaPolynomial carlitz_beta_poly(std::size_t n, std::size_t precision = default_precision)
{
    detail::require_index(n, precision);
    const auto table = carlitz_beta(n + 1);
    LambdaPolynomial out;
    for (std::size_t l = 0; l <= n; ++l) {
        out += scale_by(degenerate_falling_factorial(n - l), scale(table[l], binomial(n, l)));
    }
    return out;
}

inline LambdaPolynomial dpb_poly(long k, std::size_t n, std::size_t precision = default_precision)
{
    detail::require_index(n, precision);
    return binomial_polynomial(dpb_numbers(k, n + 1), n);
}

inline LambdaPolynomial dpb_higher_poly(long k, long r, std::size_t n, std::size_t precision = default_precision)
{
    detail::require_index(n, precision);
    return binomial_polynomial(dpb_higher_numbers(k, r, n + 1), n);
}

// The n-th polynomial of a family; daehee has none.
inline LambdaPolynomial family_polynomial(Family family, long k, long r, std::size_t n,
                                          std::size_t precision = default_precision)
{
    detail::require_index(n, precision);
    switch (family) {
        case Family::carlitz:
            return carlitz_beta_poly(n, precision);
        case Family::daehee:
            throw InvalidArgument("the daehee family has no polynomial form");
        default:
            return binomial_polynomial(family_table(family, k, r, n + 1), n);
    }
}

} // namespace dpb

#endif // DPB_FAMILIES_HPP
