#ifndef DPB_UMBRAL_HPP
#define DPB_UMBRAL_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <dpb/error.hpp>
#include <dpb/families.hpp>
#include <dpb/polynomial.hpp>
#include <dpb/rational.hpp>
#include <dpb/series.hpp>

namespace dpb
{

namespace detail
{

template <CoefficientRing R>
void require_pairable(const TruncatedSeries<R> &f, const Polynomial<R> &p)
{
    if (p.degree() >= 0 && static_cast<std::size_t>(p.degree()) >= f.precision()) {
        throw PrecisionExceeded("polynomial of degree " + std::to_string(p.degree())
                                + " paired with a series of precision " + std::to_string(f.precision()));
    }
}

} // namespace detail

// <f(t) | p(x)> = sum_n p_n n! [t^n] f. Needs deg p < precision(f); a
// shorter series would silently drop terms.
template <CoefficientRing R>
R pair(const TruncatedSeries<R> &f, const Polynomial<R> &p)
{
    detail::require_pairable(f, p);
    R acc(0);
    for (std::size_t n = 0; n < p.coeffs().size(); ++n) {
        if (!is_zero(p.coeffs()[n])) {
            acc = acc + scale(p.coeffs()[n] * f[n], factorial(n));
        }
    }
    return acc;
}

// A series viewed as a linear functional on polynomials.
template <CoefficientRing R>
class Functional
{
public:
    explicit Functional(TruncatedSeries<R> series) : series_(std::move(series)) {}

    const TruncatedSeries<R> &series() const noexcept
    {
        return series_;
    }

    R operator()(const Polynomial<R> &p) const
    {
        return pair(series_, p);
    }

private:
    TruncatedSeries<R> series_;
};

template <CoefficientRing R>
R pair(const Functional<R> &f, const Polynomial<R> &p)
{
    return f(p);
}

// f(t) acting as an operator: t^k p(x) = p^{(k)}(x), extended linearly.
template <CoefficientRing R>
Polynomial<R> op_apply(const TruncatedSeries<R> &f, const Polynomial<R> &p)
{
    detail::require_pairable(f, p);
    Polynomial<R> out;
    Polynomial<R> d = p;
    for (std::size_t k = 0; !d.is_zero(); ++k) {
        if (!is_zero(f[k])) {
            out += scale_by(d, f[k]);
        }
        d = derivative(d);
    }
    return out;
}

// q(x) = p(x + y), by binomial re-expansion.
template <CoefficientRing R>
Polynomial<R> shift(const Polynomial<R> &p, const R &y)
{
    if (p.degree() <= 0) {
        return p;
    }
    const auto n = static_cast<std::size_t>(p.degree());
    // powers[j] = y^j
    std::vector<R> powers(n + 1, R(1));
    for (std::size_t j = 1; j <= n; ++j) {
        powers[j] = powers[j - 1] * y;
    }
    std::vector<R> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const R &c = p.coeffs()[i];
        if (is_zero(c)) {
            continue;
        }
        for (std::size_t m = 0; m <= i; ++m) {
            out[m] = out[m] + scale(c * powers[i - m], binomial(i, m));
        }
    }
    return Polynomial<R>(std::move(out));
}

// (t / (e^t - 1))^r, the series of the r-fold invariant integral.
inline RationalSeries invariant_integral_series(long r, std::size_t precision)
{
    if (r < 1) {
        throw InvalidArgument("integral multiplicity must be at least 1");
    }
    return pow(bernoulli_gf(precision), r);
}

// The r-fold invariant integral of p(x_1 + ... + x_r), realised as the pairing
// with (t / (e^t - 1))^r. For r = 1 and p = x^n this is B_n.
template <CoefficientRing R>
    requires std::constructible_from<R, const Rational &>
R invariant_integral(const Polynomial<R> &p, long r = 1, std::size_t precision = default_precision)
{
    if (p.degree() >= static_cast<int>(precision)) {
        throw PrecisionExceeded("polynomial of degree " + std::to_string(p.degree()) + " exceeds precision "
                                + std::to_string(precision));
    }
    const std::size_t m = static_cast<std::size_t>(std::max(p.degree(), 0)) + 1;
    return pair(TruncatedSeries<R>(invariant_integral_series(r, m)), p);
}

// (integral of p(x + 1) - integral of p(x), p'(0)); the two always agree.
template <CoefficientRing R>
    requires std::constructible_from<R, const Rational &>
std::pair<R, R> difference_property(const Polynomial<R> &p)
{
    const std::size_t precision = static_cast<std::size_t>(std::max(p.degree(), 0)) + 1;
    R lhs = invariant_integral(shift(p, R(1)), 1, precision) - invariant_integral(p, 1, precision);
    return {lhs, derivative(p).coeff(0)};
}

// Where a Sheffer check first failed.
struct ShefferFailure {
    enum class Kind { orthogonality, regeneration };
    Kind kind = Kind::orthogonality;
    std::size_t n = 0;
    std::size_t k = 0; // power of f; unused for regeneration
    std::string lhs;
    std::string rhs;
};

// Checks s_n ~ (g, f) for 0 <= n, k <= nmax in two ways: the orthogonality
// <g f^k | s_n> = n! delta_{n,k}, and regeneration of s_n from the
// generating function e^{x fbar(t)} / g(fbar(t)).
template <CoefficientRing R>
std::optional<ShefferFailure> sheffer_check(const TruncatedSeries<R> &g, const TruncatedSeries<R> &f,
                                            std::span<const Polynomial<R>> s, std::size_t nmax)
{
    if (!is_zero(f[0]) || f.precision() < 2 || !is_unit(f[1])) {
        throw NotDelta("f is not a delta series");
    }
    if (!is_unit(g[0])) {
        throw NotInvertible("g is not an invertible series");
    }
    if (s.size() <= nmax) {
        throw InvalidArgument("need s_0 .. s_" + std::to_string(nmax));
    }
    const std::size_t precision = std::min(g.precision(), f.precision());
    if (precision <= nmax) {
        throw PrecisionExceeded("series precision " + std::to_string(precision) + " too small for nmax "
                                + std::to_string(nmax));
    }
    for (std::size_t n = 0; n <= nmax; ++n) {
        if (s[n].degree() != static_cast<int>(n)) {
            throw InvalidArgument("s_" + std::to_string(n) + " has degree " + std::to_string(s[n].degree()));
        }
    }

    auto gfk = g.truncated(precision);
    for (std::size_t k = 0; k <= nmax; ++k) {
        for (std::size_t n = 0; n <= nmax; ++n) {
            const R lhs = pair(gfk, s[n]);
            const R rhs = n == k ? R(factorial(n)) : R(0);
            if (lhs != rhs) {
                return ShefferFailure{ShefferFailure::Kind::orthogonality, n, k, to_string(lhs), to_string(rhs)};
            }
        }
        gfk = gfk * f;
    }

    const auto fbar = revert(f.truncated(precision));
    const auto weight = inverse(compose(g.truncated(precision), fbar));
    // columns[m] = weight * fbar^m; s_n(x) = n! sum_m [t^n] columns[m] x^m / m!
    std::vector<std::vector<R>> rows(nmax + 1, std::vector<R>(nmax + 1));
    auto column = weight;
    for (std::size_t m = 0; m <= nmax; ++m) {
        for (std::size_t n = 0; n <= nmax; ++n) {
            rows[n][m] = scale(column[n], factorial(n) / factorial(m));
        }
        column = column * fbar;
    }
    for (std::size_t n = 0; n <= nmax; ++n) {
        Polynomial<R> regenerated(std::move(rows[n]));
        if (regenerated != s[n]) {
            return ShefferFailure{ShefferFailure::Kind::regeneration, n, 0, regenerated.to_string(), s[n].to_string()};
        }
    }
    return std::nullopt;
}

template <CoefficientRing R>
bool sheffer_verify(const TruncatedSeries<R> &g, const TruncatedSeries<R> &f, std::span<const Polynomial<R>> s,
                    std::size_t nmax)
{
    return !sheffer_check(g, f, s, nmax).has_value();
}

} // namespace dpb

#endif // DPB_UMBRAL_HPP
