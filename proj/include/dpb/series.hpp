#ifndef DPB_SERIES_HPP
#define DPB_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <dpb/error.hpp>
#include <dpb/lambda_poly.hpp>
#include <dpb/rational.hpp>
#include <dpb/ring.hpp>

namespace dpb
{

// Working precision used when the caller does not pick one.
inline constexpr std::size_t default_precision = 32;

// Formal power series c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N) over R.
// N is the precision and always equals the number of stored coefficients.
// Binary operations yield the smaller operand precision; nothing is ever
// silently extended.
template <CoefficientRing R>
class TruncatedSeries
{
public:
    using coefficient_type = R;

    // The zero series.
    explicit TruncatedSeries(std::size_t precision) : coeffs_(check_precision(precision)) {}

    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        check_precision(coeffs_.size());
    }

    // Ring promotion, e.g. Q -> Q[lambda].
    template <CoefficientRing S>
        requires(!std::same_as<S, R> && std::constructible_from<R, const S &>)
    explicit TruncatedSeries(const TruncatedSeries<S> &other)
    {
        coeffs_.reserve(other.precision());
        for (const auto &c : other.coeffs()) {
            coeffs_.emplace_back(c);
        }
    }

    static TruncatedSeries constant(const R &c, std::size_t precision)
    {
        TruncatedSeries s(precision);
        s.coeffs_[0] = c;
        return s;
    }

    // c * t^k.
    static TruncatedSeries monomial(const R &c, std::size_t k, std::size_t precision)
    {
        TruncatedSeries s(precision);
        if (k < precision) {
            s.coeffs_[k] = c;
        }
        return s;
    }

    // The series variable t.
    static TruncatedSeries variable(std::size_t precision)
    {
        return monomial(R(1), 1, precision);
    }

    std::size_t precision() const noexcept
    {
        return coeffs_.size();
    }

    const R &operator[](std::size_t n) const
    {
        return coeffs_.at(n);
    }

    std::span<const R> coeffs() const noexcept
    {
        return coeffs_;
    }

    // Index of the first nonzero coefficient, or precision() if none.
    std::size_t valuation() const
    {
        std::size_t i = 0;
        while (i < coeffs_.size() && is_zero(coeffs_[i])) {
            ++i;
        }
        return i;
    }

    TruncatedSeries truncated(std::size_t precision) const
    {
        check_precision(precision);
        if (precision >= coeffs_.size()) {
            return *this;
        }
        return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(precision)));
    }

    // Drops the t^0 coefficient and shifts down: (f - f_0) / t.
    TruncatedSeries shifted_down() const
    {
        if (coeffs_.size() < 2) {
            throw PrecisionExceeded("cannot cancel a factor of t from a series of precision 1");
        }
        return TruncatedSeries(std::vector<R>(coeffs_.begin() + 1, coeffs_.end()));
    }

    TruncatedSeries &operator+=(const TruncatedSeries &o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        }
        return *this;
    }
    TruncatedSeries &operator-=(const TruncatedSeries &o)
    {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a += b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b)
    {
        return a -= b;
    }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }

    // Cauchy product.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const std::size_t n = std::min(a.precision(), b.precision());
        std::vector<R> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j < n; ++j) {
                if (!is_zero(b.coeffs_[j])) {
                    out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return TruncatedSeries(std::move(out));
    }

    friend TruncatedSeries operator/(const TruncatedSeries &f, const TruncatedSeries &g)
    {
        return div(f, g);
    }

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    friend std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
    {
        os << '[';
        for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
            os << (i == 0 ? "" : ", ") << to_string(s.coeffs_[i]);
        }
        return os << "] + O(t^" << s.coeffs_.size() << ')';
    }

private:
    static std::size_t check_precision(std::size_t precision)
    {
        if (precision == 0) {
            throw InvalidArgument("series precision must be at least 1");
        }
        return precision;
    }

    std::vector<R> coeffs_;
};

template <CoefficientRing R>
TruncatedSeries<R> mul(const TruncatedSeries<R> &f, const TruncatedSeries<R> &g)
{
    return f * g;
}

// Scalar action of Q on every coefficient.
template <CoefficientRing R>
TruncatedSeries<R> scale(const TruncatedSeries<R> &f, const Rational &q)
{
    std::vector<R> out(f.coeffs().begin(), f.coeffs().end());
    for (auto &c : out) {
        c = scale(c, q);
    }
    return TruncatedSeries<R>(std::move(out));
}

// f / g. When both constant terms vanish, exactly one factor of t is cancelled
// from each first (so t / (e^t - 1) works); the result then has one
// coefficient less than the operands.
template <CoefficientRing R>
TruncatedSeries<R> div(const TruncatedSeries<R> &f, const TruncatedSeries<R> &g)
{
    if (is_zero(g[0]) && is_zero(f[0])) {
        const auto gs = g.shifted_down();
        if (is_zero(gs[0])) {
            throw NonUnitLeadingCoefficient("divisor vanishes to order more than one at t = 0");
        }
        return div(f.shifted_down(), gs);
    }
    const std::size_t n = std::min(f.precision(), g.precision());
    auto residual = [&](const std::vector<R> &h, std::size_t i) {
        R acc = f[i];
        for (std::size_t k = 1; k <= i; ++k) {
            if (!is_zero(g[k])) {
                acc = acc - g[k] * h[i - k];
            }
        }
        return acc;
    };
    std::vector<R> h(n);
    if (is_unit(g[0])) {
        const R inv = unit_inverse(g[0]);
        for (std::size_t i = 0; i < n; ++i) {
            h[i] = residual(h, i) * inv;
        }
        return TruncatedSeries<R>(std::move(h));
    }
    // A non-unit constant term still works when every step divides exactly,
    // e.g. log(1 + lambda t) / lambda.
    if constexpr (detail::has_exact_quotient<R>) {
        if (!is_zero(g[0])) {
            for (std::size_t i = 0; i < n; ++i) {
                auto q = exact_quotient(residual(h, i), g[0]);
                if (!q) {
                    throw NonUnitLeadingCoefficient("divisor constant term '" + to_string(g[0])
                                                    + "' does not divide the coefficient of t^" + std::to_string(i));
                }
                h[i] = std::move(*q);
            }
            return TruncatedSeries<R>(std::move(h));
        }
    }
    throw NonUnitLeadingCoefficient("divisor constant term '" + to_string(g[0]) + "' is not invertible");
}

// Multiplicative inverse 1/f; requires an invertible constant term.
template <CoefficientRing R>
TruncatedSeries<R> inverse(const TruncatedSeries<R> &f)
{
    if (!is_unit(f[0])) {
        throw NonUnitLeadingCoefficient("constant term '" + to_string(f[0]) + "' is not invertible");
    }
    return div(TruncatedSeries<R>::constant(R(1), f.precision()), f);
}

// Integer power; negative exponents invert first.
template <CoefficientRing R>
TruncatedSeries<R> pow(const TruncatedSeries<R> &f, long e)
{
    if (e < 0) {
        return pow(inverse(f), -e);
    }
    auto result = TruncatedSeries<R>::constant(R(1), f.precision());
    auto base = f;
    for (auto u = static_cast<unsigned long>(e); u != 0; u >>= 1) {
        if (u & 1u) {
            result = result * base;
        }
        if (u > 1) {
            base = base * base;
        }
    }
    return result;
}

// d/dt; loses one coefficient.
template <CoefficientRing R>
TruncatedSeries<R> derivative(const TruncatedSeries<R> &f)
{
    if (f.precision() < 2) {
        throw PrecisionExceeded("derivative of a series of precision 1");
    }
    std::vector<R> out(f.precision() - 1);
    for (std::size_t i = 1; i < f.precision(); ++i) {
        out[i - 1] = scale(f[i], Rational(i));
    }
    return TruncatedSeries<R>(std::move(out));
}

// Antiderivative with zero constant term; gains one coefficient.
template <CoefficientRing R>
TruncatedSeries<R> integral(const TruncatedSeries<R> &f)
{
    std::vector<R> out(f.precision() + 1);
    for (std::size_t i = 0; i < f.precision(); ++i) {
        out[i + 1] = scale(f[i], Rational(1) / Rational(i + 1));
    }
    return TruncatedSeries<R>(std::move(out));
}

// f(g(t)) by Horner's rule; g must have zero constant term.
template <CoefficientRing R>
TruncatedSeries<R> compose(const TruncatedSeries<R> &f, const TruncatedSeries<R> &g)
{
    if (!is_zero(g[0])) {
        throw NonzeroInnerConstant("inner series has constant term '" + to_string(g[0]) + "'");
    }
    const std::size_t n = std::min(f.precision(), g.precision());
    const auto inner = g.truncated(n);
    auto result = TruncatedSeries<R>::constant(f[n - 1], n);
    for (std::size_t i = n - 1; i-- > 0;) {
        result = result * inner;
        result = result + TruncatedSeries<R>::constant(f[i], n);
    }
    return result;
}

// Compositional inverse of a delta series, by Lagrange inversion:
// [t^n] revert(f) = (1/n) [t^(n-1)] (t / f)^n.
template <CoefficientRing R>
TruncatedSeries<R> revert(const TruncatedSeries<R> &f)
{
    if (!is_zero(f[0])) {
        throw NotDelta("series has nonzero constant term '" + to_string(f[0]) + "'");
    }
    const std::size_t n = f.precision();
    if (n == 1) {
        return TruncatedSeries<R>(1);
    }
    if (!is_unit(f[1])) {
        throw NotDelta("linear coefficient '" + to_string(f[1]) + "' is not invertible");
    }
    const auto h = div(TruncatedSeries<R>::variable(n), f); // precision n - 1
    std::vector<R> out(n);
    auto power = h;
    out[1] = h[0];
    for (std::size_t k = 2; k < n; ++k) {
        power = power * h;
        out[k] = scale(power[k - 1], Rational(1) / Rational(k));
    }
    return TruncatedSeries<R>(std::move(out));
}

// log f for f_0 = 1, computed as the antiderivative of f'/f.
template <CoefficientRing R>
TruncatedSeries<R> log_series(const TruncatedSeries<R> &f)
{
    if (f[0] != R(1)) {
        throw ConstantTermNotOne("log of a series with constant term '" + to_string(f[0]) + "'");
    }
    const std::size_t n = f.precision();
    if (n == 1) {
        return TruncatedSeries<R>(1);
    }
    return integral(div(derivative(f), f.truncated(n - 1)));
}

// exp f for f_0 = 0, from g' = f' g: n g_n = sum_{k=1}^n k f_k g_{n-k}.
template <CoefficientRing R>
TruncatedSeries<R> exp_series(const TruncatedSeries<R> &f)
{
    if (!is_zero(f[0])) {
        throw NonzeroConstantTerm("exp of a series with constant term '" + to_string(f[0]) + "'");
    }
    const std::size_t n = f.precision();
    std::vector<R> g(n);
    g[0] = R(1);
    for (std::size_t i = 1; i < n; ++i) {
        R acc(0);
        for (std::size_t k = 1; k <= i; ++k) {
            if (!is_zero(f[k])) {
                acc = acc + scale(f[k] * g[i - k], Rational(k));
            }
        }
        g[i] = scale(acc, Rational(1) / Rational(i));
    }
    return TruncatedSeries<R>(std::move(g));
}

// The sequence view n! [t^n] f.
template <CoefficientRing R>
std::vector<R> sequence(const TruncatedSeries<R> &f)
{
    std::vector<R> out;
    out.reserve(f.precision());
    for (std::size_t i = 0; i < f.precision(); ++i) {
        out.push_back(scale(f[i], factorial(i)));
    }
    return out;
}

// Inverse of sequence(): builds sum a_n t^n / n!.
template <CoefficientRing R>
TruncatedSeries<R> from_sequence(std::span<const R> values)
{
    std::vector<R> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out.push_back(scale(values[i], factorial(i).inverse()));
    }
    return TruncatedSeries<R>(std::move(out));
}

using RationalSeries = TruncatedSeries<Rational>;
using LambdaSeries = TruncatedSeries<LambdaPoly>;

inline LambdaSeries promote(const RationalSeries &f)
{
    return LambdaSeries(f);
}

// Substitutes lambda := v in every coefficient.
inline RationalSeries specialize(const LambdaSeries &f, const Rational &v)
{
    std::vector<Rational> out;
    out.reserve(f.precision());
    for (const auto &c : f.coeffs()) {
        out.push_back(c.eval(v));
    }
    return RationalSeries(std::move(out));
}

// e^{y t}.
inline RationalSeries exp_linear(const Rational &y, std::size_t precision)
{
    std::vector<Rational> out(precision);
    Rational term(1);
    for (std::size_t i = 0; i < precision; ++i) {
        out[i] = term;
        term = term * y / Rational(i + 1);
    }
    return RationalSeries(std::move(out));
}

} // namespace dpb

#endif // DPB_SERIES_HPP
