#ifndef DPB_POLYNOMIAL_HPP
#define DPB_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <dpb/rational.hpp>
#include <dpb/render.hpp>
#include <dpb/ring.hpp>

namespace dpb
{

// Dense polynomial in x over R, low degree first, kept in canonical form
// (no zero leading coefficient).
template <CoefficientRing R>
class Polynomial
{
public:
    using coefficient_type = R;

    Polynomial() = default;

    Polynomial(const R &c) // NOLINT(google-explicit-constructor)
    {
        if (!dpb::is_zero(c)) {
            coeffs_.push_back(c);
        }
    }

    Polynomial(int c) : Polynomial(R(c)) {} // NOLINT(google-explicit-constructor)

    explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs))
    {
        normalize();
    }

    // c * x^n.
    static Polynomial monomial(std::size_t n, const R &c = R(1))
    {
        std::vector<R> v(n + 1);
        v[n] = c;
        return Polynomial(std::move(v));
    }

    static Polynomial x()
    {
        return monomial(1);
    }

    // Ring promotion of the coefficients.
    template <CoefficientRing S>
    static Polynomial from(const Polynomial<S> &p)
    {
        std::vector<R> v;
        v.reserve(p.coeffs().size());
        for (const auto &c : p.coeffs()) {
            v.emplace_back(c);
        }
        return Polynomial(std::move(v));
    }

    // -1 for the zero polynomial.
    int degree() const noexcept
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }

    std::span<const R> coeffs() const noexcept
    {
        return coeffs_;
    }

    R coeff(std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : R(0);
    }

    R operator()(const R &at) const
    {
        R acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * at + coeffs_[i];
        }
        return acc;
    }

    std::string to_string() const
    {
        return detail::render_terms<R>(coeffs_, "x");
    }

    Polynomial &operator+=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        }
        normalize();
        return *this;
    }
    Polynomial &operator-=(const Polynomial &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        }
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (dpb::is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    friend std::ostream &operator<<(std::ostream &os, const Polynomial &p)
    {
        return os << p.to_string();
    }

private:
    void normalize()
    {
        while (!coeffs_.empty() && dpb::is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<R> coeffs_;
};

template <CoefficientRing R>
std::string to_string(const Polynomial<R> &p)
{
    return p.to_string();
}

template <CoefficientRing R>
bool is_zero(const Polynomial<R> &p)
{
    return p.is_zero();
}

// Units are the constant polynomials with a unit coefficient.
template <CoefficientRing R>
bool is_unit(const Polynomial<R> &p)
{
    return p.degree() == 0 && is_unit(p.coeff(0));
}

template <CoefficientRing R>
Polynomial<R> unit_inverse(const Polynomial<R> &p)
{
    if (p.degree() != 0) {
        throw NotInvertible("'" + p.to_string() + "' is not a unit");
    }
    return Polynomial<R>(unit_inverse(p.coeff(0)));
}

template <CoefficientRing R>
Polynomial<R> scale(const Polynomial<R> &p, const Rational &q)
{
    std::vector<R> v(p.coeffs().begin(), p.coeffs().end());
    for (auto &c : v) {
        c = scale(c, q);
    }
    return Polynomial<R>(std::move(v));
}

// Multiplies every coefficient by a ring element.
template <CoefficientRing R>
Polynomial<R> scale_by(const Polynomial<R> &p, const R &c)
{
    std::vector<R> v(p.coeffs().begin(), p.coeffs().end());
    for (auto &a : v) {
        a = a * c;
    }
    return Polynomial<R>(std::move(v));
}

template <CoefficientRing R>
std::optional<Rational> as_rational(const Polynomial<R> &p)
{
    if (p.degree() <= 0) {
        return as_rational(p.coeff(0));
    }
    return std::nullopt;
}

template <CoefficientRing R>
Polynomial<R> derivative(const Polynomial<R> &p)
{
    if (p.degree() <= 0) {
        return {};
    }
    std::vector<R> v(static_cast<std::size_t>(p.degree()));
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
        v[i - 1] = scale(p.coeffs()[i], Rational(i));
    }
    return Polynomial<R>(std::move(v));
}

template <CoefficientRing R>
Polynomial<R> pow(const Polynomial<R> &base, std::size_t e)
{
    Polynomial<R> result(R(1)), b = base;
    for (; e != 0; e >>= 1) {
        if (e & 1u) {
            result = result * b;
        }
        if (e > 1) {
            b = b * b;
        }
    }
    return result;
}

using RationalPolynomial = Polynomial<Rational>;

} // namespace dpb

#endif // DPB_POLYNOMIAL_HPP
