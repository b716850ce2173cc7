#ifndef DPB_LAMBDA_POLY_HPP
#define DPB_LAMBDA_POLY_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <dpb/rational.hpp>
#include <dpb/render.hpp>

namespace dpb
{

// Dense polynomial in the indeterminate lambda over Q, low degree first. This
// is the coefficient ring of every degenerate quantity. Rationals embed
// implicitly as constants.
class LambdaPoly
{
public:
    LambdaPoly() = default;

    LambdaPoly(const Rational &c) // NOLINT(google-explicit-constructor)
    {
        if (!c.is_zero()) {
            coeffs_.push_back(c);
        }
    }

    template <std::integral T>
    LambdaPoly(T c) : LambdaPoly(Rational(c)) // NOLINT(google-explicit-constructor)
    {
    }

    explicit LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        normalize();
    }

    LambdaPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs)
    {
        normalize();
    }

    // The indeterminate itself.
    static LambdaPoly lambda()
    {
        return LambdaPoly({Rational(0), Rational(1)});
    }

    static LambdaPoly monomial(const Rational &c, std::size_t degree)
    {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return LambdaPoly(std::move(v));
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

    std::span<const Rational> coeffs() const noexcept
    {
        return coeffs_;
    }

    // Coefficient of lambda^i (zero past the degree).
    Rational coeff(std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Rational constant_term() const
    {
        return coeff(0);
    }

    Rational eval(const Rational &v) const
    {
        Rational acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc *= v;
            acc += coeffs_[i];
        }
        return acc;
    }

    // (degree <= 0, constant term).
    std::pair<bool, Rational> is_constant() const
    {
        return {degree() <= 0, constant_term()};
    }

    std::string to_string() const
    {
        return detail::render_terms<Rational>(coeffs_, "lambda");
    }

    LambdaPoly &operator+=(const LambdaPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        normalize();
        return *this;
    }
    LambdaPoly &operator-=(const LambdaPoly &o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        normalize();
        return *this;
    }
    LambdaPoly &operator*=(const LambdaPoly &o)
    {
        *this = *this * o;
        return *this;
    }

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly &b)
    {
        return a += b;
    }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly &b)
    {
        return a -= b;
    }
    friend LambdaPoly operator-(LambdaPoly a)
    {
        for (auto &c : a.coeffs_) {
            c = -c;
        }
        return a;
    }
    friend LambdaPoly operator*(const LambdaPoly &a, const LambdaPoly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        // The leading product is nonzero over a field, so no trimming is needed.
        LambdaPoly r;
        r.coeffs_ = std::move(out);
        return r;
    }

    friend bool operator==(const LambdaPoly &, const LambdaPoly &) = default;

    friend std::ostream &operator<<(std::ostream &os, const LambdaPoly &p)
    {
        return os << p.to_string();
    }

    // Drops zero leading coefficients. Idempotent.
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

private:
    std::vector<Rational> coeffs_;
};

inline Rational lambda_eval(const LambdaPoly &p, const Rational &v)
{
    return p.eval(v);
}

inline std::pair<bool, Rational> lambda_is_constant(const LambdaPoly &p)
{
    return p.is_constant();
}

inline std::string to_string(const LambdaPoly &p)
{
    return p.to_string();
}

inline bool is_zero(const LambdaPoly &p)
{
    return p.is_zero();
}

// Units of Q[lambda] are the nonzero constants.
inline bool is_unit(const LambdaPoly &p)
{
    return p.degree() == 0;
}

inline LambdaPoly unit_inverse(const LambdaPoly &p)
{
    if (!is_unit(p)) {
        throw NotInvertible("'" + p.to_string() + "' is not a unit of Q[lambda]");
    }
    return LambdaPoly(p.constant_term().inverse());
}

// a / b when b divides a exactly in Q[lambda], by long division.
inline std::optional<LambdaPoly> exact_quotient(const LambdaPoly &a, const LambdaPoly &b)
{
    if (b.is_zero()) {
        return std::nullopt;
    }
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) {
        return a.is_zero() ? std::optional(LambdaPoly()) : std::nullopt;
    }
    const Rational lead_inv = b.coeffs().back().inverse();
    std::vector<Rational> q(rem.size() - db);
    for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = rem[i + db] * lead_inv;
        if (q[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i + j] -= q[i] * b.coeffs()[j];
        }
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Rational &c) { return !c.is_zero(); })) {
        return std::nullopt;
    }
    return LambdaPoly(std::move(q));
}

inline LambdaPoly scale(const LambdaPoly &p, const Rational &q)
{
    if (q.is_zero()) {
        return {};
    }
    std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
    for (auto &c : v) {
        c *= q;
    }
    return LambdaPoly(std::move(v));
}

inline std::optional<Rational> as_rational(const LambdaPoly &p)
{
    if (p.degree() <= 0) {
        return p.constant_term();
    }
    return std::nullopt;
}

inline LambdaPoly pow(const LambdaPoly &base, std::size_t e)
{
    LambdaPoly result(1), b = base;
    for (; e != 0; e >>= 1) {
        if (e & 1u) {
            result *= b;
        }
        if (e > 1) {
            b *= b;
        }
    }
    return result;
}

} // namespace dpb

#endif // DPB_LAMBDA_POLY_HPP
