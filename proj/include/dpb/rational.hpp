#ifndef DPB_RATIONAL_HPP
#define DPB_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <gmpxx.h>

#include <dpb/error.hpp>

namespace dpb
{

using Integer = mpz_class;

// Exact fraction, always stored reduced with a positive denominator, so that
// equality is structural.
class Rational
{
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>) {
            value_ = static_cast<signed long>(n);
        } else {
            value_ = static_cast<unsigned long>(n);
        }
    }

    Rational(const Integer &n) : value_(n) {} // NOLINT(google-explicit-constructor)

    Rational(const Integer &num, const Integer &den)
    {
        if (den == 0) {
            throw DivisionByZero();
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    // Accepts "p", "-p", "p/q" and "-p/q" with decimal digits.
    static Rational parse(std::string_view text)
    {
        const auto slash = text.find('/');
        const auto num = text.substr(0, slash);
        const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
        return Rational(parse_integer(num, text), parse_integer(den, text));
    }

    Integer numerator() const
    {
        return value_.get_num();
    }
    Integer denominator() const
    {
        return value_.get_den();
    }

    bool is_zero() const noexcept
    {
        return sgn(value_) == 0;
    }
    int sign() const noexcept
    {
        return sgn(value_);
    }
    bool is_integer() const
    {
        return value_.get_den() == 1;
    }

    Rational abs() const
    {
        return Rational(mpq_class(::abs(value_)));
    }
    Rational inverse() const
    {
        if (is_zero()) {
            throw DivisionByZero();
        }
        return Rational(mpq_class(1 / value_));
    }

    std::string to_string() const
    {
        std::string s = value_.get_num().get_str();
        if (value_.get_den() != 1) {
            s += '/';
            s += value_.get_den().get_str();
        }
        return s;
    }

    const mpq_class &get_mpq() const noexcept
    {
        return value_;
    }

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw DivisionByZero();
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        return Rational(mpq_class(-a.value_));
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &q)
    {
        return os << q.to_string();
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    static Integer parse_integer(std::string_view digits, std::string_view whole)
    {
        std::size_t i = 0;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            i = 1;
        }
        if (i == digits.size()) {
            throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
        }
        for (std::size_t j = i; j < digits.size(); ++j) {
            if (digits[j] < '0' || digits[j] > '9') {
                throw InvalidArgument("malformed rational '" + std::string(whole) + "'");
            }
        }
        Integer n(std::string(digits.substr(i)), 10);
        return digits[0] == '-' ? Integer(-n) : n;
    }

    mpq_class value_;
};

inline std::string to_string(const Rational &q)
{
    return q.to_string();
}

inline bool is_zero(const Rational &q)
{
    return q.is_zero();
}

inline bool is_unit(const Rational &q)
{
    return !q.is_zero();
}

inline Rational unit_inverse(const Rational &q)
{
    return q.inverse();
}

inline Rational scale(const Rational &a, const Rational &q)
{
    return a * q;
}

inline Rational factorial(std::size_t n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return Rational(0);
    }
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return Rational(c);
}

// Integer power, negative exponents allowed for nonzero bases.
inline Rational pow(const Rational &base, long e)
{
    if (e < 0) {
        return pow(base.inverse(), -e);
    }
    Rational result(1), b = base;
    for (auto u = static_cast<unsigned long>(e); u != 0; u >>= 1) {
        if (u & 1u) {
            result *= b;
        }
        if (u > 1) {
            b *= b;
        }
    }
    return result;
}

} // namespace dpb

#endif // DPB_RATIONAL_HPP
