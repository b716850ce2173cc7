#ifndef DPB_RENDER_HPP
#define DPB_RENDER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <dpb/rational.hpp>

namespace dpb
{

inline std::optional<Rational> as_rational(const Rational &q)
{
    return q;
}

namespace detail
{

// Renders sum_m c_m * var^m in descending powers:
//   "-1/6*lambda^2 + 1/6", "x - 3/4", "(1/2*lambda - 1/2)*x + 1".
// Rational coefficients fold their sign into the joining operator and drop a
// unit factor; any other coefficient is parenthesised.
template <typename R>
std::string render_terms(std::span<const R> coeffs, std::string_view var)
{
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const R &c = coeffs[i];
        if (is_zero(c)) {
            continue;
        }
        std::string mono;
        if (i >= 1) {
            mono = std::string(var);
            if (i > 1) {
                mono += '^' + std::to_string(i);
            }
        }
        bool negative = false;
        std::string body;
        if (const auto q = as_rational(c)) {
            negative = q->sign() < 0;
            const Rational a = q->abs();
            if (mono.empty()) {
                body = a.to_string();
            } else if (a == Rational(1)) {
                body = mono;
            } else {
                body = a.to_string() + '*' + mono;
            }
        } else {
            body = '(' + to_string(c) + ')';
            if (!mono.empty()) {
                body += '*' + mono;
            }
        }
        if (out.empty()) {
            out = negative ? '-' + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out.empty() ? std::string("0") : out;
}

} // namespace detail

} // namespace dpb

#endif // DPB_RENDER_HPP
