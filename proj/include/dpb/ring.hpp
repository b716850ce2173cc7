#ifndef DPB_RING_HPP
#define DPB_RING_HPP

#include <concepts>
#include <string>

#include <dpb/rational.hpp>

namespace dpb
{

// A commutative Q-algebra usable as a series or polynomial coefficient.
// Units must be detectable and invertible; scale() is the Q-action.
template <typename R>
concept CoefficientRing = std::regular<R> && std::constructible_from<R, int>
                          && requires(const R a, const R b, const Rational q) {
                                 { a + b } -> std::convertible_to<R>;
                                 { a - b } -> std::convertible_to<R>;
                                 { a * b } -> std::convertible_to<R>;
                                 { -a } -> std::convertible_to<R>;
                                 { scale(a, q) } -> std::convertible_to<R>;
                                 { is_zero(a) } -> std::same_as<bool>;
                                 { is_unit(a) } -> std::same_as<bool>;
                                 { unit_inverse(a) } -> std::convertible_to<R>;
                                 { to_string(a) } -> std::convertible_to<std::string>;
                             };

namespace detail
{

// Optional hook: exact_quotient(a, b) returns a / b when b divides a.
template <typename R>
concept has_exact_quotient = requires(const R a, const R b) {
    { *exact_quotient(a, b) } -> std::convertible_to<R>;
    { static_cast<bool>(exact_quotient(a, b)) };
};

} // namespace detail

} // namespace dpb

#endif // DPB_RING_HPP
