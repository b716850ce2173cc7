#ifndef DPB_TESTS_GENERATORS_HPP
#define DPB_TESTS_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <dpb/families.hpp>
#include <dpb/lambda_poly.hpp>
#include <dpb/polynomial.hpp>
#include <dpb/rational.hpp>
#include <dpb/series.hpp>

namespace gen
{

using dpb::LambdaPoly;
using dpb::LambdaPolynomial;
using dpb::LambdaSeries;
using dpb::Rational;
using dpb::RationalPolynomial;
using dpb::RationalSeries;

// Number of random cases each property runs.
inline constexpr int cases = 40;

class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    bool coin(double p = 0.5)
    {
        return std::bernoulli_distribution(p)(rng_);
    }

    // Small numerators and denominators, zero about one time in six.
    Rational rational(long bound = 9)
    {
        if (coin(1.0 / 6)) {
            return Rational(0);
        }
        return Rational(integer(-bound, bound), integer(1, bound));
    }

    Rational nonzero_rational(long bound = 9)
    {
        for (;;) {
            auto q = rational(bound);
            if (!q.is_zero()) {
                return q;
            }
        }
    }

    LambdaPoly lambda_poly(std::size_t max_degree = 3)
    {
        std::vector<Rational> v(static_cast<std::size_t>(integer(0, static_cast<long>(max_degree))) + 1);
        for (auto &c : v) {
            c = rational();
        }
        return LambdaPoly(std::move(v));
    }

    RationalPolynomial polynomial(std::size_t max_degree)
    {
        std::vector<Rational> v(static_cast<std::size_t>(integer(0, static_cast<long>(max_degree))) + 1);
        for (auto &c : v) {
            c = rational();
        }
        return RationalPolynomial(std::move(v));
    }

    LambdaPolynomial lambda_polynomial(std::size_t max_degree, std::size_t lambda_degree = 2)
    {
        std::vector<LambdaPoly> v(static_cast<std::size_t>(integer(0, static_cast<long>(max_degree))) + 1);
        for (auto &c : v) {
            c = lambda_poly(lambda_degree);
        }
        return LambdaPolynomial(std::move(v));
    }

    std::vector<Rational> rationals(std::size_t count)
    {
        std::vector<Rational> v(count);
        for (auto &c : v) {
            c = rational();
        }
        return v;
    }

    RationalSeries series(std::size_t precision)
    {
        return RationalSeries(rationals(precision));
    }

    // Constant term a nonzero rational.
    RationalSeries unit_series(std::size_t precision)
    {
        auto out = rationals(precision);
        out[0] = nonzero_rational();
        return RationalSeries(std::move(out));
    }

    // Zero constant term, invertible linear term.
    RationalSeries delta_series(std::size_t precision)
    {
        auto out = rationals(precision);
        out[0] = 0;
        out[1] = nonzero_rational();
        return RationalSeries(std::move(out));
    }

    // Zero constant term only.
    RationalSeries nonunit_series(std::size_t precision)
    {
        auto out = rationals(precision);
        out[0] = 0;
        return RationalSeries(std::move(out));
    }

    LambdaSeries lambda_series(std::size_t precision, std::size_t lambda_degree = 2)
    {
        std::vector<LambdaPoly> v(precision);
        for (auto &c : v) {
            c = lambda_poly(lambda_degree);
        }
        return LambdaSeries(std::move(v));
    }

    LambdaSeries lambda_unit_series(std::size_t precision)
    {
        std::vector<LambdaPoly> v(precision);
        for (auto &c : v) {
            c = lambda_poly(2);
        }
        v[0] = LambdaPoly(nonzero_rational());
        return LambdaSeries(std::move(v));
    }

    std::mt19937_64 &engine() noexcept
    {
        return rng_;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace gen

#endif // DPB_TESTS_GENERATORS_HPP
