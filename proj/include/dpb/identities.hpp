#ifndef DPB_IDENTITIES_HPP
#define DPB_IDENTITIES_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <dpb/error.hpp>
#include <dpb/families.hpp>
#include <dpb/lambda_poly.hpp>
#include <dpb/polynomial.hpp>
#include <dpb/rational.hpp>
#include <dpb/series.hpp>
#include <dpb/umbral.hpp>

namespace dpb
{

// Adds `delta` to one entry of one family table before any identity sees it.
// Used to demonstrate that the catalog actually detects wrong values.
struct Perturbation {
    Family family = Family::dpb;
    long k = 0;
    long r = 1;
    std::size_t index = 0;
    Rational delta = Rational(1);
};

struct IdentityParams {
    long k = 1;
    long r = 1;
    // Checks run for n = 0 .. n_max.
    std::size_t n_max = 10;
    // Sample points for identities with a free shift y; one seeded random
    // rational is appended at run time.
    std::vector<Rational> ys = {Rational(1), Rational(-2), Rational(3, 5)};
    // nullopt compares in Q[lambda]; a value compares after lambda := value.
    std::optional<Rational> lambda;
    std::uint64_t seed = 0;
    std::size_t random_polys = 8;
    std::size_t random_degree = 10;
    std::optional<Perturbation> perturbation;
};

struct Witness {
    std::size_t n = 0;
    std::string lhs;
    std::string rhs;
    // Which sub-check failed, e.g. "y=3/5" or "random polynomial #2".
    std::string context;
};

struct IdentityReport {
    std::string id;
    IdentityParams params;
    bool pass = true;
    std::optional<Witness> witness;
};

inline const std::vector<std::string> &identity_ids()
{
    static const std::vector<std::string> ids = {"eq5",    "eq17",      "eq18",      "thm1", "thm2",   "thm3",
                                                 "thm4",   "remark",    "sheffer16", "sheffer23", "k0", "lambda0"};
    return ids;
}

namespace detail
{

// Hands out family tables, applying the optional perturbation.
class TableSource
{
public:
    explicit TableSource(const std::optional<Perturbation> &perturbation) : perturbation_(perturbation) {}

    SequenceTable get(Family family, long k, long r, std::size_t rows) const
    {
        auto table = family_table(family, k, r, rows);
        if (perturbation_ && matches(*perturbation_, family, k, r) && perturbation_->index < rows) {
            table.values[perturbation_->index] += LambdaPoly(perturbation_->delta);
        }
        return table;
    }

private:
    static bool matches(const Perturbation &p, Family family, long k, long r)
    {
        if (p.family != family) {
            return false;
        }
        switch (family) {
            case Family::poly_bernoulli:
            case Family::dpb:
                return p.k == k;
            case Family::dpb_higher:
                return p.k == k && p.r == r;
            default:
                return true;
        }
    }

    std::optional<Perturbation> perturbation_;
};

// Equality in Q[lambda], or after lambda := v when a value is set.
class Comparator
{
public:
    explicit Comparator(std::optional<Rational> lambda) : lambda_(std::move(lambda)) {}

    bool equal(const LambdaPoly &a, const LambdaPoly &b) const
    {
        return lambda_ ? a.eval(*lambda_) == b.eval(*lambda_) : a == b;
    }
    bool equal(const LambdaPolynomial &a, const LambdaPolynomial &b) const
    {
        return lambda_ ? specialized(a) == specialized(b) : a == b;
    }

    std::string render(const LambdaPoly &a) const
    {
        return lambda_ ? a.eval(*lambda_).to_string() : a.to_string();
    }
    std::string render(const LambdaPolynomial &a) const
    {
        return lambda_ ? specialized(a).to_string() : a.to_string();
    }

    template <typename T>
    std::optional<Witness> check(std::size_t n, const T &lhs, const T &rhs, std::string context = {}) const
    {
        if (equal(lhs, rhs)) {
            return std::nullopt;
        }
        return Witness{n, render(lhs), render(rhs), std::move(context)};
    }

private:
    RationalPolynomial specialized(const LambdaPolynomial &p) const
    {
        std::vector<Rational> v;
        for (const auto &c : p.coeffs()) {
            v.push_back(c.eval(*lambda_));
        }
        return RationalPolynomial(std::move(v));
    }

    std::optional<Rational> lambda_;
};

// Everything a catalog entry needs, built once per verify call.
struct Context {
    const IdentityParams &params;
    std::size_t precision;
    TableSource tables;
    Comparator cmp;
    std::vector<Rational> ys;
    std::vector<LambdaPolynomial> random_polys;
};

inline Rational random_rational(std::mt19937_64 &rng, long max_num, long max_den)
{
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

inline Context make_context(const IdentityParams &params)
{
    Context ctx{params,
                std::max(params.n_max, params.random_degree) + 2,
                TableSource(params.perturbation),
                Comparator(params.lambda),
                params.ys,
                {}};
    std::mt19937_64 rng(params.seed);
    ctx.ys.push_back(random_rational(rng, 20, 7));
    std::uniform_int_distribution<std::size_t> degree(0, params.random_degree);
    for (std::size_t i = 0; i < params.random_polys; ++i) {
        std::vector<LambdaPoly> c(degree(rng) + 1);
        for (auto &v : c) {
            v = random_rational(rng, 9, 9);
        }
        ctx.random_polys.emplace_back(std::move(c));
    }
    return ctx;
}

inline std::string sample_label(std::size_t i)
{
    return "random polynomial #" + std::to_string(i);
}

// (e^{y t} - 1) / t over Q[lambda].
inline LambdaSeries difference_quotient(const Rational &y, std::size_t precision)
{
    const auto e = exp_linear(y, precision + 1);
    return promote(div(e - RationalSeries::constant(Rational(1), precision + 1), RationalSeries::variable(precision + 1)));
}

// A(t) = ((e^t - 1) / t) * Li_k(1 - (1+lambda t)^{-1/lambda}) / ((1+lambda t)^{1/lambda} - 1).
inline LambdaSeries a_series(long k, std::size_t precision)
{
    return difference_quotient(Rational(1), precision) * dpb_gf(k, precision);
}

inline LambdaSeries bernoulli_lambda(std::size_t precision, long r = 1)
{
    return promote(invariant_integral_series(r, precision));
}

inline LambdaPolynomial x_power(std::size_t n)
{
    return LambdaPolynomial::monomial(n);
}

// beta_{n,lambda}^{(1)} = sum_l C(n,l) lambda^{n-l} D_{n-l} beta_{l,lambda}, at x = 0.
inline std::optional<Witness> check_eq5(const Context &c)
{
    const std::size_t rows = c.params.n_max + 1;
    const auto lhs_table = c.tables.get(Family::dpb, 1, 1, rows);
    const auto daehee_table = c.tables.get(Family::daehee, 0, 1, rows);
    const auto carlitz_table = c.tables.get(Family::carlitz, 0, 1, rows);
    for (std::size_t n = 0; n < rows; ++n) {
        LambdaPoly rhs;
        for (std::size_t l = 0; l <= n; ++l) {
            rhs += LambdaPoly::monomial(binomial(n, l), n - l) * daehee_table[n - l] * carlitz_table[l];
        }
        if (auto w = c.cmp.check(n, lhs_table[n], rhs)) {
            return w;
        }
    }
    return std::nullopt;
}

// Binomial form of beta^{(k)}_n(x) against n! [t^n] of A(t) (t/(e^t-1)) e^{xt},
// the latter multiplied out in the series ring over Q[lambda][x].
inline std::optional<Witness> check_eq17(const Context &c)
{
    const std::size_t rows = c.params.n_max + 1;
    const auto table = c.tables.get(Family::dpb, c.params.k, 1, rows);
    const auto g = a_series(c.params.k, rows) * bernoulli_lambda(rows);

    using PolySeries = TruncatedSeries<LambdaPolynomial>;
    std::vector<LambdaPolynomial> lifted, exp_xt;
    for (std::size_t n = 0; n < rows; ++n) {
        lifted.emplace_back(g[n]);
        exp_xt.push_back(LambdaPolynomial::monomial(n, LambdaPoly(factorial(n).inverse())));
    }
    const auto product = PolySeries(std::move(lifted)) * PolySeries(std::move(exp_xt));
    for (std::size_t n = 0; n < rows; ++n) {
        const auto rhs = scale(product[n], factorial(n));
        if (auto w = c.cmp.check(n, binomial_polynomial(table, n), rhs)) {
            return w;
        }
    }
    return std::nullopt;
}

// ((e^{yt}-1)/t) beta_n(x) = (beta_{n+1}(x+y) - beta_{n+1}(x)) / (n+1).
inline std::optional<Witness> check_eq18(const Context &c)
{
    const std::size_t rows = c.params.n_max + 2;
    const auto table = c.tables.get(Family::dpb, c.params.k, 1, rows);
    for (const auto &y : c.ys) {
        const auto op = difference_quotient(y, rows);
        for (std::size_t n = 0; n + 1 < rows; ++n) {
            const auto lhs = op_apply(op, binomial_polynomial(table, n));
            const auto next = binomial_polynomial(table, n + 1);
            const auto rhs = scale(shift(next, LambdaPoly(y)) - next, Rational(1) / Rational(n + 1));
            if (auto w = c.cmp.check(n, lhs, rhs, "y=" + y.to_string())) {
                return w;
            }
        }
    }
    return std::nullopt;
}

inline std::optional<Witness> check_thm1(const Context &c)
{
    const long k = c.params.k;
    const std::size_t rows = c.params.n_max + 2;
    const std::size_t p = c.precision;
    const auto table = c.tables.get(Family::dpb, k, 1, rows);
    const auto bern_table = c.tables.get(Family::bernoulli, 0, 1, rows);
    const auto a = a_series(k, p);
    const auto ab = a * bernoulli_lambda(p);
    const auto euler = difference_quotient(Rational(1), p);

    // beta_n = < A(t) * integral of e^{yt} | x^n >.
    for (std::size_t n = 0; n <= c.params.n_max; ++n) {
        if (auto w = c.cmp.check(n, pair(ab, x_power(n)), table[n], "pairing with x^n")) {
            return w;
        }
    }
    // < integral of e^{yt} | ((e^t-1)/t) beta_n(x) > = beta_n, directly ...
    for (std::size_t n = 0; n <= c.params.n_max; ++n) {
        const auto lhs = invariant_integral(op_apply(euler, binomial_polynomial(table, n)), 1, p);
        if (auto w = c.cmp.check(n, lhs, table[n], "integral of ((e^t-1)/t) beta_n(x)")) {
            return w;
        }
    }
    // ... and through the Bernoulli expansion
    // (1/(n+1)) sum_l C(n+1,l) B_l (beta_{n+1-l}(1) - beta_{n+1-l}).
    for (std::size_t n = 0; n <= c.params.n_max; ++n) {
        LambdaPoly sum;
        for (std::size_t l = 0; l <= n + 1; ++l) {
            const auto m = n + 1 - l;
            const auto diff = binomial_polynomial(table, m)(LambdaPoly(1)) - table[m];
            sum += scale(bern_table[l] * diff, binomial(n + 1, l));
        }
        if (auto w = c.cmp.check(n, scale(sum, Rational(1) / Rational(n + 1)), table[n], "Bernoulli expansion")) {
            return w;
        }
    }
    const auto gf = dpb_gf(k, p);
    for (std::size_t i = 0; i < c.random_polys.size(); ++i) {
        const auto &poly = c.random_polys[i];
        const auto integral = invariant_integral(op_apply(a, poly), 1, p);
        if (auto w = c.cmp.check(i, pair(gf, poly), integral, sample_label(i) + ", first display")) {
            return w;
        }
        if (auto w = c.cmp.check(i, pair(ab, poly), integral, sample_label(i) + ", second display")) {
            return w;
        }
        // h(t) = 1: the integral of ((e^t-1)/t) p(x) returns p(0).
        if (auto w = c.cmp.check(i, invariant_integral(op_apply(euler, poly), 1, p), poly.coeff(0),
                                 sample_label(i) + ", h=1")) {
            return w;
        }
    }
    return std::nullopt;
}

inline std::optional<Witness> check_thm2(const Context &c)
{
    const long k = c.params.k;
    const std::size_t p = c.precision;
    const auto table = c.tables.get(Family::dpb, k, 1, c.params.n_max + 1);
    const auto a = a_series(k, p);
    const auto bern = bernoulli_lambda(p);
    const auto gf = dpb_gf(k, p);

    for (std::size_t i = 0; i < c.random_polys.size(); ++i) {
        const auto &poly = c.random_polys[i];
        const auto averaged = op_apply(bern, poly);
        // integral of p(x+y) d mu(y), pointwise through the functional.
        std::vector<Rational> points = c.ys;
        for (int x0 = 0; x0 <= poly.degree(); ++x0) {
            points.emplace_back(x0);
        }
        for (const auto &x0 : points) {
            const auto direct = invariant_integral(shift(poly, LambdaPoly(x0)), 1, p);
            if (auto w = c.cmp.check(i, averaged(LambdaPoly(x0)), direct,
                                     sample_label(i) + ", integral at x=" + x0.to_string())) {
                return w;
            }
        }
        if (auto w = c.cmp.check(i, op_apply(a, averaged), op_apply(gf, poly), sample_label(i))) {
            return w;
        }
    }
    for (std::size_t n = 0; n <= c.params.n_max; ++n) {
        if (auto w = c.cmp.check(n, op_apply(gf, x_power(n)), binomial_polynomial(table, n), "operator on x^n")) {
            return w;
        }
    }
    return std::nullopt;
}

inline std::optional<Witness> check_thm3(const Context &c)
{
    const long k = c.params.k;
    const long r = c.params.r;
    const std::size_t p = c.precision;
    const auto table = c.tables.get(Family::dpb_higher, k, r, c.params.n_max + 1);
    const auto ar = pow(a_series(k, p), r);
    const auto bern = bernoulli_lambda(p);
    const auto bern_r = bernoulli_lambda(p, r);
    const auto higher = dpb_higher_gf(k, r, p);

    for (std::size_t i = 0; i < c.random_polys.size(); ++i) {
        const auto &poly = c.random_polys[i];
        const auto averaged = op_apply(bern_r, poly);
        // The r-fold integral as r successive single integrals.
        auto iterated = poly;
        for (long j = 0; j < r; ++j) {
            iterated = op_apply(bern, iterated);
        }
        if (auto w = c.cmp.check(i, averaged, iterated, sample_label(i) + ", r-fold integral")) {
            return w;
        }
        if (auto w = c.cmp.check(i, op_apply(ar, averaged), op_apply(higher, poly), sample_label(i))) {
            return w;
        }
    }
    for (std::size_t n = 0; n <= c.params.n_max; ++n) {
        if (auto w = c.cmp.check(n, op_apply(higher, x_power(n)), binomial_polynomial(table, n), "operator on x^n")) {
            return w;
        }
    }
    return std::nullopt;
}

inline std::optional<Witness> check_thm4(const Context &c)
{
    const long k = c.params.k;
    const long r = c.params.r;
    const std::size_t p = c.precision;
    const auto table = c.tables.get(Family::dpb_higher, k, r, c.params.n_max + 1);
    const auto ar = pow(a_series(k, p), r);
    const auto arb = ar * bernoulli_lambda(p, r);
    const auto higher = dpb_higher_gf(k, r, p);
    const auto euler_r = pow(difference_quotient(Rational(1), p), r);

    for (std::size_t n = 0; n <= c.params.n_max; ++n) {
        if (auto w = c.cmp.check(n, pair(arb, x_power(n)), table[n], "pairing with x^n")) {
            return w;
        }
    }
    for (std::size_t i = 0; i < c.random_polys.size(); ++i) {
        const auto &poly = c.random_polys[i];
        const auto integral = invariant_integral(op_apply(ar, poly), r, p);
        if (auto w = c.cmp.check(i, pair(higher, poly), integral, sample_label(i) + ", first display")) {
            return w;
        }
        if (auto w = c.cmp.check(i, pair(arb, poly), integral, sample_label(i) + ", second display")) {
            return w;
        }
        // h(t) = 1: the r-fold integral of ((e^t-1)/t)^r p(x) returns p(0).
        if (auto w = c.cmp.check(i, invariant_integral(op_apply(euler_r, poly), r, p), poly.coeff(0),
                                 sample_label(i) + ", h=1")) {
            return w;
        }
    }
    return std::nullopt;
}

// Calls visit(parts) for every composition n = n_1 + ... + n_r with n_i >= 0.
inline void for_each_composition(std::size_t n, std::size_t r, std::vector<std::size_t> &parts,
                                 const std::function<void(const std::vector<std::size_t> &)> &visit)
{
    if (parts.size() + 1 == r) {
        parts.push_back(n);
        visit(parts);
        parts.pop_back();
        return;
    }
    for (std::size_t first = 0; first <= n; ++first) {
        parts.push_back(first);
        for_each_composition(n - first, r, parts, visit);
        parts.pop_back();
    }
}

inline std::optional<Witness> check_remark(const Context &c)
{
    const std::size_t rows = c.params.n_max + 1;
    const auto r = static_cast<std::size_t>(c.params.r);
    const auto lhs_table = c.tables.get(Family::dpb_higher, c.params.k, c.params.r, rows);
    const auto base = c.tables.get(Family::dpb, c.params.k, 1, rows);
    for (std::size_t n = 0; n < rows; ++n) {
        LambdaPoly rhs;
        std::vector<std::size_t> parts;
        for_each_composition(n, r, parts, [&](const std::vector<std::size_t> &ns) {
            Rational multinomial = factorial(n);
            LambdaPoly product(1);
            for (auto ni : ns) {
                multinomial /= factorial(ni);
                product *= base[ni];
            }
            rhs += scale(product, multinomial);
        });
        if (auto w = c.cmp.check(n, lhs_table[n], rhs)) {
            return w;
        }
    }
    return std::nullopt;
}

inline std::optional<Witness> from_sheffer(const std::optional<ShefferFailure> &f)
{
    if (!f) {
        return std::nullopt;
    }
    const bool orth = f->kind == ShefferFailure::Kind::orthogonality;
    return Witness{f->n, f->lhs, f->rhs, orth ? "orthogonality, k=" + std::to_string(f->k) : "regeneration"};
}

// (1 + lambda t)^{1/lambda} - 1 over Li_k(1 - (1 + lambda t)^{-1/lambda}).
inline LambdaSeries sheffer_g(long k, std::size_t precision)
{
    const std::size_t m = precision + 1;
    const auto one = LambdaSeries::constant(LambdaPoly(1), m);
    return div(elam(Rational(1), m) - one, compose(promote(polylog_series(k, m)), one - elam(Rational(-1), m)));
}

inline std::optional<Witness> check_sheffer(const Context &c, long r)
{
    const std::size_t rows = c.params.n_max + 1;
    const auto table = r == 1 ? c.tables.get(Family::dpb, c.params.k, 1, rows)
                              : c.tables.get(Family::dpb_higher, c.params.k, r, rows);
    std::vector<LambdaPolynomial> s;
    for (std::size_t n = 0; n < rows; ++n) {
        s.push_back(binomial_polynomial(table, n));
    }
    const auto g = pow(sheffer_g(c.params.k, rows), r);
    const auto f = LambdaSeries::variable(rows);
    if (c.params.lambda) {
        // Specialise everything and run the check over Q.
        const auto& v = *c.params.lambda;
        std::vector<RationalPolynomial> sv;
        for (const auto &p : s) {
            std::vector<Rational> cs;
            for (const auto &co : p.coeffs()) {
                cs.push_back(co.eval(v));
            }
            sv.emplace_back(std::move(cs));
        }
        return from_sheffer(
            sheffer_check(specialize(g, v), specialize(f, v), std::span<const RationalPolynomial>(sv), c.params.n_max));
    }
    return from_sheffer(sheffer_check(g, f, std::span<const LambdaPolynomial>(s), c.params.n_max));
}

inline std::optional<Witness> check_k0(const Context &c)
{
    const auto table = c.tables.get(Family::dpb, 0, 1, c.params.n_max + 1);
    for (std::size_t n = 0; n <= c.params.n_max; ++n) {
        if (auto w = c.cmp.check(n, binomial_polynomial(table, n), x_power(n))) {
            return w;
        }
    }
    return std::nullopt;
}

inline std::optional<Witness> check_lambda0(const Context &c)
{
    const std::size_t rows = c.params.n_max + 1;
    const auto table = c.tables.get(Family::poly_bernoulli, c.params.k, 1, rows);
    const auto seq = sequence(specialize(dpb_gf(c.params.k, rows), Rational(0)));
    for (std::size_t n = 0; n < rows; ++n) {
        if (auto w = c.cmp.check(n, LambdaPoly(seq[n]), table[n], "lambda=0")) {
            return w;
        }
    }
    return std::nullopt;
}

} // namespace detail

// Runs one catalog entry. Throws UnknownIdentity for ids outside identity_ids().
inline IdentityReport verify(std::string_view id, const IdentityParams &params)
{
    using namespace detail;
    using Check = std::optional<Witness> (*)(const Context &);
    static constexpr std::array<std::pair<std::string_view, Check>, 12> catalog = {{
        {"eq5", check_eq5},
        {"eq17", check_eq17},
        {"eq18", check_eq18},
        {"thm1", check_thm1},
        {"thm2", check_thm2},
        {"thm3", check_thm3},
        {"thm4", check_thm4},
        {"remark", check_remark},
        {"sheffer16", [](const Context &c) { return check_sheffer(c, 1); }},
        {"sheffer23", [](const Context &c) { return check_sheffer(c, c.params.r); }},
        {"k0", check_k0},
        {"lambda0", check_lambda0},
    }};
    const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto &e) { return e.first == id; });
    if (it == catalog.end()) {
        throw UnknownIdentity(std::string(id));
    }
    if (params.r < 1) {
        throw InvalidArgument("order r must be at least 1");
    }
    const auto ctx = make_context(params);
    IdentityReport report{std::string(id), params, true, it->second(ctx)};
    report.pass = !report.witness.has_value();
    return report;
}

// Runs every catalog entry concurrently; reports come back in catalog order.
inline std::vector<IdentityReport> verify_all(const IdentityParams &params)
{
    std::vector<std::future<IdentityReport>> jobs;
    for (const auto &id : identity_ids()) {
        jobs.push_back(std::async(std::launch::async, [&params, id] { return verify(id, params); }));
    }
    std::vector<IdentityReport> out;
    out.reserve(jobs.size());
    for (auto &j : jobs) {
        out.push_back(j.get());
    }
    return out;
}

} // namespace dpb

#endif // DPB_IDENTITIES_HPP
