// Acceptance run: one line per criterion, exact comparisons only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <dpb/families.hpp>
#include <dpb/identities.hpp>
#include <dpb/umbral.hpp>

#include "generators.hpp"
#include "mutation.hpp"
#include "process.hpp"

using namespace dpb;

namespace
{

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string &why)
    {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

IdentityParams params(long k, long r, std::size_t n_max)
{
    IdentityParams p;
    p.k = k;
    p.r = r;
    p.n_max = n_max;
    return p;
}

void require_catalog(Outcome &o, const std::string &id, const IdentityParams &p)
{
    const auto report = verify(id, p);
    if (!report.pass) {
        o.fail(id + " k=" + std::to_string(p.k) + " r=" + std::to_string(p.r) + " fails at n="
               + std::to_string(report.witness->n));
    }
}

Outcome collapse()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t n = 0; n <= 20; ++n) {
        if (dpb_poly(0, n) != LambdaPolynomial::monomial(n)) {
            o.fail("k=0 polynomial differs from x^" + std::to_string(n));
        }
    }
    const auto table = dpb_numbers(1, 5);
    const std::vector<Rational> classical = {Rational(1), Rational(-1, 2), Rational(1, 6), Rational(0),
                                             Rational(-1, 30)};
    for (std::size_t n = 0; n < classical.size(); ++n) {
        if (table[n].eval(Rational(0)) != classical[n]) {
            o.fail("k=1, lambda=0 differs from B_" + std::to_string(n));
        }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed.count() >= 5.0) {
        o.fail("took " + std::to_string(elapsed.count()) + " s");
    }
    return o;
}

Outcome daehee_convolution()
{
    Outcome o;
    require_catalog(o, "eq5", params(1, 1, 16));
    return o;
}

Outcome sheffer()
{
    Outcome o;
    for (long k : {-2L, 0L, 2L}) {
        for (long r : {1L, 2L}) {
            require_catalog(o, "sheffer16", params(k, r, 10));
            require_catalog(o, "sheffer23", params(k, r, 10));
        }
    }
    return o;
}

Outcome multinomial()
{
    Outcome o;
    for (long k : {-1L, 1L, 2L}) {
        for (long r : {2L, 3L}) {
            require_catalog(o, "remark", params(k, r, 12));
        }
    }
    return o;
}

Outcome theorems()
{
    Outcome o;
    for (long k = -2; k <= 3; ++k) {
        for (long r = 1; r <= 3; ++r) {
            auto p = params(k, r, 12);
            p.ys = {Rational(1), Rational(-2), Rational(3, 5)};
            for (const char *id : {"thm1", "thm2", "thm3", "thm4"}) {
                require_catalog(o, id, p);
            }
        }
    }
    // h(t) = 1: integrating ((e^t - 1)/t)^r p gives back p(0).
    gen::Gen g(5);
    const auto h = div(exp_series(RationalSeries::variable(12)) - RationalSeries::constant(Rational(1), 12),
                       RationalSeries::variable(12));
    for (int i = 0; i < 50; ++i) {
        const auto p = g.polynomial(10);
        for (long r : {1L, 2L, 3L}) {
            if (invariant_integral(op_apply(pow(h, r), p), r, 12) != p.coeff(0)) {
                o.fail("integral of ((e^t-1)/t)^" + std::to_string(r) + " p is not p(0) for p = " + p.to_string());
            }
        }
    }
    return o;
}

Outcome series_properties()
{
    Outcome o;
    constexpr std::size_t order = 32;
    const auto start = std::chrono::steady_clock::now();
    gen::Gen g(6);
    const auto t = RationalSeries::variable(order);
    for (int i = 0; i < 10; ++i) {
        const auto f = g.delta_series(order);
        const auto fbar = revert(f);
        if (compose(f, fbar) != t || compose(fbar, f) != t) {
            o.fail("revert does not round-trip");
        }
        const auto a = g.series(order), b = g.delta_series(order), c = g.delta_series(order);
        if (compose(compose(a, b), c) != compose(a, compose(b, c))) {
            o.fail("compose is not associative");
        }
        const auto p = g.polynomial(order - 1);
        if (pair(a * f, p) != pair(f, op_apply(a, p))) {
            o.fail("pair and op_apply are not adjoint");
        }
        RationalPolynomial rebuilt;
        for (std::size_t k = 0; k < order; ++k) {
            const auto tk = RationalSeries::monomial(Rational(1), k, order);
            rebuilt += RationalPolynomial::monomial(k, pair(tk, p) / Rational(factorial(k)));
        }
        if (rebuilt != p) {
            o.fail("Taylor reconstruction differs");
        }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed.count() >= 60.0) {
        o.fail("took " + std::to_string(elapsed.count()) + " s");
    }
    return o;
}

Outcome mutations()
{
    Outcome o;
    for (const auto &m : mutation::sweep()) {
        if (!m.ok()) {
            o.fail("perturbing " + std::string(family_name(m.family)) + " at " + std::to_string(m.index)
                   + " went unnoticed");
        }
    }
    return o;
}

Outcome cli_contract()
{
    Outcome o;
    struct Case {
        std::vector<std::string> args;
        std::string out;
        int code;
    };
    const std::vector<Case> cases = {
        {{"table", "daehee", "--n", "4"}, "n  value\n0  1\n1  -1/2\n2  2/3\n3  -3/2\n", 0},
        {{"table", "dpb", "--k", "0", "--n", "6"}, "n  value\n0  1\n1  0\n2  0\n3  0\n4  0\n5  0\n", 0},
        {{"table", "carlitz", "--n", "3", "--lambda", "0"}, "n  value\n0  1\n1  -1/2\n2  1/6\n", 0},
        {{"eval", "t/(elam(1)-1)", "--order", "3"},
         "n  coefficient            sequence\n"
         "0  1                      1\n"
         "1  1/2*lambda - 1/2       1/2*lambda - 1/2\n"
         "2  -1/12*lambda^2 + 1/12  -1/6*lambda^2 + 1/6\n",
         0},
        {{"eval", "1", "--order", "3"}, "n  coefficient  sequence\n0  1            1\n1  0            0\n2  0            0\n", 0},
        {{"eval", "elam(1)*elam(-1)", "--order", "6"},
         "n  coefficient  sequence\n0  1            1\n1  0            0\n2  0            0\n3  0            0\n"
         "4  0            0\n5  0            0\n",
         0},
        {{"verify", "remark", "--k", "2", "--r", "3", "--n", "10"},
         "remark: pass (k=2, r=3, n<=10, lambda=symbolic)\n", 0},
        {{"verify", "t == t + 1", "--order", "4"}, "equation: fail at n=0\n  lhs: 0\n  rhs: 1\n", 1},
    };
    for (const auto &c : cases) {
        const auto r = process::dpb(c.args);
        if (r.out != c.out || r.code != c.code) {
            o.fail("dpb " + c.args[0] + " " + c.args[1] + " gave exit " + std::to_string(r.code));
        }
    }
    for (const std::vector<std::string> &args : std::vector<std::vector<std::string>>{
             {"table", "euler"}, {"verify", "thm9"}, {"table", "dpb", "--n", "x"}, {}}) {
        const auto r = process::dpb(args);
        if (r.code != 2 || !r.out.empty() || r.err.find("usage:") == std::string::npos) {
            o.fail("bad arguments did not exit with 2 and print usage");
        }
    }
    for (const std::string expr : {"t/(", "1/t", "t == (t"}) {
        const auto r = process::dpb({expr.find("==") == std::string::npos ? "eval" : "verify", expr});
        if (r.code != 2 || !r.out.empty() || r.err.find(" at ") == std::string::npos) {
            o.fail("'" + expr + "' did not exit with 2 and a located error");
        }
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"k=0 and lambda=0 collapse", collapse},
        {"Daehee convolution, n <= 16", daehee_convolution},
        {"Sheffer orthogonality and regeneration", sheffer},
        {"multinomial convolution", multinomial},
        {"theorem catalog and p(0) checks", theorems},
        {"series engine properties at order 32", series_properties},
        {"mutation sensitivity", mutations},
        {"CLI contract", cli_contract},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2fs", elapsed.count());
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << "  " << criteria[i].first << " (" << secs << ")";
        if (!o.pass) {
            std::cout << ": " << o.detail;
            ++failed;
        }
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}
