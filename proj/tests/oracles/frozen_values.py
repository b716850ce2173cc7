"""Independent sympy oracle for the frozen values in the C++ test suite.

Everything here is computed with sympy's own series machinery, never with
the library under test. Run: python3 tests/oracles/frozen_values.py > tests/oracles/frozen_values.txt
"""
import sympy as sp

t, lam, x = sp.symbols("t lambda x")


def coeffs(expr, n):
    s = sp.series(expr, t, 0, n).removeO()
    return [sp.factor(sp.expand(s.coeff(t, i))) for i in range(n)]


def seq(expr, n):
    return [sp.expand(c * sp.factorial(i)) for i, c in enumerate(coeffs(expr, n))]


def li(k, z, n):
    return sum(z**m * sp.Integer(m) ** (-k) for m in range(1, n + 1))


def elam(c):
    return sp.exp(c * sp.log(1 + lam * t) / lam)


# Each row lists the coefficients in lambda, lowest degree first, followed by
# the sympy form as a comment.
def show(name, vals):
    print(name)
    for i, v in enumerate(vals):
        v = sp.expand(v)
        cs = sp.Poly(v, lam).all_coeffs()[::-1] if v != 0 else [0]
        print(f"  {i}: {' '.join(str(c) for c in cs)}  # {v}")


N = 7
show("bernoulli", seq(t / (sp.exp(t) - 1), 13))
show("daehee", seq(sp.log(1 + t) / t, 9))
show("carlitz", seq(t / (elam(1) - 1), N))
for k in (-2, -1, 0, 1, 2, 3):
    show(f"poly-bernoulli k={k}", seq(li(k, 1 - sp.exp(-t), N) / (sp.exp(t) - 1), N))
for k in (-2, -1, 1, 2, 3):
    show(f"dpb k={k}", seq(li(k, 1 - elam(-1), 6) / (elam(1) - 1), 6))
show("dpb k=2 r=2", seq((li(2, 1 - elam(-1), 5) / (elam(1) - 1)) ** 2, 5))
show("dpb k=-1 r=3", seq((li(-1, 1 - elam(-1), 5) / (elam(1) - 1)) ** 3, 5))
show("elam(1/2)", coeffs(elam(sp.Rational(1, 2)), 5))
