"""Symbolic verification of the uniform Racah coefficient rewrite.

The module ``askey_limits.uniform`` evaluates the rescaled four-parameter
recurrence through compound reciprocals w1..w5 that stay finite on the
boundary strata.  This script machine-checks, with sympy, that on the open
orthant those expressions are *identical* to the directly rescaled
recurrence coefficients

    B'_n = rho (B_n - B_0),   C'_n = rho^2 C_n,

with

    rho^2 = (alpha+beta)^3
            / (alpha beta (beta+delta) (delta-alpha) (N+alpha+beta) N),

where (alpha, beta, delta, N) come from the substitution

    beta = b alpha,  delta = (b d nu + 1) alpha,  N = b nu,

and (A, B, D, V) = (1/alpha, 1/b, 1/d, 1/nu).

Run:  python3 docs/derivation_check.py
"""

import sympy as sp

A, B, D, V, n = sp.symbols("A B D V n", positive=True)

alpha, b, d, nu = 1 / A, 1 / B, 1 / D, 1 / V
beta = b * alpha
delta = (b * d * nu + 1) * alpha
N = b * nu
s = alpha + beta


def direct_b(k):
    t1 = ((k + s + 1) * (k + alpha + 1) * (k + beta + delta + 1) * (N - k)
          / ((2 * k + s + 1) * (2 * k + s + 2)))
    t2 = (k * (k + beta) * (delta - alpha - k) * (k + N + s + 1)
          / ((2 * k + s) * (2 * k + s + 1)))
    return t1 + t2


def direct_c(k):
    return (k * (k + alpha) * (k + beta) * (k + s) * (k + beta + delta)
            * (delta - alpha - k) * (k + N + s + 1) * (N + 1 - k)
            / ((2 * k + s - 1) * (2 * k + s) ** 2 * (2 * k + s + 1)))


rho_sq = s ** 3 / (alpha * beta * (beta + delta) * (delta - alpha) * (N + s) * N)

# uniform forms
w1 = A * B / (1 + B)
dv = D * V
bdv = B * dv
w2 = A * bdv / (1 + dv + bdv)
w3 = A * bdv
w4 = A * B * V / (A + V + B * V)
w5 = B * V

uniform_c = (n * (1 + n * A) * (1 + n * A * B) * (1 + n * w1) * (1 + n * w2)
             * (1 - n * w3) * (1 + (n + 1) * w4) * (1 + (1 - n) * w5)
             / ((1 + (2 * n - 1) * w1) * (1 + 2 * n * w1) ** 2 * (1 + (2 * n + 1) * w1)))

poly = (A * (B - 1) * (2 + dv + bdv)
        + V * (1 + bdv) * (B - 1) * (B + 1 + 2 * A * B)
        + B * D * V ** 2 * (B + 1 + 2 * A * B)
        * (2 + (2 * n + 1) * A * (1 + B) + 2 * n * (n + 1) * A ** 2 * B))
uniform_b = (-n * (1 + (n + 1) * w1) * poly
             / ((1 + 2 * w1) * (1 + 2 * n * w1) * (1 + (2 * n + 2) * w1)
                * sp.sqrt((1 + B) * (1 + dv + bdv) * (A + V + B * V))))

print("checking C_n identity ...", flush=True)
diff_c = sp.simplify(sp.together(rho_sq * direct_c(n) - uniform_c))
assert diff_c == 0, diff_c
print("  C_n: identical")

print("checking B_n identity (squares plus sign) ...", flush=True)
direct_bn = direct_b(n) - direct_b(0)
diff_b2 = sp.simplify(sp.together(rho_sq * direct_bn ** 2 - uniform_b ** 2))
assert diff_b2 == 0, diff_b2
# squares agree; fix the sign on a sample interior point
subs = {A: sp.Rational(1, 10), B: sp.Rational(1, 5), D: sp.Rational(1, 4),
        V: sp.Rational(2, 5), n: 3}
lhs = (sp.sqrt(rho_sq) * direct_bn).subs(subs)
rhs = uniform_b.subs(subs)
assert sp.simplify(lhs - rhs) == 0, (lhs, rhs)
print("  B_n: identical")
print("all identities verified")
