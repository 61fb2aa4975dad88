"""Solving w - M sigma(w) = v over truncated power series.

sigma raises coefficients to the q-th power. In the default mode it fixes
t; in the Frobenius mode it also sends t to t^q.
"""

import random

from newtonstrata import lang

F = lang.field(2, 2)  # F_4
N, q = 6, 2
M = [[lang.parse_series("t", F, N), lang.parse_series("1", F, N)],
     [lang.parse_series("0", F, N), lang.parse_series("t^2", F, N)]]
v = [lang.parse_series("1 + t", F, N), lang.parse_series("t^3", F, N)]

for mode in (lang.FIX_T, lang.FROBENIUS):
    w = lang.solve_lang(M, v, N, q, mode)
    res = lang.residual(M, v, w, q, mode)
    print(mode, [lang.format_series(s) for s in w],
          "residual zero:", all(s.is_zero() for s in res))

# Random instances with v = 0 mod t: the solution is also 0 mod t.
rng = random.Random(7)
ok = 0
for _ in range(50):
    Mr, vr, _ = lang.random_instance(rng, F, 3, 8, q, lang.FIX_T, zero_mod_t=True)
    w = lang.solve_lang(Mr, vr, 8, q)
    ok += all(s.coeffs[0] == 0 for s in w)
print("w = 0 mod t in %d of 50 random cases" % ok)
