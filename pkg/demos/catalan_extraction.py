"""Coefficient extraction for an algebraic series over Q.

The Catalan generating function satisfies the fixed-point equation
f = X + f^2.  The extraction formula evaluates

    f_n = sum_{m >= 1} [X^n Y^(m-1)] (1 - P'_Y) P^m,    P = X + Y^2,

and the sum is finite: terms vanish once m > 2n - 1.  This script prints
the coefficients, shows the per-m partial sums stabilizing, and cross
checks against the substitution oracle f <- P(X, f).
"""

from algseries import (QQ, FixedPointProblem, fixed_point_coefficients,
                       fs_coefficients, fs_partial_sum, parse_poly)

problem = FixedPointProblem(parse_poly("X+Y^2", QQ))

N = 12
series = fs_coefficients(problem, N)
print("extraction formula, f_1..f_12:")
print(" ", [series[n] for n in range(1, N + 1)])

oracle = fixed_point_coefficients(problem, N)
print("fixed-point oracle agrees:", series == oracle)

print("\npartial sums for f_4 (stabilize at m = 2*4 - 1 = 7):")
for m_max in range(1, 10):
    value = fs_partial_sum(problem, 4, m_max)
    print(f"  m <= {m_max}: {value!r}")

# the same machinery is field-generic: reduce the equation mod 2
from algseries import GF

f2 = fs_coefficients(FixedPointProblem(parse_poly("X+Y^2", GF(2))), N)
print("\nsame equation over F_2 (Catalan parity, nonzero iff n = 2^k):")
print(" ", [f2[n] for n in range(1, N + 1)])
