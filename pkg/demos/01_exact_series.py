"""Exact scalars and truncated series on the negative root cone.

Everything downstream rests on two small pieces of machinery: exact rational
arithmetic (never a float anywhere) and sparse series indexed by degree
vectors (d_1, ..., d_{n-1}), standing for points -sum d_i alpha_i of the
cone spanned by the negated simple roots.  This script walks through both.
"""

from fractions import Fraction

from quasiflags import (Series, degree_vectors, denominator_power_series,
                        generalized_binomial, parse_rational, series_mul)

print("== rational literals and generalized binomials ==")
m = parse_rational("5/2")
print(f"parsed 5/2 -> {m!r}")
for k in range(5):
    print(f"  coefficient of t^{k} in (1-t)^-(m+1):", generalized_binomial(m, k))

print()
print("== sparse series and the Cauchy product ==")
# rank 1: the geometric series telescopes against (1 - e^{-alpha})
geometric = Series(1, 8, {(d,): Fraction(1) for d in range(9)})
factor = Series(1, 8, {(0,): 1, (1,): -1})
print("geometric * (1 - e^-alpha) =", series_mul(geometric, factor, 8))

print()
print("== inverse powers of the Weyl-denominator product ==")
# prod over positive roots of (1 - e^{-alpha})^{-(m+1)} for sl_3:
weyl = denominator_power_series(3, m + 1, 3)
for gamma, coeff in weyl.terms():
    print(f"  e^-({gamma[0]} a1 + {gamma[1]} a2):", coeff)

# the (1,1) coefficient decomposes over alpha_1, alpha_2 and alpha_1+alpha_2:
direct = generalized_binomial(m, 1) ** 2 + generalized_binomial(m, 1)
print("cross-term check (m+1)^2 + (m+1):", direct,
      "==", weyl.coefficient((1, 1)))

print()
print("== exponent additivity ==")
e1, e2 = Fraction(3, 4), Fraction(-7, 5)
lhs = denominator_power_series(3, e1 + e2, 3)
rhs = series_mul(denominator_power_series(3, e1, 3),
                 denominator_power_series(3, e2, 3), 3)
print("denominator(e1+e2) == denominator(e1) * denominator(e2):", lhs == rhs)

print()
print("== at exponent 1 the coefficients count root partitions ==")
ones = denominator_power_series(3, 1, 4)
for gamma in degree_vectors(2, 3):
    print(f"  partitions of {gamma}:", ones.coefficient(gamma))
