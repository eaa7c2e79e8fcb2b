"""Equivariant integrals by the fixed-point formula.

The integral of the Chern polynomial of the tangent bundle over a component
is the sum over its fixed points of prod (w + m x)/w, and the equivariant
volume is the same sum with the numerators dropped.  Both are computed
exactly at rational parameter points; the values depend only on a/x and m.
"""

from fractions import Fraction

from quasiflags import (NonGenericParameter, ParameterPoint,
                        chern_series_coefficient, degree_vectors, kostant_count,
                        total_degree, volume_coefficient)

pt = ParameterPoint((Fraction(7, 3), Fraction(-7, 3)), Fraction(1), Fraction(3, 2))
v = (pt.a[0] - pt.a[1]) / pt.x
print(f"rank two at v = a1 - a2 = {v}, coupling m = {pt.m}")

print()
print("== the closed product formula at rank two ==")
for d in range(5):
    value = chern_series_coefficient(2, (d,), pt)
    closed = Fraction(1)
    for k in range(1, d + 1):
        closed *= (k + pt.m) * (k + pt.m - v) / (k * (k - v))
    print(f"  degree {d}: {value}  (product formula: {closed})")

print()
print("== zero coupling counts fixed points ==")
pt0 = pt.with_m(0)
for gamma in [(0,), (2,), (5,)]:
    print(f"  degree {gamma}: series {chern_series_coefficient(2, gamma, pt0)}, "
          f"census {kostant_count(gamma, 2)}")

print()
print("== gauge invariance and volume scaling ==")
pt3 = ParameterPoint((Fraction(6), Fraction(1), Fraction(-7)), Fraction(1), Fraction(5, 4))
scaled = pt3.scaled(Fraction(-3))
gamma = (1, 1)
print("chern coefficient, original point:  ", chern_series_coefficient(3, gamma, pt3))
print("chern coefficient, (a,x) -> -3(a,x):", chern_series_coefficient(3, gamma, scaled))
vol = volume_coefficient(3, gamma, pt3)
print("volume original:", vol)
print("volume scaled:  ", volume_coefficient(3, gamma, scaled),
      "== t^-dim * original:", vol * Fraction(-3) ** (-2 * total_degree(gamma)))

print()
print("== strong coupling approaches the volume ==")
for m in (10, 1000, 100_000):
    big = chern_series_coefficient(3, gamma, pt3.with_m(m))
    ratio = big / Fraction(m) ** (2 * total_degree(gamma)) / vol
    print(f"  m={m:>6}: (coefficient / m^dim) / volume = {float(ratio):.10f}")

print()
print("== non-generic points are reported, not mangled ==")
bad = ParameterPoint((Fraction(1), Fraction(-1)), Fraction(1), Fraction(1))
try:
    chern_series_coefficient(2, (2,), bad)
except NonGenericParameter as exc:
    print("caught:", exc)
