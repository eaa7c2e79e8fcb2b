"""Torus-fixed quasiflags and their census.

A fixed flag splits into twisted line subsheaves, so it is a triangular array
d_j^i of twist degrees with d_j^i >= d_{j+1}^i down each column and row sums
equal to the degree vector.  The number of arrays of a given degree equals
the number of ways to write that degree as a multiset of positive roots (the
weight multiplicity of a generic highest-weight module), which this script
checks by brute enumeration on both sides.
"""

from quasiflags import (Tableau, degree_vectors, embed_degree,
                        enumerate_fixed_points, kostant_count, pairing,
                        rho_vee, total_degree)

print("== enumerating fixed points ==")
for gamma in [(1, 1), (0, 1), (2, 1)]:
    points = enumerate_fixed_points(3, gamma)
    print(f"n=3, degree {gamma}: {len(points)} fixed points")
    for p in points:
        print("   rows:", [list(r) for r in p.rows])

print()
print("note: degree (0,1) admits only one array; the candidate with d_2^1 = 1")
print("would violate the column inequality against d_1^1 = 0.")

print()
print("== census against the root-partition count ==")
for n in (2, 3, 4):
    agreements = 0
    for gamma in degree_vectors(n - 1, 5):
        assert len(enumerate_fixed_points(n, gamma)) == kostant_count(gamma, n)
        agreements += 1
    print(f"n={n}: counts agree on all {agreements} degrees with |gamma| <= 5")

print()
print("== dimension bookkeeping ==")
for gamma in [(1, 0, 0), (1, 1, 0), (2, 1, 3)]:
    dim = 2 * total_degree(gamma)
    via_pairing = 2 * pairing(rho_vee(4), [-c for c in embed_degree(gamma, 4)])
    print(f"degree {gamma}: component dimension {dim} == 2<rho_vee, -gamma> = {via_pairing}")

print()
print("== twisting the whole flag ==")
d = Tableau([(2,), (2, 1), (1, 1, 0)])
print("before:", d.as_flat_list(), "degree", d.degree())
shifted = d.shift(2)
print("after shift by 2:", shifted.as_flat_list(), "degree", shifted.degree())
print("row j gains j*m:", tuple(b - a for a, b in zip(d.degree(), shifted.degree())))
