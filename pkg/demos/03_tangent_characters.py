"""Characters of the pair bundle and tangent weights.

Over a pair of fixed points the bundle of framed homomorphisms between the
flags decomposes into torus weight lines; its character is a signed sum of
geometric blocks in the loop weight x twisted by differences a_j - a_{j'}.
On the diagonal the bundle is the tangent space, which is what every
localization denominator is built from.  Off the diagonal the character is
still effective (it is a genuine bundle), and shifting the x-grading by m
differs from twisting the second flag by m only by a defect character that
does not depend on the pair at all.
"""

from quasiflags import (Tableau, degree_vectors, enumerate_fixed_points,
                        geom_block, pair_character, shift_defect,
                        tangent_weights)


def show_weight(w):
    parts = [f"{'+' if c > 0 else '-'}a{i}" for i, c in
             enumerate(w.a_coeffs, start=1) for _ in range(abs(c))]
    if w.x_coeff:
        parts.append(f"{w.x_coeff:+d}x")
    return "".join(parts) or "0"


print("== geometric blocks ==")
for count in (3, 0, -2):
    print(f"block({count}):", geom_block(count).as_sorted_triples())

print()
print("== diagonal characters are tangent spaces ==")
for delta in (1, 2):
    d = Tableau([(delta,)])
    weights = tangent_weights(d, 2)
    print(f"n=2, degree {delta}:", ", ".join(show_weight(w) for w in weights))

d3 = Tableau([(1,), (1, 0)])
print("n=3, tableau [1,1,0]:",
      ", ".join(show_weight(w) for w in tangent_weights(d3, 3)))
print("(note the x-free weight: it vanishes when a_1 = a_2, the non-generic locus)")

print()
print("== off-diagonal rank bookkeeping ==")
tabs = [t for g in degree_vectors(1, 3) for t in enumerate_fixed_points(2, g)]
for d in tabs[:3]:
    for dp in tabs[:3]:
        char = pair_character(d, dp, 2)
        print(f"deg {sum(d.degree())} vs {sum(dp.degree())}: "
              f"rank {char.total_multiplicity()} "
              f"(= {sum(d.degree())} + {sum(dp.degree())}), terms "
              f"{[(show_weight(w), m) for (w, m) in sorted(char.terms.items())][:4]}")

print()
print("== the x-shift defect ignores the pair ==")
pairs = [(Tableau.zero(2), Tableau.zero(2)),
         (Tableau([(1,)]), Tableau([(2,)])),
         (Tableau([(3,)]), Tableau([(1,)]))]
for m in (1, 2):
    defects = {tuple(shift_defect(d, dp, m, 2).as_sorted_triples())
               for d, dp in pairs}
    print(f"m={m}: {len(defects)} distinct defect(s) across {len(pairs)} pairs ->",
          list(defects)[0])
