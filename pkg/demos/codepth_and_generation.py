"""Codepth from Koszul homology, and the exponent it buys.

codepth R = (number of variables) - depth R is the top homological degree
where the Koszul complex on the variables has homology.  Once p^e exceeds
it, the e-th pushforward of anything with full support generates everything
bounded.  The graded homology ranks double as the Betti table of S/I, which
the brute-force resolution recomputes independently.
"""

from frobcalc import (
    MonomialIdeal,
    PolyRing,
    betti_power_formula,
    brute_betti,
    codepth,
    depth_from_codepth,
    generation_exponent,
    koszul_homology,
)

ring = PolyRing(2, ["x", "y"])
examples = {
    "0": [],
    "(xy)": [(1, 1)],
    "(x^2, y^3)": [(2, 0), (0, 3)],
    "(x^2, xy, y^2)": [(2, 0), (1, 1), (0, 2)],
    "(x^4, x^2y^2, y^4)": [(4, 0), (2, 2), (0, 4)],
}
print("codepth / depth / generation exponent over F_2 in two variables:")
for label, gens in examples.items():
    I = MonomialIdeal(ring, gens)
    c = codepth(I)
    print(
        f"  {label:>20}: codepth {c}, depth {depth_from_codepth(I)}, "
        f"e = {generation_exponent(I)} (2^e > {c})"
    )

print()
print("graded Koszul homology of R = S/(x^2, xy, y^2):")
table = koszul_homology(MonomialIdeal(ring, [(2, 0), (1, 1), (0, 2)]), 6)
for (i, d), r in sorted(table.entries.items()):
    print(f"  H_{i} in degree {d}: rank {r}")

print()
print("the same numbers from the minimal free resolution:")
print(" ", brute_betti(MonomialIdeal(ring, [(2, 0), (1, 1), (0, 2)])))

print()
print("closed form for powers of the maximal ideal, three variables:")
for j in (1, 2, 3, 4):
    row = [betti_power_formula(3, j, i) for i in range(4)]
    print(f"  m^{j}: {row}")
