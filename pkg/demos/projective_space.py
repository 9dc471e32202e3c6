"""Frobenius pushforwards of line bundles on projective space.

F_*(O(l)) decomposes as a sum of twists O(-i) with multiplicity alpha(i, l),
the number of monomials of degree l + i*p in n+1 variables with every
exponent below p.  Iterating F_* multiplies ranks by p^n, and the
pushforward of O carries every twist 0..-n exactly when p^e > n.
"""

from frobcalc import alpha, pn_pushforward

print("alpha table for the projective plane (n = 2), p = 3, l = 0:")
for i in range(0, 3):
    print(f"  alpha({i}, 0) = {alpha(2, 3, i, 0)}")
print(f"  total rank {sum(alpha(2, 3, i, 0) for i in range(4))} = 3^2")

print()
print("generation threshold: all twists 0..-n needed")
for n in (1, 2, 3, 4):
    for p in (2, 3, 5):
        for e in (1, 2):
            report = pn_pushforward(n, p, e)
            flag = "generates" if report.generates else "misses a twist"
            print(f"  P^{n}, p^e = {p}^{e} = {p**e}: {flag}")
    print()

print("one decomposition in full (P^2, p = 2, e = 2):")
report = pn_pushforward(2, 2, 2)
for twist, mult in sorted(report.twists.items(), reverse=True):
    print(f"  O({twist}) x {mult}")
print(f"  total rank {report.total_rank()} = 2^(2*2)")
