"""Cross-intersecting (a, b) pairs and the Frankl-Tokushige comparison.

Run: python3 demos/04_cross_intersecting_pairs.py
"""
from fractions import Fraction

from ifam import bound_ab, bound_ft
from ifam.bounds import ab_resistant_pairs
from ifam.core import GroundSet
from ifam.oracles import lexpair_profile

n, a, b = 9, 4, 4
print(f"(a,b)-resistant chain for n={n}, a={a}, b={b}:")
for gl, pair in ab_resistant_pairs(n, a, b):
    print(f"  |B| up to {gl}: S={pair.S}, T={pair.T}")

# Each size of B gets the smallest of the applicable bounds; the oracle never exceeds it.
prof = lexpair_profile(GroundSet(1, n), a, b)
print("\n|B|  bound  oracle  branch")
for x in (1, 5, 20, 35, 50, 56, 60):
    rep = bound_ab(n, a, b, x)
    print(f"{x:>3}  {rep.bound:>5}  {prof[x] + x:>6}  {rep.note}")

# Frankl-Tokushige bounds |F| + |G| for |F| between C(n-alpha, a-alpha) and C(n-1, a-1).
print("\nFrankl-Tokushige at n=12, a=3, b=4")
for alpha in (1, 2, Fraction(5, 2), 3):
    print(f"  alpha={alpha}: {bound_ft(12, 3, 4, alpha).bound}")
