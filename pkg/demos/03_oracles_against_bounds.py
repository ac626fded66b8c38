"""Brute-force oracles checking the bounds they are meant to certify.

Run: python3 demos/03_oracles_against_bounds.py
"""
from ifam import binomial, bound_full1, bound_hk, oracle_lexpair, oracle_maximal_intersecting
from ifam.bounds import lemmin_f
from ifam.core import GroundSet
from ifam.oracles import oracle_lemmin
from ifam.zoo import build_T2, build_T2prime, is_isomorphic

# Lex prefix pairs over [2, n]: the best |A| + |B| with |B| >= gamma is the bound.
n, k = 12, 4
top = binomial(n - 4, k - 3)
print(f"lex pairs, n={n}, k={k}")
for g in range(1, top + 1):
    orc = oracle_lexpair(n, k - 1, k, g, ground=GroundSet(2, n), max_b=top)
    print(f"  gamma={g}: oracle {orc.objective}, bound {bound_full1(n, k, g).bound}")

# Whole intersecting families at k = 3 by maximal-clique search.
print("\nmaximal intersecting 3-families")
for n in (7, 8, 9):
    star = oracle_maximal_intersecting(n, 3).objective
    hm = oracle_maximal_intersecting(n, 3, "diversity>=1").objective
    d2 = oracle_maximal_intersecting(n, 3, "diversity>=2")
    print(f"  n={n}: largest {star}, diversity>=1 {hm}, diversity>=2 {d2.objective} "
          f"(the k>=4 formula would give {bound_hk(n, 3).bound})")
tri = all(len(set(x) & {1, 2, 3}) >= 2 for x in d2.witnesses[0])
print(f"  at n=9 the optimum is the family of 3-sets meeting {{1,2,3}} twice: {tri}")

# Minimal tau = 2 families and their best cross-intersecting partners.
m, s, kk = 10, 4, 4
r = oracle_lemmin(m, s, kk)
r3 = oracle_lemmin(m, s, kk, require_intersecting=True)
print(f"\nminimal tau=2 families, m={m}, s={s}, k={kk}")
print(f"  optimum {r.objective} = f(2)+2 = {lemmin_f(m, s, kk, 2) + 2}, "
      f"witness is T_2'(4): {is_isomorphic(r.witnesses[0], build_T2prime(s, m))}")
print(f"  intersecting optimum {r3.objective} = f(3)+3 = {lemmin_f(m, s, kk, 3) + 3}, "
      f"witness is T_2(4): {is_isomorphic(r3.witnesses[0], build_T2(s, m))}")
