"""The named intersecting families and the numbers that describe them.

Run: python3 demos/02_extremal_constructions.py
"""
from ifam import binomial, family_stats
from ifam.bounds import size_C3
from ifam.zoo import build_C3, build_D37, build_fano, build_Hu, build_Ji, build_T2, max_degree

n, k = 10, 4
print(f"n={n}, k={k}; the star has C(n-1,k-1) = {binomial(n - 1, k - 1)} sets\n")

for u in range(2, k + 1):
    F = build_Hu(n, k, u)
    s = family_stats(F)
    print(f"H_{u}: size {s.size}, diversity {s.diversity}")

print()
for i in range(1, k + 1):
    J = build_Ji(n, k, i)
    print(f"J_{i}: size {len(J)}, diversity {family_stats(J).diversity}")

C3 = build_C3(n, k)
s = family_stats(C3)
print(f"\nC_3: size {s.size} (formula {size_C3(n, k)}), covering number {s.covering_number}")

for name, F in [("T_2(3)", build_T2(3)), ("Fano plane", build_fano())]:
    s = family_stats(F)
    print(f"{name}: tau={s.covering_number}, tau*={s.fractional_covering}")

# Sets through a Fano line: no element lies in half of them once n >= 8k.
D = build_D37(32, 4)
delta, elem = max_degree(D)
print(f"\nD(32,4): {len(D)} sets, top degree {delta} at element {elem}, ratio {delta}/{len(D)}")
