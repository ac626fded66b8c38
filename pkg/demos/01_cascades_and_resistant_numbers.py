"""Cascade forms and the resistant numbers where the diversity bound drops.

Run: python3 demos/01_cascades_and_resistant_numbers.py
"""
from ifam import bound_full1, cascade, enumerate_resistant, resistant_descriptor
from ifam.oracles import oracle_diversity_table, table_jumps

# Every m has exactly one greedy r-cascade form m = C(a_r, r) + C(a_{r-1}, r-1) + ...
for m, r in [(5, 3), (10, 3), (123, 4)]:
    form = cascade(m, r)
    print(f"{m} as a {r}-cascade: {form.as_list()}  (re-sums to {form.value})")

# For n = 12, k = 5 the diversity values gamma <= C(8, 2) = 28 split into windows.
# The right end of each window is a resistant number.
n, k = 12, 5
chain = enumerate_resistant(n, k)
print(f"\nresistant numbers for n={n}, k={k}: {chain}")
for g in chain:
    d = resistant_descriptor(n, k, g)
    print(f"  gamma={g:>2}  stop elements {d.a_side}  B-side set {d.b_side}")

# The bound is constant on each window and drops right after each resistant number.
print("\ngamma  bound  oracle")
table = dict(oracle_diversity_table(n, k))
for g in range(1, 29):
    print(f"{g:>5}  {bound_full1(n, k, g).bound:>5}  {table[g]:>6}")
print("jumps seen by the oracle:", table_jumps(list(table.items())))
