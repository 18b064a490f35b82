"""The recursive digraphs G_i: zero deviation, yet nothing can be dropped.

K_i turns every directed 3-cycle of G_i into one ordering triple.  The
instance sits exactly at the average, but every proper nonempty subset of
its constraints beats the average, so no rule that deletes average-valued
groups can shrink it.

Run:  python3 demos/04_hard_family.py
"""
from permcsp import max_dev_dp
from permcsp.hardgen import check_subset_asymmetry, cycles_to_lo_instance, generate_g

for i in range(5):
    fam = generate_g(i)
    print(f"G_{i}: {len(fam.vars):3d} vertices, {len(fam.cycles):3d} cycles")

fam = generate_g(1)
k1 = cycles_to_lo_instance(fam)
print("\nK_1 max deviation:", max_dev_dp(k1).deviation)

closed = sum(check_subset_asymmetry(fam, [j for j in range(8) if mask >> j & 1])
             for mask in range(1, 2**8 - 1))
print(f"cycle subsets of K_1 with positive deviation: {closed} of 254")

fam3 = generate_g(3)
print(f"K_3 ({len(fam3.vars)} variables) max deviation:",
      max_dev_dp(cycles_to_lo_instance(fam3)).deviation)
