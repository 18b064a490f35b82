"""Exact moments of the random-level estimator Z.

Each variable gets an independent uniform level in {0,1,2,3}; a random
ordering compatible with the levels is then taken.  Z is the conditional
expected deviation, computed here exactly with fractions.

Run:  python3 demos/03_moments.py
"""
from collections import Counter
from itertools import product

from permcsp import moments as mom
from permcsp.core import MixedInstance
from permcsp.decompose import decompose_lo, reduce_mixed, to_linear_ordering
from permcsp.hardgen import RandSpec, gen_random

# 64 level patterns for one ordering triple (u < v < w wanted)
hist = Counter(mom.z_value(*lv) for lv in product(range(4), repeat=3))
print("Z over the 64 level patterns:", {str(z): c for z, c in sorted(hist.items())})
print("  e.g. levels (0,1,2):", mom.z_value(0, 1, 2), " levels (2,1,0):", mom.z_value(2, 1, 0))

single = MixedInstance.from_names(arcs=[("u", "v")])
print("\none arc:        E[X^2] =", mom.second_moment(single, "x"))
single = MixedInstance.from_names(btws=[("v", "u", "w")])
print("one btw:        E[Y^2] =", mom.second_moment(single, "y"))

inst = gen_random(RandSpec(5, 8, seed=3))
lo = to_linear_ordering(inst)
pair = mom.second_moment(lo)
full = mom.full_enumeration_moments(lo, "z")
print(f"\nrandom n=5 instance: pairwise E[Z^2] = {pair}, full enumeration = {full[2]}")
e4, bound = mom.fourth_moment_check(lo)
print(f"E[Z^4] = {e4} <= 9^6 E[Z^2]^2 = {float(bound):.1f}")

reduced, _, _ = reduce_mixed(decompose_lo(lo))
print(f"reduced: r={reduced.r} s={reduced.s}, E[Z^2]={mom.second_moment(reduced, 'z')}"
      f" >= 11(r+s)/3072 is {mom.check_lower_bound(reduced)}")

poly = mom.poly_z_expansion()
print(f"\nZ as a polynomial in six +-1 bits: {len(poly)} monomials,"
      f" degree {max(sum(e) for e in poly)}")
