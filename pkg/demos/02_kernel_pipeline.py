"""Decompose a linear-ordering instance, reduce it, and kernelize it.

The decomposition turns every triple into arcs and betweenness constraints
while doubling the parameter.  The reduction rules then drop opposite arc
pairs and complete betweenness triples, which contribute exactly the average.

Run:  python3 demos/02_kernel_pipeline.py
"""
from fractions import Fraction

from permcsp import KernelConfig, LoInstance, kernelize_lo, max_dev_dp
from permcsp.decompose import decompose_lo, reduce_mixed, to_linear_ordering
from permcsp.hardgen import RandSpec, gen_random
from permcsp.solver import max_dev_mixed

inst = gen_random(RandSpec(6, 9, seed=7, k=1))
dev = max_dev_dp(inst).deviation
print(f"random instance: n={inst.n} m={inst.m} k={inst.k} max deviation {dev}")

mixed = decompose_lo(to_linear_ordering(inst))
print(f"decomposed: r={mixed.r} arcs, s={mixed.s} betweenness, k={mixed.k}")
print("mixed deviation is twice the original:", max_dev_mixed(mixed)[0] == 2 * dev)

reduced, b, t = reduce_mixed(mixed)
print(f"reduction rules dropped {b} opposite arc pairs and {t} complete triples;"
      f" r={reduced.r} s={reduced.s} remain")

res = kernelize_lo(inst)
print("kernelize with the default constant:", res.verdict.value)
if res.kernel is not None:
    print(f"  kernel: n={res.kernel.n} m={res.kernel.m} k={res.kernel.k}")

# With the threshold constant lowered to 1 the rule answers YES as soon as
# r+s >= k^2.  A single ordering triple already shows that this is unsafe.
one = LoInstance.from_names([("a", "b", "c")], k=1)
low = kernelize_lo(one, KernelConfig(Fraction(1), allow_override=True))
print("\none triple, k=1: max deviation", max_dev_dp(one).deviation,
      "but c=1 answers", low.verdict.value)
