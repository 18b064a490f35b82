"""Build a small betweenness instance, solve it two ways, and look at its symmetry class.

Run:  python3 demos/01_quickstart.py
"""
from permcsp import (
    LinearOrdering,
    LoInstance,
    PiSet,
    canonical_pi_class,
    count_satisfied,
    deviation,
    max_dev_bruteforce,
    max_dev_dp,
    parse,
    serialize,
)

# "v lies between u and w" for four triples over five seats at a table
btw = PiSet.from_words(["123", "321"])
inst = LoInstance.from_names(
    [("ann", "bob", "cy"), ("bob", "cy", "dee"), ("cy", "ann", "eve"), ("dee", "eve", "bob")],
    pi=btw,
    k=1,
)
print(f"{inst.n} variables, {inst.m} constraints, average {inst.average}")

alpha = LinearOrdering.from_names(inst.vars, ["ann", "bob", "cy", "dee", "eve"])
print("alphabetical order satisfies", count_satisfied(inst, alpha),
      "constraints, deviation", deviation(inst, alpha))

brute = max_dev_bruteforce(inst)
dp = max_dev_dp(inst)
assert brute.deviation == dp.deviation
print("best deviation", dp.deviation, "via", " < ".join(dp.witness.names(inst.vars)))
print("above average by k=1?", dp.deviation >= inst.k)

# the same instance as text, and back
text = serialize(inst, ["four betweenness triples"])
print(text)
assert parse(text) == inst

# reversal and renaming of positions leave the problem unchanged up to class
for words in (["123", "321"], ["213", "312"], ["132", "231"]):
    print(",".join(words), "is in class", canonical_pi_class(PiSet.from_words(words)))
