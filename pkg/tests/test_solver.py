from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from permcsp.core import (
    PI0,
    PI_BTW,
    LimitExceededError,
    LinearOrdering,
    LoInstance,
    MixedInstance,
    PiSet,
    count_satisfied,
    mixed_satisfied,
)
from permcsp.hardgen import RandSpec, cycles_to_lo_instance, gen_random, generate_g
from permcsp.solver import (
    SolverLimits,
    decide_above_average,
    lex_permutations,
    max_dev_bruteforce,
    max_dev_dp,
    max_sat_mixed,
    placement_gain,
)

from .strategies import lo_instances, mixed_instances


def single():
    return LoInstance.from_names([("u", "v", "w")])


def test_lex_permutations_order():
    got = [tuple(r) for r in lex_permutations(4)]
    assert got == list(permutations(range(4)))
    assert not lex_permutations(4).flags.writeable


def test_bruteforce_examples():
    rep = max_dev_bruteforce(single())
    assert rep.deviation == Fraction(5, 6)
    assert rep.witness.names(single().vars) == ["u", "v", "w"]
    two = LoInstance.from_names([("a", "b", "c"), ("c", "b", "a")])
    assert max_dev_bruteforce(two).deviation == Fraction(2, 3)
    assert max_dev_bruteforce(cycles_to_lo_instance(generate_g(1))).deviation == 0


def test_mixed_examples():
    opposite = MixedInstance.from_names([("u", "v"), ("v", "u")])
    assert max_sat_mixed(opposite)[0] == 1
    btw = MixedInstance.from_names([], [("v", "u", "w")])
    sat, witness = max_sat_mixed(btw)
    assert sat == 1 and mixed_satisfied(btw, witness) == (0, 1)
    decomposed = MixedInstance.from_names([("u", "v"), ("v", "w")], [("v", "u", "w")])
    sat, witness = max_sat_mixed(decomposed)
    assert sat == 3 and witness.names(decomposed.vars) == ["u", "v", "w"]


def test_dp_examples():
    rep = max_dev_dp(single())
    assert rep.satisfied == 1 and rep.deviation == Fraction(5, 6)
    empty_pi = LoInstance.from_names([("u", "v", "w")], PiSet(0))
    assert max_dev_dp(empty_pi).deviation == 0
    inst = gen_random(RandSpec(7, 10, PI_BTW, seed=1))
    assert max_dev_dp(inst).deviation == max_dev_bruteforce(inst).deviation


def test_decide_examples():
    assert decide_above_average(single().with_(k=0))
    assert not decide_above_average(single().with_(k=1))
    assert not decide_above_average(cycles_to_lo_instance(generate_g(1), k=1))


def test_limits():
    big = gen_random(RandSpec(11, 3, seed=0))
    with pytest.raises(LimitExceededError):
        max_dev_bruteforce(big)
    with pytest.raises(LimitExceededError):
        max_dev_dp(big, SolverLimits(max_dp_n=10))
    with pytest.raises(ValueError):
        SolverLimits(max_brute_n=2)


@given(lo_instances(max_n=6, max_m=10))
def test_bruteforce_matches_dp(inst):
    a, b = max_dev_bruteforce(inst), max_dev_dp(inst)
    assert (a.satisfied, a.deviation) == (b.satisfied, b.deviation)
    assert a.deviation == a.satisfied - a.average
    # the reported witnesses are optimal
    if not inst.pi.is_trivial:
        assert count_satisfied(inst, a.witness) == a.satisfied
        assert count_satisfied(inst, b.witness) == b.satisfied


@given(lo_instances(max_n=6, max_m=10, pi=PI0))
def test_witnesses_are_lex_smallest(inst):
    best = max(count_satisfied(inst, LinearOrdering(p)) for p in permutations(range(inst.n)))
    first = next(p for p in permutations(range(inst.n))
                 if count_satisfied(inst, LinearOrdering(p)) == best)
    assert max_dev_bruteforce(inst).witness.positions == first
    assert max_dev_dp(inst).witness.positions == first


@given(mixed_instances(max_n=6))
def test_mixed_dp_matches_enumeration(mixed):
    best = max(sum(mixed_satisfied(mixed, LinearOrdering(p)))
               for p in permutations(range(mixed.n)))
    sat, witness = max_sat_mixed(mixed)
    assert sat == best == sum(mixed_satisfied(mixed, witness))


@given(mixed_instances(max_n=5), st.data())
def test_placement_gain_depends_on_set_only(mixed, data):
    x = data.draw(st.integers(0, mixed.n - 1))
    others = [v for v in range(mixed.n) if v != x]
    placed = data.draw(st.lists(st.sampled_from(others), unique=True))
    # any ordering of `placed` then x: constraints decided at x do not care about the order
    for perm in list(permutations(placed))[:6]:
        rest = [v for v in others if v not in placed]
        alpha = LinearOrdering(tuple(perm) + (x,) + tuple(rest))
        decided = 0
        for a in mixed.arcs:
            if a.head == x and a.tail in placed:
                decided += a.mult
        for b in mixed.btws:
            if b.middle == x:
                lo, hi = sorted(alpha.rank(o) for o in b.outer)
                decided += b.mult * (lo < alpha.rank(x) < hi)
        assert placement_gain(mixed, set(placed), x) == decided


def test_threads_give_identical_results():
    rng = np.random.default_rng(5)
    for _ in range(5):
        inst = gen_random(RandSpec(7, 9, PiSet(int(rng.integers(1, 63))),
                                   seed=int(rng.integers(1000))))
        one = max_dev_bruteforce(inst)
        four = max_dev_bruteforce(inst, threads=4)
        assert one == four
