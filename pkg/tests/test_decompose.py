from collections import Counter
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permcsp.core import (
    PI0,
    PI_BTW,
    PI_CLASSES,
    Arc,
    BtwConstraint,
    LinearOrdering,
    LoInstance,
    MixedInstance,
    PiSet,
    PreconditionError,
    TrivialPiError,
    VarTable,
    count_satisfied,
    mixed_deviation,
    mixed_satisfied,
)
from permcsp.decompose import (
    DEFAULT_C,
    OMEGA,
    KernelConfig,
    KernelResult,
    KernelStats,
    Verdict,
    decompose_lo,
    decompose_parts,
    kernelize_lo,
    recompose_kernel,
    reduce_arcs,
    reduce_betweenness,
    reduce_mixed,
    to_linear_ordering,
)
from permcsp.hardgen import RandSpec, cycles_to_lo_instance, gen_random, generate_g
from permcsp.solver import decide_above_average, max_dev_dp, max_dev_mixed

from .strategies import lo_instances, mixed_instances

UVW = VarTable(("u", "v", "w"))


def orderings(n):
    return [LinearOrdering(p) for p in permutations(range(n))]


def test_to_linear_ordering_examples():
    b = LoInstance.from_names([("u", "v", "w")], PI_BTW)
    lo = to_linear_ordering(b)
    assert lo.pi == PI0 and lo.named() == [("u", "v", "w", 1), ("w", "v", "u", 1)]
    single = LoInstance.from_names([("u", "v", "w")])
    assert to_linear_ordering(single) is single
    for mask in (0, 63):
        with pytest.raises(TrivialPiError):
            to_linear_ordering(single.with_(pi=PiSet(mask)))


@pytest.mark.parametrize("k", range(4))
def test_to_linear_ordering_keeps_answer(k):
    inst = gen_random(RandSpec(5, 3, PI_CLASSES[7], seed=17, k=k))
    assert decide_above_average(inst) == decide_above_average(to_linear_ordering(inst))


@given(lo_instances(max_n=5, max_m=6))
def test_to_linear_ordering_counts(inst):
    if inst.pi.is_trivial:
        return
    lo = to_linear_ordering(inst)
    for alpha in orderings(inst.n):
        assert count_satisfied(lo, alpha) == count_satisfied(inst, alpha)


def test_decompose_examples():
    mixed = decompose_lo(LoInstance.from_names([("u", "v", "w")], k=1))
    assert [(a.tail, a.head) for a in mixed.arcs] == [(0, 1), (1, 2)]
    assert mixed.btws == (BtwConstraint(1, (0, 2)),)
    assert mixed.k == 2
    empty = decompose_lo(LoInstance(UVW, ()))
    assert empty.r == empty.s == 0
    with pytest.raises(PreconditionError):
        decompose_lo(LoInstance.from_names([("u", "v", "w")], PI_BTW))


@given(lo_instances(max_n=6, max_m=8, pi=PI0))
def test_decomposition_identity(inst):
    first, second, btws = decompose_parts(inst)
    mixed = decompose_lo(inst)
    for alpha in orderings(inst.n):
        sat_a, sat_b = mixed_satisfied(mixed, alpha)
        assert 2 * count_satisfied(inst, alpha) == sat_a + sat_b - inst.m
        assert mixed_deviation(mixed, alpha) == 2 * (count_satisfied(inst, alpha) - inst.average)


def test_reduce_betweenness_examples():
    u, v, w = 0, 1, 2
    full = [BtwConstraint(u, (v, w)), BtwConstraint(v, (u, w)), BtwConstraint(w, (u, v))]
    assert reduce_betweenness(full) == ((), 1)
    double = [BtwConstraint(v, (u, w), 2)]
    assert reduce_betweenness(double) == (tuple(double), 0)
    skewed = [BtwConstraint(u, (v, w)), BtwConstraint(v, (u, w), 2), BtwConstraint(w, (u, v))]
    assert reduce_betweenness(skewed) == ((BtwConstraint(v, (u, w)),), 1)


def test_reduce_arcs_examples():
    assert reduce_arcs([Arc(0, 1), Arc(1, 0)]) == ((), 1)
    assert reduce_arcs([Arc(0, 1, 3), Arc(1, 0)]) == ((Arc(0, 1, 2),), 1)
    assert reduce_arcs([Arc(0, 1)]) == ((Arc(0, 1),), 0)


@given(mixed_instances(max_n=5))
def test_reduction_preserves_deviation(mixed):
    reduced, b, t = reduce_mixed(mixed)
    assert mixed.r - reduced.r == 2 * b
    assert mixed.s - reduced.s == 3 * t
    for alpha in orderings(mixed.n):
        assert mixed_deviation(mixed, alpha) == mixed_deviation(reduced, alpha)


@given(mixed_instances(max_n=5), st.randoms(use_true_random=False))
def test_reduction_ignores_input_order(mixed, rnd):
    arcs, btws = list(mixed.arcs), list(mixed.btws)
    rnd.shuffle(arcs)
    rnd.shuffle(btws)
    assert reduce_mixed(mixed.with_(arcs=tuple(arcs), btws=tuple(btws))) == reduce_mixed(mixed)


@given(mixed_instances(max_n=5))
def test_reduction_is_idempotent(mixed):
    once, _, _ = reduce_mixed(mixed)
    assert reduce_mixed(once) == (once, 0, 0)


def test_recompose_examples():
    arc_only = MixedInstance.from_names([("u", "v")])
    kern = recompose_kernel(arc_only, 0)
    assert kern.named() == [(OMEGA, "u", "v", 1), ("u", OMEGA, "v", 1), ("u", "v", OMEGA, 1)]
    btw_only = MixedInstance.from_names([], [("v", "u", "w")])
    assert recompose_kernel(btw_only, 0).named() == [("u", "v", "w", 1), ("w", "v", "u", 1)]


def test_recompose_avoids_name_clash():
    clash = MixedInstance.from_names([(OMEGA, "v")])
    kern = recompose_kernel(clash, 0)
    assert kern.vars.names[-1] == OMEGA + "_1"


@given(mixed_instances(max_n=5))
def test_recompose_keeps_mixed_deviation(mixed):
    reduced, _, _ = reduce_mixed(mixed)
    kern = recompose_kernel(reduced, 0)
    assert max_dev_dp(kern).deviation == max_dev_mixed(reduced)[0]


def test_kernel_examples():
    k0 = cycles_to_lo_instance(generate_g(0))
    res = kernelize_lo(k0.with_(k=0))
    assert res.verdict is Verdict.YES and res.kernel is None
    res = kernelize_lo(k0.with_(k=1))
    assert res.verdict is Verdict.KERNEL
    assert res.kernel.m == 0 and res.kernel.k == 2
    assert res.stats == KernelStats(b=6, t=2, r=0, s=0)
    assert not decide_above_average(res.kernel)
    assert kernelize_lo(cycles_to_lo_instance(generate_g(1))).verdict is Verdict.YES


@pytest.mark.parametrize("k", range(4))
def test_kernel_answer_random(k):
    for seed in range(10):
        inst = gen_random(RandSpec(6, 8, seed=seed, k=k))
        res = kernelize_lo(inst)
        got = True if res.verdict is Verdict.YES else decide_above_average(res.kernel)
        assert got == decide_above_average(inst)


@given(lo_instances(max_n=5, max_m=6, pi=PI0))
def test_kernel_deviation_is_doubled(inst):
    res = kernelize_lo(inst)
    kern = recompose_kernel(res.mixed, res.mixed.k)
    assert max_dev_dp(kern).deviation == 2 * max_dev_dp(inst).deviation


def test_threshold_yes_branch():
    inst = gen_random(RandSpec(6, 10, seed=3, k=1))
    cfg = KernelConfig(Fraction(1, 1000), allow_override=True)
    assert kernelize_lo(inst, cfg).verdict is Verdict.YES


def test_kernel_config_guard():
    assert KernelConfig().c_constant == DEFAULT_C == Fraction(4 * 9**6 * 3072, 11)
    with pytest.raises(ValueError):
        KernelConfig(Fraction(1))
    with pytest.raises(ValueError):
        KernelConfig(Fraction(0), allow_override=True)
    with pytest.raises(ValueError):
        KernelResult(Verdict.YES, LoInstance(UVW, ()), KernelStats(0, 0, 0, 0))
