from collections import Counter

import numpy as np
import pytest

from permcsp.core import PI_BTW, Arc, VarTable
from permcsp.decompose import decompose_lo, reduce_mixed
from permcsp.hardgen import (
    Cycle3,
    HardFamily,
    RandSpec,
    check_subset_asymmetry,
    check_symmetric_no_parallel,
    cycles_to_lo_instance,
    gen_random,
    gen_random_mixed,
    generate_g,
)
from permcsp.instancefile import serialize
from permcsp.solver import max_dev_dp


def test_level_zero():
    fam = generate_g(0)
    assert fam.vars.names == ("x1", "x2", "x3")
    assert fam.cycles == (Cycle3(0, 1, 2), Cycle3(2, 1, 0))
    arcs = Counter((a.tail, a.head) for a in fam.digraph)
    assert len(arcs) == 6 and set(arcs.values()) == {1}


def test_sizes():
    assert len(generate_g(1).vars) == 6 and len(generate_g(1).cycles) == 8
    assert len(generate_g(4).vars) == 48
    for i in range(1, 7):
        assert len(generate_g(i).cycles) == 2 * len(generate_g(i - 1).cycles) + 4
    names = generate_g(3).vars.names
    assert len(set(names)) == len(names)


@pytest.mark.parametrize("i", range(7))
def test_symmetric_without_parallel_arcs(i):
    assert check_symmetric_no_parallel(generate_g(i))


def test_asymmetric_digraph_detected():
    fam = HardFamily(0, VarTable(("a", "b", "c")), (Cycle3(0, 1, 2),))
    assert not check_symmetric_no_parallel(fam)
    doubled = HardFamily(0, VarTable(("a", "b", "c")),
                         (Cycle3(0, 1, 2), Cycle3(2, 1, 0), Cycle3(0, 1, 2), Cycle3(2, 1, 0)))
    assert not check_symmetric_no_parallel(doubled)


def test_k_instances():
    assert cycles_to_lo_instance(generate_g(0)).m == 6
    assert cycles_to_lo_instance(generate_g(1)).m == 24
    for i in (0, 1):
        assert max_dev_dp(cycles_to_lo_instance(generate_g(i))).deviation == 0


def test_k1_is_fully_reducible():
    reduced, b, t = reduce_mixed(decompose_lo(cycles_to_lo_instance(generate_g(1))))
    assert reduced.r == reduced.s == 0 and b == 24 and t == 8


def test_subset_asymmetry_level_one():
    fam = generate_g(1)
    for mask in range(1, 2**8 - 1):
        assert check_subset_asymmetry(fam, [j for j in range(8) if mask >> j & 1])


def test_subset_asymmetry_small_and_sampled():
    assert check_subset_asymmetry(generate_g(0), [0])
    assert check_subset_asymmetry(generate_g(0), [1])
    fam = generate_g(2)
    rng = np.random.default_rng(0)
    for _ in range(1000):
        size = int(rng.integers(1, len(fam.cycles)))
        assert check_subset_asymmetry(fam, rng.choice(len(fam.cycles), size, replace=False))


def test_subset_argument_errors():
    fam = generate_g(1)
    with pytest.raises(ValueError):
        check_subset_asymmetry(fam, [])
    with pytest.raises(ValueError):
        check_subset_asymmetry(fam, range(8))
    with pytest.raises(ValueError):
        generate_g(-1)
    with pytest.raises(ValueError):
        Cycle3(0, 0, 1)


def test_random_generation():
    spec = RandSpec(5, 7, PI_BTW, seed=42)
    inst = gen_random(spec)
    assert inst.m == 7 and all(len(set(c.vars)) == 3 for c in inst.constraints)
    assert serialize(gen_random(spec)) == serialize(inst)
    assert gen_random(RandSpec(5, 0)).constraints == ()
    assert gen_random(RandSpec(5, 7, seed=43)) != inst
    with pytest.raises(ValueError):
        RandSpec(2, 1)
    mixed = gen_random_mixed(5, 3, 2, seed=1)
    assert (mixed.r, mixed.s) == (3, 2) and all(isinstance(a, Arc) for a in mixed.arcs)
