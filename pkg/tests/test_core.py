from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permcsp.core import (
    PERM_WORDS,
    PI0,
    PI_BTW,
    PI_CLASSES,
    SYMMETRIES,
    DimensionError,
    InvalidInstanceError,
    LinearOrdering,
    LoInstance,
    PiSet,
    TripleConstraint,
    VarTable,
    act_on_mask,
    canonical_pi_class,
    count_satisfied,
    deviation,
    pattern_index,
    perm_index,
    pi_orbit,
    pi_satisfies,
    to_class_representative,
)
from permcsp.solver import max_dev_bruteforce

from .strategies import lo_instances

UVW = VarTable(("u", "v", "w"))
C_UVW = TripleConstraint(0, 1, 2)


def order(*names, table=UVW):
    return LinearOrdering.from_names(table, names)


def k0():
    return LoInstance.from_names(
        [("u", "v", "w"), ("w", "v", "u"), ("v", "u", "w"), ("v", "w", "u"),
         ("u", "w", "v"), ("w", "u", "v")])


def test_perm_word_order_is_fixed():
    assert PERM_WORDS == ("123", "132", "213", "231", "312", "321")
    assert [perm_index(w) for w in PERM_WORDS] == list(range(6))


def test_pattern_index_by_sorting():
    # the pattern lists which slot sits first, second, third
    for pos in permutations(range(3)):
        slots = sorted(range(3), key=lambda i: pos[i])
        word = "".join(str(s + 1) for s in slots)
        assert pattern_index(*pos) == perm_index(word)


@pytest.mark.parametrize("alpha,pi,expected", [
    (("u", "v", "w"), PiSet.from_words(["123"]), True),
    (("w", "v", "u"), PiSet.from_words(["123", "321"]), True),
    (("u", "w", "v"), PiSet.from_words(["123"]), False),
])
def test_pi_satisfies_examples(alpha, pi, expected):
    assert pi_satisfies(C_UVW, order(*alpha), pi) is expected


def test_pi_satisfies_is_a_disjunction():
    for mask in range(64):
        pi = PiSet(mask)
        for alpha in permutations(range(3)):
            lo = LinearOrdering(alpha)
            want = any(pi_satisfies(C_UVW, lo, PiSet(1 << i)) for i in range(6) if i in pi)
            assert pi_satisfies(C_UVW, lo, pi) == want


def test_count_and_deviation_examples():
    inst = k0()
    for alpha in permutations(range(3)):
        assert count_satisfied(inst, LinearOrdering(alpha)) == 1
        assert deviation(inst, LinearOrdering(alpha)) == 0
    single = LoInstance(UVW, (C_UVW,))
    assert count_satisfied(single, order("u", "v", "w")) == 1
    assert deviation(single, order("u", "v", "w")) == Fraction(5, 6)
    complete = LoInstance.from_names([("u", "v", "w"), ("v", "u", "w"), ("u", "w", "v")], PI_BTW)
    for alpha in permutations(range(3)):
        assert count_satisfied(complete, LinearOrdering(alpha)) == 1


def test_dimension_error():
    with pytest.raises(DimensionError):
        count_satisfied(LoInstance(UVW, (C_UVW,)), LinearOrdering((0, 1)))


def test_invalid_instances_rejected():
    with pytest.raises(InvalidInstanceError):
        TripleConstraint(0, 0, 1)
    with pytest.raises(InvalidInstanceError):
        TripleConstraint(0, 1, 2, 0)
    with pytest.raises(InvalidInstanceError):
        LoInstance(VarTable(("a", "b")), (C_UVW,))
    with pytest.raises(InvalidInstanceError):
        LinearOrdering((0, 0, 1))
    with pytest.raises(InvalidInstanceError):
        VarTable(("a", "a"))


def test_full_pi_has_zero_deviation():
    inst = LoInstance(UVW, (C_UVW, TripleConstraint(2, 0, 1)), PiSet(63))
    for alpha in permutations(range(3)):
        assert deviation(inst, LinearOrdering(alpha)) == 0


@given(lo_instances(max_n=5))
def test_average_is_the_mean_over_orderings(inst):
    n = inst.n
    total = sum(count_satisfied(inst, LinearOrdering(a)) for a in permutations(range(n)))
    count = len(list(permutations(range(n))))
    assert Fraction(total, count) == inst.average


@given(st.integers(3, 5), st.integers(0, 63))
def test_single_constraint_deviation_sums_to_zero(n, mask):
    inst = LoInstance(VarTable(tuple(f"x{i}" for i in range(n))), (TripleConstraint(0, 1, 2),),
                      PiSet(mask))
    assert sum(deviation(inst, LinearOrdering(a)) for a in permutations(range(n))) == 0


def test_class_examples():
    assert canonical_pi_class(PiSet.from_words(["123", "321"])) == 5
    assert canonical_pi_class(PiSet.from_words(["123"])) == 0
    assert canonical_pi_class(PiSet(0)) == 11
    assert canonical_pi_class(PiSet(63)) == 12


def test_thirteen_orbits():
    orbits = {pi_orbit(PiSet(m)) for m in range(64)}
    assert len(orbits) == 13
    assert sum(len(o) for o in orbits) == 64


def test_class_constant_on_orbits():
    for mask in range(64):
        cid = canonical_pi_class(PiSet(mask))
        for sym in SYMMETRIES:
            assert canonical_pi_class(PiSet(act_on_mask(sym, mask))) == cid
    for cid, pi in PI_CLASSES.items():
        assert canonical_pi_class(pi) == cid


@given(lo_instances(max_n=5, max_m=5))
def test_representative_preserves_max_deviation(inst):
    rep = to_class_representative(inst)
    assert rep.pi == PI_CLASSES[canonical_pi_class(inst.pi)]
    assert max_dev_bruteforce(rep).deviation == max_dev_bruteforce(inst).deviation


def test_linear_ordering_helpers():
    alpha = order("w", "u", "v")
    assert alpha.rank(2) == 0 and alpha.rank(1) == 2
    assert alpha.names(UVW) == ["w", "u", "v"]
    assert alpha.reversed().positions == (1, 0, 2)


def test_fresh_names():
    table = VarTable(("_omega", "_omega_1", "a"))
    assert table.fresh("_omega") == "_omega_2"
    assert table.fresh("z") == "z"
    assert PI0.words() == ["123"]
