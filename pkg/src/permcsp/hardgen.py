"""Instance generators: the recursive zero-deviation family and seeded random instances."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .core import (
    PI0,
    Arc,
    BtwConstraint,
    LoInstance,
    MixedInstance,
    PiSet,
    TripleConstraint,
    VarTable,
)


@dataclass(frozen=True)
class Cycle3:
    """Directed 3-cycle a -> b -> c -> a."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if len({self.a, self.b, self.c}) != 3:
            raise ValueError("cycle vertices must be distinct")

    def arcs(self) -> tuple[tuple[int, int], ...]:
        return ((self.a, self.b), (self.b, self.c), (self.c, self.a))


@dataclass(frozen=True)
class HardFamily:
    level: int
    vars: VarTable
    cycles: tuple[Cycle3, ...]

    @property
    def digraph(self) -> tuple[Arc, ...]:
        return tuple(Arc(u, v) for cyc in self.cycles for (u, v) in cyc.arcs())

    @property
    def metadata(self) -> dict:
        return {"removed_cycle_choice": "first in insertion order of each half"}


def generate_g(i: int) -> HardFamily:
    """G_i with its 3-cycle decomposition C_i.

    Each level joins G_{i-1} with a primed copy (the copy's names get 2^(i-1)
    primes, keeping all names distinct), drops the first cycle ``c`` of the
    original and its copy ``c'``, and adds six cycles stitching them together.
    """
    if i < 0:
        raise ValueError("level must be non-negative")
    names = ["x1", "x2", "x3"]
    cycles = [(0, 1, 2), (2, 1, 0)]
    for level in range(1, i + 1):
        n = len(names)
        suffix = "'" * (1 << (level - 1))
        names = names + [nm + suffix for nm in names]
        copy = [(a + n, b + n, c + n) for (a, b, c) in cycles]
        xa, xb, xc = cycles[0]
        xd, xe, xf = copy[0]
        cycles = cycles[1:] + copy[1:] + [
            (xa, xb, xf),
            (xb, xc, xe),
            (xc, xa, xd),
            (xd, xe, xc),
            (xe, xf, xb),
            (xf, xd, xa),
        ]
    return HardFamily(i, VarTable(tuple(names)), tuple(Cycle3(*c) for c in cycles))


def cycles_to_lo_instance(fam: HardFamily, k: int = 0, cycles=None) -> LoInstance:
    """K_i: each cycle u v w u contributes (u,v,w), (v,w,u), (w,u,v).

    ``cycles`` optionally restricts to a subset of cycle indices.
    """
    chosen = fam.cycles if cycles is None else [fam.cycles[j] for j in cycles]
    cons = []
    for cyc in chosen:
        u, v, w = cyc.a, cyc.b, cyc.c
        cons += [TripleConstraint(u, v, w), TripleConstraint(v, w, u), TripleConstraint(w, u, v)]
    return LoInstance(fam.vars, tuple(cons), PI0, k)


def _is_symmetric(arcs) -> bool:
    cnt = Counter(arcs)
    return all(cnt[(v, u)] == m for (u, v), m in cnt.items())


def check_symmetric_no_parallel(fam: HardFamily) -> bool:
    arcs = [(a.tail, a.head) for a in fam.digraph]
    cnt = Counter(arcs)
    if any(m > 1 for m in cnt.values()):
        return False
    return _is_symmetric(arcs)


def check_subset_asymmetry(fam: HardFamily, subset) -> bool:
    """True iff the arcs of the chosen cycles do NOT form a symmetric digraph."""
    subset = set(subset)
    if not subset or len(subset) >= len(fam.cycles):
        raise ValueError("subset must be nonempty and proper")
    if not subset <= set(range(len(fam.cycles))):
        raise ValueError("cycle index out of range")
    arcs = [arc for j in sorted(subset) for arc in fam.cycles[j].arcs()]
    return not _is_symmetric(arcs)


@dataclass(frozen=True)
class RandSpec:
    n: int
    m: int
    pi: PiSet = PI0
    seed: int = 0
    k: int = 0

    def __post_init__(self):
        if self.n < 3 or self.m < 0:
            raise ValueError("need n >= 3 and m >= 0")


def var_names(n: int) -> VarTable:
    return VarTable(tuple(f"v{i}" for i in range(n)))


def gen_random(spec: RandSpec) -> LoInstance:
    rng = np.random.default_rng(spec.seed)
    cons = []
    for _ in range(spec.m):
        a, b, c = (int(x) for x in rng.choice(spec.n, size=3, replace=False))
        cons.append(TripleConstraint(a, b, c))
    return LoInstance(var_names(spec.n), tuple(cons), spec.pi, spec.k)


def gen_random_mixed(n: int, r: int, s: int, seed: int = 0, k: int = 0) -> MixedInstance:
    """Uniform random arcs and betweenness constraints over ``n`` variables."""
    rng = np.random.default_rng(seed)
    arcs = []
    for _ in range(r):
        u, v = (int(x) for x in rng.choice(n, size=2, replace=False))
        arcs.append(Arc(u, v))
    btws = []
    for _ in range(s):
        mid, a, b = (int(x) for x in rng.choice(n, size=3, replace=False))
        btws.append(BtwConstraint(mid, (a, b)))
    return MixedInstance(var_names(n), tuple(arcs), tuple(btws), k)
