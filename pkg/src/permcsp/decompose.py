"""Reduction to Linear Ordering, the arc/betweenness split, normal reduction
rules and the quadratic kernel for Linear Ordering-AA."""
from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    PI0,
    Arc,
    BtwConstraint,
    LoInstance,
    MixedInstance,
    PreconditionError,
    TripleConstraint,
    TrivialPiError,
    VarTable,
)

OMEGA = "_omega"

# 4 * 9**6 * 3072 / 11
DEFAULT_C = Fraction(4 * 9**6 * 3072, 11)


@dataclass(frozen=True)
class KernelConfig:
    c_constant: Fraction = DEFAULT_C
    allow_override: bool = False

    def __post_init__(self):
        c = Fraction(self.c_constant)
        object.__setattr__(self, "c_constant", c)
        if c <= 0:
            raise ValueError("c_constant must be positive")
        if c != DEFAULT_C and not self.allow_override:
            raise ValueError("non-default c_constant requires allow_override=True")


class Verdict(enum.Enum):
    YES = "YES"
    KERNEL = "KERNEL"


@dataclass(frozen=True)
class KernelStats:
    b: int  # deleted opposite-arc pairs
    t: int  # deleted complete betweenness 3-sets
    r: int  # surviving arc multiplicity
    s: int  # surviving betweenness multiplicity


@dataclass(frozen=True)
class KernelResult:
    verdict: Verdict
    kernel: LoInstance | None
    stats: KernelStats
    mixed: MixedInstance | None = None

    def __post_init__(self):
        if (self.verdict is Verdict.YES) != (self.kernel is None):
            raise ValueError("YES carries no kernel; KERNEL must carry one")


def to_linear_ordering(inst: LoInstance) -> LoInstance:
    """Replace each triple by its |Pi| rearrangements, one per permutation in Pi."""
    if inst.pi.is_trivial:
        raise TrivialPiError(f"Pi = {inst.pi} is solvable directly")
    if inst.pi == PI0:
        return inst
    perms = [tuple(int(ch) - 1 for ch in w) for w in inst.pi.words()]
    cons = []
    for c in inst.constraints:
        vs = c.vars
        for p in perms:
            cons.append(TripleConstraint(vs[p[0]], vs[p[1]], vs[p[2]], c.mult))
    return inst.with_(constraints=tuple(cons), pi=PI0)


def decompose_parts(inst: LoInstance) -> tuple[list[Arc], list[Arc], list[BtwConstraint]]:
    """(A', A'', B): triple (u,v,w) gives (u,v) in A', (v,w) in A'', (v,{u,w}) in B."""
    if inst.pi != PI0:
        raise PreconditionError("decomposition needs a Linear Ordering (Pi_0) instance")
    first, second, btws = [], [], []
    for c in inst.constraints:
        u, v, w = c.vars
        first.append(Arc(u, v, c.mult))
        second.append(Arc(v, w, c.mult))
        btws.append(BtwConstraint(v, (u, w), c.mult))
    return first, second, btws


def decompose_lo(inst: LoInstance) -> MixedInstance:
    """Mixed instance with A' + A'' as arcs.

    Its deviation is twice the triple instance's under every ordering, so the
    parameter is doubled to keep the AA question equivalent.
    """
    first, second, btws = decompose_parts(inst)
    return MixedInstance(inst.vars, tuple(first + second), tuple(btws), 2 * inst.k)


def reduce_betweenness(btws) -> tuple[tuple[BtwConstraint, ...], int]:
    """Delete complete 3-sets; each 3-set loses min of its three multiplicities.

    Surviving constraints are merged by (middle, outer) and sorted.
    """
    mult = defaultdict(int)
    for b in btws:
        mult[(b.middle, b.outer)] += b.mult
    by_set = defaultdict(dict)
    for (mid, outer), m in mult.items():
        by_set[frozenset((mid, *outer))][mid] = m
    t = 0
    for triple, mids in by_set.items():
        if len(mids) < 3:
            continue
        q = min(mids.values())
        t += q
        for mid in mids:
            outer = tuple(sorted(triple - {mid}))
            mult[(mid, outer)] -= q
    out = tuple(BtwConstraint(mid, outer, m) for (mid, outer), m in sorted(mult.items()) if m > 0)
    return out, t


def reduce_arcs(arcs) -> tuple[tuple[Arc, ...], int]:
    """Delete min(mult(u,v), mult(v,u)) opposite pairs per vertex pair."""
    mult = defaultdict(int)
    for a in arcs:
        mult[(a.tail, a.head)] += a.mult
    b = 0
    for (u, v) in list(mult):
        if u < v and (v, u) in mult:
            q = min(mult[(u, v)], mult[(v, u)])
            b += q
            mult[(u, v)] -= q
            mult[(v, u)] -= q
    out = tuple(Arc(u, v, m) for (u, v), m in sorted(mult.items()) if m > 0)
    return out, b


def reduce_mixed(mixed: MixedInstance) -> tuple[MixedInstance, int, int]:
    """Both normal rules; returns (reduced instance, b, t)."""
    arcs, b = reduce_arcs(mixed.arcs)
    btws, t = reduce_betweenness(mixed.btws)
    return mixed.with_(arcs=arcs, btws=btws), b, t


def recompose_kernel(mixed: MixedInstance, k: int) -> LoInstance:
    """Linear Ordering instance whose satisfied count equals satisfied arcs + betweenness.

    Arc (u,v) becomes (w,u,v), (u,w,v), (u,v,w) for a fresh variable w, of which
    exactly one is satisfied iff u precedes v.  Betweenness (a,{b,c}) becomes
    (b,a,c) and (c,a,b).  Only variables that occur are kept, in original order.
    """
    used = set()
    for a in mixed.arcs:
        used.update((a.tail, a.head))
    for b in mixed.btws:
        used.update((b.middle, *b.outer))
    keep = [v for v in range(mixed.n) if v in used]
    names = [mixed.vars.names[v] for v in keep]
    remap = {v: i for i, v in enumerate(keep)}
    cons = []
    if mixed.arcs:
        omega = mixed.vars.fresh(OMEGA)
        names.append(omega)
        w = len(names) - 1
        for a in mixed.arcs:
            u, v = remap[a.tail], remap[a.head]
            cons += [TripleConstraint(w, u, v, a.mult), TripleConstraint(u, w, v, a.mult),
                     TripleConstraint(u, v, w, a.mult)]
    for b in mixed.btws:
        mid, (x, y) = remap[b.middle], (remap[b.outer[0]], remap[b.outer[1]])
        cons += [TripleConstraint(x, mid, y, b.mult), TripleConstraint(y, mid, x, b.mult)]
    return LoInstance(VarTable(tuple(names)), tuple(cons), PI0, k)


def threshold_met(r: int, s: int, k: int, cfg: KernelConfig) -> bool:
    return r + s >= cfg.c_constant * k * k


def kernelize_lo(inst: LoInstance, cfg: KernelConfig | None = None) -> KernelResult:
    """Decompose, reduce, then either answer YES or emit the recomposed kernel.

    The kernel's deviation is twice the input's, so it carries parameter 2k.
    """
    cfg = cfg or KernelConfig()
    if inst.pi != PI0:
        raise PreconditionError("kernelize_lo needs a Linear Ordering (Pi_0) instance")
    reduced, b, t = reduce_mixed(decompose_lo(inst))
    stats = KernelStats(b, t, reduced.r, reduced.s)
    if inst.k == 0 or threshold_met(reduced.r, reduced.s, inst.k, cfg):
        return KernelResult(Verdict.YES, None, stats, reduced)
    kernel = recompose_kernel(reduced, reduced.k)
    return KernelResult(Verdict.KERNEL, kernel, stats, reduced)
