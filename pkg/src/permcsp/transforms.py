"""Reductions between ternary permutation CSPs.

Two kinds of parameter appear in :class:`TransformResult`:

* ``measure == "aa"``: the output instance asks for deviation >= ``k_out``
  (and ``instance.k == k_out``);
* ``measure == "count"``: the NP-hardness gadgets ask for at least ``k_out``
  satisfied constraints, the decision version of Max-CSP.

Gadget constraints are ordinary ordered triples carrying the target class's
Pi-set; e.g. the Pi_1 constraint "u before both v and w" is the triple (u,v,w).
"""
from __future__ import annotations

import math
from itertools import permutations
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    PI_CLASSES,
    Arc,
    LoInstance,
    MixedInstance,
    PreconditionError,
    TripleConstraint,
    VarTable,
    canonical_pi_class,
    pattern_index,
    to_class_representative,
)
from .decompose import (
    KernelConfig,
    Verdict,
    kernelize_lo,
    reduce_arcs,
    to_linear_ordering,
)
from .solver import DEFAULT_LIMITS, SolverLimits, decide_above_average, decide_mixed, max_sat_mixed, max_satisfied

# slot letters u, v, w name the betweenness constraint (v,{u,w}); Z, a, b are extra variables
GADGETS = {
    1: (("uvw", 2), ("wuv", 2), ("vwZ", 1), ("vuZ", 1)),
    4: (("uvw", 1), ("uwv", 1), ("wuv", 1), ("wvu", 1)),
    8: (("vwu", 1), ("vuw", 1)),
    9: (("vuw", 1), ("uwv", 1)),
    10: (("vuw", 1), ("vwu", 1), ("uwv", 1), ("wuv", 1)),
    6: (("uwv", 2), ("wuv", 2), ("bvu", 1), ("bvw", 1)),
}

# satisfied gadget constraints when the source constraint is (satisfied, falsified)
GADGET_COUNTS = {1: (3, 2), 4: (2, 1), 8: (2, 1), 9: (2, 1), 10: (4, 3), 6: (5, 2)}


def gadget_satisfied_counts(j: int) -> dict[bool, set[int]]:
    """Best satisfied count of gadget ``j`` for each ordering of u, v, w.

    Keyed by whether (v,{u,w}) holds; values collect the best count over the
    gadget's extra variables for every ordering of u, v, w.  For Pi_6 the
    anchor b is held last, where the heavy anchors put it.
    """
    gadget = GADGETS[j]
    slots = sorted({ch for pattern, _ in gadget for ch in pattern})
    best: dict[tuple, int] = {}
    for order in permutations(slots):
        if j == 6 and order[-1] != "b":
            continue
        pos = {ch: i for i, ch in enumerate(order)}
        core = tuple(ch for ch in order if ch in "uvw")
        hits = sum(t for pattern, t in gadget
                   if pattern_index(*(pos[ch] for ch in pattern)) in PI_CLASSES[j])
        best[core] = max(best.get(core, 0), hits)
    out: dict[bool, set[int]] = {True: set(), False: set()}
    for core, hits in best.items():
        out[core[1] == "v"].add(hits)
    return out


@dataclass(frozen=True)
class TransformResult:
    instance: LoInstance | MixedInstance | None
    k_out: int
    measure: str = "aa"
    notes: dict = field(default_factory=dict)
    trivial: str | None = None  # "yes" / "no" when decided without an instance


def _with_extra(table: VarTable, *bases: str) -> tuple[VarTable, list[int]]:
    names = list(table.names)
    ids = []
    for base in bases:
        nm = VarTable(tuple(names)).fresh(base)
        names.append(nm)
        ids.append(len(names) - 1)
    return VarTable(tuple(names)), ids


def _require_pi(inst: LoInstance, cid: int):
    if inst.pi != PI_CLASSES[cid]:
        raise PreconditionError(f"expected a Pi_{cid} instance, got Pi = {inst.pi}")


# ---------------------------------------------------------------------------
# NP-hardness gadgets (decision version of Max-CSP)
# ---------------------------------------------------------------------------

def asd_to_pi1(digraph: MixedInstance, k: int) -> TransformResult:
    """Arc (u,v) -> (u,v,z): u precedes both v and a fresh z."""
    if not digraph.arcs:
        raise PreconditionError("digraph needs at least one arc")
    table, (z,) = _with_extra(digraph.vars, "_z")
    cons = tuple(TripleConstraint(a.tail, a.head, z, a.mult) for a in digraph.arcs)
    return TransformResult(LoInstance(table, cons, PI_CLASSES[1], 0), k, "count")


def asd_to_pi2(digraph: MixedInstance, k: int) -> TransformResult:
    """Arc (v,w) -> (z,v,w): satisfied iff v precedes w."""
    if not digraph.arcs:
        raise PreconditionError("digraph needs at least one arc")
    table, (z,) = _with_extra(digraph.vars, "_z")
    cons = tuple(TripleConstraint(z, a.tail, a.head, a.mult) for a in digraph.arcs)
    return TransformResult(LoInstance(table, cons, PI_CLASSES[2], 0), k, "count")


def _pi1_pairs(inst: LoInstance) -> tuple[TripleConstraint, ...]:
    out = []
    for c in inst.constraints:
        u, v, w = c.vars
        # "w is not last" and "v is not last"
        out += [TripleConstraint(u, v, w, c.mult), TripleConstraint(u, w, v, c.mult)]
    return tuple(out)


def pi1_to_pi3(pi1_inst: LoInstance, k: int) -> TransformResult:
    """At least k of C_1 under alpha iff at least |C_1| + k of C_3 under reversed alpha."""
    _require_pi(pi1_inst, 1)
    out = LoInstance(pi1_inst.vars, _pi1_pairs(pi1_inst), PI_CLASSES[3], 0)
    return TransformResult(out, pi1_inst.m + k, "count")


# ---------------------------------------------------------------------------
# Bikernel parts
# ---------------------------------------------------------------------------

def part1_quantities(r: int, s: int, n_star: int, k: int) -> tuple[int, int, int]:
    """(p, d, k') from the counts alone, p already padded to a multiple of 3."""
    d = (r + s) - math.ceil(Fraction(r, 2) + Fraction(s, 3) + k)
    p = (n_star + 1) * (r + s + 1) - 1
    p += (-p) % 3
    return p, d, Fraction(2 * p, 3) - d


def mixed_to_betweenness_aa(mixed: MixedInstance, k: int | None = None) -> TransformResult:
    """Betweenness-AA instance equivalent to "at least r/2 + s/3 + k satisfied".

    Two new variables y, z are pinned to the ends by r+s+1 copies of (x,{y,z})
    for every occurring x; with z last, (v,{u,z}) holds iff u precedes v, which
    encodes arc (u,v).  The answer is yes iff at most d constraints are falsified.
    """
    k = mixed.k if k is None else k
    r, s = mixed.r, mixed.s
    used = sorted({x for a in mixed.arcs for x in (a.tail, a.head)}
                  | {x for b in mixed.btws for x in (b.middle, *b.outer)})
    d = (r + s) - math.ceil(Fraction(r, 2) + Fraction(s, 3) + k)
    notes = {"r": r, "s": s, "n_star": len(used), "d": d, "k_in": k}
    if d < 0:
        return TransformResult(None, 0, "aa", notes, trivial="no")
    remap = {v: i for i, v in enumerate(used)}
    base = VarTable(tuple(mixed.vars.names[v] for v in used))
    table, (y, z) = _with_extra(base, "_y", "_z")
    cons = []
    for b in mixed.btws:
        cons.append(TripleConstraint(remap[b.outer[0]], remap[b.middle], remap[b.outer[1]], b.mult))
    for x in range(len(used)):
        cons.append(TripleConstraint(y, x, z, r + s + 1))
    for a in mixed.arcs:
        cons.append(TripleConstraint(remap[a.tail], remap[a.head], z, a.mult))
    p = sum(c.mult for c in cons)
    assert p == (len(used) + 1) * (r + s + 1) - 1
    pad = (-p) % 3
    if pad:
        cons.append(TripleConstraint(y, 0, z, pad))
        p += pad
    k_out = Fraction(2 * p, 3) - d
    assert k_out.denominator == 1 and k_out >= 0
    notes.update(p=p, pad=pad, k_out=int(k_out))
    inst = LoInstance(table, tuple(cons), PI_CLASSES[5], int(k_out))
    return TransformResult(inst, int(k_out), "aa", notes)


def _apply_gadget(b_inst: LoInstance, j: int, extra: dict[str, int], table: VarTable,
                  head=()) -> tuple[TripleConstraint, ...]:
    cons = list(head)
    for c in b_inst.constraints:
        u, v, w = c.vars  # (u,v,w) under Pi_5 means v between u and w
        slots = {"u": u, "v": v, "w": w, **extra}
        for pattern, times in GADGETS[j]:
            x1, x2, x3 = (slots[ch] for ch in pattern)
            cons.append(TripleConstraint(x1, x2, x3, times * c.mult))
    return tuple(cons)


def betweenness_to_pi1_aa(b_inst: LoInstance, p: int, d: int) -> TransformResult:
    _require_pi(b_inst, 5)
    table, (zp,) = _with_extra(b_inst.vars, "_zp")
    cons = _apply_gadget(b_inst, 1, {"Z": zp}, table)
    k1 = p - d
    out = LoInstance(table, cons, PI_CLASSES[1], k1)
    assert out.m == 6 * p
    return TransformResult(out, k1, "aa", {"p": p, "d": d, "k_out": k1})


def pi1_to_pi3_aa(c1_inst: LoInstance, p: int, k_1: int) -> TransformResult:
    _require_pi(c1_inst, 1)
    out = LoInstance(c1_inst.vars, _pi1_pairs(c1_inst), PI_CLASSES[3], k_1)
    assert out.m == 12 * p
    return TransformResult(out, k_1, "aa", {"p": p, "k_out": k_1})


def betweenness_to_pi_j(b_inst: LoInstance, j: int) -> TransformResult:
    if j not in (4, 8, 9, 10):
        raise ValueError(f"gadget target must be one of 4, 8, 9, 10, got {j}")
    _require_pi(b_inst, 5)
    cons = _apply_gadget(b_inst, j, {}, b_inst.vars)
    out = LoInstance(b_inst.vars, cons, PI_CLASSES[j], b_inst.k)
    return TransformResult(out, b_inst.k, "aa", {"k_out": b_inst.k})


def betweenness_to_pi6(b_inst: LoInstance, p: int, d: int) -> TransformResult:
    """Anchors with 6p+1 copies force a, b to the last two places."""
    _require_pi(b_inst, 5)
    n_prime = b_inst.n
    table, (a, b) = _with_extra(b_inst.vars, "_a", "_b")
    heavy = 6 * p + 1
    anchors = []
    for x in range(n_prime):
        anchors += [TripleConstraint(x, b, a, heavy), TripleConstraint(x, a, b, heavy)]
    cons = _apply_gadget(b_inst, 6, {"a": a, "b": b}, table, head=anchors)
    k6 = heavy * n_prime + (2 * p - 3 * d)
    out = LoInstance(table, cons, PI_CLASSES[6], k6)
    assert out.m == 6 * p + 2 * heavy * n_prime
    return TransformResult(out, k6, "aa", {"p": p, "d": d, "n_prime": n_prime, "k_out": k6})


# ---------------------------------------------------------------------------
# Pi_2 and Pi_7 via Acyclic Subdigraph-AA
# ---------------------------------------------------------------------------

def _arcs_back_to_triples(mixed: MixedInstance, arcs, cid: int, k: int, z_first: bool):
    used = sorted({x for a in arcs for x in (a.tail, a.head)})
    remap = {v: i for i, v in enumerate(used)}
    base = VarTable(tuple(mixed.vars.names[v] for v in used))
    table, (z,) = _with_extra(base, "_z")
    cons = []
    for a in arcs:
        u, v = remap[a.tail], remap[a.head]
        cons.append(TripleConstraint(z, u, v, a.mult) if z_first else TripleConstraint(u, v, z, a.mult))
    return LoInstance(table, tuple(cons), PI_CLASSES[cid], k)


def pi2_roundtrip_kernel(pi2_inst: LoInstance, k: int | None = None) -> TransformResult:
    """(u,v,w) -> arc (v,w); drop opposite arcs; arc (v,w) -> (z,v,w)."""
    _require_pi(pi2_inst, 2)
    k = pi2_inst.k if k is None else k
    arcs = [Arc(c.v2, c.v3, c.mult) for c in pi2_inst.constraints]
    digraph = MixedInstance(pi2_inst.vars, tuple(arcs), (), k)
    reduced, b = reduce_arcs(digraph.arcs)
    out = _arcs_back_to_triples(digraph, reduced, 2, k, z_first=True)
    return TransformResult(out, k, "aa", {"b": b, "r": sum(a.mult for a in reduced), "k_out": k})


def pi7_roundtrip_kernel(pi7_inst: LoInstance, k: int | None = None) -> TransformResult:
    """<u,v,w> -> arcs (u,v),(v,w),(w,u); drop opposite arcs; arc (u,v) -> <u,v,z>."""
    _require_pi(pi7_inst, 7)
    k = pi7_inst.k if k is None else k
    arcs = []
    for c in pi7_inst.constraints:
        u, v, w = c.vars
        arcs += [Arc(u, v, c.mult), Arc(v, w, c.mult), Arc(w, u, c.mult)]
    digraph = MixedInstance(pi7_inst.vars, tuple(arcs), (), k)
    reduced, b = reduce_arcs(digraph.arcs)
    out = _arcs_back_to_triples(digraph, reduced, 7, k, z_first=False)
    return TransformResult(out, k, "aa", {"b": b, "r": sum(a.mult for a in reduced), "k_out": k})


# ---------------------------------------------------------------------------
# Orchestration
# ---------------------------------------------------------------------------

def trivial_instance(j: int, yes: bool) -> LoInstance:
    return LoInstance(VarTable(()), (), PI_CLASSES[j], 0 if yes else 1)


def _trivial(j: int, yes: bool, notes: dict) -> TransformResult:
    inst = trivial_instance(j, yes)
    return TransformResult(inst, inst.k, "aa", notes, trivial="yes" if yes else "no")


def bikernel(inst: LoInstance, j: int, cfg: KernelConfig | None = None) -> TransformResult:
    """Equivalent Pi_j-AA instance whose size depends on k only.

    For j in {2, 7} only same-class input is supported.
    """
    if not 0 <= j <= 10:
        raise ValueError(f"target class must be in 0..10, got {j}")
    i = canonical_pi_class(inst.pi)
    notes = {"i": i, "j": j, "k_in": inst.k}
    if inst.pi.is_trivial:
        # deviation is identically zero
        return _trivial(j, inst.k == 0, notes)
    if j in (2, 7):
        if i != j:
            raise ValueError(f"no bikernel from Pi_{i} to Pi_{j}")
        rep = to_class_representative(inst)
        fn = pi2_roundtrip_kernel if j == 2 else pi7_roundtrip_kernel
        res = fn(rep, inst.k)
        return TransformResult(res.instance, res.k_out, "aa", {**notes, **res.notes})

    lo = to_linear_ordering(inst)
    kres = kernelize_lo(lo, cfg)
    notes.update(b=kres.stats.b, t=kres.stats.t, r=kres.stats.r, s=kres.stats.s)
    if kres.verdict is Verdict.YES:
        return _trivial(j, True, notes)
    if j == 0:
        return TransformResult(kres.kernel, kres.kernel.k, "aa", {**notes, "k_out": kres.kernel.k})

    part1 = mixed_to_betweenness_aa(kres.mixed)
    notes.update(part1.notes)
    if part1.trivial:
        return _trivial(j, False, notes)
    p, d = part1.notes["p"], part1.notes["d"]
    b_inst = part1.instance
    if j == 5:
        res = part1
    elif j == 1:
        res = betweenness_to_pi1_aa(b_inst, p, d)
    elif j == 3:
        c1 = betweenness_to_pi1_aa(b_inst, p, d)
        res = pi1_to_pi3_aa(c1.instance, p, c1.k_out)
    elif j == 6:
        res = betweenness_to_pi6(b_inst, p, d)
    else:
        res = betweenness_to_pi_j(b_inst, j)
    notes.update(res.notes)
    return TransformResult(res.instance, res.k_out, "aa", notes)


def transform_answer(res: TransformResult, limits: SolverLimits = DEFAULT_LIMITS) -> bool:
    """Decide the target question of a transform result exactly."""
    if res.trivial:
        return res.trivial == "yes"
    inst = res.instance
    if res.measure == "count":
        if isinstance(inst, MixedInstance):
            return max_sat_mixed(inst, limits)[0] >= res.k_out
        return max_satisfied(inst, limits) >= res.k_out
    if isinstance(inst, MixedInstance):
        return decide_mixed(inst.with_(k=res.k_out), limits)
    return decide_above_average(inst.with_(k=res.k_out), limits)


__all__ = [
    "GADGETS", "GADGET_COUNTS", "gadget_satisfied_counts", "TransformResult", "asd_to_pi1", "asd_to_pi2", "pi1_to_pi3",
    "part1_quantities", "mixed_to_betweenness_aa", "betweenness_to_pi1_aa", "pi1_to_pi3_aa",
    "betweenness_to_pi_j", "betweenness_to_pi6", "pi2_roundtrip_kernel", "pi7_roundtrip_kernel",
    "bikernel", "transform_answer", "trivial_instance",
]
