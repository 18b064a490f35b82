"""Level-function tables and exact moments over a uniformly random
phi: V -> {0,1,2,3}.

For fixed phi, a constraint's value is its expected satisfaction under a
uniformly random phi-compatible ordering (levels non-decreasing along the
ordering) minus its satisfaction probability under a uniform ordering:

* X for an arc (u,v), centred at 1/2;
* Y for a betweenness constraint (v,{u,w}), centred at 1/3;
* Z for a Linear Ordering triple (u,v,w), centred at 1/6.

All arithmetic is exact.  Internally values are scaled by 12 so that every
table entry is an integer.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

import numpy as np

from .core import PI0, LimitExceededError, LoInstance, MixedInstance, PiSet, pattern_index

F = Fraction
SCALE = 12


def dense_rank(levels) -> tuple[int, ...]:
    """Order type of a level tuple, e.g. (0, 3, 3) -> (0, 1, 1)."""
    distinct = sorted(set(levels))
    return tuple(distinct.index(x) for x in levels)


def x_value(lu: int, lv: int) -> Fraction:
    if lu == lv:
        return F(0)
    return F(1, 2) if lu < lv else F(-1, 2)


def y_value(lu: int, lv: int, lw: int) -> Fraction:
    """Betweenness (v,{u,w})."""
    distinct = len({lu, lv, lw})
    if distinct == 1:
        return F(0)
    if distinct == 2:
        return F(-1, 3) if lu == lw else F(1, 6)
    return F(2, 3) if min(lu, lw) < lv < max(lu, lw) else F(-1, 3)


# order type of (phi(u), phi(v), phi(w)) -> (X', X'', Y, Z) for the triple (u,v,w)
TRIPLE_TABLE = {
    (0, 0, 0): (F(0), F(0), F(0), F(0)),
    (1, 0, 1): (F(-1, 2), F(1, 2), F(-1, 3), F(-1, 6)),
    (0, 1, 0): (F(1, 2), F(-1, 2), F(-1, 3), F(-1, 6)),
    (0, 0, 1): (F(0), F(1, 2), F(1, 6), F(1, 3)),
    (1, 1, 0): (F(0), F(-1, 2), F(1, 6), F(-1, 6)),
    (0, 1, 1): (F(1, 2), F(0), F(1, 6), F(1, 3)),
    (1, 0, 0): (F(-1, 2), F(0), F(1, 6), F(-1, 6)),
    (0, 1, 2): (F(1, 2), F(1, 2), F(2, 3), F(5, 6)),
    (0, 2, 1): (F(1, 2), F(-1, 2), F(-1, 3), F(-1, 6)),
    (1, 0, 2): (F(-1, 2), F(1, 2), F(-1, 3), F(-1, 6)),
    (2, 0, 1): (F(-1, 2), F(1, 2), F(-1, 3), F(-1, 6)),
    (1, 2, 0): (F(1, 2), F(-1, 2), F(-1, 3), F(-1, 6)),
    (2, 1, 0): (F(-1, 2), F(-1, 2), F(2, 3), F(-1, 6)),
}


def z_value(lu: int, lv: int, lw: int) -> Fraction:
    return TRIPLE_TABLE[dense_rank((lu, lv, lw))][3]


# ---------------------------------------------------------------------------
# Conditional-ordering oracle
# ---------------------------------------------------------------------------

def phi_compatible_orderings(levels):
    """All orderings (tuples of indices) that never put a higher level before a lower one."""
    for perm in permutations(range(len(levels))):
        if all(levels[perm[i]] <= levels[perm[i + 1]] for i in range(len(perm) - 1)):
            yield perm


def oracle_value(kind: str, levels, pi: PiSet = PI0) -> Fraction:
    """Centred expected satisfaction over phi-compatible orderings, by enumeration.

    ``kind`` is "x" (arc 0->1), "y" (1 between 0 and 2) or "z" (triple (0,1,2)
    under ``pi``).
    """
    orders = list(phi_compatible_orderings(levels))
    hits = 0
    for order in orders:
        pos = {v: i for i, v in enumerate(order)}
        if kind == "x":
            hits += pos[0] < pos[1]
        elif kind == "y":
            hits += min(pos[0], pos[2]) < pos[1] < max(pos[0], pos[2])
        else:
            hits += pattern_index(pos[0], pos[1], pos[2]) in pi
    centre = {"x": F(1, 2), "y": F(1, 3)}.get(kind, F(len(pi), 6))
    return F(hits, len(orders)) - centre


# ---------------------------------------------------------------------------
# Scaled integer tables and constraint terms
# ---------------------------------------------------------------------------

def _scaled(fn, arity):
    out = np.zeros((4,) * arity, dtype=np.int64)
    for idx in product(range(4), repeat=arity):
        v = fn(*idx) * SCALE
        assert v.denominator == 1
        out[idx] = int(v)
    return out


TABLES = {
    "x": _scaled(x_value, 2),
    "y": _scaled(y_value, 3),
    "z": _scaled(z_value, 3),
}
# halves as they enter Z = (X + Y)/2 for a mixed instance
TABLES["x2"] = TABLES["x"] // 2
TABLES["y2"] = TABLES["y"] // 2


@dataclass(frozen=True)
class Term:
    table: str
    vars: tuple[int, ...]
    mult: int


def terms_of(obj, which: str = "z") -> list[Term]:
    """Aggregated constraint terms of an instance.

    For a Linear Ordering instance only ``which="z"`` applies.  For a mixed
    instance ``which`` selects X (arcs), Y (betweenness) or Z = (X + Y)/2,
    which for a decomposed triple instance is the triples' own Z.
    """
    agg = defaultdict(int)
    if isinstance(obj, LoInstance):
        if obj.pi != PI0:
            raise ValueError("moments are defined for Linear Ordering (Pi_0) instances")
        if which != "z":
            raise ValueError("a triple instance only has the Z moment")
        for c in obj.constraints:
            agg[("z", c.vars)] += c.mult
    elif isinstance(obj, MixedInstance):
        if which not in ("x", "y", "z"):
            raise ValueError(f"unknown moment variable {which!r}")
        if which in ("x", "z"):
            tab = "x" if which == "x" else "x2"
            for a in obj.arcs:
                agg[(tab, (a.tail, a.head))] += a.mult
        if which in ("y", "z"):
            tab = "y" if which == "y" else "y2"
            for b in obj.btws:
                agg[(tab, (b.outer[0], b.middle, b.outer[1]))] += b.mult
    else:
        raise TypeError(f"unsupported instance type {type(obj).__name__}")
    return [Term(t, vs, m) for (t, vs), m in agg.items()]


_PAIR_CACHE: dict = {}


def _pair_expectation_scaled(tp: Term, tq: Term) -> Fraction:
    """E[T_p * T_q] in scaled units, by enumerating the joint support."""
    local = {}
    for v in tp.vars + tq.vars:
        local.setdefault(v, len(local))
    key = (tp.table, tuple(local[v] for v in tp.vars), tq.table, tuple(local[v] for v in tq.vars))
    hit = _PAIR_CACHE.get(key)
    if hit is not None:
        return hit
    k = len(local)
    grid = np.array(list(product(range(4), repeat=k)), dtype=np.int64)
    vp = TABLES[tp.table][tuple(grid[:, i] for i in key[1])]
    vq = TABLES[tq.table][tuple(grid[:, i] for i in key[3])]
    val = F(int(np.sum(vp * vq)), 4 ** k)
    _PAIR_CACHE[key] = val
    return val


def _pairwise_scaled(terms_p: list[Term], terms_q: list[Term]) -> Fraction:
    by_var = defaultdict(list)
    for j, t in enumerate(terms_q):
        for v in t.vars:
            by_var[v].append(j)
    total = F(0)
    for tp in terms_p:
        seen = set()
        for v in tp.vars:
            for j in by_var[v]:
                if j in seen:
                    continue
                seen.add(j)
                tq = terms_q[j]
                total += tp.mult * tq.mult * _pair_expectation_scaled(tp, tq)
    # vertex-disjoint pairs contribute E[T_p] E[T_q] = 0
    return total


def second_moment(obj, which: str = "z") -> Fraction:
    """Exact E[V^2] for V in {X, Y, Z}, summed over overlapping constraint pairs."""
    terms = terms_of(obj, which)
    return _pairwise_scaled(terms, terms) / SCALE**2


def first_moment(obj, which: str = "z") -> Fraction:
    total = F(0)
    for t in terms_of(obj, which):
        grid = np.array(list(product(range(4), repeat=len(t.vars))), dtype=np.int64)
        vals = TABLES[t.table][tuple(grid[:, i] for i in range(len(t.vars)))]
        total += t.mult * F(int(vals.sum()), 4 ** len(t.vars))
    return total / SCALE


def cross_moment_xy(mixed: MixedInstance) -> Fraction:
    """Sum over all arc/betweenness pairs of E[X_i Y_j]."""
    xs = terms_of(mixed, "x")
    ys = terms_of(mixed, "y")
    return _pairwise_scaled(xs, ys) / SCALE**2


def full_enumeration_moments(obj, which: str = "z", powers=(2, 4), max_n: int = 5
                             ) -> dict[int, Fraction]:
    """E[V^p] by summing over all 4^n level functions (oracle for the pairwise route)."""
    n = obj.n
    if n > max_n:
        raise LimitExceededError(f"full enumeration limited to n <= {max_n}, got {n}")
    terms = terms_of(obj, which)
    grid = np.array(list(product(range(4), repeat=n)), dtype=np.int64).reshape(4 ** n, n)
    # huge multiplicities would overflow int64; fall back to Python integers
    wide = SCALE * sum(t.mult for t in terms) >= 2**62
    total = np.zeros(4 ** n, dtype=object if wide else np.int64)
    for t in terms:
        vals = TABLES[t.table][tuple(grid[:, v] for v in t.vars)]
        total += t.mult * (vals.astype(object) if wide else vals)
    vals = [int(x) for x in total]
    return {p: F(sum(v ** p for v in vals), 4 ** n * SCALE ** p) for p in powers}


def fourth_moment_check(obj, max_n: int = 5) -> tuple[Fraction, Fraction]:
    """(E[Z^4], 9^6 * E[Z^2]^2) by full enumeration."""
    mom = full_enumeration_moments(obj, "z", (2, 4), max_n)
    return mom[4], 9**6 * mom[2] ** 2


def hypercontractive_holds(obj, max_n: int = 5) -> bool:
    e4, bound = fourth_moment_check(obj, max_n)
    return e4 <= bound


# ---------------------------------------------------------------------------
# Lower bounds on reduced instances
# ---------------------------------------------------------------------------

Z_BOUND_CONST = F(11, 3072)


def check_lower_bound(mixed: MixedInstance) -> bool:
    """E[Z^2] >= 11/3072 (r+s) for a reduced mixed instance."""
    return second_moment(mixed, "z") >= Z_BOUND_CONST * (mixed.r + mixed.s)


def check_arc_bound(mixed: MixedInstance) -> bool:
    """E[X^2] >= r/32 for a digraph without opposite arcs."""
    return second_moment(mixed, "x") >= F(mixed.r, 32)


def check_btw_bound(mixed: MixedInstance) -> bool:
    """E[Y^2] >= 11 s/768 for betweenness constraints without complete 3-sets."""
    return second_moment(mixed, "y") >= F(11 * mixed.s, 768)


# ---------------------------------------------------------------------------
# Arc pair classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairClass:
    kind: str  # "S1", "S2", "S3" or "DISJOINT"
    anchors: tuple[int, ...] = ()


def classify_arc_pair(p: tuple[int, int], q: tuple[int, int]) -> PairClass:
    """Class of an ordered pair of arcs by how they share endpoints.

    Identical arcs are S3 (also counted in S1 of both endpoints by the sets'
    definition).  Mutually opposite arcs land in S2 of both endpoints.
    """
    if p == q:
        return PairClass("S3", p)
    (pt, ph), (qt, qh) = p, q
    if pt == qt or ph == qh:
        return PairClass("S1", (pt if pt == qt else ph,))
    shared = tuple(sorted({pt, ph} & {qt, qh}))
    if shared:
        return PairClass("S2", shared)
    return PairClass("DISJOINT")


def arc_pair_expectation(p: tuple[int, int], q: tuple[int, int]) -> Fraction:
    return _pair_expectation_scaled(Term("x", p, 1), Term("x", q, 1)) / SCALE**2


# ---------------------------------------------------------------------------
# Polynomial form of Z_p over {-1,1}^6
# ---------------------------------------------------------------------------

def level_to_eps(level: int) -> tuple[int, int]:
    """(eps_1, eps_2): eps_1 = -1 iff level in {0,1}; eps_2 = -1 iff level in {0,2}."""
    return (-1 if level in (0, 1) else 1, -1 if level in (0, 2) else 1)


def eps_to_level(e1: int, e2: int) -> int:
    return 2 * (e1 == 1) + (e2 == 1)


def encode_levels(lu: int, lv: int, lw: int) -> tuple[int, ...]:
    return level_to_eps(lu) + level_to_eps(lv) + level_to_eps(lw)


def _q_digits(q: int) -> tuple[int, ...]:
    """The six +-1 digits of q, most significant first; -1 stands for binary 0."""
    return tuple(1 if (q >> (5 - i)) & 1 else -1 for i in range(6))


def _w_q(q: int, table=None) -> Fraction:
    c = _q_digits(q)
    levels = (eps_to_level(c[0], c[1]), eps_to_level(c[2], c[3]), eps_to_level(c[4], c[5]))
    return (table or z_value)(*levels)


def poly_z_eval(eps, value_fn=None) -> Fraction:
    """(1/64) sum_q (-1)^{s_q} W_q prod_i (eps_i + c_i^q), evaluated term by term."""
    if len(eps) != 6 or any(e not in (-1, 1) for e in eps):
        raise ValueError("eps must be six values in {-1, +1}")
    total = F(0)
    for q in range(64):
        c = _q_digits(q)
        s_q = sum(1 for x in c if x == -1)
        prod = 1
        for e, ci in zip(eps, c):
            prod *= e + ci
        if prod:
            total += (-1) ** s_q * _w_q(q, value_fn) * prod
    return total / 64


def poly_z_expansion(value_fn=None) -> dict[tuple[int, ...], Fraction]:
    """Expand the polynomial into monomials; keys are exponent vectors over the six eps."""
    poly: dict[tuple[int, ...], Fraction] = defaultdict(F)
    for q in range(64):
        c = _q_digits(q)
        s_q = sum(1 for x in c if x == -1)
        # multiply out prod_i (eps_i + c_i) without assuming multilinearity
        term = {(0,) * 6: F((-1) ** s_q) * _w_q(q, value_fn) / 64}
        for i, ci in enumerate(c):
            nxt: dict = defaultdict(F)
            for expo, coef in term.items():
                bumped = list(expo)
                bumped[i] += 1
                nxt[tuple(bumped)] += coef
                nxt[expo] += coef * ci
            term = nxt
        for expo, coef in term.items():
            poly[expo] += coef
    return {e: c for e, c in poly.items() if c != 0}


def eval_expansion(poly, eps) -> Fraction:
    total = F(0)
    for expo, coef in poly.items():
        mono = 1
        for e, x in zip(eps, expo):
            mono *= e ** x
        total += coef * mono
    return total
