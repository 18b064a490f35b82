"""Domain types and Pi-satisfaction semantics for ternary permutation CSPs.

A constraint is an ordered triple of distinct variables.  Under a linear
ordering, the *pattern* of a triple ``(v1, v2, v3)`` is the word listing the
triple's slots in increasing position order; e.g. for the ordering ``u, w, v``
the triple ``(u, v, w)`` has pattern ``132``.  The triple is Pi-satisfied iff
its pattern belongs to Pi.

Pi-sets are 6-bit masks over the fixed permutation order
``123, 132, 213, 231, 312, 321``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

PERM_WORDS = ("123", "132", "213", "231", "312", "321")

# code = 4*[p1<p2] + 2*[p2<p3] + [p1<p3]  ->  perm index; codes 1 and 6 cannot occur
CODE_TO_PERM = {7: 0, 5: 1, 3: 2, 2: 3, 4: 4, 0: 5}


class InvalidInstanceError(ValueError):
    pass


class DimensionError(ValueError):
    pass


class LimitExceededError(RuntimeError):
    pass


class TrivialPiError(ValueError):
    """Raised for Pi = {} or Pi = S3, whose AA problems are trivially solvable."""


class PreconditionError(ValueError):
    pass


def perm_index(word: str) -> int:
    try:
        return PERM_WORDS.index(word)
    except ValueError:
        raise ValueError(f"not a permutation word of 123: {word!r}") from None


def pattern_index(p1: int, p2: int, p3: int) -> int:
    """Perm3 index of the order in which three distinct positions occur."""
    code = 4 * (p1 < p2) + 2 * (p2 < p3) + (p1 < p3)
    return CODE_TO_PERM[code]


@dataclass(frozen=True, order=True)
class PiSet:
    mask: int

    def __post_init__(self):
        if not 0 <= self.mask <= 63:
            raise ValueError(f"PiSet mask out of range: {self.mask}")

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "PiSet":
        mask = 0
        for w in words:
            mask |= 1 << perm_index(w)
        return cls(mask)

    @classmethod
    def of_class(cls, class_id: int) -> "PiSet":
        return PI_CLASSES[class_id]

    def words(self) -> list[str]:
        return [w for i, w in enumerate(PERM_WORDS) if self.mask >> i & 1]

    def __contains__(self, idx: int) -> bool:
        return bool(self.mask >> idx & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    @property
    def is_trivial(self) -> bool:
        return self.mask in (0, 63)

    def class_id(self) -> int:
        return canonical_pi_class(self)

    def __str__(self) -> str:
        return ",".join(self.words()) or "{}"


def _pi(*words: str) -> PiSet:
    return PiSet.from_words(words)


PI_CLASSES: dict[int, PiSet] = {
    0: _pi("123"),
    1: _pi("123", "132"),
    2: _pi("123", "213", "231"),
    3: _pi("132", "231", "312", "321"),
    4: _pi("123", "231"),
    5: _pi("123", "321"),
    6: _pi("123", "132", "231"),
    7: _pi("123", "231", "312"),
    8: PiSet(63 ^ _pi("123", "231").mask),
    9: PiSet(63 ^ _pi("123", "321").mask),
    10: PiSet(63 ^ _pi("123").mask),
    11: PiSet(0),
    12: PiSet(63),
}

PI_NAMES = {
    0: "Linear Ordering",
    5: "Betweenness",
    7: "Circular Ordering",
    9: "Non-Betweenness",
}

PI0 = PI_CLASSES[0]
PI_BTW = PI_CLASSES[5]


@dataclass(frozen=True)
class VarTable:
    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise InvalidInstanceError("variable names must be pairwise distinct")
        for nm in self.names:
            if not nm or any(ch.isspace() for ch in nm):
                raise InvalidInstanceError(f"bad variable name {nm!r}")

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidInstanceError(f"unknown variable {name!r}") from None

    def fresh(self, base: str) -> str:
        """``base`` if unused, else the first free ``base_1``, ``base_2``, ..."""
        taken = set(self.names)
        if base not in taken:
            return base
        i = 1
        while f"{base}_{i}" in taken:
            i += 1
        return f"{base}_{i}"


@dataclass(frozen=True)
class TripleConstraint:
    v1: int
    v2: int
    v3: int
    mult: int = 1

    def __post_init__(self):
        if len({self.v1, self.v2, self.v3}) != 3:
            raise InvalidInstanceError(f"triple entries must be distinct: {self.vars}")
        if self.mult < 1:
            raise InvalidInstanceError("multiplicity must be positive")

    @property
    def vars(self) -> tuple[int, int, int]:
        return (self.v1, self.v2, self.v3)


@dataclass(frozen=True)
class LoInstance:
    """Variables, a multiset of ordered triples, the Pi-set and parameter k."""

    vars: VarTable
    constraints: tuple[TripleConstraint, ...]
    pi: PiSet = PI0
    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        n = len(self.vars)
        for c in self.constraints:
            if max(c.vars) >= n or min(c.vars) < 0:
                raise InvalidInstanceError(f"constraint {c.vars} refers to unknown variable")
        if self.k < 0:
            raise InvalidInstanceError("k must be non-negative")

    @property
    def n(self) -> int:
        return len(self.vars)

    @property
    def m(self) -> int:
        return sum(c.mult for c in self.constraints)

    @property
    def average(self) -> Fraction:
        return Fraction(len(self.pi) * self.m, 6)

    def with_(self, **changes) -> "LoInstance":
        fields = dict(vars=self.vars, constraints=self.constraints, pi=self.pi, k=self.k)
        fields.update(changes)
        return LoInstance(**fields)

    @classmethod
    def from_names(cls, triples: Sequence, pi: PiSet = PI0, k: int = 0,
                   names: Sequence[str] | None = None) -> "LoInstance":
        """Build from name triples ``(a, b, c)`` or ``(a, b, c, mult)``.

        Variables are numbered by first appearance unless ``names`` is given.
        """
        order = list(names) if names is not None else []
        seen = set(order)
        for t in triples:
            for nm in t[:3]:
                if nm not in seen:
                    seen.add(nm)
                    order.append(nm)
        table = VarTable(tuple(order))
        cons = []
        for t in triples:
            mult = t[3] if len(t) > 3 else 1
            cons.append(TripleConstraint(*(table.index(x) for x in t[:3]), mult))
        return cls(table, tuple(cons), pi, k)

    def named(self) -> list[tuple[str, str, str, int]]:
        nm = self.vars.names
        return [(nm[c.v1], nm[c.v2], nm[c.v3], c.mult) for c in self.constraints]


@dataclass(frozen=True)
class LinearOrdering:
    """``positions[i]`` is the variable placed at position ``i`` (0-based)."""

    positions: tuple[int, ...]
    _rank: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pos = tuple(self.positions)
        object.__setattr__(self, "positions", pos)
        if sorted(pos) != list(range(len(pos))):
            raise InvalidInstanceError(f"not a permutation: {pos}")
        rank = [0] * len(pos)
        for i, v in enumerate(pos):
            rank[v] = i
        object.__setattr__(self, "_rank", tuple(rank))

    def __len__(self) -> int:
        return len(self.positions)

    def rank(self, v: int) -> int:
        try:
            return self._rank[v]
        except IndexError:
            raise InvalidInstanceError(f"variable {v} not placed by ordering") from None

    @classmethod
    def from_names(cls, table: VarTable, names: Sequence[str]) -> "LinearOrdering":
        return cls(tuple(table.index(x) for x in names))

    def names(self, table: VarTable) -> list[str]:
        return [table.names[v] for v in self.positions]

    def reversed(self) -> "LinearOrdering":
        return LinearOrdering(self.positions[::-1])


@dataclass(frozen=True)
class DeviationReport:
    satisfied: int
    average: Fraction
    deviation: Fraction
    witness: LinearOrdering | None = None


def pi_satisfies(c: TripleConstraint, alpha: LinearOrdering, pi: PiSet) -> bool:
    idx = pattern_index(alpha.rank(c.v1), alpha.rank(c.v2), alpha.rank(c.v3))
    return idx in pi


def count_satisfied(inst: LoInstance, alpha: LinearOrdering) -> int:
    if len(alpha) != inst.n:
        raise DimensionError(f"ordering has length {len(alpha)}, instance has {inst.n} variables")
    return sum(c.mult for c in inst.constraints if pi_satisfies(c, alpha, inst.pi))


def deviation(inst: LoInstance, alpha: LinearOrdering) -> Fraction:
    return count_satisfied(inst, alpha) - inst.average


# ---------------------------------------------------------------------------
# Symmetry classes
# ---------------------------------------------------------------------------

# group elements: (sigma, reverse); sigma renames letters 1,2,3 -> sigma[0..2]
SYMMETRIES = tuple((s, rev) for s in permutations((1, 2, 3)) for rev in (False, True))


def act_on_word(sym, word: str) -> str:
    sigma, rev = sym
    out = "".join(str(sigma[int(ch) - 1]) for ch in word)
    return out[::-1] if rev else out


def act_on_mask(sym, mask: int) -> int:
    out = 0
    for i, w in enumerate(PERM_WORDS):
        if mask >> i & 1:
            out |= 1 << perm_index(act_on_word(sym, w))
    return out


def _build_class_table():
    rep_to_class = {}
    for cid, pi in PI_CLASSES.items():
        rep_to_class[pi.mask] = cid
    table = [None] * 64
    to_rep = [None] * 64
    for mask in range(64):
        for sym in SYMMETRIES:
            img = act_on_mask(sym, mask)
            if img in rep_to_class:
                table[mask] = rep_to_class[img]
                to_rep[mask] = sym
                break
    return tuple(table), tuple(to_rep)


_CLASS_OF_MASK, _SYM_TO_REP = _build_class_table()


def pi_orbit(pi: PiSet) -> frozenset[int]:
    return frozenset(act_on_mask(sym, pi.mask) for sym in SYMMETRIES)


def canonical_pi_class(pi: PiSet) -> int:
    """Index i of the Table-1 problem Pi_i whose symmetry orbit contains ``pi``."""
    cid = _CLASS_OF_MASK[pi.mask]
    if cid is None:  # pragma: no cover - ruled out by the orbit check
        raise AssertionError(f"mask {pi.mask} has no class representative")
    return cid


def symmetry_to_representative(pi: PiSet):
    """A symmetry ``(sigma, reverse)`` carrying ``pi`` onto its class representative."""
    return _SYM_TO_REP[pi.mask]


def to_class_representative(inst: LoInstance) -> LoInstance:
    """Equivalent instance whose Pi-set is exactly the Table-1 representative.

    Renaming letters by sigma is realised by permuting the entries of every
    triple; reversing words needs no change to the triples, since an ordering
    and its reverse have reversed patterns.
    """
    sigma, _rev = symmetry_to_representative(inst.pi)
    # pattern w' = sigma o w is achieved by c' = (c_{tau(1)}, c_{tau(2)}, c_{tau(3)}), tau = sigma^-1
    tau = [0, 0, 0]
    for i, s in enumerate(sigma):
        tau[s - 1] = i
    cons = []
    for c in inst.constraints:
        vs = c.vars
        cons.append(TripleConstraint(vs[tau[0]], vs[tau[1]], vs[tau[2]], c.mult))
    cid = canonical_pi_class(inst.pi)
    return inst.with_(constraints=tuple(cons), pi=PI_CLASSES[cid])


# ---------------------------------------------------------------------------
# Mixed (arc + betweenness) instances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    mult: int = 1

    def __post_init__(self):
        if self.tail == self.head:
            raise InvalidInstanceError("arc tail and head must differ")
        if self.mult < 1:
            raise InvalidInstanceError("multiplicity must be positive")


@dataclass(frozen=True)
class BtwConstraint:
    """``middle`` lies between the two ``outer`` variables (stored sorted)."""

    middle: int
    outer: tuple[int, int]
    mult: int = 1

    def __post_init__(self):
        a, b = self.outer
        if a == b or self.middle in (a, b):
            raise InvalidInstanceError(f"bad betweenness constraint {self.middle},{self.outer}")
        if self.mult < 1:
            raise InvalidInstanceError("multiplicity must be positive")
        object.__setattr__(self, "outer", (min(a, b), max(a, b)))


@dataclass(frozen=True)
class MixedInstance:
    vars: VarTable
    arcs: tuple[Arc, ...] = ()
    btws: tuple[BtwConstraint, ...] = ()
    k: int = 0

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))
        object.__setattr__(self, "btws", tuple(self.btws))
        n = len(self.vars)
        for a in self.arcs:
            if not (0 <= a.tail < n and 0 <= a.head < n):
                raise InvalidInstanceError("arc refers to unknown variable")
        for b in self.btws:
            if not all(0 <= x < n for x in (b.middle, *b.outer)):
                raise InvalidInstanceError("betweenness constraint refers to unknown variable")

    @property
    def n(self) -> int:
        return len(self.vars)

    @property
    def r(self) -> int:
        return sum(a.mult for a in self.arcs)

    @property
    def s(self) -> int:
        return sum(b.mult for b in self.btws)

    @property
    def average(self) -> Fraction:
        return Fraction(self.r, 2) + Fraction(self.s, 3)

    def with_(self, **changes) -> "MixedInstance":
        fields = dict(vars=self.vars, arcs=self.arcs, btws=self.btws, k=self.k)
        fields.update(changes)
        return MixedInstance(**fields)

    @classmethod
    def from_names(cls, arcs=(), btws=(), k: int = 0, names=None) -> "MixedInstance":
        """``arcs``: (tail, head[, mult]); ``btws``: (middle, a, b[, mult])."""
        order = list(names) if names is not None else []
        seen = set(order)

        def see(nm):
            if nm not in seen:
                seen.add(nm)
                order.append(nm)

        for a in arcs:
            see(a[0]), see(a[1])
        for b in btws:
            see(b[0]), see(b[1]), see(b[2])
        table = VarTable(tuple(order))
        ix = table.index
        arc_objs = [Arc(ix(a[0]), ix(a[1]), a[2] if len(a) > 2 else 1) for a in arcs]
        btw_objs = [BtwConstraint(ix(b[0]), (ix(b[1]), ix(b[2])), b[3] if len(b) > 3 else 1)
                    for b in btws]
        return cls(table, tuple(arc_objs), tuple(btw_objs), k)


def arc_satisfied(a: Arc, alpha: LinearOrdering) -> bool:
    return alpha.rank(a.tail) < alpha.rank(a.head)


def btw_satisfied(b: BtwConstraint, alpha: LinearOrdering) -> bool:
    lo, hi = sorted((alpha.rank(b.outer[0]), alpha.rank(b.outer[1])))
    return lo < alpha.rank(b.middle) < hi


def mixed_satisfied(mixed: MixedInstance, alpha: LinearOrdering) -> tuple[int, int]:
    """(satisfied arc multiplicity, satisfied betweenness multiplicity)."""
    if len(alpha) != mixed.n:
        raise DimensionError(f"ordering has length {len(alpha)}, instance has {mixed.n} variables")
    sat_a = sum(a.mult for a in mixed.arcs if arc_satisfied(a, alpha))
    sat_b = sum(b.mult for b in mixed.btws if btw_satisfied(b, alpha))
    return sat_a, sat_b


def mixed_deviation(mixed: MixedInstance, alpha: LinearOrdering) -> Fraction:
    sa, sb = mixed_satisfied(mixed, alpha)
    return sa + sb - mixed.average
