"""Plain-text instance files.

::

    # comment
    pi 123,321
    k 1
    con u v w
    con v w x x2

A file holds either ``con`` lines (a triple instance) or ``arc``/``btw``
lines (a mixed instance), never both.  Variables are numbered by first
appearance.  Variables occurring in no constraint cannot be written.
"""
from __future__ import annotations

import re
from pathlib import Path

from .core import (
    PI0,
    Arc,
    BtwConstraint,
    InvalidInstanceError,
    LoInstance,
    MixedInstance,
    PiSet,
    TripleConstraint,
    VarTable,
    perm_index,
)


class ParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


_MULT = re.compile(r"x([0-9]+)")
_ARITY = {"con": 3, "arc": 2, "btw": 3}


def parse_pi(text: str) -> PiSet:
    words = [w.strip() for w in text.split(",")]
    if not words or any(len(w) != 3 for w in words):
        raise ValueError(f"bad Pi-set {text!r}: expected comma-separated words like 123")
    try:
        idx = [perm_index(w) for w in words]
    except (KeyError, ValueError):
        raise ValueError(f"bad Pi-set {text!r}: words must be permutations of 123") from None
    if len(set(idx)) != len(idx):
        raise ValueError(f"bad Pi-set {text!r}: repeated word")
    return PiSet.from_words(words)


def parse(source: str | Path) -> LoInstance | MixedInstance:
    """Parse instance text, or the file at ``source`` if it is a :class:`Path`."""
    text = source.read_text(encoding="utf-8") if isinstance(source, Path) else source
    names: list[str] = []
    ids: dict[str, int] = {}
    pi = None
    pi_line = 0
    k = None
    rows = {"con": [], "arc": [], "btw": []}

    def var(tok):
        if tok not in ids:
            ids[tok] = len(names)
            names.append(tok)
        return ids[tok]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        if head == "pi":
            if pi is not None:
                raise ParseError(lineno, "duplicate pi directive")
            if len(rest) != 1:
                raise ParseError(lineno, "pi takes one comma-separated list of words")
            try:
                pi = parse_pi(rest[0])
                pi_line = lineno
            except ValueError as exc:
                raise ParseError(lineno, str(exc)) from None
        elif head == "k":
            if k is not None:
                raise ParseError(lineno, "duplicate k directive")
            if len(rest) != 1 or not rest[0].isdigit():
                raise ParseError(lineno, "k takes one non-negative integer")
            k = int(rest[0])
        elif head in _ARITY:
            arity = _ARITY[head]
            mult = 1
            if len(rest) == arity + 1:
                mm = _MULT.fullmatch(rest[-1])
                if not mm:
                    raise ParseError(lineno, f"bad multiplicity {rest[-1]!r}")
                mult = int(mm.group(1))
                if mult < 1:
                    raise ParseError(lineno, "multiplicity must be at least 1")
                rest = rest[:-1]
            if len(rest) != arity:
                raise ParseError(lineno, f"{head} takes {arity} variables")
            if len(set(rest)) != arity:
                raise ParseError(lineno, f"repeated variable in {head}")
            rows[head].append((lineno, [var(t) for t in rest], mult))
        else:
            raise ParseError(lineno, f"unknown directive {head!r}")

    if rows["con"] and (rows["arc"] or rows["btw"]):
        first_mixed = min(r[0] for r in rows["arc"] + rows["btw"])
        raise ParseError(first_mixed, "file mixes con lines with arc/btw lines")
    table = VarTable(tuple(names))
    k = 0 if k is None else k
    if rows["arc"] or rows["btw"]:
        if pi is not None:
            raise ParseError(pi_line, "pi directive is meaningless for an arc/btw instance")
        arcs = tuple(Arc(a, b, m) for _, (a, b), m in rows["arc"])
        btws = tuple(BtwConstraint(mid, (a, b), m) for _, (mid, a, b), m in rows["btw"])
        return MixedInstance(table, arcs, btws, k)
    cons = tuple(TripleConstraint(*vs, m) for _, vs, m in rows["con"])
    return LoInstance(table, cons, PI0 if pi is None else pi, k)


def _mult(m: int) -> str:
    return f" x{m}" if m != 1 else ""


def serialize(inst: LoInstance | MixedInstance, header: list[str] | tuple = ()) -> str:
    """Text form of ``inst``; ``header`` lines are written as ``#`` comments.

    Variables are renumbered by first appearance on reading, so an instance
    whose variable order differs from first-appearance order round-trips up
    to that renumbering.
    """
    out = [f"# {h}" if h else "#" for h in header]
    nm = inst.vars.names
    for name in nm:
        if not name or any(ch.isspace() for ch in name) or name.startswith("#"):
            raise InvalidInstanceError(f"variable name {name!r} cannot be written")
    if isinstance(inst, LoInstance):
        if not len(inst.pi):
            raise InvalidInstanceError("the empty Pi-set cannot be written")
        out.append("pi " + ",".join(inst.pi.words()))
        out.append(f"k {inst.k}")
        for c in inst.constraints:
            out.append(f"con {nm[c.v1]} {nm[c.v2]} {nm[c.v3]}{_mult(c.mult)}")
    else:
        out.append(f"k {inst.k}")
        arc_lines = [((a.tail, a.head), f"arc {nm[a.tail]} {nm[a.head]}{_mult(a.mult)}")
                     for a in inst.arcs]
        btw_lines = [((b.middle, *b.outer),
                      f"btw {nm[b.middle]} {nm[b.outer[0]]} {nm[b.outer[1]]}{_mult(b.mult)}")
                     for b in inst.btws]
        out += _interleave(arc_lines, btw_lines, inst.n)
    return "\n".join(out) + "\n"


def _interleave(first, second, n):
    """Merge two line lists, keeping each in order, so that variables appear in id order.

    Falls back to ``first + second`` when no such merge exists.
    """
    seen_after = {}

    def walk(i, j, nxt):
        # nxt is determined by (i, j): the count of variables seen so far
        if (i, j) in seen_after:
            return seen_after[(i, j)]
        if i == len(first) and j == len(second):
            return [] if nxt == n else None
        result = None
        for src, idx in ((first, i), (second, j)):
            if idx == len(src):
                continue
            vs, line = src[idx]
            cur = nxt
            ok = True
            for v in vs:
                if v == cur:
                    cur += 1
                elif v > cur:
                    ok = False
                    break
            if ok:
                rest = walk(i + (src is first), j + (src is second), cur)
                if rest is not None:
                    result = [line] + rest
                    break
        seen_after[(i, j)] = result
        return result

    merged = walk(0, 0, 0) if len(first) + len(second) < 500 else None
    return merged if merged is not None else [line for _, line in first + second]


def canonical(inst: LoInstance | MixedInstance) -> LoInstance | MixedInstance:
    """The instance as it reads back from its own serialization."""
    return parse(serialize(inst))
