"""Exact maximum-deviation solvers.

Two independent routes are provided and used as oracles for each other:

* :func:`max_dev_bruteforce` enumerates all n! orderings for an arbitrary
  Pi-set.
* :func:`max_dev_dp` normalises to Linear Ordering, splits every triple into
  two arcs and one betweenness constraint and runs a dynamic program over
  subsets of placed variables (:func:`max_sat_mixed`).

Both report the lexicographically smallest optimal ordering.
"""
from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import (
    CODE_TO_PERM,
    DeviationReport,
    LimitExceededError,
    LinearOrdering,
    LoInstance,
    MixedInstance,
)


@dataclass(frozen=True)
class SolverLimits:
    max_brute_n: int = 10
    max_dp_n: int = 24

    def __post_init__(self):
        if self.max_brute_n < 3 or self.max_dp_n < 3:
            raise ValueError("solver limits must be at least 3")


DEFAULT_LIMITS = SolverLimits()

_CODE_LUT = np.zeros(8, dtype=np.int8)
for _code, _idx in CODE_TO_PERM.items():
    _CODE_LUT[_code] = _idx


@lru_cache(maxsize=4)
def lex_permutations(n: int) -> np.ndarray:
    """All permutations of ``range(n)`` as rows, in lexicographic order."""
    perms = np.zeros((1, 0), dtype=np.int8)
    for size in range(1, n + 1):
        # prepend each possible first element f; shift the tail values >= f up by one
        blocks = []
        for f in range(size):
            tail = perms + (perms >= f)
            head = np.full((tail.shape[0], 1), f, dtype=np.int8)
            blocks.append(np.hstack([head, tail]).astype(np.int8))
        perms = np.vstack(blocks)
    perms.setflags(write=False)
    return perms


def _satisfied_counts(inst: LoInstance, perms: np.ndarray) -> np.ndarray:
    rank = np.argsort(perms, axis=1).astype(np.int8)
    lut = np.array([(inst.pi.mask >> int(i)) & 1 for i in _CODE_LUT], dtype=np.int64)
    total = np.zeros(perms.shape[0], dtype=np.int64)
    grouped = defaultdict(int)
    for c in inst.constraints:
        grouped[c.vars] += c.mult
    for (a, b, c), mult in grouped.items():
        pa, pb, pc = rank[:, a], rank[:, b], rank[:, c]
        code = 4 * (pa < pb) + 2 * (pb < pc) + (pa < pc)
        total += mult * lut[code]
    return total


def max_dev_bruteforce(inst: LoInstance, limits: SolverLimits = DEFAULT_LIMITS,
                       threads: int = 1) -> DeviationReport:
    n = inst.n
    if n > limits.max_brute_n:
        raise LimitExceededError(f"brute force limited to n <= {limits.max_brute_n}, got {n}")
    if inst.pi.is_trivial or n == 0:
        sat = inst.m if inst.pi.mask == 63 else 0
        return DeviationReport(sat, inst.average, sat - inst.average,
                               LinearOrdering(tuple(range(n))))
    perms = lex_permutations(n)
    if threads > 1 and n > 1:
        # blocks by first element keep lexicographic order; the earliest best block wins
        block = perms.shape[0] // n
        chunks = [perms[i * block:(i + 1) * block] for i in range(n)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda ch: _satisfied_counts(inst, ch), chunks))
        counts = np.concatenate(parts)
    else:
        counts = _satisfied_counts(inst, perms)
    best = int(np.argmax(counts))
    sat = int(counts[best])
    witness = LinearOrdering(tuple(int(x) for x in perms[best]))
    return DeviationReport(sat, inst.average, sat - inst.average, witness)


def _gain_terms(mixed: MixedInstance):
    """Per variable x: aggregated arcs into x and betweenness constraints with middle x."""
    arcs_in = [defaultdict(int) for _ in range(mixed.n)]
    btw_mid = [defaultdict(int) for _ in range(mixed.n)]
    for a in mixed.arcs:
        arcs_in[a.head][a.tail] += a.mult
    for b in mixed.btws:
        btw_mid[b.middle][b.outer] += b.mult
    return arcs_in, btw_mid


def placement_gain(mixed: MixedInstance, placed: frozenset[int] | set[int], x: int) -> int:
    """Satisfied multiplicity decided by placing ``x`` right after the set ``placed``.

    An arc is decided when its head is placed, a betweenness constraint when its
    middle is placed; only membership in ``placed`` matters, not its order.
    """
    gain = 0
    for a in mixed.arcs:
        if a.head == x and a.tail in placed:
            gain += a.mult
    for b in mixed.btws:
        if b.middle == x and ((b.outer[0] in placed) != (b.outer[1] in placed)):
            gain += b.mult
    return gain


def _gain_vector(masks: np.ndarray, x: int, arcs_in, btw_mid) -> np.ndarray:
    g = np.zeros(masks.shape[0], dtype=np.int64)
    for u, mult in arcs_in[x].items():
        g += mult * ((masks >> u) & 1)
    for (a, b), mult in btw_mid[x].items():
        g += mult * (((masks >> a) ^ (masks >> b)) & 1)
    return g


def max_sat_mixed(mixed: MixedInstance, limits: SolverLimits = DEFAULT_LIMITS
                  ) -> tuple[int, LinearOrdering]:
    """Maximum satisfied multiplicity (arcs + betweenness) and a lex-smallest witness."""
    n = mixed.n
    if n > limits.max_dp_n:
        raise LimitExceededError(f"subset DP limited to n <= {limits.max_dp_n}, got {n}")
    if n == 0:
        return 0, LinearOrdering(())
    arcs_in, btw_mid = _gain_terms(mixed)
    full = (1 << n) - 1
    all_masks = np.arange(1 << n, dtype=np.int64)
    popcount = np.zeros(1 << n, dtype=np.int8)
    for v in range(n):
        popcount += ((all_masks >> v) & 1).astype(np.int8)
    order = np.argsort(popcount, kind="stable")
    starts = np.searchsorted(popcount[order], np.arange(n + 2))

    # best[S] = most that can still be gained placing the complement of S after S
    best = np.full(1 << n, -1, dtype=np.int64)
    best[full] = 0
    for size in range(n - 1, -1, -1):
        masks = order[starts[size]:starts[size + 1]]
        cur = np.full(masks.shape[0], -1, dtype=np.int64)
        for x in range(n):
            free = ((masks >> x) & 1) == 0
            sub = masks[free]
            cand = _gain_vector(sub, x, arcs_in, btw_mid) + best[sub | (1 << x)]
            cur[free] = np.maximum(cur[free], cand)
        best[masks] = cur
    del all_masks, popcount, order

    # greedy reconstruction; smallest x attaining the optimum gives the lex-smallest ordering
    placed, seq = 0, []
    for _ in range(n):
        target = int(best[placed])
        for x in range(n):
            if placed >> x & 1:
                continue
            g = int(_gain_vector(np.array([placed], dtype=np.int64), x, arcs_in, btw_mid)[0])
            if g + int(best[placed | (1 << x)]) == target:
                seq.append(x)
                placed |= 1 << x
                break
    return int(best[0]), LinearOrdering(tuple(seq))


def max_dev_mixed(mixed: MixedInstance, limits: SolverLimits = DEFAULT_LIMITS
                  ) -> tuple[Fraction, LinearOrdering]:
    sat, witness = max_sat_mixed(mixed, limits)
    return sat - mixed.average, witness


def max_dev_dp(inst: LoInstance, limits: SolverLimits = DEFAULT_LIMITS) -> DeviationReport:
    from .decompose import decompose_lo, to_linear_ordering

    n = inst.n
    if n > limits.max_dp_n:
        raise LimitExceededError(f"subset DP limited to n <= {limits.max_dp_n}, got {n}")
    if inst.pi.is_trivial:
        sat = inst.m if inst.pi.mask == 63 else 0
        return DeviationReport(sat, inst.average, sat - inst.average,
                               LinearOrdering(tuple(range(n))))
    lo = to_linear_ordering(inst)
    mixed = decompose_lo(lo)
    total, witness = max_sat_mixed(mixed, limits)
    # per ordering: 2*sat(C) = satA' + satA'' + satB - m0
    twice = total - lo.m
    assert twice % 2 == 0, "decomposition identity violated"
    sat = twice // 2
    return DeviationReport(sat, inst.average, sat - inst.average, witness)


def decide_above_average(inst: LoInstance, limits: SolverLimits = DEFAULT_LIMITS) -> bool:
    if inst.k == 0:
        return True
    return max_dev_dp(inst, limits).deviation >= inst.k


def decide_mixed(mixed: MixedInstance, limits: SolverLimits = DEFAULT_LIMITS) -> bool:
    """Is there an ordering satisfying at least r/2 + s/3 + k arcs and constraints?"""
    if mixed.k == 0:
        return True
    return max_dev_mixed(mixed, limits)[0] >= mixed.k


def max_satisfied(inst: LoInstance, limits: SolverLimits = DEFAULT_LIMITS) -> int:
    return max_dev_dp(inst, limits).satisfied
