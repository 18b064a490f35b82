"""End-to-end verification routines.

Each ``check_*`` function runs one family of exact checks on seeded
instances and returns a :class:`CheckResult`.  Sizes are parameters so the
same code serves the full test suite and the quicker ``selfcheck`` command.
"""
from __future__ import annotations

import math
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path

import numpy as np

from . import moments as mom
from .core import (
    PI0,
    PI_CLASSES,
    SYMMETRIES,
    Arc,
    BtwConstraint,
    LinearOrdering,
    LoInstance,
    MixedInstance,
    PiSet,
    act_on_mask,
    canonical_pi_class,
    count_satisfied,
    mixed_deviation,
    mixed_satisfied,
)
from .decompose import (
    DEFAULT_C,
    KernelConfig,
    Verdict,
    decompose_lo,
    decompose_parts,
    kernelize_lo,
    recompose_kernel,
    reduce_mixed,
)
from .hardgen import (
    RandSpec,
    check_subset_asymmetry,
    check_symmetric_no_parallel,
    cycles_to_lo_instance,
    gen_random,
    gen_random_mixed,
    generate_g,
)
from .instancefile import parse, serialize
from .solver import (
    decide_above_average,
    decide_mixed,
    lex_permutations,
    max_dev_bruteforce,
    max_dev_dp,
    max_sat_mixed,
    max_satisfied,
)
from . import transforms as tr


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"criterion {self.number:2d} [{status}] {self.name} ({self.seconds:.2f}s)"


def _timed(number: int, name: str, limit: float | None = None):
    def wrap(fn):
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            ok, detail = fn(*args, **kwargs)
            dt = time.perf_counter() - t0
            if limit is not None and dt >= limit:
                ok = False
                detail = {**detail, "time_limit_exceeded": limit}
            return CheckResult(number, name, bool(ok), detail, dt)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


def _orderings(n: int):
    for row in lex_permutations(n):
        yield LinearOrdering(tuple(int(x) for x in row))


def _class_members() -> dict[int, list[int]]:
    out = defaultdict(list)
    for mask in range(64):
        out[canonical_pi_class(PiSet(mask))].append(mask)
    return out


# ---------------------------------------------------------------------------

@_timed(1, "symmetry classes", limit=1.0)
def check_symmetry_classes():
    """Orbits of all 64 masks, computed directly, against the class table."""
    orbit_of = {}
    orbits = []
    for mask in range(64):
        if mask in orbit_of:
            continue
        orb = frozenset(act_on_mask(s, mask) for s in SYMMETRIES)
        for x in orb:
            orbit_of[x] = len(orbits)
        orbits.append(orb)
    rep_orbits = {cid: orbit_of[pi.mask] for cid, pi in PI_CLASSES.items()}
    ok = len(orbits) == 13 and len(set(rep_orbits.values())) == 13
    mismatched = [m for m in range(64)
                  if rep_orbits[canonical_pi_class(PiSet(m))] != orbit_of[m]]
    nontrivial = [cid for cid, pi in PI_CLASSES.items() if not pi.is_trivial]
    ok = ok and not mismatched and len(nontrivial) == 11
    return ok, {"orbits": len(orbits), "mismatched_masks": mismatched,
                "orbit_sizes": sorted(len(o) for o in orbits)}


@_timed(2, "brute force and subset DP agree", limit=120.0)
def check_oracle_equivalence(count: int = 200, n_range=(3, 8), m_range=(1, 12), seed: int = 2):
    rng = np.random.default_rng(seed)
    members = _class_members()
    bad = []
    for idx in range(count):
        cid = idx % 13
        mask = int(rng.choice(members[cid]))
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        m = int(rng.integers(m_range[0], m_range[1] + 1))
        inst = gen_random(RandSpec(n, m, PiSet(mask), seed=int(rng.integers(2**32))))
        a, b = max_dev_bruteforce(inst), max_dev_dp(inst)
        if a.deviation != b.deviation or a.satisfied != b.satisfied:
            bad.append(idx)
    return not bad, {"instances": count, "disagreements": bad}


@_timed(3, "decomposition identity on every ordering")
def check_decomposition_identity(count: int = 40, max_n: int = 6, seed: int = 3):
    rng = np.random.default_rng(seed)
    bad, checked = 0, 0
    for _ in range(count):
        n = int(rng.integers(3, max_n + 1))
        inst = gen_random(RandSpec(n, int(rng.integers(1, 10)), seed=int(rng.integers(2**32))))
        first, second, btws = decompose_parts(inst)
        a1 = MixedInstance(inst.vars, tuple(first))
        a2 = MixedInstance(inst.vars, tuple(second))
        bb = MixedInstance(inst.vars, (), tuple(btws))
        for alpha in _orderings(n):
            lhs = 2 * count_satisfied(inst, alpha)
            rhs = (mixed_satisfied(a1, alpha)[0] + mixed_satisfied(a2, alpha)[0]
                   + mixed_satisfied(bb, alpha)[1] - inst.m)
            checked += 1
            bad += lhs != rhs
    return bad == 0, {"orderings_checked": checked, "violations": bad}


def _seeded_mixed_with_groups(rng, n: int) -> MixedInstance:
    """Random mixed instance with some opposite pairs and complete 3-sets planted."""
    base = gen_random_mixed(n, int(rng.integers(0, 6)), int(rng.integers(0, 6)),
                            seed=int(rng.integers(2**32)))
    arcs, btws = list(base.arcs), list(base.btws)
    for _ in range(int(rng.integers(0, 3))):
        u, v = (int(x) for x in rng.choice(n, 2, replace=False))
        m = int(rng.integers(1, 3))
        arcs += [Arc(u, v, m), Arc(v, u, int(rng.integers(1, 3)))]
    for _ in range(int(rng.integers(0, 3))):
        a, b, c = (int(x) for x in rng.choice(n, 3, replace=False))
        btws += [BtwConstraint(a, (b, c), int(rng.integers(1, 3))),
                 BtwConstraint(b, (a, c), int(rng.integers(1, 3))),
                 BtwConstraint(c, (a, b), int(rng.integers(1, 3)))]
    order = rng.permutation(len(arcs))
    arcs = [arcs[i] for i in order]
    return base.with_(arcs=tuple(arcs), btws=tuple(btws))


def _stepwise_reduce(mixed: MixedInstance, rng) -> tuple[Counter, Counter]:
    """Delete one opposite pair or complete 3-set at a time, in random order."""
    arcs = Counter()
    for a in mixed.arcs:
        arcs[(a.tail, a.head)] += a.mult
    btws = Counter()
    for b in mixed.btws:
        btws[(b.middle, b.outer)] += b.mult
    while True:
        moves = []
        for (u, v) in arcs:
            if u < v and arcs[(u, v)] > 0 and arcs[(v, u)] > 0:
                moves.append(("arc", (u, v)))
        triples = {frozenset((mid, *outer)) for (mid, outer), m in btws.items() if m > 0}
        for t in triples:
            keys = [(x, tuple(sorted(t - {x}))) for x in sorted(t)]
            if all(btws[key] > 0 for key in keys):
                moves.append(("btw", tuple(keys)))
        if not moves:
            break
        kind, item = moves[int(rng.integers(len(moves)))]
        if kind == "arc":
            u, v = item
            arcs[(u, v)] -= 1
            arcs[(v, u)] -= 1
        else:
            for key in item:
                btws[key] -= 1
    return +arcs, +btws


@_timed(4, "reduction rules preserve deviation and are confluent")
def check_reduction_soundness(count: int = 40, max_n: int = 6, shuffles: int = 5, seed: int = 4):
    rng = np.random.default_rng(seed)
    dev_bad, confl_bad = 0, 0
    for _ in range(count):
        n = int(rng.integers(3, max_n + 1))
        mixed = _seeded_mixed_with_groups(rng, n)
        reduced, _, _ = reduce_mixed(mixed)
        for alpha in _orderings(n):
            dev_bad += mixed_deviation(mixed, alpha) != mixed_deviation(reduced, alpha)
        want_a = Counter({(a.tail, a.head): a.mult for a in reduced.arcs})
        want_b = Counter({(b.middle, b.outer): b.mult for b in reduced.btws})
        for _ in range(shuffles):
            got_a, got_b = _stepwise_reduce(mixed, rng)
            confl_bad += (got_a, got_b) != (want_a, want_b)
    return dev_bad == 0 and confl_bad == 0, {"deviation_violations": dev_bad,
                                             "confluence_violations": confl_bad}


@_timed(5, "kernel pipeline")
def check_kernel_pipeline(count: int = 50, max_n: int = 6, low_c_count: int = 50, seed: int = 5):
    """Answer preservation and the doubling of deviation at the default constant,
    then the threshold branch with c = 1 on instances with r + s >= k^2."""
    rng = np.random.default_rng(seed)
    answer_bad, dev_bad = [], []
    for idx in range(count):
        n = int(rng.integers(3, max_n + 1))
        k = idx % 4
        inst = gen_random(RandSpec(n, int(rng.integers(1, 10)), seed=int(rng.integers(2**32)), k=k))
        kres = kernelize_lo(inst)
        got = True if kres.verdict is Verdict.YES else decide_above_average(kres.kernel)
        if got != decide_above_average(inst):
            answer_bad.append(idx)
        recomposed = recompose_kernel(kres.mixed, kres.mixed.k)
        if 2 * max_dev_dp(inst).deviation != max_dev_dp(recomposed).deviation:
            dev_bad.append(idx)

    low = KernelConfig(Fraction(1), allow_override=True)
    tried, branch_bad = 0, []
    attempts = 0
    while tried < low_c_count and attempts < 50 * low_c_count:
        attempts += 1
        n = int(rng.integers(3, max_n + 1))
        k = int(rng.integers(1, 4))
        inst = gen_random(RandSpec(n, int(rng.integers(1, 13)), seed=int(rng.integers(2**32)), k=k))
        kres = kernelize_lo(inst, low)
        if kres.stats.r + kres.stats.s < k * k:
            continue
        tried += 1
        yes_branch = kres.verdict is Verdict.YES
        if yes_branch != (max_dev_dp(inst).deviation >= k):
            branch_bad.append(tried - 1)
    ok = not answer_bad and not dev_bad and not branch_bad
    return ok, {"default_c": str(DEFAULT_C), "answer_mismatches": answer_bad,
                "deviation_mismatches": dev_bad, "c1_instances": tried,
                "c1_branch_mismatches": len(branch_bad)}


# ---------------------------------------------------------------------------
# Transformations
# ---------------------------------------------------------------------------

def _transform_cases(rng, per_op: int):
    """Yield (operation name, source answer, transform result).

    Parameters are drawn at or just past each source instance's optimum so
    both answers occur.
    """
    def rmixed(n, r, s):
        return gen_random_mixed(n, r, s, seed=int(rng.integers(2**32)))

    def rlo(n, m, cid):
        return gen_random(RandSpec(n, m, PI_CLASSES[cid], seed=int(rng.integers(2**32))))

    def near(best):
        return max(0, math.floor(best) + int(rng.integers(0, 2)))

    for _ in range(per_op):
        n = int(rng.integers(3, 6))
        dg = rmixed(n, int(rng.integers(1, 7)), 0)
        opt = max_sat_mixed(dg)[0]
        k = near(opt)
        yield "asd_to_pi1", opt >= k, tr.asd_to_pi1(dg, k)
        yield "asd_to_pi2", opt >= k, tr.asd_to_pi2(dg, k)

        c1 = rlo(n, int(rng.integers(1, 7)), 1)
        opt = max_satisfied(c1)
        k = near(opt)
        yield "pi1_to_pi3", opt >= k, tr.pi1_to_pi3(c1, k)

        # redraw until Part 1 yields an instance for the rest of the chain
        part1 = None
        while part1 is None or part1.trivial:
            mixed = rmixed(int(rng.integers(3, 5)), int(rng.integers(0, 4)),
                           int(rng.integers(1, 4)))
            mixed = mixed.with_(k=near(max_sat_mixed(mixed)[0] - mixed.average))
            src = decide_mixed(mixed)
            part1 = tr.mixed_to_betweenness_aa(mixed)
            yield "mixed_to_betweenness_aa", src, part1
        p, d = part1.notes["p"], part1.notes["d"]
        b_inst = part1.instance
        c1 = tr.betweenness_to_pi1_aa(b_inst, p, d)
        yield "betweenness_to_pi1_aa", src, c1
        yield "pi1_to_pi3_aa", src, tr.pi1_to_pi3_aa(c1.instance, p, c1.k_out)
        for j in (4, 8, 9, 10):
            yield f"betweenness_to_pi_j[{j}]", src, tr.betweenness_to_pi_j(b_inst, j)
        yield "betweenness_to_pi6", src, tr.betweenness_to_pi6(b_inst, p, d)

        for cid, fn in ((2, tr.pi2_roundtrip_kernel), (7, tr.pi7_roundtrip_kernel)):
            inst = rlo(n, int(rng.integers(1, 8)), cid)
            inst = inst.with_(k=near(max_dev_dp(inst).deviation))
            yield fn.__name__, decide_above_average(inst), fn(inst)

        cid = int(rng.integers(0, 11))
        inst = rlo(int(rng.integers(3, 6)), int(rng.integers(1, 6)), cid)
        inst = inst.with_(k=near(max_dev_dp(inst).deviation))
        targets = [cid] if cid in (2, 7) else [j for j in range(11) if j not in (2, 7)]
        j = targets[int(rng.integers(len(targets)))]
        yield "bikernel", decide_above_average(inst), tr.bikernel(inst, j)


@_timed(6, "transformations preserve answers; gadget count maps")
def check_transforms(per_op: int = 20, seed: int = 6, require_both: bool = True):
    rng = np.random.default_rng(seed)
    seen = Counter()
    answers = defaultdict(set)
    bad = []
    for name, src, res in _transform_cases(rng, per_op):
        seen[name] += 1
        answers[name].add(src)
        if tr.transform_answer(res) != src:
            bad.append(name)
    gadget_bad = []
    for j, (hit, miss) in tr.GADGET_COUNTS.items():
        counts = tr.gadget_satisfied_counts(j)
        if counts != {True: {hit}, False: {miss}}:
            gadget_bad.append(j)
    enough = all(c >= per_op for c in seen.values())
    both = all(v == {False, True} for v in answers.values())
    ok = not bad and not gadget_bad and enough and (both or not require_both)
    return ok, {"cases": dict(sorted(seen.items())), "answer_mismatches": bad,
                "gadget_mismatches": gadget_bad,
                "answers_seen": {k: sorted(v) for k, v in sorted(answers.items())}}


# ---------------------------------------------------------------------------
# Moments
# ---------------------------------------------------------------------------

@_timed(7, "moment constants")
def check_moment_constants(count: int = 40, seed: int = 7):
    one_arc = MixedInstance.from_names([("a", "b")])
    one_btw = MixedInstance.from_names([], [("b", "a", "c")])
    want = {
        "E[X^2]": (mom.second_moment(one_arc, "x"), Fraction(3, 16)),
        "E[Y^2]": (mom.second_moment(one_btw, "y"), Fraction(11, 96)),
        "S1": (mom.arc_pair_expectation((0, 1), (0, 2)), Fraction(5, 64)),
        "S1_head": (mom.arc_pair_expectation((0, 2), (1, 2)), Fraction(5, 64)),
        "S2": (mom.arc_pair_expectation((0, 1), (1, 2)), Fraction(-5, 64)),
    }
    bad = [k for k, (got, exp) in want.items() if got != exp]
    rng = np.random.default_rng(seed)
    cross_bad, pair_bad = 0, 0
    for _ in range(count):
        n = int(rng.integers(3, 6))
        mixed = gen_random_mixed(n, int(rng.integers(0, 6)), int(rng.integers(0, 6)),
                                 seed=int(rng.integers(2**32)))
        cross_bad += mom.cross_moment_xy(mixed) != 0
        for which in "xyz":
            pair_bad += (mom.second_moment(mixed, which)
                         != mom.full_enumeration_moments(mixed, which, (2,))[2])
        lo = gen_random(RandSpec(n, int(rng.integers(1, 8)), seed=int(rng.integers(2**32))))
        pair_bad += mom.second_moment(lo) != mom.full_enumeration_moments(lo, "z", (2,))[2]
    ok = not bad and cross_bad == 0 and pair_bad == 0
    return ok, {"constants": {k: str(g) for k, (g, _) in want.items()}, "wrong": bad,
                "cross_nonzero": cross_bad, "pairwise_vs_full": pair_bad}


@_timed(8, "second-moment lower bounds on reduced instances", limit=120.0)
def check_lower_bounds(count: int = 100, seed: int = 8):
    rng = np.random.default_rng(seed)
    bad = defaultdict(int)
    done = 0
    while done < count:
        n = int(rng.integers(3, 9))
        if done % 2:
            mixed = decompose_lo(gen_random(RandSpec(n, int(rng.integers(1, 12)),
                                                     seed=int(rng.integers(2**32)))))
        else:
            mixed = _seeded_mixed_with_groups(rng, n)
        reduced, _, _ = reduce_mixed(mixed)
        if reduced.r + reduced.s == 0:
            continue
        done += 1
        bad["x"] += not mom.check_arc_bound(reduced)
        bad["y"] += not mom.check_btw_bound(reduced)
        bad["z"] += not mom.check_lower_bound(reduced)
    return not any(bad.values()), {"instances": done, "violations": dict(bad)}


@_timed(9, "polynomial form of Z")
def check_polynomial():
    table_bad = [lv for lv in product(range(4), repeat=3)
                 if mom.z_value(*lv) != mom.oracle_value("z", lv)]
    eval_bad = [lv for lv in product(range(4), repeat=3)
                if mom.poly_z_eval(mom.encode_levels(*lv)) != mom.z_value(*lv)]
    poly = mom.poly_z_expansion()
    degree = max(sum(e) for e in poly)
    multilinear = all(x <= 1 for e in poly for x in e)
    expand_bad = [lv for lv in product(range(4), repeat=3)
                  if mom.eval_expansion(poly, mom.encode_levels(*lv)) != mom.z_value(*lv)]
    ok = not table_bad and not eval_bad and not expand_bad and degree <= 6 and multilinear
    return ok, {"table_vs_oracle": table_bad, "eval_mismatch": eval_bad, "degree": degree,
                "multilinear": multilinear, "monomials": len(poly)}


@_timed(10, "fourth moment bound")
def check_hypercontractivity(count: int = 60, seed: int = 10):
    rng = np.random.default_rng(seed)
    bad = []
    for idx in range(count):
        n = int(rng.integers(3, 6))
        inst = gen_random(RandSpec(n, int(rng.integers(1, 9)), seed=int(rng.integers(2**32))))
        if not mom.hypercontractive_holds(inst):
            bad.append(idx)
    return not bad, {"instances": count, "violations": bad}


@_timed(11, "hard family", limit=300.0)
def check_hard_family(max_level: int = 6, random_subsets: int = 1000, seed: int = 11):
    problems = []
    prev = None
    for i in range(max_level + 1):
        fam = generate_g(i)
        if len(fam.vars) != 3 * 2**i:
            problems.append(f"size G_{i}")
        if not check_symmetric_no_parallel(fam):
            problems.append(f"symmetry G_{i}")
        if prev is not None and len(fam.cycles) != 2 * len(prev.cycles) + 4:
            problems.append(f"cycle count G_{i}")
        prev = fam
    for i in (0, 1):
        if max_dev_dp(cycles_to_lo_instance(generate_g(i))).deviation != 0:
            problems.append(f"dev K_{i}")

    fam = generate_g(1)
    k1 = cycles_to_lo_instance(fam)
    closed = 0
    for size in range(1, len(fam.cycles)):
        for subset in combinations(range(len(fam.cycles)), size):
            closed += 1
            if not check_subset_asymmetry(fam, subset):
                problems.append(f"symmetric subset {subset}")
            if max_dev_dp(cycles_to_lo_instance(fam, cycles=subset)).deviation <= 0:
                problems.append(f"cycle subset {subset}")
    rng = np.random.default_rng(seed)
    for _ in range(random_subsets):
        size = int(rng.integers(1, k1.m))
        idx = sorted(int(x) for x in rng.choice(k1.m, size=size, replace=False))
        sub = k1.with_(constraints=tuple(k1.constraints[j] for j in idx))
        if max_dev_dp(sub).deviation <= 0:
            problems.append(f"constraint subset {idx}")
    reduced, _, _ = reduce_mixed(decompose_lo(k1))
    if reduced.arcs or reduced.btws:
        problems.append("K_1 not fully reducible")
    return not problems, {"cycle_closed_subsets": closed, "random_subsets": random_subsets,
                          "problems": problems[:10]}


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def golden_instances() -> list[tuple[str, str]]:
    """A deterministic corpus of 20 (file name, text) pairs covering the grammar."""
    out = []
    for cid in range(11):
        inst = gen_random(RandSpec(5, 4 + cid % 3, PI_CLASSES[cid], seed=100 + cid, k=cid % 3))
        out.append((f"rand_pi{cid:02d}.txt", serialize(inst, [f"random Pi_{cid} instance"])))
    for i in (0, 1):
        out.append((f"hard_k{i}.txt", serialize(cycles_to_lo_instance(generate_g(i)))))
    out.append(("mixed_random.txt", serialize(gen_random_mixed(5, 4, 3, seed=7, k=1))))
    out.append(("mixed_mult.txt", "# multiplicities\nk 2\narc a b x3\narc b a\nbtw c a b x2\n"))
    out.append(("arcs_only.txt", "arc p q\narc q r\narc r p x4\n"))
    out.append(("btw_only.txt", "k 0\nbtw m l r\nbtw l m r x2\n"))
    out.append(("pi_words.txt", "pi 312,123,231\nk 1\n# a comment\ncon x y z x5\ncon z y x\n"))
    out.append(("empty.txt", "# nothing here\n"))
    out.append(("spacing.txt", "  pi   123,321\n\nk 3\n   con  s1 s2 s3 x2   \ncon s3 s1 s4\n"))
    return out


def _same(a, b) -> bool:
    return type(a) is type(b) and a == b


@_timed(12, "instance files and reports")
def check_cli(corpus_dir: str | Path | None = None, include_selfcheck: bool = True):
    from . import cli

    if corpus_dir is None:
        files = golden_instances()
    else:
        files = [(p.name, p.read_text(encoding="utf-8"))
                 for p in sorted(Path(corpus_dir).glob("*.txt"))]
    rt_bad = [name for name, text in files if not _same(parse(serialize(parse(text))), parse(text))]

    sample = files[0][1]
    runs = [cli.run_capture(["solve", "--json"], stdin=sample) for _ in range(2)]
    runs += [cli.run_capture(["gen-rand", "--n", "6", "--m", "9", "--seed", "3", "--json"])
             for _ in range(2)]

    def strip(text):
        import json
        doc = json.loads(text)
        doc.pop("wall_time", None)
        return doc

    json_ok = all(r[0] == 0 for r in runs)
    json_ok = json_ok and strip(runs[0][1]) == strip(runs[1][1]) and strip(runs[2][1]) == strip(runs[3][1])
    self_ok = True
    if include_selfcheck:
        self_ok = cli.run_capture(["selfcheck"])[0] == 0
    ok = len(files) >= 20 and not rt_bad and json_ok and self_ok
    return ok, {"files": len(files), "roundtrip_failures": rt_bad,
                "json_deterministic": json_ok, "selfcheck": self_ok}


# ---------------------------------------------------------------------------

FULL = {
    1: lambda: check_symmetry_classes(),
    2: lambda: check_oracle_equivalence(),
    3: lambda: check_decomposition_identity(),
    4: lambda: check_reduction_soundness(),
    5: lambda: check_kernel_pipeline(),
    6: lambda: check_transforms(),
    7: lambda: check_moment_constants(),
    8: lambda: check_lower_bounds(),
    9: lambda: check_polynomial(),
    10: lambda: check_hypercontractivity(),
    11: lambda: check_hard_family(),
}

QUICK = {
    1: lambda: check_symmetry_classes(),
    2: lambda: check_oracle_equivalence(count=39, n_range=(3, 6), m_range=(1, 8)),
    3: lambda: check_decomposition_identity(count=8, max_n=5),
    4: lambda: check_reduction_soundness(count=8, max_n=5, shuffles=3),
    5: lambda: check_kernel_pipeline(count=12, max_n=5, low_c_count=12),
    6: lambda: check_transforms(per_op=3, require_both=False),
    7: lambda: check_moment_constants(count=8),
    8: lambda: check_lower_bounds(count=20),
    9: lambda: check_polynomial(),
    10: lambda: check_hypercontractivity(count=10),
    11: lambda: check_hard_family(max_level=4, random_subsets=100),
    12: lambda: check_cli(include_selfcheck=False),
}


def run_quick() -> list[CheckResult]:
    return [QUICK[i]() for i in sorted(QUICK)]
