"""Command-line front end: ``permcsp <command> [options]``.

Commands that produce an instance write it to standard output (or ``-o``)
with the report as leading ``#`` lines.  ``--json`` replaces the text
report with one JSON document; the instance is then embedded in it unless
``-o`` is given.  A NO answer is a successful run and exits 0.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .checks import run_quick
from .core import (
    PI0,
    PI_CLASSES,
    PI_NAMES,
    InvalidInstanceError,
    LimitExceededError,
    LoInstance,
    MixedInstance,
    PiSet,
    PreconditionError,
    TrivialPiError,
    canonical_pi_class,
    pi_orbit,
)
from .decompose import (
    DEFAULT_C,
    KernelConfig,
    Verdict,
    decompose_lo,
    kernelize_lo,
    reduce_mixed,
    to_linear_ordering,
)
from .hardgen import RandSpec, cycles_to_lo_instance, gen_random, generate_g
from .instancefile import ParseError, parse, parse_pi, serialize
from .solver import SolverLimits, max_dev_bruteforce, max_dev_dp, max_sat_mixed
from .transforms import bikernel
from . import moments as mom

SCHEMA = "permcsp-report/1"

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_LIMIT, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _jsonable(v):
    if isinstance(v, Fraction):
        return frac(v) if v.denominator != 1 else int(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def pi_arg(text: str) -> PiSet:
    """A Pi-set given as words ("123,321") or as a class number ("5")."""
    if all(len(w) == 3 for w in text.split(",")) and set(text) <= set("123,"):
        return parse_pi(text)
    try:
        cid = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad Pi-set {text!r}") from None
    if cid not in PI_CLASSES:
        raise argparse.ArgumentTypeError(f"class number must be 0..12, got {cid}")
    return PI_CLASSES[cid]


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _stats(inst) -> dict:
    if isinstance(inst, LoInstance):
        out = {"kind": "triples", "n": inst.n, "m": inst.m, "k": inst.k,
               "pi": ",".join(inst.pi.words())}
        out["pi_class"] = canonical_pi_class(inst.pi)
        return out
    return {"kind": "mixed", "n": inst.n, "r": inst.r, "s": inst.s, "k": inst.k}


# ---------------------------------------------------------------------------
# commands; each returns (stats, result, instance or None)
# ---------------------------------------------------------------------------

def _read(args):
    if args.input:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise CliError(EXIT_INPUT, f"cannot read {args.input}: {exc.strerror}") from None
    else:
        text = sys.stdin.read()
    inst = parse(text)
    if getattr(args, "k", None) is not None:
        inst = inst.with_(k=args.k)
    return inst


def _limits(args) -> SolverLimits:
    return SolverLimits(args.max_brute_n, args.max_dp_n)


def _kernel_cfg(args) -> KernelConfig:
    c = args.c_constant
    if c is None:
        return KernelConfig()
    return KernelConfig(c, allow_override=c != DEFAULT_C)


def _require_triples(inst, what: str) -> LoInstance:
    if not isinstance(inst, LoInstance):
        raise CliError(EXIT_UNSUPPORTED, f"{what} needs a con-line (triple) instance")
    return inst


def _names(inst, witness):
    return witness.names(inst.vars) if witness is not None else None


def _solve(inst, args):
    """(satisfied, max deviation, witness) by the chosen exact method."""
    limits = _limits(args)
    if isinstance(inst, MixedInstance):
        sat, witness = max_sat_mixed(inst, limits)
        return sat, sat - inst.average, witness
    if getattr(args, "method", "dp") == "brute":
        rep = max_dev_bruteforce(inst, limits, threads=args.threads)
    else:
        rep = max_dev_dp(inst, limits)
    return rep.satisfied, rep.deviation, rep.witness


def cmd_solve(args):
    inst = _read(args)
    sat, dev, witness = _solve(inst, args)
    result = {"satisfied": sat, "average": frac(inst.average), "max_deviation": frac(dev),
              "witness": _names(inst, witness)}
    return _stats(inst), result, None


def cmd_decide(args):
    inst = _read(args)
    _, dev, witness = _solve(inst, args)
    yes = inst.k == 0 or dev >= inst.k
    result = {"verdict": "YES" if yes else "NO", "k": inst.k, "max_deviation": frac(dev),
              "witness": _names(inst, witness)}
    return _stats(inst), result, None


def cmd_kernelize(args):
    inst = _require_triples(_read(args), "kernelize")
    kres = kernelize_lo(to_linear_ordering(inst), _kernel_cfg(args))
    result = {"verdict": kres.verdict.value, "b": kres.stats.b, "t": kres.stats.t,
              "r": kres.stats.r, "s": kres.stats.s}
    out = None
    if kres.verdict is Verdict.KERNEL:
        out = kres.kernel
        result.update(k_out=out.k, kernel_n=out.n, kernel_m=out.m)
    return _stats(inst), result, out


def cmd_transform(args):
    inst = _require_triples(_read(args), "transform")
    res = bikernel(inst, args.to, _kernel_cfg(args))
    result = {"to": args.to, "k_out": res.k_out, "notes": dict(sorted(res.notes.items()))}
    if res.trivial:
        result["trivial"] = res.trivial
    return _stats(inst), result, res.instance


def cmd_decompose(args):
    inst = _require_triples(_read(args), "decompose")
    mixed = decompose_lo(to_linear_ordering(inst))
    return _stats(inst), {"r": mixed.r, "s": mixed.s, "k_out": mixed.k}, mixed


def _as_mixed(inst) -> MixedInstance:
    if isinstance(inst, MixedInstance):
        return inst
    return decompose_lo(to_linear_ordering(inst))


def cmd_reduce(args):
    inst = _read(args)
    reduced, b, t = reduce_mixed(_as_mixed(inst))
    return _stats(inst), {"b": b, "t": t, "r": reduced.r, "s": reduced.s}, reduced


def cmd_moments(args):
    inst = _read(args)
    result = {}
    if isinstance(inst, LoInstance):
        lo = to_linear_ordering(inst)
        result["E[Z^2]"] = mom.second_moment(lo)
        if lo.n <= 5:
            e4, bound = mom.fourth_moment_check(lo)
            result.update({"E[Z^4]": e4, "9^6*E[Z^2]^2": bound, "hypercontractive": e4 <= bound})
    mixed = _as_mixed(inst)
    reduced, _, _ = reduce_mixed(mixed)
    result["mixed"] = {
        "E[X^2]": mom.second_moment(mixed, "x"),
        "E[Y^2]": mom.second_moment(mixed, "y"),
        "E[Z^2]": mom.second_moment(mixed, "z"),
        "cross_xy": mom.cross_moment_xy(mixed),
    }
    result["reduced"] = {
        "r": reduced.r,
        "s": reduced.s,
        "E[Z^2]": mom.second_moment(reduced, "z"),
        "arc_bound_holds": mom.check_arc_bound(reduced),
        "btw_bound_holds": mom.check_btw_bound(reduced),
        "z_bound_holds": mom.check_lower_bound(reduced),
    }
    return _stats(inst), result, None


def cmd_gen_hard(args):
    fam = generate_g(args.level)
    inst = cycles_to_lo_instance(fam, args.k or 0)
    result = {"level": args.level, "cycles": len(fam.cycles), **fam.metadata}
    return _stats(inst), result, inst


def cmd_gen_rand(args):
    inst = gen_random(RandSpec(args.n, args.m, args.pi or PI0, args.seed, args.k or 0))
    return _stats(inst), {"seed": args.seed}, inst


def cmd_classify(args):
    if args.pi is not None:
        pi = args.pi
    else:
        inst = _require_triples(_read(args), "classify")
        pi = inst.pi
    cid = canonical_pi_class(pi)
    result = {"pi": ",".join(pi.words()), "class": cid, "name": PI_NAMES.get(cid),
              "representative": ",".join(PI_CLASSES[cid].words()),
              "orbit_size": len(pi_orbit(pi)), "trivial": pi.is_trivial}
    return {}, result, None


def cmd_selfcheck(args):
    results = run_quick()
    rows = [{"criterion": r.number, "name": r.name, "ok": r.ok} for r in results]
    failed = [r.number for r in results if not r.ok]
    payload = {"criteria": rows, "failed": failed, "passed": len(rows) - len(failed)}
    if not args.json:
        for r in results:
            print(r.line())
    if failed:
        raise _SelfcheckFailed(payload)
    return {}, payload, None


class _SelfcheckFailed(Exception):
    def __init__(self, payload):
        super().__init__("selfcheck failed")
        self.payload = payload


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permcsp", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="instance file (default: standard input)")
    common.add_argument("-o", "--output", help="write the produced instance here")
    common.add_argument("--json", action="store_true", help="emit one JSON report")
    common.add_argument("--max-brute-n", type=int, default=10)
    common.add_argument("--max-dp-n", type=int, default=24)
    common.add_argument("--threads", type=int, default=1)
    with_k = argparse.ArgumentParser(add_help=False)
    with_k.add_argument("--k", type=_nonneg, help="override the instance parameter")
    with_c = argparse.ArgumentParser(add_help=False)
    with_c.add_argument("--c-constant", type=_fraction_arg,
                        help="kernel threshold constant (default 4*9^6*3072/11)")

    def add(name, fn, helptext, parents=()):
        sp = sub.add_parser(name, parents=[common, *parents], help=helptext)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("solve", cmd_solve, "maximum deviation and an optimal ordering", [with_k])
    sp.add_argument("--method", choices=("dp", "brute"), default="dp")
    sp = add("decide", cmd_decide, "is the maximum deviation at least k?", [with_k])
    sp.add_argument("--method", choices=("dp", "brute"), default="dp")
    add("kernelize", cmd_kernelize, "kernel for the above-average question", [with_k, with_c])
    sp = add("transform", cmd_transform, "bikernel to another problem class", [with_k, with_c])
    sp.add_argument("--to", type=int, required=True, help="target class number 0..10")
    add("decompose", cmd_decompose, "split triples into arcs and betweenness", [with_k])
    add("reduce", cmd_reduce, "apply the normal reduction rules", [with_k])
    add("moments", cmd_moments, "exact second and fourth moments", [with_k])
    sp = add("gen-hard", cmd_gen_hard, "zero-deviation hard family K_i", [with_k])
    sp.add_argument("--level", type=_nonneg, required=True)
    sp = add("gen-rand", cmd_gen_rand, "seeded random triple instance", [with_k])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=_nonneg, required=True)
    sp.add_argument("--pi", type=pi_arg)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("classify", cmd_classify, "symmetry class of a Pi-set")
    sp.add_argument("--pi", type=pi_arg)
    add("selfcheck", cmd_selfcheck, "run the verification suite at reduced sizes")
    return p


def _report(args, argv, stats, result, t0) -> dict:
    return _jsonable({"schema": SCHEMA, "command": args.command, "argv": list(argv),
                      "stats": stats, "result": result,
                      "wall_time": round(time.perf_counter() - t0, 6)})


def _flatten(d: dict, prefix=""):
    for k, v in d.items():
        if isinstance(v, dict):
            yield from _flatten(v, f"{prefix}{k}.")
        else:
            if isinstance(v, list):
                v = " ".join(str(x) for x in v)
            yield f"{prefix}{k}: {v}"


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    code = EXIT_OK
    try:
        stats, result, out = args.fn(args)
    except _SelfcheckFailed as exc:
        stats, result, out, code = {}, exc.payload, None, EXIT_CHECK_FAILED
    except CliError as exc:
        print(f"permcsp: error: {exc}", file=sys.stderr)
        return exc.code
    except (ParseError, InvalidInstanceError) as exc:
        print(f"permcsp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LimitExceededError as exc:
        print(f"permcsp: error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (PreconditionError, TrivialPiError, ValueError) as exc:
        print(f"permcsp: error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED

    report = _report(args, argv, stats, result, t0)
    inst_text = serialize(out) if out is not None else None
    if inst_text is not None and args.output:
        Path(args.output).write_text(inst_text, encoding="utf-8")
        inst_text = None

    if args.json:
        if inst_text is not None:
            report["result"]["instance"] = inst_text
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    elif args.command != "selfcheck":
        lines = [f"{args.command}"] + list(_flatten({"stats": report["stats"],
                                                     "result": report["result"]}))
        if inst_text is not None:
            sys.stdout.write("".join(f"# {ln}\n" for ln in lines) + inst_text)
        else:
            sys.stdout.write("\n".join(lines[1:]) + "\n")
    return code


def run_capture(argv, stdin: str | None = None) -> tuple[int, str, str]:
    """Run :func:`main` in-process, returning (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old_in = sys.stdin
    try:
        if stdin is not None:
            sys.stdin = io.StringIO(stdin)
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = main(argv)
            except SystemExit as exc:
                code = exc.code if isinstance(exc.code, int) else 2
    finally:
        sys.stdin = old_in
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
