"""Command-line front end.

Exit codes: 0 success, 1 computation mismatch (table, report, failed
verification), 2 input error.
"""

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import linforms as lf
from .braids import closure_colorings, parse_braid
from .calibration import calibration_lock, describe
from .cocycles import search_cocycles, verify_cocycle
from .errors import QuandleError
from .invariants import (
    DEFAULT_AXIS,
    DEFAULT_OFFSET,
    chirality_report,
    conjugacy_invariant,
    generalized_2cocycle_invariant,
    invertibility_report,
    twistspin_invariant,
)
from .io import (
    cochain_to_json,
    load_beta,
    load_cochain,
    load_knot_table,
    make_action,
    parse_quandle_spec,
    quandle_to_json,
    result_to_json,
    value_to_text,
)
from .modules import braid_matrix, module_invariant
from .quandles import verify_quandle
from .tables import TABLES, format_counter, reproduce_table, table_exit_code, validate_knot


class InputError(Exception):
    pass


def _emit(args, obj, text):
    if args.format == "json":
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        print(text)


def _knot(args):
    """``(name, BraidWord)`` from --knot or --braid."""
    if getattr(args, "knot", None):
        table = load_knot_table(args.knots_file)
        if args.knot not in table:
            raise InputError(f"unknown knot {args.knot!r}")
        entry = table[args.knot]
        ok, why = validate_knot(args.knot, entry)
        if not ok:
            print(f"warning: word for {args.knot} is not validated ({why})", file=sys.stderr)
        return args.knot, entry["braid"]
    if args.braid is None:
        raise InputError("give --knot or --braid")
    return args.braid, parse_braid(args.braid, args.strands)


def _bindings(text):
    if not text:
        return None
    vals = {}
    for part in text.split(","):
        k, _, v = part.partition("=")
        try:
            vals[k.strip()] = int(v)
        except ValueError:
            raise InputError(f"bad binding {part!r}; use q1=1,q2=2") from None
    return vals


def _bind_result(result, bind):
    """Evaluate symbolic parameters numerically."""
    if not bind or not result.params:
        return result
    missing = [p for p in result.params if p not in bind]
    if missing:
        raise InputError(f"no value for parameter(s) {', '.join(missing)}")
    vals = [bind[p] for p in result.params]
    result.values = [(lf.reduce(lf.bind(v, vals), result.modulus), t) for v, t in result.values]
    result.params = ()
    return result


def _result_text(result):
    lines = [f"{result.kind} invariant of {result.knot} over {result.quandle}"]
    ents = result.entries
    texts = [value_to_text(e.value, result) for e in ents]
    width = max((len(t) for t in texts), default=0)
    for e, t in zip(ents, texts):
        lines.append(f"  {e.count:4d}x  {t:<{width}}  {e.coloring_type}")
    return "\n".join(lines)


def _show_result(args, result, extra=None):
    obj = result_to_json(result)
    if extra:
        obj.update(extra)
    text = _result_text(result)
    if extra and "matrices" in extra:
        text += "\n" + "\n".join(f"  {m['colors']}: {m['matrix']}" for m in extra["matrices"])
    _emit(args, obj, text)


# --- commands ---------------------------------------------------------------------


def cmd_quandle(args):
    if args.op == "make":
        X = parse_quandle_spec(args.spec)
        obj = quandle_to_json(X)
        text = json.dumps(obj)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text + "\n")
        else:
            print(text)
        return 0
    if args.op == "verify":
        if args.spec.endswith(".json"):
            with open(args.spec) as fh:
                obj = json.load(fh)
            rep = verify_quandle(obj.get("op", []))
        else:
            rep = verify_quandle(parse_quandle_spec(args.spec).op)
        _emit(args, {"ok": rep.ok, "axiom": rep.axiom, "witness": rep.witness}, str(rep))
        return 0 if rep.ok else 1
    X = parse_quandle_spec(args.spec)
    rows = [" ".join(f"{v:>3d}" for v in r) for r in X.op]
    _emit(args, quandle_to_json(X), f"{X.name} (order {len(X)}), row x gives x*y\n" + "\n".join(rows))
    return 0


def cmd_colorings(args):
    name, w = _knot(args)
    X = parse_quandle_spec(args.quandle)
    cols = closure_colorings(w, X, convention=args.convention)
    triv = sum(c.trivial for c in cols)
    obj = {"knot": name, "quandle": X.name, "count": len(cols), "trivial": triv,
           "nontrivial": len(cols) - triv, "colorings": [list(c.colors) for c in cols]}
    lines = [f"{len(cols)} colorings of {name} by {X.name} ({triv} trivial, {len(cols) - triv} non-trivial)"]
    if args.list:
        lines += ["  " + " ".join(X.labels[i] for i in c.colors) for c in cols]
    _emit(args, obj, "\n".join(lines))
    return 0


def cmd_module_invariant(args):
    name, w = _knot(args)
    X = parse_quandle_spec(args.quandle)
    A = make_action(args.action, X, args.q)
    res = module_invariant(w, X, A, convention=args.convention, name=name)
    extra = None
    if args.dump_matrices:
        extra = {"matrices": [
            {"colors": list(c.colors), "matrix": braid_matrix(w, c.colors, A, convention=args.convention).linear}
            for c in closure_colorings(w, X, convention=args.convention)
        ]}
    _show_result(args, res, extra)
    return 0


def cmd_conj(args):
    name, w = _knot(args)
    X = parse_quandle_spec(args.quandle)
    beta = load_beta(args.beta)
    if len(beta.X) != len(X) or beta.X.op != X.op:
        raise InputError("--beta is defined on a different quandle")
    res = conjugacy_invariant(w, beta.X, beta, convention=args.convention, name=name)
    _show_result(args, res)
    return 0


def _cochain(args):
    X = parse_quandle_spec(args.quandle) if args.quandle else None
    f, X, A = load_cochain(args.cocycle, X)
    if args.action:
        A = make_action(args.action, X, f.q)
    return f, X, A


def cmd_cocycle_invariant(args):
    name, w = _knot(args)
    f, X, A = _cochain(args)
    res = generalized_2cocycle_invariant(w, X, A, f, convention=args.convention, name=name)
    _show_result(args, _bind_result(res, _bindings(args.bind)))
    return 0


def cmd_twistspin(args):
    name, w = _knot(args)
    f, X, A = _cochain(args)
    res = twistspin_invariant(
        w, X, A, f, args.twists, args.orientation, axis=args.axis, offset=args.offset,
        convention=args.convention, name=name,
    )
    _show_result(args, _bind_result(res, _bindings(args.bind)))
    return 0


def cmd_cocycle(args):
    if args.op == "verify":
        f, X, A = _cochain(args)
        rep = verify_cocycle(f, A)
        _emit(args, {"ok": rep.ok, "condition": rep.condition, "witness": rep.witness}, str(rep))
        return 0 if rep.ok else 1
    X = parse_quandle_spec(args.quandle or "dihedral:3")
    A = make_action(args.module, X, args.q)
    sp = search_cocycles(A, args.degree)
    obj = {"degree": sp.degree, "modulus": sp.q, "cocycles": len(sp.cocycles),
           "coboundaries": len(sp.coboundaries), "cohomology_dim": sp.cohomology_dim}
    text = (f"degree {sp.degree} over Z_{sp.q}: cocycle space dim {len(sp.cocycles)}, "
            f"coboundary dim {len(sp.coboundaries)}, cohomology dim {sp.cohomology_dim}")
    if args.sample:
        rng = random.Random(args.seed)
        samples = []
        for _ in range(args.sample):
            coeffs = [rng.randrange(sp.q) for _ in sp.cocycles]
            f = sp.cocycles[0].scaled(0)
            for c, g in zip(coeffs, sp.cocycles):
                f = f + g.scaled(c)
            samples.append(cochain_to_json(f, args.quandle or "dihedral:3"))
        obj["samples"] = samples
        text += "\n" + "\n".join(json.dumps(s["values"]) for s in samples)
    _emit(args, obj, text)
    return 0


def cmd_table(args):
    only = set(args.only.split(",")) if args.only else None
    knots = load_knot_table(args.knots_file) if args.knots_file else None
    rows = reproduce_table(args.table, only=only, knots=knots, jobs=args.jobs)
    kind = TABLES[args.table][0]
    lines = []
    for r in rows:
        flag = f" (caution: {r.caution})" if r.caution else ""
        lines.append(f"{r.knot:6s} {r.status}{flag}")
        if r.status == "FAIL" or args.verbose:
            lines.append(f"    expected: {format_counter(kind, r.expected)}")
            if r.status != "SKIPPED":
                lines.append(f"    computed: {format_counter(kind, r.got)}")
        if r.status == "SKIPPED" or (r.note and args.verbose):
            lines.append(f"    note: {r.note}")
    counts = {s: sum(r.status == s for r in rows) for s in ("PASS", "FAIL", "SKIPPED")}
    lines.append(f"table {args.table}: {counts['PASS']} pass, {counts['FAIL']} fail, {counts['SKIPPED']} skipped")
    obj = {"table": args.table, "rows": [
        {"knot": r.knot, "status": r.status, "caution": r.caution, "note": r.note,
         "expected": format_counter(kind, r.expected), "computed": format_counter(kind, r.got)} for r in rows
    ], "summary": counts}
    _emit(args, obj, "\n".join(lines))
    return table_exit_code(rows)


def _verdict(kind, word, cocycle, twists, convention, name):
    f, X, A = load_cochain(cocycle)
    if kind == "invertibility":
        return invertibility_report(word, X, A, f, twists, convention=convention, name=name).verdict
    return chirality_report(word, X, A, f, convention=convention, name=name).verdict


def cmd_report(args):
    table = load_knot_table(args.knots_file)
    names = args.knots.split(",")
    default = "builtin:r3-example3" if args.kind == "invertibility" else "builtin:r3-example2"
    cocycle = args.cocycle or default
    load_cochain(cocycle)
    for name in names:
        if name not in table:
            raise InputError(f"unknown knot {name!r}")
    tasks = [(args.kind, table[n]["braid"], cocycle, args.twists, args.convention, n) for n in names]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            verdicts = list(pool.map(_verdict, *zip(*tasks)))
    else:
        verdicts = [_verdict(*t) for t in tasks]
    out = list(zip(names, verdicts))
    lines = [f"{n:6s} {v}" for n, v in out]
    detected = [n for n, v in out if v != "inconclusive"]
    lines.append(f"{len(detected)} of {len(out)} detected")
    _emit(args, {"kind": args.kind, "results": dict(out), "detected": detected}, "\n".join(lines))
    if args.expect is not None:
        want = set(filter(None, args.expect.split(",")))
        return 0 if want == set(detected) else 1
    return 0


def cmd_calibrate(args):
    rep = calibration_lock()
    obj = {"frozen": list(rep.frozen.key), "frozen_failing": rep.frozen.failed,
           "frozen_is_best": rep.frozen_is_best, "alternative_fails": rep.alternative_fails,
           "candidates": [{"key": list(c.key), "passed": c.passed, "failing": c.failed} for c in rep.candidates]}
    _emit(args, obj, describe(rep))
    return 0 if rep.frozen_passes_all and rep.alternative_fails else 1


# --- parser -------------------------------------------------------------------------


def _knot_args(p):
    p.add_argument("--knot", help="knot name from the bundled table")
    p.add_argument("--braid", help='braid word, e.g. "1 -2 1 -2"')
    p.add_argument("--strands", type=int, help="strand count for --braid")


def _cochain_args(p, default):
    p.add_argument("--cocycle", default=default, help="builtin:<name> or a cochain JSON file")
    p.add_argument("--quandle", help="override the cochain's quandle")
    p.add_argument("--action", help="override the cochain's module action")
    p.add_argument("--bind", help="evaluate parameters, e.g. q1=1,q2=2")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--convention", help="braid reading convention (default: calibrated)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--dump-matrices", action="store_true")
    common.add_argument("--knots-file", help="knot table JSON (default: bundled)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for batch commands")

    ap = argparse.ArgumentParser(prog="quandle-cocycles", parents=[common],
                                 description="Quandle module, conjugacy and cocycle invariants of closed braids")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("quandle", parents=[common], help="make, show or verify a quandle")
    p.add_argument("op", choices=("verify", "make", "show"))
    p.add_argument("spec", help="dihedral:n, alexander:n[:t], trivial:n, transpositions:n or a JSON file")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_quandle)

    p = sub.add_parser("colorings", parents=[common], help="closure colorings")
    _knot_args(p)
    p.add_argument("--quandle", required=True)
    p.add_argument("--list", action="store_true")
    p.set_defaults(fn=cmd_colorings)

    p = sub.add_parser("module-invariant", parents=[common], help="quandle module invariant")
    _knot_args(p)
    p.add_argument("--quandle", default="dihedral:3")
    p.add_argument("--action", default="wreath")
    p.add_argument("--q", type=int, default=0)
    p.set_defaults(fn=cmd_module_invariant)

    p = sub.add_parser("conj-invariant", parents=[common], help="conjugacy cocycle invariant")
    _knot_args(p)
    p.add_argument("--quandle", default="transpositions:5")
    p.add_argument("--beta", default="builtin:s5-section")
    p.set_defaults(fn=cmd_conj)

    p = sub.add_parser("cocycle-invariant", parents=[common], help="generalized 2-cocycle invariant")
    _knot_args(p)
    _cochain_args(p, "builtin:r3-example2")
    p.set_defaults(fn=cmd_cocycle_invariant)

    p = sub.add_parser("twistspin", parents=[common], help="3-cocycle invariant of a twist-spun knot")
    _knot_args(p)
    _cochain_args(p, "builtin:r3-example3")
    p.add_argument("--twists", type=int, default=2)
    p.add_argument("--orientation", choices=("forward", "reversed"), default="forward")
    p.add_argument("--axis", default=DEFAULT_AXIS, type=lambda s: int(s) if s.isdigit() else s)
    p.add_argument("--offset", type=int, default=DEFAULT_OFFSET)
    p.set_defaults(fn=cmd_twistspin)

    p = sub.add_parser("cocycle", parents=[common], help="verify or search cocycles")
    p.add_argument("op", choices=("verify", "search"))
    p.add_argument("--cocycle", default="builtin:r3-example2")
    p.add_argument("--quandle")
    p.add_argument("--action", help="override the cochain's module action")
    p.add_argument("--module", default="wreath", help="action for search")
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--sample", type=int, default=0, help="print random cocycles (uses --seed)")
    p.set_defaults(fn=cmd_cocycle)

    p = sub.add_parser("table", parents=[common], help="reproduce a bundled table")
    p.add_argument("table", choices=sorted(TABLES))
    p.add_argument("--only", help="comma separated knot names")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("report", parents=[common], help="chirality or invertibility over a knot list")
    p.add_argument("kind", choices=("chirality", "invertibility"))
    p.add_argument("--knots", required=True, help="comma separated knot names")
    p.add_argument("--cocycle")
    p.add_argument("--twists", type=int, default=2)
    p.add_argument("--expect", help="comma separated knots expected to be detected")
    p.set_defaults(fn=cmd_report)

    p = sub.add_parser("calibrate", parents=[common], help="score conventions against anchor rows")
    p.set_defaults(fn=cmd_calibrate)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, QuandleError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
