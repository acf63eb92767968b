"""JSON files, named quandle/action/cocycle specs and result formatting."""

import json
from importlib import resources

from . import linforms as lf
from .braids import parse_braid
from .cocycles import VectorCochain, transposition_section_cocycle
from .errors import BraidParseError, CocycleError, QuandleError
from .linalg import ModulePresentation
from .modules import alexander_action, trivial_action, wreath_action
from .quandles import FiniteQuandle, alexander, dihedral, transpositions, trivial

DATA = resources.files("quandle_cocycles") / "data"


# --- quandles --------------------------------------------------------------------------


def quandle_to_json(X):
    return {"name": X.name, "size": len(X), "op": [list(r) for r in X.op], "labels": list(X.labels)}


def quandle_from_json(obj):
    try:
        op = obj["op"]
        n = obj.get("size", len(op))
    except (KeyError, TypeError) as exc:
        raise QuandleError(f"quandle file needs an 'op' table: {exc}") from None
    if len(op) != n:
        raise QuandleError(f"size {n} does not match a table with {len(op)} rows")
    return FiniteQuandle(op, obj.get("name", "X"), obj.get("labels"))


def load_quandle(path):
    with open(path) as fh:
        return quandle_from_json(json.load(fh))


def parse_quandle_spec(spec):
    """``dihedral:3``, ``trivial:2``, ``transpositions:5``, ``alexander:n[:t]`` or a JSON file path."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "dihedral":
            return dihedral(int(arg))
        if kind == "trivial":
            return trivial(int(arg))
        if kind == "transpositions":
            return transpositions(int(arg or 5))
        if kind == "alexander":
            n, _, t = arg.partition(":")
            return alexander(int(n), t=int(t)) if t else alexander(int(n))
    except ValueError as exc:
        raise QuandleError(f"bad quandle spec {spec!r}: {exc}") from None
    if spec.endswith(".json"):
        return load_quandle(spec)
    raise QuandleError(f"unknown quandle spec {spec!r}")


def make_action(spec, X, q=0):
    """``wreath``, ``alexander[:t]`` or ``trivial[:m]`` over Z_q (q=0 for Z)."""
    kind, _, arg = spec.partition(":")
    if kind == "wreath":
        return wreath_action(X, q)
    if kind == "alexander":
        return alexander_action(X, int(arg) if arg else -1, q)
    if kind == "trivial":
        return trivial_action(X, int(arg) if arg else 1, q)
    raise QuandleError(f"unknown action spec {spec!r}")


# --- cochains --------------------------------------------------------------------------


def cochain_to_json(f, quandle=None):
    return {
        "quandle": quandle or f.X.name,
        "degree": f.degree,
        "rank": f.m,
        "modulus": f.q,
        "params": list(f.params),
        "values": {",".join(map(str, k)): [list(c) for c in v] for k, v in sorted(f.values.items())},
    }


def cochain_from_json(obj, X):
    try:
        degree, m = obj["degree"], obj["rank"]
        q = obj.get("modulus", 0)
        params = tuple(obj.get("params", ()))
        vals = {tuple(int(t) for t in k.split(",")): v for k, v in obj["values"].items()}
    except (KeyError, ValueError, AttributeError) as exc:
        raise CocycleError(f"malformed cochain file: {exc}") from None
    return VectorCochain(X, degree, m, q, params, vals)


BUILTIN_COCYCLES = {
    "r3-example2": "r3_wreath_2cocycle.json",
    "r3-example3": "r3_wreath_3cocycle.json",
}


def load_cochain(spec, X=None):
    """Cochain from ``builtin:<name>`` or a JSON path; returns ``(cochain, X, action)``."""
    if spec.startswith("builtin:"):
        name = spec.split(":", 1)[1]
        if name not in BUILTIN_COCYCLES:
            raise CocycleError(f"unknown builtin cocycle {name!r}; choose from {sorted(BUILTIN_COCYCLES)}")
        obj = json.loads((DATA / "cocycles" / BUILTIN_COCYCLES[name]).read_text())
    else:
        with open(spec) as fh:
            obj = json.load(fh)
    if X is None:
        X = parse_quandle_spec(obj["quandle"])
    f = cochain_from_json(obj, X)
    A = make_action(obj.get("action", "wreath"), X, f.q)
    return f, X, A


def load_beta(spec):
    if spec in ("builtin:s5-section", "s5-section"):
        return transposition_section_cocycle(5)
    raise CocycleError(f"unknown non-abelian cocycle {spec!r}")


# --- knot tables -----------------------------------------------------------------------


def load_knot_table(path=None):
    """Knot table entries as a dict name -> entry (with a parsed ``braid``)."""
    text = (DATA / "knots.json").read_text() if path is None else open(path).read()
    rows = json.loads(text)
    out = {}
    for row in rows:
        name = row["name"]
        if name in out:
            raise BraidParseError(f"duplicate knot {name!r} in table")
        entry = dict(row)
        entry["braid"] = parse_braid(row["word"], row.get("strands"))
        out[name] = entry
    return out


def load_expected():
    return json.loads((DATA / "expected_tables.json").read_text())


# --- results ---------------------------------------------------------------------------


def value_to_text(v, result):
    if isinstance(v, ModulePresentation):
        return f"tor{list(v.torsion)} rank{v.free_rank}"
    if result.kind in ("cocycle2", "twistspin"):
        return lf.format_vector(v, result.params, result.modulus)
    if result.kind == "conjugacy":
        H = result.extra["group"]
        return "(" + ", ".join(f"[{H.labels[h]}]" for h in v) + ")"
    return str(v)


def value_to_json(v, result):
    if isinstance(v, ModulePresentation):
        return v.to_json()
    if result.kind in ("cocycle2", "twistspin"):
        return [list(f) for f in v]
    if result.kind == "conjugacy":
        H = result.extra["group"]
        return [H.labels[h] for h in v]
    return v


def result_to_json(result):
    return {
        "kind": result.kind,
        "knot": result.knot,
        "quandle": result.quandle,
        "params": list(result.params),
        "modulus": result.modulus,
        "entries": [
            {"count": e.count, "type": e.coloring_type, "value": value_to_json(e.value, result), "text": value_to_text(e.value, result)}
            for e in result.entries
        ],
    }


def result_to_text(result):
    """``3x (0, 0, 0) [trivial]; 6x (1, 1, 1) [nontrivial]`` style summary."""
    return "; ".join(f"{e.count}x {value_to_text(e.value, result)} [{e.coloring_type}]" for e in result.entries)


def entries_from_json(obj):
    """Canonical ``{value: count}`` from a JSON result (for round trips)."""
    out = {}
    for e in obj["entries"]:
        v = e["value"]
        if isinstance(v, dict):
            key = ModulePresentation.from_json(v)
        elif isinstance(v, list) and v and isinstance(v[0], list):
            key = tuple(tuple(f) for f in v)
        elif isinstance(v, list):
            key = tuple(v)
        else:
            key = v
        out[key] = out.get(key, 0) + e["count"]
    return out
