"""Command-line front end.

Every subcommand builds a report dictionary ``{"command", "spec", "payload",
"warnings"}`` and prints it either as aligned text or, with ``--json``, as
canonical JSON with rationals encoded as ``{"num": "...", "den": "..."}``.
"""

from __future__ import annotations

import argparse
import dataclasses
import enum
import json
import sys
from fractions import Fraction
from typing import Any

from . import eta as eta_mod
from . import groups, index, moduli, ricci, topology, verify
from .groups import GroupSpec, SpecError, parse_spec
from .hj import CyclicType, hj_expand


class UsageError(Exception):
    pass


# ------------------------------------------------------------ JSON encoding


def to_jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, GroupSpec):
        return str(value)
    if isinstance(value, CyclicType):
        return str(value)
    if dataclasses.is_dataclass(value):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (int, float, str)):
        return value
    if hasattr(value, "item"):
        return value.item()
    raise TypeError(f"cannot encode {type(value).__name__}")


def _decode_hook(obj: dict) -> Any:
    if set(obj) == {"num", "den"} and all(isinstance(v, str) for v in obj.values()):
        return Fraction(int(obj["num"]), int(obj["den"]))
    return obj


def dumps(report: dict) -> str:
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2)


def loads(text: str) -> dict:
    """Inverse of ``dumps``: rationals come back as Fractions."""
    return json.loads(text, object_hook=_decode_hook)


# ------------------------------------------------------------ text output


def _fmt(value: Any) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def render_text(report: dict) -> str:
    lines = [f"{report['command']} {report['spec']}".rstrip()]
    payload = report["payload"]
    if "rows" in payload:
        rows = payload["rows"]
        if rows:
            cols = list(dict.fromkeys(c for r in rows for c in r))
            cells = [[_fmt(r.get(c, "")) for c in cols] for r in rows]
            widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
            lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
            lines.extend("  ".join(x.ljust(w) for x, w in zip(row, widths)) for row in cells)
    else:
        width = max((len(k) for k in payload), default=0)
        for key, value in payload.items():
            if isinstance(value, dict):
                lines.append(f"  {key}:")
                for k, v in value.items():
                    lines.append(f"    {_fmt(k)}: {_fmt(v)}")
            else:
                lines.append(f"  {key.ljust(width)}  {_fmt(value)}")
    lines.extend(f"warning: {w}" for w in report["warnings"])
    return "\n".join(lines)


# ------------------------------------------------------------ commands


def _spec(text: str) -> tuple[GroupSpec, list[str]]:
    spec = parse_spec(text)
    if not groups.validate(spec):
        raise SpecError(f"{spec} violates the free-action parameter conditions")
    notes = []
    if text.strip().startswith("~") and spec.family == "L":
        notes.append(f"reversed cyclic group normalised to {spec}")
    return spec, notes


def _report(command: str, spec: str, payload: dict, warnings: list[str] | None = None) -> dict:
    return {"command": command, "spec": spec, "payload": payload, "warnings": list(warnings or [])}


def _hist_key(pair) -> str:
    return "(" + ", ".join(str(x) for x in pair) + ")"


def _clean(quat) -> list[float]:
    return [round(float(x), 12) + 0.0 for x in quat]


def cmd_group(args) -> dict:
    spec, notes = _spec(args.spec)
    hist = groups.eigenangle_histogram(spec)
    payload = {
        "order": groups.order(spec),
        "enumerated": len(groups.element_array(spec)),
        "generators": [[_clean(g.left), _clean(g.right)] for g in groups.generators(spec)],
        "free": groups.is_free_on_s3(spec),
        "in_su2": groups.is_in_su2(spec),
        "in_u2": not spec.reversed,
        "histogram": {_hist_key(k): hist[k] for k in sorted(hist)},
    }
    return _report("group", str(spec), payload, notes)


def cmd_hj(args) -> dict:
    try:
        t = CyclicType(args.q, args.p)
        s = hj_expand(t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _report("hj", str(t), {"string": list(s.coefficients), "length": s.length, "total": s.total})


def cmd_eta(args) -> dict:
    spec, notes = _spec(args.spec)
    return _report("eta", str(spec), dataclasses.asdict(eta_mod.eta_report(spec)), notes)


def cmd_index(args) -> dict:
    spec, notes = _spec(args.spec)
    variant = index.Variant(args.variant)
    rep = index.index_report(spec, variant)
    payload = {k: v for k, v in dataclasses.asdict(rep).items() if k != "warnings"}
    return _report("index", str(spec), payload, notes + rep.warnings)


def _moduli_payload(rep: moduli.ModuliReport) -> dict:
    return {k: v for k, v in dataclasses.asdict(rep).items() if k != "warnings"}


def cmd_h1(args) -> dict:
    spec, notes = _spec(args.spec)
    rep = moduli.h1_report(spec)
    return _report("h1", str(spec), _moduli_payload(rep), notes + rep.warnings)


def cmd_dmax(args) -> dict:
    spec, notes = _spec(args.spec)
    rep = moduli.compare_deformations(spec, args.h0)
    return _report("dmax", str(spec), _moduli_payload(rep), notes + rep.warnings)


def cmd_ht(args) -> dict:
    spec, notes = _spec(args.spec)
    v = ricci.ht_check(spec, args.blowups)
    return _report("ht", str(spec), dataclasses.asdict(v), notes)


def cmd_ell(args) -> dict:
    rep = topology.ell_report(args.family_index, args.m, args.n)
    tau_x, tau_y = topology.signature_bookkeeping(args.family_index, args.m, args.n)
    payload = {"ell": rep.value, "tau_X": tau_x, "tau_Y": tau_y, "metadata": rep.metadata}
    return _report("ell", f"{args.family_index} {args.m} {args.n}", payload)


def _range(text: str | None, default: tuple[int, int] | None = None) -> range:
    if text is None:
        if default is None:
            raise UsageError("missing range")
        return range(default[0], default[1] + 1)
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"range must look like A..B, got {text!r}") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _table_row(kind: str, spec: GroupSpec) -> dict:
    if kind == "eta":
        row = {"spec": str(spec), "eta": eta_mod.eta_closed(spec)}
        if not spec.is_cyclic:
            row["A"] = eta_mod.a_gamma(spec)
        return row
    if kind == "index":
        row = {"spec": str(spec), "N": index.n_correction(spec)}
        if not spec.is_cyclic:
            row["b"] = index.b_gamma(spec)
            row["B"] = index.b_const(spec)
        return row
    return {
        "spec": str(spec),
        "b": index.b_gamma(spec),
        "C": moduli.c_const(spec),
        "h1": moduli.h1_dim_closed(spec),
    }


def cmd_table(args) -> dict:
    family = args.family
    if family not in groups.FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    two = family in ("L", "D", "I2")
    if two and args.n_range is None:
        raise UsageError(f"family {family} needs --n-range")
    rows = []
    for m in _range(args.m_range):
        for n in (_range(args.n_range) if two else [None]):
            spec = GroupSpec(family, (m, n) if two else (m,))
            if not groups.validate(spec):
                continue
            if args.kind == "h1" and spec.is_cyclic:
                continue
            rows.append(_table_row(args.kind, spec))
    label = f"{family} m={args.m_range}" + (f" n={args.n_range}" if two else "")
    return _report("table " + args.kind, label, {"rows": rows})


def cmd_verify(args) -> tuple[dict, bool]:
    results = verify.run_all(args.max_order)
    payload = {"rows": [{"check": r.number, "status": "PASS" if r.passed else "FAIL", "detail": r.detail} for r in results]}
    return _report("verify", f"max-order {args.max_order}", payload), all(r.passed for r in results)


# ------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="s3quotients", description="Invariants of free finite quotients of S^3.")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_spec(name: str, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("spec", help='group spec, e.g. "L(1,4)", "T(5)", "~D(3,2)"')
        return p

    with_spec("group", "order, generators, freeness, eigen-angle histogram").set_defaults(func=cmd_group)
    p = sub.add_parser("hj", help="Hirzebruch-Jung string of L(q,p)")
    p.add_argument("q", type=int)
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_hj)
    with_spec("eta", "eta invariant by every route").set_defaults(func=cmd_eta)
    p = with_spec("index", "orbifold correction term N")
    p.add_argument("--variant", choices=[v.value for v in index.Variant], default="theorem")
    p.set_defaults(func=cmd_index)
    with_spec("h1", "dim H^1 on the weighted projective quotient").set_defaults(func=cmd_h1)
    p = with_spec("dmax", "deformation comparison on the minimal resolution")
    p.add_argument("--h0", type=int, default=None, help="dim H^0 for cyclic groups")
    p.set_defaults(func=cmd_dmax)
    p = with_spec("ht", "ALE Hitchin-Thorpe check")
    p.add_argument("--blowups", type=int, default=0)
    p.set_defaults(func=cmd_ht)
    p = sub.add_parser("ell", help="number of CP^2 summands")
    p.add_argument("family_index", type=int, choices=[1, 2])
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_ell)
    p = sub.add_parser("table", help="tabulate eta, N or dim H^1 over a parameter range")
    p.add_argument("kind", choices=["eta", "index", "h1"])
    p.add_argument("--family", required=True)
    p.add_argument("--m-range", required=True)
    p.add_argument("--n-range")
    p.set_defaults(func=cmd_table)
    p = sub.add_parser("verify", help="run the cross-check suite")
    p.add_argument("--max-order", type=int, default=1500)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    # --json is accepted before or after the subcommand
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.json = as_json
    except SystemExit as exc:
        return int(exc.code or 0)
    ok = True
    try:
        result = args.func(args)
        if args.command == "verify":
            result, ok = result
    except (SpecError, UsageError, LookupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(dumps(result) if args.json else render_text(result), file=out)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())
