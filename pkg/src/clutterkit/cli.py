"""Command-line front end.

Exit codes: 0 the property holds (or the certificate replays), 1 it fails,
2 usage or input error, 3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from . import certificates, harness
from .ascent import (
    ascent,
    find_edge_order,
    is_cf_chordal,
    is_cf_tree,
    is_d_chorded,
    iterated_ascents,
)
from .chordality import (
    DEFAULT_BUDGET,
    chordality_failure_reason,
    dual_complex,
    is_chordal,
    is_vertex_decomposable,
    is_w_chordal,
)
from .core import (
    BudgetExhausted,
    Clutter,
    PreconditionError,
    clique_complex,
    complement,
    dual_clutter,
    face,
    fmt,
    fmt_family,
    generated,
    labels,
    sorted_faces,
)
from .formats import load
from .homlin import FIELDS, Field, clutter_betti, has_linear_resolution, reduced_homology
from .quotients import (
    append_sms_generator,
    ascent_order,
    betti_from_order,
    has_linear_quotients,
    is_admissible_order,
    order_to_json,
    restrict_order_by_vertex,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

PROPERTIES = ("chordal", "linear", "vdec", "chorded", "cf-chordal", "cf-tree",
              "w-chordal", "linear-quotients")
CERT_KINDS = ("elimination", "shedding", "admissible-order", "edge-order")


class UsageError(Exception):
    pass


class Output:
    """Collects a text rendering and a JSON payload; prints one of them."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.data: dict = {}

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def emit(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, indent=2, sort_keys=True))
        elif self.lines:
            print("\n".join(self.lines))


def _fields(name: str) -> tuple:
    return FIELDS if name == "both" else (Field.parse(name),)


def _load(path: str) -> Clutter:
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None
    except ValueError as exc:  # includes FormatError
        raise UsageError(f"{path}: {exc}") from None


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: line {exc.lineno}: {exc.msg}") from None


def _label_list(faces) -> list:
    return [list(labels(f)) for f in faces]


def _parse_face(text: str) -> int:
    """``135`` or ``1,3,5`` (the comma form allows labels above 9)."""
    try:
        if "," in text:
            return face([int(t) for t in text.split(",")])
        return face(text)
    except ValueError as exc:
        raise UsageError(f"bad face {text!r}: {exc}") from None


def _read_order(path: str) -> list[int]:
    obj = _read_json(path)
    rows = obj.get("order") if isinstance(obj, dict) else obj
    if not isinstance(rows, list):
        raise UsageError(f"{path}: expected an order list")
    try:
        return [face(*r) for r in rows]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


# ---------------------------------------------------------------------------
# check


def _check(c: Clutter, prop: str, args, out: Output) -> int:
    out.data["property"] = prop
    if prop == "chordal":
        cert = is_chordal(c, args.budget)
        out.data["holds"] = cert is not None
        if cert is None:
            reason = chordality_failure_reason(c)
            out.data["reason"] = reason
            out.line(f"not chordal: {reason}")
            return EXIT_FAIL
        out.data["certificate"] = cert.to_json()
        out.line(f"chordal; elimination: {cert}")
        return EXIT_OK
    if prop == "linear":
        ok = True
        out.data["fields"] = {}
        for f in _fields(args.field):
            res = has_linear_resolution(c, f)
            ok &= res.holds
            entry = {"holds": res.holds, "trivial": res.trivial}
            if res.witness:
                entry["witness"] = {"W": list(labels(res.witness[0])), "degree": res.witness[1]}
            out.data["fields"][f.value] = entry
            out.line(f"{f.value}: {res.describe()}")
        out.data["holds"] = ok
        return EXIT_OK if ok else EXIT_FAIL
    if prop == "vdec":
        if c.is_complete:
            raise UsageError("the dual of a complete clutter is void")
        cert = is_vertex_decomposable(dual_complex(c), args.budget)
        out.data["holds"] = cert is not None
        if cert is None:
            out.line("<C∨> is not vertex decomposable")
            return EXIT_FAIL
        out.data["certificate"] = cert.to_json()
        out.line(f"<C∨> is vertex decomposable ({cert.size()} tree nodes)")
        return EXIT_OK
    if prop == "chorded":
        res = is_d_chorded(c)
        out.data["holds"] = res.holds
        if not res.holds:
            out.data["witness"] = _label_list(res.witness)
            out.line(f"not {c.d}-chorded; cycle outside the clique span: {fmt_family(res.witness)}")
            return EXIT_FAIL
        out.line(f"<C> is {c.d}-chorded")
        return EXIT_OK
    if prop in ("cf-chordal", "cf-tree"):
        ok = is_cf_chordal(c) if prop == "cf-chordal" else is_cf_tree(c)
        out.data["holds"] = ok
        out.line(f"{prop}: {'yes' if ok else 'no'}")
        return EXIT_OK if ok else EXIT_FAIL
    if prop == "w-chordal":
        ok = is_w_chordal(c, budget=args.budget)
        out.data["holds"] = ok
        out.line(f"W-chordal: {'yes' if ok else 'no'}")
        return EXIT_OK if ok else EXIT_FAIL
    if prop == "linear-quotients":
        order = has_linear_quotients(complement(c).circuits, args.budget)
        out.data["holds"] = order is not None
        if order is None:
            out.line("the complement has no admissible order")
            return EXIT_FAIL
        out.data["certificate"] = {**order_to_json(order), "of": "complement"}
        out.line(f"admissible order: {' '.join(fmt(f) for f in order)}")
        return EXIT_OK
    raise UsageError(f"unknown property {prop!r}")


# ---------------------------------------------------------------------------
# other commands


def cmd_check(args, out: Output) -> int:
    return _check(_load(args.file), args.property, args, out)


def cmd_dual(args, out: Output) -> int:
    c = _load(args.file)
    dual = dual_clutter(c)
    out.data = {"dual": _label_list(sorted_faces(dual.edges)), "alexander_dual_facets":
                _label_list(sorted_faces(generated(dual).facets))}
    out.line(f"C∨ = {fmt_family(dual.edges)}")
    return EXIT_OK


def cmd_ascent(args, out: Output) -> int:
    c = _load(args.file)
    chain = iterated_ascents(c) if args.iterate else [c, ascent(c)]
    out.data["ascents"] = [_label_list(sorted_faces(x.circuits)) for x in chain[1:]]
    for k, x in enumerate(chain[1:], 1):
        out.line(f"C{'⁺' * k} = {fmt_family(x.circuits) if x.circuits else '∅'}")
    return EXIT_OK


def cmd_homology(args, out: Output) -> int:
    c = _load(args.file)
    dx = {"clique": clique_complex, "generated": generated, "dual": dual_complex}[args.complex](c)
    out.data["complex"] = args.complex
    for f in _fields(args.field):
        prof = reduced_homology(dx, f)
        out.data[f.value] = prof.to_json()
        out.line(f"{f.value}: {prof}")
    return EXIT_OK


def cmd_betti(args, out: Output) -> int:
    c = _load(args.file)
    for f in _fields(args.field):
        table = clutter_betti(c, f)
        out.data[f.value] = table.to_json()
        out.line(f"over {f.value}:")
        out.line(str(table))
    return EXIT_OK


def cmd_quotients(args, out: Output) -> int:
    c = _load(args.file)
    if args.action == "find":
        return _check(c, "linear-quotients", args, out)
    if not args.order:
        raise UsageError(f"quotients {args.action} needs --order")
    order = _read_order(args.order)
    if args.action == "verify":
        res = is_admissible_order(order)
        err = certificates.check_admissible(certificates.complement_family(c), _label_list(order))
        out.data = {"holds": err is None, "reason": err}
        out.line("admissible" if err is None else f"rejected: {err}")
        if res.holds and err is None:
            out.data["betti"] = betti_from_order(order)
            out.line(f"total Betti numbers: {betti_from_order(order)}")
        return EXIT_OK if err is None else EXIT_FAIL
    if args.action == "ascend":
        new, target = ascent_order(c, order), {"of": "ascent-complement"}
    elif args.action == "append":
        if not args.face:
            raise UsageError("quotients append needs --face")
        f = _parse_face(args.face)
        new, target = append_sms_generator(c, order, f), {"of": "complement-minus",
                                                         "face": list(labels(f))}
    else:
        if args.vertex is None:
            raise UsageError("quotients restrict needs --vertex")
        if not 1 <= args.vertex <= 64:
            raise UsageError("--vertex must be a label in 1..64")
        new, target = restrict_order_by_vertex(order, args.vertex - 1), None
    out.data["order"] = _label_list(new)
    if target is not None:
        out.data["certificate"] = {**order_to_json(new), **target}
    out.line(" ".join(fmt(f) for f in new) or "(empty)")
    return EXIT_OK


def certify(c: Clutter, kind: str, budget: int = DEFAULT_BUDGET) -> Optional[dict]:
    """Emit a certificate of the requested kind, or None if none exists."""
    if kind == "elimination":
        cert = is_chordal(c, budget)
        return cert.to_json() if cert else None
    if kind == "shedding":
        if c.is_complete:
            return None
        cert = is_vertex_decomposable(dual_complex(c), budget)
        return cert.to_json() if cert else None
    if kind == "admissible-order":
        order = has_linear_quotients(complement(c).circuits, budget)
        return None if order is None else {**order_to_json(order), "of": "complement"}
    if kind == "edge-order":
        order = find_edge_order(c, budget)
        return None if order is None else {"kind": "edge-order", "order": _label_list(order)}
    raise UsageError(f"unknown certificate kind {kind!r}")


def cmd_certify(args, out: Output) -> int:
    c = _load(args.file)
    cert = certify(c, args.kind, args.budget)
    if cert is None:
        out.data = {"kind": args.kind, "certificate": None}
        out.line(f"no {args.kind} certificate exists")
        return EXIT_FAIL
    out.data = cert
    out.as_json = True
    if args.output:
        Path(args.output).write_text(json.dumps(cert) + "\n")
    return EXIT_OK


def cmd_verify(args, out: Output) -> int:
    cert = _read_json(args.certificate)
    c = _load(args.file)
    try:
        err = certificates.verify(cert, c)
    except (certificates.CertificateError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.certificate}: {exc}") from None
    out.data = {"valid": err is None, "reason": err}
    out.line("certificate verified" if err is None else f"certificate rejected: {err}")
    return EXIT_OK if err is None else EXIT_FAIL


def cmd_sweep(args, out: Output) -> int:
    obj = _read_json(args.spec)
    if not isinstance(obj, dict):
        raise UsageError(f"{args.spec}: expected a JSON object")
    if args.seed is not None:
        obj["seed"] = args.seed
    try:
        spec = harness.GenSpec.from_json(obj)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{args.spec}: {exc}") from None
    names = args.statement or list(harness.REGISTRY)
    unknown = [n for n in names if n not in harness.REGISTRY]
    if unknown:
        raise UsageError(f"unknown statement {unknown[0]!r}")
    corpus = Path(args.corpus) if args.corpus else None
    failed = False
    out.data["reports"] = []
    for name in names:
        rep = harness.sweep(name, spec, corpus=corpus)
        out.data["reports"].append(rep.to_json())
        out.line(rep.summary())
        for ce in rep.counterexamples:
            if rep.proven:
                failed = True
                shrunk = fmt_family(ce.shrunk.circuits) if ce.shrunk else "-"
                out.line(f"  counterexample: {fmt_family(ce.clutter.circuits)} ({ce.note});"
                         f" shrunk: {shrunk}")
            else:
                out.line(f"  hit: {fmt_family(ce.clutter.circuits)} {ce.note}")
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _default_budget() -> int:
    raw = os.environ.get("CLUTTERKIT_BUDGET")
    return int(raw) if raw and raw.isdigit() else DEFAULT_BUDGET


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=("gf2", "rat", "both"), default="both")
    common.add_argument("--budget", type=int, default=_default_budget(),
                        help="search node cap (default 10^7)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=None, help="override the sweep seed")

    p = argparse.ArgumentParser(prog="clutterkit", description="Chordal clutter toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="decide a property")
    s.add_argument("property", choices=PROPERTIES)
    s.add_argument("file")
    s.set_defaults(run=cmd_check)

    s = sub.add_parser("dual", parents=[common], help="print C∨")
    s.add_argument("file")
    s.set_defaults(run=cmd_dual)

    s = sub.add_parser("ascent", parents=[common], help="print C⁺")
    s.add_argument("file")
    s.add_argument("--iterate", action="store_true", help="all ascents until empty")
    s.set_defaults(run=cmd_ascent)

    s = sub.add_parser("homology", parents=[common], help="reduced homology")
    s.add_argument("file")
    s.add_argument("--complex", choices=("clique", "generated", "dual"), default="clique")
    s.set_defaults(run=cmd_homology)

    s = sub.add_parser("betti", parents=[common], help="graded Betti table of the complement ideal")
    s.add_argument("file")
    s.set_defaults(run=cmd_betti)

    s = sub.add_parser("quotients", parents=[common], help="admissible orders")
    s.add_argument("action", choices=("find", "verify", "ascend", "append", "restrict"))
    s.add_argument("file")
    s.add_argument("--order", help="JSON file with an order")
    s.add_argument("--face", help="face for append, e.g. 135")
    s.add_argument("--vertex", type=int, help="1-based vertex for restrict")
    s.set_defaults(run=cmd_quotients)

    s = sub.add_parser("certify", parents=[common], help="emit a certificate as JSON")
    s.add_argument("kind", choices=CERT_KINDS)
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_certify)

    s = sub.add_parser("verify", parents=[common], help="replay a certificate")
    s.add_argument("certificate")
    s.add_argument("file")
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("sweep", parents=[common], help="run statement sweeps from a GenSpec JSON")
    s.add_argument("spec")
    s.add_argument("--statement", action="append", help="repeatable; default: all")
    s.add_argument("--corpus", help="directory for counterexamples and open-question hits")
    s.set_defaults(run=cmd_sweep)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    out = Output(args.json)
    try:
        code = args.run(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    out.emit()
    return code


def main() -> None:
    sys.exit(run())
