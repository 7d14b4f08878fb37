"""Command line: ``srtool invariants|betti|sd|conjecture|sweep``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .betti import hochster_betti
from .complex import barycentric_subdivision
from .conjecture import verify, verify_subdivision_theorem
from .documents import document_from_complex, load_document, load_manifest
from .errors import SRToolError
from .homology import parse_field
from .invariants import invariant_bundle
from .sweep import run_sweep

EXIT_CHECKS_FAILED = 1
EXIT_ERROR = 2


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(path: str):
    doc = load_document(path)
    return doc, doc.to_complex()


def cmd_invariants(args) -> int:
    _, cx = _load(args.file)
    bundle = invariant_bundle(cx, parse_field(args.field))
    d = bundle.as_dict()
    if args.json:
        text = json.dumps(d, indent=1) + "\n"
    else:
        width = max(map(len, d))
        text = "".join(f"{k:<{width}}  {v}\n" for k, v in d.items())
    _emit(text, args.out)
    return 0


def cmd_betti(args) -> int:
    _, cx = _load(args.file)
    if args.subdivide:
        cx = barycentric_subdivision(cx)
    table = hochster_betti(cx, parse_field(args.field), args.cap, jobs=args.jobs)
    if args.json:
        text = json.dumps(
            {"n": table.n, "field": table.field.name, "cap": table.cap,
             "entries": [[i, j, b] for (i, j), b in sorted(table.entries.items())]},
            indent=1,
        ) + "\n"
    else:
        text = table.render() + "\n\n" + "\n".join(table.rows()) + "\n"
    _emit(text, args.out)
    return 0


def cmd_sd(args) -> int:
    doc, cx = _load(args.file)
    name = f"sd({doc.name})" if doc.name else None
    _emit(document_from_complex(barycentric_subdivision(cx), name).dumps(), args.out)
    return 0


def cmd_conjecture(args) -> int:
    doc, cx = _load(args.file)
    field = parse_field(args.field)
    subject = doc.name or args.file
    if args.subdivide:
        rep = verify_subdivision_theorem(cx, field, subject=subject, jobs=args.jobs)
    else:
        rep = verify(cx, field, subject=subject, jobs=args.jobs)
    text = json.dumps(rep.as_dict(), indent=1) + "\n" if args.json else rep.render() + "\n"
    _emit(text, args.out)
    return 0


def cmd_sweep(args) -> int:
    man = load_manifest(args.manifest)
    res = run_sweep(man, jobs=args.jobs)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for rep in res.reports:
                fh.write(json.dumps(rep, sort_keys=True) + "\n")
    sys.stdout.write(json.dumps(res.summary(), indent=1) + "\n")
    return 0 if res.ok else EXIT_CHECKS_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="srtool", description="Stanley-Reisner ring invariants and subdivision checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, field=True, out=True, jobs=False):
        if field:
            sp.add_argument("--field", default="q", help="q (rationals), p (GF(2)) or a prime")
        if out:
            sp.add_argument("--out", help="write to this path instead of stdout")
        if jobs:
            sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    sp = sub.add_parser("invariants", help="depth, regularity, multiplicity and ring predicates")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("betti", help="graded Betti table via Hochster's formula")
    sp.add_argument("file")
    sp.add_argument("--cap", type=int, help="largest internal degree to compute")
    sp.add_argument("--subdivide", action="store_true", help="use the barycentric subdivision")
    sp.add_argument("--json", action="store_true")
    common(sp, jobs=True)
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("sd", help="barycentric subdivision as a complex document")
    sp.add_argument("file")
    common(sp, field=False)
    sp.set_defaults(func=cmd_sd)

    sp = sub.add_parser("conjecture", help="Multiplicity Conjecture report")
    sp.add_argument("file")
    sp.add_argument("--subdivide", action="store_true", help="report on k[sd Δ]")
    sp.add_argument("--json", action="store_true")
    common(sp, jobs=True)
    sp.set_defaults(func=cmd_conjecture)

    sp = sub.add_parser("sweep", help="run check suites over a corpus manifest")
    sp.add_argument("manifest")
    sp.add_argument("--out", help="write per-instance reports (JSON lines) here")
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    sp.set_defaults(func=cmd_sweep)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SRToolError as exc:
        detail = {"error": type(exc).__name__, "message": str(exc)}
        path = getattr(args, "file", None) or getattr(args, "manifest", None)
        if path:
            detail["input"] = path
            try:
                detail["document"] = Path(path).read_text(encoding="utf-8")
            except OSError:
                pass
        sys.stderr.write(json.dumps(detail, indent=1) + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
