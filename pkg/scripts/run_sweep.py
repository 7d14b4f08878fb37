"""Run the check suites over a corpus and print a summary.

    python scripts/run_sweep.py --max-vertices 5 --samples 200 --seed 20240601
    python scripts/run_sweep.py --manifest sweep.json --out reports.jsonl
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace

from srtool.documents import SweepManifest, load_manifest
from srtool.sweep import run_sweep


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--manifest", help="JSON manifest; flags below override its fields")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--fields", nargs="+")
    p.add_argument("--checks", nargs="+")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="per-instance reports as JSON lines")
    args = p.parse_args(argv)

    man = load_manifest(args.manifest) if args.manifest else SweepManifest()
    overrides = {
        "max_vertices": args.max_vertices,
        "samples": args.samples,
        "seed": args.seed,
        "fields": tuple(args.fields) if args.fields else None,
        "checks": tuple(args.checks) if args.checks else None,
    }
    man = replace(man, **{k: v for k, v in overrides.items() if v is not None})

    start = time.perf_counter()
    res = run_sweep(man, jobs=args.jobs)
    elapsed = time.perf_counter() - start
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for rep in res.reports:
                fh.write(json.dumps(rep, sort_keys=True) + "\n")
    summary = res.summary()
    summary["seconds"] = round(elapsed, 2)
    print(json.dumps(summary, indent=1))
    for fail in res.failures[:20]:
        print(f"FAIL {fail['complex']} [{fail['field']}] {fail['suite']}: {fail['messages'][0]}", file=sys.stderr)
    return 0 if res.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
