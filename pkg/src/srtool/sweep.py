"""Corpus sweep: run the named suites over every complex of a manifest."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .checks import SUITES, Instance, run_suites
from .corpus import CorpusEntry, exhaustive, sample
from .documents import SweepManifest, document_from_complex
from .errors import ParseError


@dataclass
class SweepResult:
    complexes: int = 0
    instances: int = 0
    passed: dict = field(default_factory=dict)  # suite -> passing instance count
    failures: list = field(default_factory=list)
    reports: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {
            "complexes": self.complexes,
            "instances": self.instances,
            "passed": dict(sorted(self.passed.items())),
            "failures": self.failures,
        }


def manifest_corpus(man: SweepManifest) -> list[CorpusEntry]:
    out = exhaustive(min(man.max_vertices, man.exhaustive_max))
    for n in range(man.exhaustive_max + 1, man.max_vertices + 1):
        out.extend(sample(n, man.samples, man.seed, man.max_faces))
    if man.max_facets is not None:
        out = [e for e in out if len(e.complex.facets) <= man.max_facets]
    return out


def _run_entry(args) -> tuple[list, list]:
    entry, fields, names, budget = args
    failures, reports = [], []
    for f in fields:
        x = Instance(entry.complex, f, entry.name, budget)
        for suite, msgs in run_suites(x, names).items():
            if msgs:
                failures.append(
                    {
                        "complex": entry.name,
                        "document": document_from_complex(entry.complex, entry.name).as_dict(),
                        "field": f.name,
                        "suite": suite,
                        "messages": msgs,
                    }
                )
        try:
            reports.append(x.report.as_dict())
        except Exception as exc:  # already recorded by the conjecture suite if selected
            reports.append({"subject": entry.name, "field": f.name, "error": str(exc)})
    return failures, reports


def run_sweep(man: SweepManifest, jobs: int = 1) -> SweepResult:
    names = list(man.checks) or list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ParseError(f"unknown check suites {unknown}")
    fields = man.field_objects()
    corpus = manifest_corpus(man)
    tasks = [(e, fields, names, man.budget) for e in corpus]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_entry, tasks, chunksize=4))
    else:
        results = [_run_entry(t) for t in tasks]
    res = SweepResult(complexes=len(corpus), instances=len(corpus) * len(fields))
    for failures, reports in results:  # corpus order, whatever the pool did
        res.failures.extend(failures)
        res.reports.extend(reports)
    bad = {(f["complex"], f["field"], f["suite"]) for f in res.failures}
    for name in names:
        res.passed[name] = sum(
            (e.name, f.name, name) not in bad for e in corpus for f in fields
        )
    return res
