"""JSON file formats: complex documents and sweep manifests."""

from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass
from pathlib import Path

from .complex import SimplicialComplex, from_facets
from .errors import ParseError, SRToolError
from .homology import Field, parse_field

SCHEMA_VERSION = "1"


def natural_key(label: str):
    """Sort key placing "2" before "10"."""
    return [(0, int(p), "") if p.isdigit() else (1, 0, p) for p in re.split(r"(\d+)", label) if p]


@dataclass(frozen=True)
class ComplexDocument:
    ground_set: tuple[str, ...]
    facets: tuple[tuple[str, ...], ...]
    name: str | None = None
    schema_version: str = SCHEMA_VERSION

    def canonical(self) -> "ComplexDocument":
        order = {lab: k for k, lab in enumerate(sorted(self.ground_set, key=natural_key))}
        facets = sorted({tuple(sorted(f, key=order.__getitem__)) for f in self.facets}, key=lambda f: [order[x] for x in f])
        return ComplexDocument(tuple(sorted(self.ground_set, key=natural_key)), tuple(facets), self.name, self.schema_version)

    def to_complex(self) -> SimplicialComplex:
        try:
            return from_facets(self.ground_set, self.facets)
        except SRToolError as exc:
            raise ParseError(str(exc)) from exc

    def as_dict(self) -> dict:
        out = {"schema_version": self.schema_version}
        if self.name is not None:
            out["name"] = self.name
        out["ground_set"] = list(self.ground_set)
        out["facets"] = [list(f) for f in self.facets]
        return out

    def dumps(self) -> str:
        """JSON text with one facet per line, so fixtures diff cleanly."""
        d = self.as_dict()

        def enc(x):
            return json.dumps(x, ensure_ascii=False)

        lines = [f" {enc(k)}: {enc(v)}," for k, v in d.items() if k != "facets"]
        facets = ",\n".join(f"  {enc(f)}" for f in d["facets"])
        body = "\n".join(lines) + '\n "facets": [\n' + facets + ("\n ]" if facets else "]")
        return "{\n" + body + "\n}\n"


def document_from_complex(cx: SimplicialComplex, name: str | None = None) -> ComplexDocument:
    facets = tuple(cx.face_labels(f) for f in cx.facets)
    return ComplexDocument(cx.labels, facets, name).canonical()


def loads_document(text: str) -> ComplexDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError("a complex document is a JSON object")
    version = str(raw.get("schema_version", ""))
    if version != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {version!r}")
    try:
        ground = tuple(str(x) for x in raw["ground_set"])
        facets = tuple(tuple(str(x) for x in f) for f in raw["facets"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed document: {exc}") from exc
    name = raw.get("name")
    doc = ComplexDocument(ground, facets, None if name is None else str(name), version)
    doc.to_complex()  # validate labels now rather than later
    return doc


def load_document(path: str | Path) -> ComplexDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(str(exc)) from exc
    return loads_document(text)


@dataclass(frozen=True)
class SweepManifest:
    """What a sweep covers.

    Complexes on up to ``exhaustive_max`` labels are enumerated exhaustively;
    for larger label counts up to ``max_vertices``, ``samples`` complexes
    with at most ``max_faces`` nonempty faces are drawn with ``seed``.
    """

    max_vertices: int = 3
    max_facets: int | None = None
    fields: tuple[str, ...] = ("QQ", "GF(2)")
    budget: int | None = None
    seed: int = 0
    samples: int = 200
    max_faces: int = 20
    exhaustive_max: int = 4
    checks: tuple[str, ...] = ()  # empty: every suite

    def field_objects(self) -> list[Field]:
        return [parse_field(f) for f in self.fields]

    def dumps(self) -> str:
        return json.dumps(asdict(self), indent=1) + "\n"


def loads_manifest(text: str) -> SweepManifest:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError("a manifest is a JSON object")
    known = SweepManifest.__dataclass_fields__
    unknown = set(raw) - set(known)
    if unknown:
        raise ParseError(f"unknown manifest keys {sorted(unknown)}")
    for key in ("fields", "checks"):
        if key in raw:
            raw[key] = tuple(raw[key])
    try:
        man = SweepManifest(**raw)
        man.field_objects()
    except (TypeError, SRToolError) as exc:
        raise ParseError(f"bad manifest: {exc}") from exc
    return man


def load_manifest(path: str | Path) -> SweepManifest:
    try:
        return loads_manifest(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(str(exc)) from exc
