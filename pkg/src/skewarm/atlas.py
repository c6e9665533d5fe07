"""JSON persistence: rings, maps, reports and atlas files.

An atlas file bundles rings, maps (by ring name) and optionally reports.
Everything loaded from disk is validated in full: the JSON schema first,
then the ring axioms and the homomorphism conditions.  There is no way to
mark a file as trusted.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np

from .endo import MapError, RingMap, identity_map, map_order, verify_map
from .ring import FiniteRing, RingAxiomError, validate_ring

ATLAS_VERSION = 1
ATLAS_PATH_ENV = "SKEWARM_ATLAS_PATH"


class AtlasError(ValueError):
    """Malformed or invalid atlas content."""


@lru_cache(maxsize=None)
def load_schema() -> dict:
    text = resources.files("skewarm").joinpath("schemas/skewarm.schema.json").read_text()
    return json.loads(text)


def validate(doc, kind: str) -> None:
    """Validate ``doc`` against the named definition (ring, map, report, atlas, ledger)."""
    root = load_schema()
    if kind not in root["$defs"]:
        raise ValueError(f"unknown schema {kind!r}")
    schema = {"$defs": root["$defs"], "$ref": f"#/$defs/{kind}"}
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise AtlasError(f"{kind} JSON invalid at {where}: {exc.message}") from None


def ring_from_dict(d: dict) -> FiniteRing:
    validate(d, "ring")
    n = d["order"]
    add, mul = np.asarray(d["add"]), np.asarray(d["mul"])
    if add.shape != (n, n) or mul.shape != (n, n):
        raise AtlasError(f"ring {d['name']!r}: tables must be {n}x{n}")
    try:
        return validate_ring(add, mul, d["zero"], d["one"], d["name"], d.get("labels"))
    except RingAxiomError as exc:
        raise AtlasError(f"ring {d['name']!r} rejected: {exc}") from exc


def map_from_dict(d: dict, rings: dict[str, FiniteRing]) -> RingMap:
    validate(d, "map")
    if d["ring"] not in rings:
        raise AtlasError(f"map {d.get('name', '?')!r} refers to unknown ring {d['ring']!r}")
    R = rings[d["ring"]]
    try:
        return verify_map(R, R, d["images"], d.get("name", "map"))
    except MapError as exc:
        raise AtlasError(f"map {d.get('name', '?')!r} rejected: {exc}") from exc


@dataclass
class Atlas:
    rings: dict = field(default_factory=dict)  # name -> FiniteRing
    maps: dict = field(default_factory=dict)  # name -> RingMap
    reports: list = field(default_factory=list)

    def add_ring(self, R: FiniteRing) -> FiniteRing:
        """Add ``R``; an equal ring under the same name is reused."""
        old = self.rings.get(R.name)
        if old is not None:
            if old.to_dict() != R.to_dict():
                raise AtlasError(f"two different rings are both named {R.name!r}")
            return old
        self.rings[R.name] = R
        return R

    def add_map(self, alpha: RingMap, name: str | None = None) -> RingMap:
        R = self.add_ring(alpha.source)
        name = name or alpha.name
        if name in self.maps:
            raise AtlasError(f"duplicate map name {name!r}")
        m = RingMap(R, R, alpha.images, alpha.kind, name)
        self.maps[name] = m
        return m

    def entries(self) -> list[tuple[FiniteRing, RingMap]]:
        """``(ring, twist)`` pairs: every map, plus the identity on rings without maps."""
        out = [(m.source, m) for m in self.maps.values()]
        mapped = {m.source.name for m in self.maps.values()}
        out += [(R, identity_map(R)) for name, R in self.rings.items() if name not in mapped]
        return out

    def to_dict(self) -> dict:
        doc = {
            "version": ATLAS_VERSION,
            "rings": [R.to_dict() for R in self.rings.values()],
            "maps": [{"name": name, "ring": m.source.name, "images": m.images.tolist()}
                     for name, m in self.maps.items()],
        }
        if self.reports:
            doc["reports"] = list(self.reports)
        return doc

    def dumps(self) -> str:
        return dumps_atlas(self.to_dict())

    def table(self) -> str:
        lines = [f"{'map':16s} {'ring':22s} {'order':>5s} {'twist order':>11s}"]
        for R, m in self.entries():
            t = map_order(m)
            lines.append(f"{m.name:16s} {R.name:22s} {R.order:5d} {'inf' if t is None else t:>11}")
        return "\n".join(lines)


def atlas_from_dict(doc: dict) -> Atlas:
    validate(doc, "atlas")
    atlas = Atlas()
    for d in doc["rings"]:
        R = ring_from_dict(d)
        if R.name in atlas.rings:
            raise AtlasError(f"duplicate ring name {R.name!r}")
        atlas.rings[R.name] = R
    for d in doc["maps"]:
        m = map_from_dict(d, atlas.rings)
        if m.name in atlas.maps:
            raise AtlasError(f"duplicate map name {m.name!r}")
        atlas.maps[m.name] = m
    atlas.reports = list(doc.get("reports", []))
    return atlas


def dumps_atlas(doc: dict) -> str:
    """One top-level item per line; stable, so export/import/export is byte-identical."""
    parts = [f'  "version": {json.dumps(doc["version"])}']
    for key in ("rings", "maps", "reports"):
        if key in doc:
            items = ",\n".join("    " + json.dumps(x, separators=(",", ":")) for x in doc[key])
            parts.append(f'  "{key}": [\n{items}\n  ]' if items else f'  "{key}": []')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def load_atlas(path: str | os.PathLike) -> Atlas:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise AtlasError(f"{path}: malformed JSON ({exc})") from None
    return atlas_from_dict(doc)


def save_atlas(atlas: Atlas, path: str | os.PathLike) -> None:
    Path(path).write_text(atlas.dumps())


def export_fixtures(corpus) -> Atlas:
    """Atlas holding every fixture's ring, with the twist stored under the fixture id."""
    atlas = Atlas()
    for fx in corpus:
        atlas.add_map(fx.twist, fx.id)
    return atlas


def atlas_search_path() -> list[Path]:
    raw = os.environ.get(ATLAS_PATH_ENV, "")
    return [Path(p) for p in raw.split(os.pathsep) if p]


def resolve_atlas(ref: str) -> Path:
    """A path as given, else ``ref`` (or ``ref.json``) inside the search-path directories."""
    p = Path(ref)
    if p.exists():
        return p
    for d in atlas_search_path():
        for cand in (d / ref, d / f"{ref}.json"):
            if cand.is_file():
                return cand
    raise AtlasError(f"atlas {ref!r} not found (searched {ATLAS_PATH_ENV}={os.environ.get(ATLAS_PATH_ENV, '')!r})")


def discover_atlases() -> list[Path]:
    """Atlas files found on the search path (files directly, ``*.json`` in directories)."""
    out = []
    for d in atlas_search_path():
        if d.is_file():
            out.append(d)
        elif d.is_dir():
            out.extend(sorted(d.glob("*.json")))
    return out
