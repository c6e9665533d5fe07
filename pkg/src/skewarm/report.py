"""Verdicts and witnesses shared by every predicate."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

HOLDS_EXHAUSTIVELY = "holds-exhaustively"
HOLDS_UP_TO_BOUND = "holds-up-to-bound"
HOLDS_UP_TO_BUDGET = "holds-up-to-budget"
FAILS = "fails"

VERDICTS = (HOLDS_EXHAUSTIVELY, HOLDS_UP_TO_BOUND, HOLDS_UP_TO_BUDGET, FAILS)


def _plain(value):
    """Convert numpy scalars / tuples into JSON-friendly Python values."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        return value.item()
    return value


@dataclass(frozen=True)
class ElementWitness:
    """Certificate refuting an element-level predicate."""

    kind: str
    elements: dict

    def to_dict(self) -> dict:
        return {"kind": self.kind, "elements": _plain(self.elements)}


@dataclass(frozen=True)
class ZeroPairWitness:
    """A pair with ``f g = 0`` whose coefficient product ``(i, j)`` violates
    the predicate.  ``f`` and ``g`` are trimmed coefficient lists (for the
    polynomial-ring variant, lists of coefficient lists)."""

    f: tuple
    g: tuple
    i: int
    j: int
    product: Any

    def to_dict(self) -> dict:
        return {
            "f": _plain(self.f),
            "g": _plain(self.g),
            "violation": {"i": int(self.i), "j": int(self.j), "product": _plain(self.product)},
        }


@dataclass
class PropertyReport:
    property: str
    ring: str
    twist: str | None
    verdict: str
    degree_bound: tuple[int, int] | None = None
    witness: ElementWitness | ZeroPairWitness | None = None
    pairs_examined: int = 0
    zero_pairs: int = 0
    status: str = "exhausted"
    frontier: Any = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def holds(self) -> bool:
        return self.verdict != FAILS

    @property
    def fails(self) -> bool:
        return self.verdict == FAILS

    def to_dict(self, *, include_elapsed: bool = True) -> dict:
        out = {
            "property": self.property,
            "ring": self.ring,
            "twist": self.twist,
            "degree_bound": list(self.degree_bound) if self.degree_bound else None,
            "verdict": self.verdict,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "pairs_examined": int(self.pairs_examined),
            "zero_pairs": int(self.zero_pairs),
            "status": self.status,
            "frontier": _plain(self.frontier),
        }
        if include_elapsed:
            out["elapsed"] = round(float(self.elapsed), 6)
        return out

    def summary(self) -> str:
        bound = f" d={self.degree_bound[0]}" if self.degree_bound else ""
        line = f"{self.property} [{self.ring}{', ' + self.twist if self.twist else ''}]{bound}: {self.verdict}"
        if self.witness is not None:
            line += f"  witness={self.witness.to_dict()}"
        return line


def element_report(prop: str, ring, twist, witness) -> PropertyReport:
    return PropertyReport(
        property=prop,
        ring=ring.name,
        twist=None if twist is None else twist.name,
        verdict=FAILS if witness is not None else HOLDS_EXHAUSTIVELY,
        witness=witness,
    )
