"""Ring maps and the endomorphism-relative element predicates."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .report import ElementWitness, PropertyReport, element_report
from .ring import FiniteRing, _as_members, _readonly, idempotents, quotient

KINDS = ("endomorphism", "automorphism", "isomorphism", "homomorphism", "unverified")


class MapError(ValueError):
    """A candidate map is not a (unital) ring homomorphism."""

    def __init__(self, reason: str, witness: tuple = ()):
        self.reason = reason
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"{reason}; witness {self.witness}" if witness else reason)


@dataclass(frozen=True, eq=False)
class RingMap:
    source: FiniteRing
    target: FiniteRing
    images: np.ndarray
    kind: str = "unverified"
    name: str = "map"

    def __call__(self, a):
        return self.images[a]

    def __repr__(self) -> str:
        return f"RingMap({self.name!r}, {self.source.name}->{self.target.name}, {self.kind})"

    @cached_property
    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(np.unique(self.images)) == self.source.order

    @cached_property
    def is_injective(self) -> bool:
        return len(np.unique(self.images)) == self.source.order

    @cached_property
    def is_identity(self) -> bool:
        return self.source is self.target and bool((self.images == self.source.elements).all())

    @cached_property
    def _powers(self) -> list:
        return [self.source.elements]

    def power_table(self, k: int) -> np.ndarray:
        """Images of ``alpha^k`` (an endomorphism's k-th iterate)."""
        if self.source is not self.target:
            raise ValueError("only endomorphisms have powers")
        pw = self._powers
        while len(pw) <= k:
            pw.append(self.images[pw[-1]])
        return pw[k]

    def same_as(self, other: "RingMap") -> bool:
        return self is other or (
            self.source is other.source and self.target is other.target
            and bool((self.images == other.images).all())
        )

    def to_dict(self) -> dict:
        return {"name": self.name, "ring": self.source.name, "images": self.images.tolist()}


def verify_map(R: FiniteRing, S: FiniteRing, images, name: str = "map", *, unital: bool = True) -> RingMap:
    """Check that ``images`` defines a ring homomorphism ``R -> S``.

    Returns a RingMap whose ``kind`` is decided exhaustively; raises
    :class:`MapError` with the first offending pair otherwise.  Maps sending
    1 to something other than 1 are rejected unless ``unital=False``.
    """
    img = np.asarray(images, dtype=np.intp)
    if img.shape != (R.order,):
        raise MapError(f"expected {R.order} images, got shape {img.shape}")
    if ((img < 0) | (img >= S.order)).any():
        raise MapError("image out of range", (int(np.flatnonzero((img < 0) | (img >= S.order))[0]),))
    if unital and img[R.one] != S.one:
        raise MapError("1 is not mapped to 1", (R.one,))
    bad = np.argwhere(img[R.add] != S.add[img[:, None], img[None, :]])
    if len(bad):
        raise MapError("not additive", tuple(bad[0]))
    bad = np.argwhere(img[R.mul] != S.mul[img[:, None], img[None, :]])
    if len(bad):
        raise MapError("not multiplicative", tuple(bad[0]))
    bijective = R.order == S.order and len(np.unique(img)) == R.order
    if R is S:
        kind = "automorphism" if bijective else "endomorphism"
    else:
        kind = "isomorphism" if bijective else "homomorphism"
    return RingMap(R, S, _readonly(img), kind, name)


def identity_map(R: FiniteRing) -> RingMap:
    return RingMap(R, R, R.elements, "automorphism", "id")


def compose(beta: RingMap, alpha: RingMap, name: str | None = None) -> RingMap:
    """``beta o alpha`` (apply ``alpha`` first)."""
    if alpha.target is not beta.source:
        raise ValueError("maps are not composable")
    images = beta.images[alpha.images]
    return verify_map(alpha.source, beta.target, images, name or f"{beta.name}*{alpha.name}",
                      unital=False)


def inverse(phi: RingMap, name: str | None = None) -> RingMap:
    if not phi.is_bijective:
        raise MapError("map is not bijective")
    inv = np.empty_like(phi.images)
    inv[phi.images] = phi.source.elements
    return verify_map(phi.target, phi.source, inv, name or f"{phi.name}^-1")


def map_order(alpha: RingMap) -> int | None:
    """Least ``t >= 1`` with ``alpha^t = id``, or None if no such ``t`` exists.

    A non-injective endomorphism never returns to the identity.  For a
    bijection the order is the lcm of its cycle lengths.
    """
    if alpha.source is not alpha.target:
        raise ValueError("map_order needs an endomorphism")
    if not alpha.is_bijective:
        return None
    seen = np.zeros(alpha.source.order, dtype=bool)
    t = 1
    for start in range(alpha.source.order):
        if seen[start]:
            continue
        length, a = 0, start
        while not seen[a]:
            seen[a] = True
            a = int(alpha.images[a])
            length += 1
        t = math.lcm(t, length)
    return t


def fixes_idempotents(R: FiniteRing, alpha: RingMap) -> PropertyReport:
    witness = None
    for e in idempotents(R):
        if alpha.images[e] != e:
            witness = ElementWitness("idempotent not fixed", {"e": e, "alpha(e)": int(alpha.images[e])})
            break
    return element_report("fixes-idempotents", R, alpha, witness)


def is_rigid(R: FiniteRing, alpha: RingMap) -> PropertyReport:
    """``a alpha(a) = 0`` only for ``a = 0``."""
    hits = np.flatnonzero(R.mul[R.elements, alpha.images] == R.zero)
    hits = hits[hits != R.zero]
    witness = None if not len(hits) else ElementWitness("a alpha(a) = 0", {"a": int(hits[0])})
    return element_report("rigid", R, alpha, witness)


def is_compatible(R: FiniteRing, alpha: RingMap) -> PropertyReport:
    """``ab = 0`` exactly when ``a alpha(b) = 0``."""
    plain = R.mul == R.zero
    twisted = R.mul[:, alpha.images] == R.zero
    bad = np.argwhere(plain != twisted)
    witness = None
    if len(bad):
        a, b = bad[0]
        witness = ElementWitness("ab = 0 differs from a alpha(b) = 0", {"a": a, "b": b})
    return element_report("compatible", R, alpha, witness)


def is_injective(R: FiniteRing, alpha: RingMap) -> PropertyReport:
    witness = None
    if not alpha.is_injective:
        _, first = np.unique(alpha.images, return_index=True)
        dup = sorted(set(range(R.order)) - set(first.tolist()))[0]
        other = int(np.flatnonzero(alpha.images == alpha.images[dup])[0])
        witness = ElementWitness("alpha(a) = alpha(b)", {"a": other, "b": dup})
    return element_report("injective", R, alpha, witness)


def transport(R: FiniteRing, S: FiniteRing, phi: RingMap, alpha: RingMap, name: str | None = None) -> RingMap:
    """The endomorphism ``phi alpha phi^-1`` of ``S``."""
    if not phi.is_bijective:
        raise MapError("phi is not bijective")
    if phi.source is not R or phi.target is not S:
        raise ValueError("phi must map R to S")
    inv = np.empty_like(phi.images)
    inv[phi.images] = R.elements
    images = phi.images[alpha.images[inv]]
    return verify_map(S, S, images, name or f"{phi.name}.{alpha.name}.{phi.name}^-1")


def induced_quotient_map(R: FiniteRing, I, alpha: RingMap, name: str | None = None):
    """The endomorphism ``a + I -> alpha(a) + I`` of ``R/I``.

    Returns ``(quotient_ring, induced_map, projection)``.
    """
    members = _as_members(R, I)
    inside = np.zeros(R.order, dtype=bool)
    inside[members] = True
    escaped = members[~inside[alpha.images[members]]]
    if len(escaped):
        raise MapError("alpha(I) is not contained in I", (int(escaped[0]),))
    Q, proj = quotient(R, members)
    inv = np.empty(Q.order, dtype=np.intp)
    # smallest preimage of each coset (its representative)
    for a in range(R.order - 1, -1, -1):
        inv[proj.images[a]] = a
    images = proj.images[alpha.images[inv]]
    return Q, verify_map(Q, Q, images, name or f"{alpha.name}-bar"), proj


def additive_generators(R: FiniteRing) -> list[int]:
    """A small generating set of ``(R, +)``, starting with 1 (greedy, by index)."""
    gens: list[int] = []
    span = np.zeros(R.order, dtype=bool)
    span[R.zero] = True
    for g in [R.one, *range(R.order)]:
        if span[g]:
            continue
        gens.append(int(g))
        while True:
            members = np.flatnonzero(span)
            grown = span.copy()
            for h in gens:
                grown[R.add[members, h]] = True
            if (grown == span).all():
                break
            span = grown
    return gens


def enumerate_endomorphisms(R: FiniteRing, max_order: int = 16) -> list[RingMap]:
    """Every unital ring endomorphism of ``R``, in lexicographic order of images.

    An additive map is fixed by the images of additive generators, so only
    ``|R|^(k-1)`` candidates are tried (1 always goes to 1).  Refuses rings
    above ``max_order``.
    """
    if R.order > max_order:
        raise ValueError(f"endomorphism enumeration is limited to order <= {max_order}")
    gens = additive_generators(R)
    # express every element as a word in the generators (BFS from 0)
    word: dict[int, tuple[int, int]] = {R.zero: (-1, -1)}
    order = [R.zero]
    for a in order:
        for k, g in enumerate(gens):
            b = int(R.add[a, g])
            if b not in word:
                word[b] = (a, k)
                order.append(b)
    found = []
    for rest in itertools.product(range(R.order), repeat=len(gens) - 1):
        targets = (R.one,) + rest
        images = np.empty(R.order, dtype=np.intp)
        images[R.zero] = R.zero
        for b in order[1:]:
            a, k = word[b]
            images[b] = R.add[images[a], targets[k]]
        if (images[R.add] != R.add[images[:, None], images[None, :]]).any():
            continue
        if (images[R.mul] != R.mul[images[:, None], images[None, :]]).any():
            continue
        found.append(images)
    found.sort(key=lambda im: im.tolist())
    return [verify_map(R, R, im, "id" if (im == R.elements).all() else f"endo{k}")
            for k, im in enumerate(found)]
