"""Implication harness over a corpus of (ring, twist) entries.

Each case encodes one structural result as an implication that can be
checked literally at a finite degree bound.  An entry whose hypothesis is
false is recorded as ``vacuous``.  ``assert`` cases must never fail on the
shipped corpus; ``observe`` cases only record what they see.

This is evidence gathered on small rings, not a proof of anything.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .constructions import corner_ring, relabel, trivial_extension
from .endo import induced_quotient_map, map_order, transport
from .fixtures import Fixture, default_corpus
from .properties import (POLYNOMIAL_PROPERTIES, check_property, degree_pack,
                         is_central_skew_armendariz_over_polyring, polyring_mul)
from .report import HOLDS_UP_TO_BOUND, PropertyReport, ZeroPairWitness
from .ring import idempotents, two_sided_ideals
from .search import DEFAULT_BUDGET, PairScan, PolyAlgebra
from .skewpoly import (SkewPoly, enumerate_idempotent_polys, poly_right_annihilator_of_constant,
                       skew_mul)

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"
CENTRAL = "central-skew-armendariz"
SKEW = "skew-armendariz"
POLY_BUDGET = 2 * 10**7
POLY_MAX_ORDER = 16
PACK_SAMPLES = 64


@dataclass
class EntryResult:
    entry: str
    outcome: str
    detail: str = ""
    witness: dict | None = None

    def to_dict(self) -> dict:
        return {"entry": self.entry, "outcome": self.outcome, "detail": self.detail}


@dataclass
class HarnessCase:
    id: str
    statement: str
    hypothesis: tuple
    conclusion: tuple
    mode: str  # "assert" | "observe"
    evaluate: Callable[[Fixture, "Context"], EntryResult] = field(repr=False)
    bound_qualified: bool = True
    results: list = field(default_factory=list)


class Context:
    """Scan options plus a cache of reports keyed by (entry, property, degree)."""

    def __init__(self, seed: int = 0, strategy: str = "dfs", budget: int = DEFAULT_BUDGET, jobs: int = 1,
                 poly_budget: int = POLY_BUDGET):
        self.seed = seed
        self.opts = {"strategy": strategy, "budget": budget, "jobs": jobs}
        self.poly_budget = poly_budget
        self._cache: dict = {}

    def report(self, ring, twist, prop: str, degree: int | None = None, key: str | None = None) -> PropertyReport:
        poly = prop in POLYNOMIAL_PROPERTIES
        ck = (key or id(ring), id(twist), prop, degree if poly else None)
        if ck not in self._cache:
            opts = self.opts if poly else {}
            rep = check_property(prop, ring, twist, degree if degree is not None else 1, **opts)
            # holding ring and twist keeps their ids from being reused by later objects
            self._cache[ck] = (ring, twist, rep)
        return self._cache[ck][2]

    def of(self, fx: Fixture, prop: str, degree: int | None = None) -> PropertyReport:
        return self.report(fx.ring, fx.twist, prop, fx.degree if degree is None else degree, key=fx.id)

    def holds(self, fx: Fixture, prop: str, degree: int | None = None) -> bool:
        return self.of(fx, prop, degree).holds


def _witness(report: PropertyReport):
    return None if report.witness is None else report.witness.to_dict()


# ---------------------------------------------------------------------------
# case bodies


def _iso(fx: Fixture, ctx: Context) -> EntryResult:
    R, alpha, d = fx.ring, fx.twist, fx.degree
    rng = random.Random(f"{ctx.seed}:{fx.id}")
    perm = list(range(R.order))
    rng.shuffle(perm)
    S, phi = relabel(R, perm, f"{R.name}~")
    beta = transport(R, S, phi, alpha)
    rep_r = ctx.of(fx, CENTRAL)
    rep_s = ctx.report(S, beta, CENTRAL, d)
    if rep_r.verdict != rep_s.verdict:
        return EntryResult(fx.id, FAIL, f"R: {rep_r.verdict}, relabelled: {rep_s.verdict}", _witness(rep_s))
    if rep_r.fails:
        # the transported witness must refute the copy as well
        w = rep_r.witness
        f = SkewPoly(S, beta, tuple(int(phi.images[c]) for c in w.f))
        g = SkewPoly(S, beta, tuple(int(phi.images[c]) for c in w.g))
        value = int(S.mul[f.coeff(w.i), beta.power_table(w.i)[g.coeff(w.j)]])
        if not skew_mul(f, g).is_zero() or S.center_mask[value]:
            return EntryResult(fx.id, FAIL, "transported witness does not refute the copy")
    return EntryResult(fx.id, PASS, f"both {rep_r.verdict} (perm seed {ctx.seed})")


def _abelian_witness(R, alpha, e: int, r: int):
    """The degree-1 pair built from a non-central idempotent ``e``."""
    one_e = int(R.sub(R.one, e))
    c = int(R.mul[R.mul[e, r], one_e])
    if c != R.zero:
        f = SkewPoly(R, alpha, (e, int(R.neg[c])))
        g = SkewPoly(R, alpha, (one_e, c))
    else:
        c = int(R.mul[R.mul[one_e, r], e])
        f = SkewPoly(R, alpha, (one_e, int(R.neg[c])))
        g = SkewPoly(R, alpha, (e, c))
    value = int(R.mul[f.coeff(0), g.coeff(1)])
    ok = skew_mul(f, g).is_zero() and not R.center_mask[value]
    return ok, ZeroPairWitness(f.coeffs, g.coeffs, 0, 1, value).to_dict()


def _abelian(fx: Fixture, ctx: Context) -> EntryResult:
    R, alpha, d = fx.ring, fx.twist, fx.degree
    if not ctx.holds(fx, "fixes-idempotents"):
        return EntryResult(fx.id, VACUOUS, "alpha moves an idempotent")
    central = ctx.holds(fx, CENTRAL)
    ab = ctx.of(fx, "abelian")
    if ab.fails:
        e, r = ab.witness.elements["e"], ab.witness.elements["r"]
        ok, w = _abelian_witness(R, alpha, e, r)
        if central or not ok:
            return EntryResult(fx.id, FAIL, "not abelian, yet no refutation of centrality", w)
        return EntryResult(fx.id, PASS, "not abelian and central fails (idempotent pair verified)", w)
    checked = []
    for e in idempotents(R):
        if e in (R.zero, R.one):
            continue
        one_e = int(R.sub(R.one, e))
        corners = []
        for idem in (e, one_e):
            Cr, tw, _ = corner_ring(R, idem, alpha, f"{R.label(idem)}R")
            corners.append(ctx.report(Cr, tw, CENTRAL, d, key=f"{fx.id}/corner{idem}").holds)
        if central != all(corners):
            return EntryResult(fx.id, FAIL, f"e = {R.label(e)}: R {central}, corners {corners}")
        checked.append(R.label(e))
    if not checked:
        # e = 1 is the only choice: eR = R and (1-e)R = 0, so both sides are R's own verdict
        return EntryResult(fx.id, PASS, f"only trivial idempotents; central={central} with e = 1")
    return EntryResult(fx.id, PASS, f"central={central} agrees with corners for e in {checked}")


def _cor1(fx: Fixture, ctx: Context) -> EntryResult:
    if not (ctx.holds(fx, "fixes-idempotents") and ctx.holds(fx, SKEW)):
        return EntryResult(fx.id, VACUOUS, "hypothesis false")
    ab = ctx.of(fx, "abelian")
    return EntryResult(fx.id, PASS if ab.holds else FAIL, f"abelian: {ab.verdict}", _witness(ab))


def _lemma_idem(fx: Fixture, ctx: Context) -> EntryResult:
    R, alpha, d = fx.ring, fx.twist, fx.degree
    if not ctx.holds(fx, CENTRAL):
        return EntryResult(fx.id, VACUOUS, "central fails")
    fixes = ctx.holds(fx, "fixes-idempotents")
    polys = enumerate_idempotent_polys(R, alpha, d)
    for e in polys:
        if not all(R.center_mask[c] for c in e.coeffs[1:]):
            return EntryResult(fx.id, FAIL, f"idempotent {e.to_str()} has a non-central higher coefficient")
        if fixes and e.degree > 0:
            return EntryResult(fx.id, FAIL, f"idempotent {e.to_str()} is not constant")
    nonconst = sum(1 for e in polys if e.degree > 0)
    return EntryResult(fx.id, PASS, f"{len(polys)} idempotents of degree <= {d}, {nonconst} non-constant")


def _skew_abelian(fx: Fixture, ctx: Context) -> EntryResult:
    R, alpha, d = fx.ring, fx.twist, fx.degree
    if not ctx.holds(fx, CENTRAL):
        return EntryResult(fx.id, VACUOUS, "central fails")
    x = SkewPoly.x(R, alpha)
    if ctx.holds(fx, "fixes-idempotents"):
        # commuting with every a x^k (k <= d) is commuting with all p of degree <= d
        monomials = [SkewPoly(R, alpha, (R.zero,) * k + (a,)) for k in range(d + 1) for a in range(R.order)]
        polys = enumerate_idempotent_polys(R, alpha, d)
        for E in polys:
            for p in monomials:
                if skew_mul(p, E) != skew_mul(E, p):
                    return EntryResult(fx.id, FAIL, f"{E.to_str()} does not commute with {p.to_str()}")
        return EntryResult(fx.id, PASS, f"{len(polys)} idempotent polynomials commute with degree <= {d}")
    for e in idempotents(R):
        if alpha.images[e] != e:
            E = SkewPoly.constant(R, alpha, e)
            if skew_mul(E, x) == skew_mul(x, E):
                return EntryResult(fx.id, FAIL, f"e = {R.label(e)} moved but ex = xe")
            return EntryResult(fx.id, PASS, f"e = {R.label(e)}: ex != xe = alpha(e)x")
    return EntryResult(fx.id, FAIL, "fixes-idempotents failed but no moved idempotent found")


def _pp(fx: Fixture, ctx: Context) -> EntryResult:
    if not (ctx.holds(fx, CENTRAL) and ctx.holds(fx, "right-pp") and ctx.holds(fx, "fixes-idempotents")):
        return EntryResult(fx.id, VACUOUS, "hypothesis false")
    rep = ctx.of(fx, SKEW)
    return EntryResult(fx.id, PASS if rep.holds else FAIL, f"skew-armendariz: {rep.verdict}", _witness(rep))


def _pack_check(R, alpha, t: int, p, q) -> tuple[bool, SkewPoly]:
    """Pack an R[x][y; alpha] zero pair and return (packed product is 0, f, g)."""
    def deg(f):
        return max(len(f) - 1, 0)
    k = max(sum(deg(f) for f in p) + sum(deg(g) for g in q), 0)
    f = degree_pack(R, alpha, p, t, k)
    g = degree_pack(R, alpha, q, t, k)
    return skew_mul(f, g).is_zero(), f, g


def _poly(fx: Fixture, ctx: Context) -> EntryResult:
    R, alpha = fx.ring, fx.twist
    t = map_order(alpha)
    if t is None:
        return EntryResult(fx.id, VACUOUS, "twist has infinite order")
    if R.order > POLY_MAX_ORDER:
        return EntryResult(fx.id, VACUOUS, f"order {R.order} above {POLY_MAX_ORDER}")
    rep_r = ctx.of(fx, CENTRAL, 1)
    key = (fx.id, "poly")
    if key not in ctx._cache:
        ctx._cache[key] = is_central_skew_armendariz_over_polyring(
            R, alpha, 1, 1, strategy=ctx.opts["strategy"], budget=ctx.poly_budget, jobs=ctx.opts["jobs"])
    rep_x = ctx._cache[key]
    if rep_r.fails:
        # R sits inside R[x] as the x-constant polynomials, so its witness must refute R[x] too
        w = rep_r.witness
        p, q = [[c] for c in w.f], [[c] for c in w.g]
        prod = polyring_mul(R, alpha, p, q)
        if any(c != R.zero for block in prod for c in block) or R.center_mask[w.product]:
            return EntryResult(fx.id, FAIL, "R's witness does not refute R[x]", _witness(rep_r))
        if rep_x.verdict == HOLDS_UP_TO_BOUND:
            return EntryResult(fx.id, FAIL, "R fails but the exhausted R[x] scan found nothing")
    witness = None
    if rep_x.fails:
        w = rep_x.witness
        zero, f, g = _pack_check(R, alpha, t, w.f, w.g)
        products = [int(R.mul[a, alpha.power_table(i)[b]])
                    for i, a in enumerate(f.coeffs) for b in g.coeffs]
        if not zero or all(R.center_mask[v] for v in products):
            return EntryResult(fx.id, FAIL, "packed witness does not refute R", _witness(rep_x))
        witness = {"packed_f": list(f.coeffs), "packed_g": list(g.coeffs), "t": t}
    # round-trip packing on the first zero pairs of R[x][y; alpha]
    alg = PolyAlgebra(R, alpha, 1)
    scan = PairScan(alg, 1, 1, "dfs", ctx.poly_budget, 1)
    packed = 0
    for ch in scan.chunks(collect=True):
        for frow, grow in zip(ch.F, ch.G):
            p = [alg.coefficient(c) for c in frow]
            q = [alg.coefficient(c) for c in grow]
            ok, _, _ = _pack_check(R, alpha, t, p, q)
            if not ok:
                return EntryResult(fx.id, FAIL, f"packing {p}, {q} does not give a zero pair")
            packed += 1
            if packed >= PACK_SAMPLES:
                break
        if packed >= PACK_SAMPLES or len(ch.F):
            break
    if rep_x.status == "budget-hit":
        agree = "R[x] scan stopped at its budget"
    else:
        agree = "agree" if rep_r.fails == rep_x.fails else "differ"
    return EntryResult(fx.id, PASS, f"R d=1: {rep_r.verdict}; R[x] (1,1): {rep_x.verdict} ({agree}); "
                                    f"{packed} packed pairs re-multiplied to 0", witness)


def _x2(fx: Fixture, ctx: Context) -> EntryResult:
    R, alpha = fx.ring, fx.twist
    if not ctx.holds(fx, "injective"):
        return EntryResult(fx.id, VACUOUS, "twist not injective")
    rigid = ctx.holds(fx, "rigid")
    prime = ctx.holds(fx, "prime")
    if not (rigid or prime):
        return EntryResult(fx.id, VACUOUS, "neither rigid nor prime")
    if R.order**2 > 256:
        return EntryResult(fx.id, VACUOUS, "T(R,R) above order 256")
    T, abar = trivial_extension(R, alpha)
    dT = 2 if T.order <= 16 else 1
    notes = []
    if rigid:
        rep = ctx.report(T, abar, CENTRAL, dT, key=f"{fx.id}/T")
        if rep.fails:
            return EntryResult(fx.id, FAIL, "rigid but T(R,R) fails", _witness(rep))
        notes.append(f"rigid and T(R,R) d={dT}: {rep.verdict}")
    if prime:
        rep = ctx.report(T, abar, CENTRAL, 1, key=f"{fx.id}/T")
        if rep.holds and not rigid:
            return EntryResult(fx.id, FAIL, "prime, T(R,R) holds at d=1, yet R is not rigid")
        notes.append(f"prime; T(R,R) d=1: {rep.verdict}; rigid: {rigid}")
    return EntryResult(fx.id, PASS, "; ".join(notes))


def _product(fx: Fixture, ctx: Context) -> EntryResult:
    if fx.factors is None:
        return EntryResult(fx.id, VACUOUS, "not a declared product")
    d = fx.degree
    whole = ctx.holds(fx, CENTRAL)
    parts = [ctx.report(Ri, ai, CENTRAL, d, key=f"{fx.id}/factor{k}").holds
             for k, (Ri, ai) in enumerate(fx.factors)]
    ok = whole == all(parts)
    return EntryResult(fx.id, PASS if ok else FAIL, f"product {whole}, factors {parts}")


def _pp_poly(fx: Fixture, ctx: Context) -> EntryResult:
    R, alpha, d = fx.ring, fx.twist, fx.degree
    if not ctx.holds(fx, "right-pp"):
        return EntryResult(fx.id, VACUOUS, "not right p.p.")
    bad = [R.label(a) for a in range(R.order)
           if not poly_right_annihilator_of_constant(R, alpha, a, d).idempotent_generated]
    if bad:
        return EntryResult(fx.id, FAIL, f"annihilators not idempotent-generated for {bad}")
    return EntryResult(fx.id, PASS, f"every r(a) in degree <= {d} is e R[x; alpha]")


def _lift(fx: Fixture, ctx: Context) -> EntryResult:
    R, alpha, d = fx.ring, fx.twist, fx.degree
    if not ctx.holds(fx, "compatible"):
        return EntryResult(fx.id, VACUOUS, "not alpha-compatible")
    triples, anomalies = 0, []
    for I in two_sided_ideals(R):
        members = np.array(I.members)
        if len(members) in (1, R.order):
            continue
        inside = I.mask
        if not inside[alpha.images[members]].all():
            continue
        if any(R.mul[a, a] == R.zero for a in members if a != R.zero):
            continue
        Q, abar, _ = induced_quotient_map(R, members, alpha)
        if not ctx.report(Q, abar, CENTRAL, d, key=f"{fx.id}/R/{members.tolist()}").holds:
            continue
        triples += 1
        if not ctx.holds(fx, CENTRAL):
            anomalies.append(I.labels())
    if not triples:
        return EntryResult(fx.id, VACUOUS, "no qualifying ideal")
    if anomalies:
        return EntryResult(fx.id, FAIL, f"R fails although R/I holds for I in {anomalies}")
    return EntryResult(fx.id, PASS, f"{triples} qualifying ideals, R central holds")


def builtin_cases() -> list[HarnessCase]:
    """Nine assert cases and two observe cases."""
    return [
        HarnessCase("H-ISO", "verdicts are invariant under relabelling by an isomorphism",
                    ("S = relabelled R", "beta = phi alpha phi^-1"), ("central verdicts equal",), "assert", _iso),
        HarnessCase("H-ABELIAN", "with idempotents fixed: central iff abelian and both corners central",
                    ("fixes-idempotents",), ("not abelian => central fails", "abelian => (central <=> corners)"),
                    "assert", _abelian),
        HarnessCase("H-COR1", "skew Armendariz with idempotents fixed forces abelian",
                    ("fixes-idempotents", SKEW), ("abelian",), "assert", _cor1),
        HarnessCase("H-LEMMA-IDEM", "idempotent polynomials of central rings have central higher "
                    "coefficients, and are constant when idempotents are fixed",
                    (CENTRAL,), ("e_i central for i >= 1", "fixes-idempotents => e constant"), "assert", _lemma_idem),
        HarnessCase("H-SKEWABELIAN", "R[x; alpha] idempotents are central iff alpha fixes idempotents",
                    (CENTRAL,), ("fixes => commute", "moved e => ex != xe"), "assert", _skew_abelian),
        HarnessCase("H-PP", "central, right p.p. and idempotents fixed give skew Armendariz",
                    (CENTRAL, "right-pp", "fixes-idempotents"), (SKEW,), "assert", _pp),
        HarnessCase("H-POLY", "R and R[x] agree on the central property for finite-order twists",
                    ("alpha^t = id",), ("R fails => R[x] fails", "packed R[x] witness refutes R",
                                        "packed zero pairs stay zero"), "assert", _poly),
        HarnessCase("H-X2", "rigid gives a central trivial extension; converse for prime rings",
                    ("alpha injective",), ("rigid => T(R,R) central", "prime and T(R,R) central => rigid"),
                    "assert", _x2),
        HarnessCase("H-PRODUCT", "a product is central iff both factors are",
                    ("componentwise twist",), ("central(R1 x R2) <=> central(R1) and central(R2)",),
                    "assert", _product),
        HarnessCase("H-PP-POLY", "annihilators of constants in R[x; alpha] are generated by an idempotent",
                    ("right-pp",), ("r(a) = e R[x; alpha] at the bound",), "observe", _pp_poly),
        HarnessCase("H-LIFT", "a reduced invariant ideal with central quotient lifts centrality",
                    ("compatible", "alpha(I) in I", "I reduced", "R/I central"), (CENTRAL,), "observe", _lift),
    ]


# ---------------------------------------------------------------------------
# running


@dataclass
class CaseLedger:
    case: HarnessCase
    results: list

    def count(self, outcome: str) -> int:
        return sum(1 for r in self.results if r.outcome == outcome)

    @property
    def ok(self) -> bool:
        return self.case.mode == "observe" or self.count(FAIL) == 0

    @property
    def non_vacuous(self) -> bool:
        return any(r.outcome != VACUOUS for r in self.results)

    @property
    def vacuous_rate(self) -> float:
        return self.count(VACUOUS) / len(self.results) if self.results else 1.0

    def to_dict(self) -> dict:
        c = self.case
        return {
            "id": c.id, "mode": c.mode, "statement": c.statement, "bound_qualified": c.bound_qualified,
            "hypothesis": list(c.hypothesis), "conclusion": list(c.conclusion),
            "pass": self.count(PASS), "fail": self.count(FAIL), "vacuous": self.count(VACUOUS),
            "vacuous_rate": round(self.vacuous_rate, 4),
            "results": [r.to_dict() for r in self.results],
        }


@dataclass
class HarnessLedger:
    cases: list
    corpus: list  # entry ids
    seed: int

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    def to_dict(self) -> dict:
        return {"seed": self.seed, "corpus": self.corpus, "ok": self.ok,
                "cases": [c.to_dict() for c in self.cases]}

    def witnesses(self) -> dict:
        return {c.case.id: {r.entry: r.witness for r in c.results if r.witness is not None}
                for c in self.cases}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def dumps_witnesses(self) -> str:
        return json.dumps(self.witnesses(), indent=2, sort_keys=True) + "\n"

    def table(self) -> str:
        lines = [f"{'case':15s} {'mode':8s} {'pass':>5s} {'fail':>5s} {'vacuous':>8s}"]
        for c in self.cases:
            flag = "" if c.ok else "  <-- FAILED"
            lines.append(f"{c.case.id:15s} {c.case.mode:8s} {c.count(PASS):5d} {c.count(FAIL):5d} "
                         f"{c.count(VACUOUS):8d}{flag}")
        return "\n".join(lines)


def run_case(case: HarnessCase, corpus: list[Fixture], ctx: Context | None = None) -> CaseLedger:
    ctx = ctx or Context()
    results = [case.evaluate(fx, ctx) for fx in corpus]
    case.results = results
    return CaseLedger(case, results)


def run_harness(corpus: list[Fixture] | None = None, cases: list[HarnessCase] | None = None, *, seed: int = 0,
                strategy: str = "dfs", budget: int = DEFAULT_BUDGET, jobs: int = 1,
                poly_budget: int = POLY_BUDGET) -> HarnessLedger:
    corpus = default_corpus() if corpus is None else corpus
    cases = builtin_cases() if cases is None else cases
    ctx = Context(seed, strategy, budget, jobs, poly_budget)
    return HarnessLedger([run_case(c, corpus, ctx) for c in cases], [fx.id for fx in corpus], seed)
