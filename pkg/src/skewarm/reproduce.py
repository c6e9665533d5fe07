"""Re-run every fixture's expected verdicts and explicit claims, then the harness."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .fixtures import Fixture, default_corpus, fixture_ids, paper_fixture, verdict_matches
from .properties import check_property
from .search import DEFAULT_BUDGET
from .theorems import HarnessLedger, run_harness


@dataclass(frozen=True)
class Row:
    fixture: str
    check: str
    expected: str
    observed: str
    ok: bool

    def to_dict(self) -> dict:
        return {"fixture": self.fixture, "check": self.check, "expected": self.expected,
                "observed": self.observed, "ok": self.ok}


def fixture_rows(fx: Fixture, degree: int = 1, **opts) -> list[Row]:
    rows = []
    for prop, expected in fx.expected:
        rep = check_property(prop, fx.ring, fx.twist, degree, **opts)
        rows.append(Row(fx.id, prop, expected, rep.verdict, verdict_matches(expected, rep.verdict)))
    for claim in fx.claims:
        res = claim.run(fx, degree=degree, **opts)
        rows.append(Row(fx.id, claim.label, "confirmed", res.detail, res.ok))
    return rows


def reproduce_fixtures(degree: int = 1, ids: list[str] | None = None, **opts) -> list[Row]:
    rows = []
    for fid in ids or fixture_ids():
        rows.extend(fixture_rows(paper_fixture(fid), degree, **opts))
    return rows


def rows_table(rows: list[Row]) -> str:
    w_fx = max(len(r.fixture) for r in rows)
    w_chk = max(len(r.check) for r in rows)
    lines = [f"{'fixture':{w_fx}s}  {'check':{w_chk}s}  {'expected':9s}  ok  observed"]
    for r in rows:
        lines.append(f"{r.fixture:{w_fx}s}  {r.check:{w_chk}s}  {r.expected:9s}  "
                     f"{'ok' if r.ok else '!!'}  {r.observed}")
    return "\n".join(lines)


@dataclass
class Reproduction:
    rows: list
    ledger: HarnessLedger | None
    fixtures_elapsed: float
    harness_elapsed: float

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows) and (self.ledger is None or self.ledger.ok)


def reproduce_paper(degree: int = 1, *, harness: bool = True, seed: int = 0, strategy: str = "dfs",
                    budget: int = DEFAULT_BUDGET, jobs: int = 1) -> Reproduction:
    opts = {"strategy": strategy, "budget": budget, "jobs": jobs}
    t0 = time.perf_counter()
    rows = reproduce_fixtures(degree, **opts)
    t1 = time.perf_counter()
    ledger = run_harness(default_corpus(), seed=seed, **opts) if harness else None
    return Reproduction(rows, ledger, t1 - t0, time.perf_counter() - t1)
