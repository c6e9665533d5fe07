"""Command-line interface.

    skewarm check --fixture EX1-swap --property central-skew-armendariz --degree 1
    skewarm search --signature "central-skew-armendariz=holds & skew-armendariz=fails & twist!=id"
    skewarm reproduce-paper --out results/
    skewarm atlas export fixtures.json | import FILE | list FILE

Exit codes: 0 holds (or success), 1 fails, 2 budget hit, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .atlas import (AtlasError, discover_atlases, export_fixtures, load_atlas, resolve_atlas, save_atlas,
                    validate)
from .endo import enumerate_endomorphisms, identity_map
from .fixtures import PairClaim, default_corpus, fixture_ids, paper_fixture
from .properties import PROPERTIES, check_property
from .report import FAILS, HOLDS_UP_TO_BUDGET
from .reproduce import reproduce_paper, rows_table
from .search import DEFAULT_BUDGET, STRATEGIES

EXIT_HOLDS, EXIT_FAILS, EXIT_BUDGET, EXIT_ERROR = 0, 1, 2, 3


def _scan_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--degree", type=int, default=None, help="degree bound (default: 2 up to order 16, else 1)")
    p.add_argument("--strategy", choices=STRATEGIES, default="dfs")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="pair visits per predicate call")
    p.add_argument("--jobs", type=int, default=1, help="worker threads inside each scan")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)


def _default_degree(order: int) -> int:
    return 2 if order <= 16 else 1


def _write_json(path: str, doc) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# check


def cmd_check(args) -> int:
    if args.fixture:
        fx = paper_fixture(args.fixture)
        ring, twist = fx.ring, fx.twist
    else:
        if not (args.atlas and args.ring):
            raise AtlasError("give --fixture ID, or --atlas FILE with --ring NAME [--map NAME]")
        atlas = load_atlas(resolve_atlas(args.atlas))
        if args.ring not in atlas.rings:
            raise AtlasError(f"ring {args.ring!r} not in atlas")
        ring = atlas.rings[args.ring]
        if args.map:
            if args.map not in atlas.maps or atlas.maps[args.map].source is not ring:
                raise AtlasError(f"map {args.map!r} is not an endomorphism of {args.ring!r} in the atlas")
            twist = atlas.maps[args.map]
        else:
            twist = identity_map(ring)
    degree = args.degree if args.degree is not None else _default_degree(ring.order)
    report = check_property(args.property, ring, twist, degree,
                            **({"strategy": args.strategy, "budget": args.budget, "jobs": args.jobs}
                               if args.property in _POLY else {}))
    print(report.summary())
    if args.fixture:
        _print_fixture_pairs(fx, args.property)
    if args.out:
        doc = report.to_dict()
        validate(doc, "report")
        _write_json(args.out, doc)
    if report.verdict == FAILS:
        return EXIT_FAILS
    if report.verdict == HOLDS_UP_TO_BUDGET:
        return EXIT_BUDGET
    return EXIT_HOLDS


_CLAIM_TEST = {"skew-armendariz": "nonzero", "central-skew-armendariz": "noncentral",
               "armendariz": "nonzero", "central-armendariz": "noncentral"}


def _print_fixture_pairs(fx, prop: str) -> None:
    """Re-verify and print the fixture's documented zero pairs for ``prop``.

    The scan reports the first witness in enumeration order; a fixture may
    document a different one, which is checked here on its own.
    """
    test = _CLAIM_TEST.get(prop)
    if test is None or (prop in ("armendariz", "central-armendariz") and not fx.twist.is_identity):
        return
    for claim in fx.claims:
        if isinstance(claim, PairClaim) and claim.test == test:
            res = claim.run(fx)
            print(f"documented pair ({'confirmed' if res.ok else 'NOT confirmed'}): {res.detail}")


# ---------------------------------------------------------------------------
# search

_TERM = re.compile(r"^\s*([\w\-\[\]]+)\s*(!=|≠|=)\s*([\w\-]+)\s*$")


def parse_signature(text: str) -> list[tuple[str, bool, str]]:
    """``"p=holds & q=fails & twist!=id"`` -> [(name, equal, value), ...].

    Terms are joined by ``&``, ``,``, ``∧`` or the word ``and``.
    """
    terms = [t for t in re.split(r"\s*(?:&|,|∧|\band\b)\s*", text.strip()) if t]
    if not terms:
        raise ValueError("empty signature")
    out = []
    for t in terms:
        m = _TERM.match(t)
        if not m:
            raise ValueError(f"cannot parse signature term {t!r}")
        name, op, value = m.groups()
        if name == "twist":
            if value != "id":
                raise ValueError("twist constraints compare against 'id' only")
        elif name not in PROPERTIES:
            raise ValueError(f"unknown property {name!r}")
        elif value not in ("holds", "fails"):
            raise ValueError(f"verdict must be holds or fails, got {value!r}")
        out.append((name, op == "=", value))
    return out


def _matches(signature, ring, twist, degree, opts, witnesses: dict) -> bool:
    # cheap constraints first
    ordered = sorted(signature, key=lambda t: (t[0] != "twist", t[0] in _POLY))
    for name, equal, value in ordered:
        if name == "twist":
            actual = "id" if twist.is_identity else "non-id"
            if (actual == value) != equal:
                return False
            continue
        rep = check_property(name, ring, twist, degree, **(opts if name in _POLY else {}))
        if rep.verdict == HOLDS_UP_TO_BUDGET:
            return False
        actual = "fails" if rep.fails else "holds"
        if (actual == value) != equal:
            return False
        if rep.witness is not None:
            witnesses[name] = rep.witness.to_dict()
    return True


def search_entries(atlas_refs: list[str], endomorphisms: bool, max_order: int = 16):
    """(label, ring, twist) candidates: fixtures, atlas entries, optionally every endomorphism."""
    seen_rings = {}
    for fx in default_corpus():
        yield fx.id, fx.ring, fx.twist
        seen_rings.setdefault(fx.ring.name, fx.ring)
    paths = [resolve_atlas(r) for r in atlas_refs] + [p for p in discover_atlases()]
    for path in dict.fromkeys(paths):
        atlas = load_atlas(path)
        for ring, twist in atlas.entries():
            yield f"{path.name}:{twist.name}", ring, twist
            seen_rings.setdefault(ring.name, ring)
    if endomorphisms:
        for name, ring in seen_rings.items():
            if ring.order > max_order:
                continue
            for alpha in enumerate_endomorphisms(ring, max_order):
                yield f"{name}:{alpha.name}", ring, alpha


def cmd_search(args) -> int:
    signature = parse_signature(args.signature)
    opts = {"strategy": args.strategy, "budget": args.budget, "jobs": args.jobs}
    found, scanned, status = [], 0, "complete"
    for label, ring, twist in search_entries(args.atlas or [], args.endomorphisms):
        if args.max_entries is not None and scanned >= args.max_entries:
            status = "partial: entry limit reached"
            break
        scanned += 1
        degree = args.degree if args.degree is not None else _default_degree(ring.order)
        witnesses: dict = {}
        if _matches(signature, ring, twist, degree, opts, witnesses):
            hit = {"entry": label, "ring": ring.name, "order": ring.order, "twist": twist.name,
                   "images": twist.images.tolist(), "degree": degree, "witnesses": witnesses}
            found.append(hit)
            print(json.dumps(hit, sort_keys=True), flush=True)
            if args.limit is not None and len(found) >= args.limit:
                status = "partial: match limit reached"
                break
    print(f"# {len(found)} match(es) among {scanned} entries ({status})")
    if args.out:
        _write_json(args.out, {"signature": args.signature, "status": status, "scanned": scanned,
                               "matches": found})
    return EXIT_HOLDS


# ---------------------------------------------------------------------------
# reproduce-paper


def cmd_reproduce(args) -> int:
    degree = args.degree if args.degree is not None else 1
    rep = reproduce_paper(degree, harness=not args.no_harness, seed=args.seed, strategy=args.strategy,
                          budget=args.budget, jobs=args.jobs)
    print(rows_table(rep.rows))
    print(f"# fixtures: {sum(r.ok for r in rep.rows)}/{len(rep.rows)} checks confirmed "
          f"({rep.fixtures_elapsed:.2f} s)")
    if rep.ledger is not None:
        print()
        print(rep.ledger.table())
        print(f"# harness: {'ok' if rep.ledger.ok else 'FAILED'} ({rep.harness_elapsed:.1f} s)")
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        _write_json(out / "reproduce.json", {"degree": degree, "rows": [r.to_dict() for r in rep.rows]})
        (out / "reproduce.txt").write_text(rows_table(rep.rows) + "\n")
        if rep.ledger is not None:
            validate(rep.ledger.to_dict(), "ledger")
            (out / "ledger.json").write_text(rep.ledger.dumps())
            (out / "witnesses.json").write_text(rep.ledger.dumps_witnesses())
    return EXIT_HOLDS if rep.ok else EXIT_FAILS


# ---------------------------------------------------------------------------
# atlas


def cmd_atlas(args) -> int:
    if args.action == "export":
        atlas = export_fixtures(default_corpus())
        if args.file:
            save_atlas(atlas, args.file)
            print(f"wrote {len(atlas.rings)} rings and {len(atlas.maps)} maps to {args.file}")
        else:
            sys.stdout.write(atlas.dumps())
        return EXIT_HOLDS
    if not args.file:
        raise AtlasError(f"atlas {args.action} needs a FILE")
    atlas = load_atlas(resolve_atlas(args.file))
    if args.action == "import":
        print(f"ok: {len(atlas.rings)} rings, {len(atlas.maps)} maps, {len(atlas.reports)} reports validated")
        if args.out:
            save_atlas(atlas, args.out)
    else:
        print(atlas.table())
    return EXIT_HOLDS


_POLY = {"armendariz", "central-armendariz", "skew-armendariz", "central-skew-armendariz",
         "central-skew-armendariz[x]"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewarm", description="Armendariz-type properties of finite rings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide one property for one (ring, twist)")
    p.add_argument("--fixture", choices=fixture_ids())
    p.add_argument("--atlas", help="atlas file (or name on SKEWARM_ATLAS_PATH)")
    p.add_argument("--ring")
    p.add_argument("--map")
    p.add_argument("--property", required=True, choices=list(PROPERTIES))
    _scan_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="find entries matching a property signature")
    p.add_argument("--signature", required=True)
    p.add_argument("--atlas", action="append", help="extra atlas file (repeatable)")
    p.add_argument("--endomorphisms", action="store_true",
                   help="also try every endomorphism of each ring of order <= 16")
    p.add_argument("--limit", type=int, default=None, help="stop after this many matches")
    p.add_argument("--max-entries", type=int, default=None, help="stop after scanning this many entries")
    _scan_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce-paper", help="check every fixture claim, then run the harness")
    p.add_argument("--no-harness", action="store_true")
    _scan_flags(p)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("atlas", help="import, export or list atlas files")
    p.add_argument("action", choices=("import", "export", "list"))
    p.add_argument("file", nargs="?")
    p.add_argument("--out", default=None, help="import: re-save the validated atlas here")
    p.set_defaults(func=cmd_atlas)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AtlasError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
