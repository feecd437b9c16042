"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 parse or usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import catalog
from .enumerator import classify, family_of
from .restrictions import Facts, evaluate, explain
from .schemes import PairError, Scheme, parse_scheme, regions_of
from .surfaces import AMBIENTS, CubicAmbient, ParseError, format_surface


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _ambient(text: str) -> CubicAmbient:
    try:
        return CubicAmbient.parse(text)
    except ParseError:
        names = ", ".join(a.token for a in CubicAmbient)
        raise argparse.ArgumentTypeError(f"unknown ambient {text!r} (choose from {names})")


def _ambient_or_all(text: str) -> str:
    return text if text == "all" else _ambient(text).token


def _ambients(text: str) -> tuple[CubicAmbient, ...]:
    return AMBIENTS if text == "all" else (_ambient(text),)


def scheme_record(s: Scheme, entry: Optional[catalog.CatalogEntry] = None) -> dict:
    """One scheme in the JSON export schema."""
    facts = Facts(s)
    verdict = evaluate(s)
    p = facts.params
    rec = entry.construction if entry is not None else None
    return {
        "code": s.code,
        "family": entry.family if entry is not None else family_of(s),
        "params": None if p is None else {"alpha": p.alpha, "beta": p.beta, "gamma": p.gamma},
        "b0": facts.b0,
        "chi_plus": facts.chi_plus,
        "chi_minus": facts.chi_minus,
        "status": verdict.status,
        "rules": list(verdict.violated),
        "construction": None if rec is None else {"method": rec.method, "source": rec.source},
    }


def _entries_by_scheme(ambient: CubicAmbient) -> dict[Scheme, catalog.CatalogEntry]:
    return {e.scheme: e for e in catalog.ground_truth(ambient)}


def _document(ambient: CubicAmbient, records: list[dict]) -> dict:
    return {"ambient": ambient.token, "chi": ambient.euler_characteristic, "schemes": records}


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _table(rows: list[dict]) -> str:
    lines = []
    for r in rows:
        rules = ",".join(r["rules"]) or "-"
        lines.append(f"{r['code']:<44} {r['family']:<7} {r['status']:<9} {rules}")
    return "\n".join(lines)


def cmd_enumerate(args) -> int:
    docs = []
    for amb in _ambients(args.ambient):
        entries = _entries_by_scheme(amb)
        c = classify(amb)
        schemes = list(c.admitted) if args.show == "admitted" else []
        if args.show == "excluded":
            schemes = [s for s, _ in c.excluded]
        elif args.show == "all":
            schemes = list(c.admitted) + [s for s, _ in c.excluded]
        records = [scheme_record(s, entries.get(s)) for s in schemes]
        docs.append(_document(amb, records))
        if not args.json:
            print(f"# {amb.token}: {c.structural} structural, {len(c.admitted)} admitted, "
                  f"{len(c.excluded)} excluded")
            if records:
                print(_table(records))
    if args.json:
        payload = docs[0] if len(docs) == 1 else docs
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(_dump(payload) + "\n")
    return 0


def cmd_verify(args) -> int:
    matched = total = 0
    ok = True
    for amb in _ambients(args.ambient):
        report = catalog.verify(amb)
        print(report)
        ok &= report.ok
        total += report.expected
        matched += report.expected - len(report.missing)
        if not amb.positive:
            closure = catalog.closure_check(amb)
            print(closure)
            ok &= closure.ok
    print(f"{matched}/{total} admitted types match")
    return 0 if ok else 1


def cmd_explain(args) -> int:
    print(explain(parse_scheme(args.code, args.ambient)))
    return 0


def cmd_parse(args) -> int:
    s = parse_scheme(args.code, args.ambient)
    facts = Facts(s)
    print(f"canonical {s.code}")
    print(f"ambient   {s.ambient.token} (chi = {s.ambient.euler_characteristic})")
    print(f"b0        {facts.b0}")
    if s.pair is not None:
        print(f"chi(B+)   {facts.chi_plus}")
        print(f"chi(B-)   {facts.chi_minus}")
        if facts.params is not None:
            p = facts.params
            print(f"family    {family_of(s)}: Big = {p.big}, alpha = {p.alpha}, beta = {p.beta}, "
                  f"gamma = {p.gamma}, k = {p.k}")
    else:
        regions = regions_of(s)
        print("regions   " + ", ".join(format_surface(r.surface) for r in regions.regions))
        chis = ", ".join(f"({hp.chi_plus}, {hp.chi_minus})" for hp in facts.half_pairs)
        print(f"colorings {chis or 'none admissible'}")
    return 0


def cmd_catalog(args) -> int:
    amb = args.ambient
    records = [scheme_record(e.scheme, e) for e in catalog.ground_truth(amb)]
    if args.format == "json":
        print(_dump(_document(amb, records)))
        return 0
    for r in records:
        c = r["construction"] or {}
        print(f"{r['code']:<44} {r['family']:<3} {c.get('method', '-'):<28} {c.get('source') or '-'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="realschemes",
                     description="Real schemes of sextic curves on real cubic surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="classify every structural candidate")
    p.add_argument("--ambient", required=True, type=_ambient_or_all)
    p.add_argument("--json", metavar="PATH")
    p.add_argument("--show", choices=("excluded", "admitted", "all"), default="all")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("verify", help="compare the classification with the catalog")
    p.add_argument("--ambient", default="all", type=_ambient_or_all)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("explain", help="rule-by-rule report for one scheme")
    p.add_argument("--ambient", required=True, type=_ambient)
    p.add_argument("code")
    p.set_defaults(run=cmd_explain)

    p = sub.add_parser("parse", help="canonical form and invariants of a scheme code")
    p.add_argument("--ambient", type=_ambient)
    p.add_argument("code")
    p.set_defaults(run=cmd_parse)

    p = sub.add_parser("catalog", help="print the ground-truth list")
    p.add_argument("--ambient", required=True, type=_ambient)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(run=cmd_catalog)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.run(args)
    except (UsageError, ParseError, PairError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc.strerror}: {exc.filename}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
