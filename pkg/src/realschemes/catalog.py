"""Ground-truth classification tables and construction provenance.

The lists below are transcribed from the published classification lists, not derived
from the rule engine, so that :func:`verify` compares two independent sources.
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable, Optional

from .codes import ANNULUS_MOBIUS, EMPTY, OvalForest, PairCode, chain, nest, parse_pair, union
from .enumerator import classify
from .restrictions import RULES
from .schemes import Scheme, family_pair, family_params, forest_scheme, pair_scheme
from .surfaces import (
    AMBIENTS,
    CompactSurface,
    CubicAmbient,
    crosscap_surface,
    orientable_surface,
    sphere,
)

A = CubicAmbient

PLANE_SECTIONS = "PlaneSectionsPerturbation"
SURFACE_OF_REVOLUTION = "SurfaceOfRevolution"
PLANE_ELLIPSOID = "PlaneEllipsoidPerturbation"
QUARTIC_CONIC = "QuarticConicSmoothing"
OVAL_COLLAPSE = "OvalCollapse"
GUDKOV_COLLAPSE = "GudkovCurveCollapse"
CUBIC_PARALLEL = "CubicParallelCopy"
QUARTIC_TWO_LINES = "QuarticTwoLines"
EMPTY_QUADRIC = "EmptyQuadric"

METHODS = (PLANE_SECTIONS, SURFACE_OF_REVOLUTION, PLANE_ELLIPSOID, QUARTIC_CONIC,
           OVAL_COLLAPSE, GUDKOV_COLLAPSE, CUBIC_PARALLEL, QUARTIC_TWO_LINES, EMPTY_QUADRIC)

POLOTOVSKII_RE = re.compile(r"(\(\d+\))+(\[\d\])?")


@dataclass(frozen=True)
class ConstructionRecord:
    method: str
    source: Optional[str] = None
    note: str = ""

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown construction method {self.method!r}")
        if self.method == QUARTIC_CONIC and self.source is not None:
            if not POLOTOVSKII_RE.fullmatch(self.source):
                raise ValueError(f"malformed catalog code {self.source!r}")


@dataclass(frozen=True)
class CatalogEntry:
    scheme: Scheme
    family: str
    construction: ConstructionRecord


# -- positive-chi lists ------------------------------------------------------------


def _rp2_s2_list() -> list[tuple[OvalForest, OvalForest, str, ConstructionRecord]]:
    F = OvalForest.flat
    rows = []
    for a in range(4):
        if a:
            rec = ConstructionRecord(PLANE_SECTIONS, note=f"l = 0 meets RH in {a} point(s)")
        else:
            rec = ConstructionRecord(SURFACE_OF_REVOLUTION, "x^2+y^2=z(z^2-1)")
        rows.append((union(F(a), nest(F(1))), EMPTY, "a", rec))
    for a in range(2, 5):
        rows.append((nest(F(a)), EMPTY, "b", ConstructionRecord(PLANE_ELLIPSOID)))
    for a in range(6):
        for b in range(6 - a):
            rows.append((F(a), F(b), "c", ConstructionRecord(PLANE_ELLIPSOID)))
    rev = ConstructionRecord(SURFACE_OF_REVOLUTION, "x^2+y^2=z(z^2-1)")
    rows.append((chain(3), EMPTY, "d", rev))
    rows.append((chain(2), F(1), "e", rev))
    rows.append((EMPTY, union(F(1), chain(2)), "f", rev))
    return rows


def _rp2_list() -> list[tuple[OvalForest, str]]:
    F = OvalForest.flat
    rows = [(union(F(a), nest(F(b))), "a") for a in range(5) for b in range(5 - a)]
    rows.append((chain(3), "b"))
    rows.append((EMPTY, "c"))
    return rows


# -- negative-chi lists ------------------------------------------------------------

# Classification of RP2 # 3T2: family -> (B+ big, k as a function of gamma, table).
# Table rows are {(alpha, beta): allowed gammas}.
_RP2_3T2_TABLES = {
    1: (sphere(), lambda g: 9 - 2 * g, {
        (0, 0): (1, 2, 3, 4), (0, 1): (1, 2, 3, 4), (0, 2): (1, 2, 3), (0, 3): (2,),
        (1, 0): (1, 2, 3, 4), (1, 1): (1, 2, 3), (1, 2): (2,),
        (2, 0): (1, 2, 3), (2, 1): (1, 2),
        (3, 0): (1, 2), (3, 1): (1,),
    }),
    2: (orientable_surface(1), lambda g: 7 - 2 * g, {
        (0, 0): (1, 2, 3), (0, 1): (1, 2, 3), (0, 2): (1, 2, 3), (0, 3): (1, 2), (0, 4): (1,),
        (1, 0): (1, 2, 3), (1, 1): (1, 2, 3), (1, 2): (1, 2),
        (2, 0): (1, 2, 3), (2, 1): (1, 2), (2, 2): (1,),
        (3, 0): (1, 2),
        (4, 0): (1,),
    }),
    3: (orientable_surface(2), lambda g: 5 - 2 * g, {
        (0, 0): (1, 2), (0, 1): (1, 2), (0, 2): (1, 2), (0, 3): (1, 2),
        (1, 0): (1, 2), (1, 1): (1, 2), (1, 2): (1, 2), (1, 3): (1,),
        (2, 0): (1, 2), (2, 1): (1, 2),
        (3, 0): (1, 2), (3, 1): (1,),
    }),
    4: (orientable_surface(3), lambda g: 1, {
        (0, 0): (1,), (1, 0): (1,), (2, 0): (1,), (3, 0): (1,),
        (0, 1): (1,), (0, 2): (1,), (0, 3): (1,), (0, 4): (1,),
    }),
    5: (crosscap_surface(2), lambda g: 7 - 2 * g, {
        (0, 0): (1, 2, 3), (0, 1): (1, 2, 3), (0, 2): (1, 2, 3), (0, 3): (1, 2), (0, 4): (1,),
        (1, 0): (1, 2, 3), (1, 1): (1, 2, 3), (1, 2): (1, 2), (1, 3): (1,),
        (2, 0): (1, 2, 3), (2, 1): (1, 2),
        (3, 0): (1, 2), (3, 1): (1,),
        (4, 0): (1,),
    }),
    6: (crosscap_surface(4), lambda g: 5 - 2 * g, {
        (0, 0): (1, 2), (0, 1): (1, 2), (0, 2): (1, 2), (0, 3): (1, 2), (0, 4): (1,),
        (1, 0): (1, 2), (1, 1): (1, 2), (1, 2): (1, 2), (1, 3): (1,),
        (2, 0): (1, 2), (2, 1): (1, 2), (2, 2): (1,),
        (3, 0): (1, 2), (3, 1): (1,),
        (4, 0): (1,),
    }),
    7: (crosscap_surface(6), lambda g: 1, {
        (0, 0): (1,), (1, 0): (1,), (2, 0): (1,), (3, 0): (1,), (4, 0): (1,),
        (0, 1): (1,), (1, 1): (1,), (0, 2): (1,), (1, 2): (1,),
        (0, 3): (1,), (1, 3): (1,), (0, 4): (1,),
    }),
}


def _conditioned(gammas: Iterable[int], exclude=()) -> dict[tuple[int, int], tuple[int, ...]]:
    """Table for a family stated as ``alpha + beta + gamma <= 5`` over ``gammas``."""
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    for g in gammas:
        for a in range(6 - g):
            for b in range(6 - a - g):
                if (a, b) not in exclude:
                    table[(a, b)] = table.get((a, b), ()) + (g,)
    return table


# The classifications for RP2 # 2T2 and RP2 # T2 are stated by inequalities.
_RP2_2T2_TABLES = {
    1: (sphere(), lambda g: 7 - 2 * g, _conditioned((1, 2, 3))),
    2: (orientable_surface(1), lambda g: 5 - 2 * g, _conditioned((1, 2))),
    3: (orientable_surface(2), lambda g: 1, _conditioned((1,), exclude={(4, 0)})),
    4: (crosscap_surface(2), lambda g: 5 - 2 * g, _conditioned((1, 2))),
    5: (crosscap_surface(4), lambda g: 1, _conditioned((1,))),
}
_RP2_T2_TABLES = {
    1: (sphere(), lambda g: 5 - 2 * g, _conditioned((1, 2))),
    2: (orientable_surface(1), lambda g: 1, _conditioned((1,))),
    3: (crosscap_surface(2), lambda g: 1, _conditioned((1,))),
}

_NEGATIVE = {
    A.RP2_3T2: (_RP2_3T2_TABLES, "8", "9"),
    A.RP2_2T2: (_RP2_2T2_TABLES, "6", "7"),
    A.RP2_T2: (_RP2_T2_TABLES, "4", "5"),
}


def _negative_ground_truth(ambient: CubicAmbient) -> list[tuple[Scheme, str]]:
    tables, exc_label, empty_label = _NEGATIVE[ambient]
    n = ambient.handles
    rows = []
    for fam, (big, k, table) in tables.items():
        for (a, b), gammas in sorted(table.items()):
            for g in gammas:
                rows.append((pair_scheme(ambient, family_pair(big, a, b, g, k(g))), str(fam)))
    rows.append((pair_scheme(ambient, PairCode(1, orientable_surface(n, 2), 0, ANNULUS_MOBIUS)),
                 exc_label))
    rows.append((pair_scheme(ambient, PairCode(0, orientable_surface(n - 1, 3), 0, ANNULUS_MOBIUS)),
                 exc_label))
    rows.append((pair_scheme(ambient, PairCode(0, None, 0, ambient.components[0])), empty_label))
    return rows


# -- construction tables for RP2 # 3T2 ------------------------------------------------

STAR, DOUBLE_STAR = "*", "**"

# family -> {(alpha, beta, gamma): conic-quartic code or special mark}, maximal entries.
CONSTRUCTION_TABLES = {
    1: {
        (0, 1, 4): "(12)(34)(56)(78)", (0, 2, 3): "(1867)(3452)[2]", (0, 2, 1): STAR,
        (0, 3, 2): "(18276543)[3]", (1, 0, 4): "(12)(34)(56)(78)",
        (1, 1, 3): "(1678)(2345)[1]", (1, 2, 2): "(18723456)[2]",
        (2, 0, 3): "(145678)(23)[0]", (2, 1, 2): "(12345678)[1]",
        (3, 0, 2): "(12387456)[0]", (3, 1, 1): "(12345678)[1]",
    },
    2: {
        (0, 2, 3): "(1876)(2345)[2]", (0, 3, 2): "(18743256)[3]", (0, 4, 1): "(18276543)[3]",
        (1, 1, 3): "(187654)(23)[1]", (1, 2, 2): "(18723456)[2]",
        (2, 0, 3): "(1867)(3452)[2]", (2, 1, 2): "(18765234)[1]", (2, 2, 1): "(18723456)[2]",
        (3, 0, 2): "(12387456)[0]", (4, 0, 1): "(12387456)[0]",
    },
    3: {
        (0, 3, 2): "(18743256)[3]", (1, 2, 2): "(18765432)[2]", (1, 3, 1): "(18234765)[2]",
        (2, 1, 2): "(18765234)[1]", (3, 0, 2): "(18276543)[3]", (3, 1, 1): "(18765234)[1]",
    },
    4: {(3, 0, 1): "(18276543)[3]", (0, 4, 1): "(18234567)[3]"},
    5: {
        (0, 2, 3): "(1867)(3452)[2]", (0, 3, 2): "(18276543)[3]", (0, 4, 1): STAR,
        (1, 1, 3): "(1845)(23)(67)[0]", (1, 2, 2): "(18723456)[2]", (1, 3, 1): "(18723456)[2]",
        (2, 0, 3): "(1845)(3672)[0]", (2, 1, 2): "(18432765)[1]",
        (3, 0, 2): "(12387456)[0]", (3, 1, 1): "(12387456)[0]", (4, 0, 1): "(16254378)[0]",
    },
    6: {
        (0, 3, 2): "(18437625)[3]", (0, 4, 1): "(18437625)[3]", (1, 2, 2): "(18432765)[1]",
        (1, 3, 1): "(18437625)[3]", (2, 1, 2): "(18765234)[1]", (2, 2, 1): "(18765234)[1]",
        (3, 0, 2): "(18276345)[0]", (3, 1, 1): "(18276345)[0]", (4, 0, 1): "(18276345)[0]",
    },
    7: {(4, 0, 1): DOUBLE_STAR, (1, 3, 1): "(18765432)[2]", (0, 4, 1): "(18234567)[3]"},
}

GUDKOV_CURVE = "<5 u 1<5>>"
# Collapse constructions for the marked cells, keyed by (family, alpha, beta, gamma).
SPECIAL_CELLS = {
    (1, 0, 2, 1): ConstructionRecord(OVAL_COLLAPSE, "<6 u 1<2>>", "collapse the 6 outer ovals"),
    (5, 0, 4, 1): ConstructionRecord(GUDKOV_COLLAPSE, GUDKOV_CURVE,
                                     "collapse the 5 inner ovals and one outer oval"),
    (7, 4, 0, 1): ConstructionRecord(GUDKOV_COLLAPSE, GUDKOV_CURVE,
                                     "collapse the 5 outer ovals and one inner oval"),
}

# Two arrangements on RP2 # 2T2 built from a quartic and two lines.
QUARTIC_TWO_LINE_CODES = ("<1 u S2_4, 3 u 5RP2_2>", "<2 u 2T2_3, 2 u RP2_3>")


def _maximal_7rp2() -> dict[Scheme, ConstructionRecord]:
    """Maximal constructed schemes on RP2 # 3T2 with their records."""
    out = {}
    for fam, cells in CONSTRUCTION_TABLES.items():
        big, k, _ = _RP2_3T2_TABLES[fam]
        for (a, b, g), mark in cells.items():
            s = pair_scheme(A.RP2_3T2, family_pair(big, a, b, g, k(g)))
            if mark in (STAR, DOUBLE_STAR):
                out[s] = SPECIAL_CELLS[(fam, a, b, g)]
            else:
                out[s] = ConstructionRecord(QUARTIC_CONIC, mark, "8 real intersection points")
    return out


def _remove_ovals(s: Scheme) -> list[Scheme]:
    """Schemes with componentwise smaller (alpha, beta) and the same gamma (inclusive)."""
    p = family_params(s.pair)
    if p is None:
        return [s]
    big = s.pair.plus_big.kind if s.pair.plus_big is not None else sphere().kind
    out = []
    for a in range(p.alpha + 1):
        for b in range(p.beta + 1):
            # removing an empty oval keeps chi of the union fixed: k is unchanged
            pair = family_pair(CompactSurface(big), a, b, p.gamma, p.k)
            out.append(pair_scheme(s.ambient, pair))
    return out


def _remove_handle(s: Scheme, target: CubicAmbient) -> list[Scheme]:
    """Schemes obtained by dropping one handle from the B+ or the B- big component."""
    p = s.pair
    out = []
    pb = p.plus_big
    if pb is not None:
        kind = pb.kind
        if kind.orientable and kind.genus >= 1:
            out.append(PairCode(p.plus_disks, orientable_surface(kind.genus - 1, pb.punctures),
                                p.minus_disks, p.minus_big))
        elif not kind.orientable and kind.genus >= 3:
            out.append(PairCode(p.plus_disks, crosscap_surface(kind.genus - 2, pb.punctures),
                                p.minus_disks, p.minus_big))
    mb = p.minus_big
    if isinstance(mb, CompactSurface) and mb.kind.genus >= 3:
        out.append(PairCode(p.plus_disks, pb, p.minus_disks,
                            crosscap_surface(mb.kind.genus - 2, mb.punctures)))
    return [pair_scheme(target, q) for q in out]


@dataclass
class ConstructionSet:
    """Constructed schemes on one ambient with a record for each."""

    ambient: CubicAmbient
    maximal: dict[Scheme, ConstructionRecord]
    special: dict[Scheme, ConstructionRecord]

    @functools.cached_property
    def covered(self) -> dict[Scheme, ConstructionRecord]:
        out: dict[Scheme, ConstructionRecord] = {}
        for s, rec in self.special.items():
            out.setdefault(s, rec)
        for s, rec in self.maximal.items():
            out[s] = rec
        for s, rec in self.maximal.items():
            for t in _remove_ovals(s):
                if t not in out:
                    out[t] = ConstructionRecord(rec.method, rec.source,
                                                f"oval removal from {s.code}")
        return out


@functools.lru_cache(maxsize=None)
def constructions(ambient: CubicAmbient) -> ConstructionSet:
    if ambient is A.RP2_3T2:
        special = {}
        for p in _exceptional(ambient):
            special[p] = ConstructionRecord(CUBIC_PARALLEL, None,
                                            "two-component cubic and a parallel copy")
        special[_empty(ambient)] = ConstructionRecord(EMPTY_QUADRIC)
        return ConstructionSet(ambient, _maximal_7rp2(), special)
    if ambient in (A.RP2_2T2, A.RP2_T2):
        source = constructions(A.RP2_3T2 if ambient is A.RP2_2T2 else A.RP2_2T2)
        points = "6" if ambient is A.RP2_2T2 else "4"
        maximal: dict[Scheme, ConstructionRecord] = {}
        special: dict[Scheme, ConstructionRecord] = {}
        for s, rec in source.covered.items():
            if rec.method != QUARTIC_CONIC:
                continue
            for t in _remove_handle(s, ambient):
                maximal.setdefault(t, ConstructionRecord(
                    QUARTIC_CONIC, rec.source, f"{points} real intersection points; from {s.code}"))
        for p in _exceptional(ambient):
            special[p] = ConstructionRecord(CUBIC_PARALLEL, None, "modified parallel-copy cubic")
        special[_empty(ambient)] = ConstructionRecord(EMPTY_QUADRIC)
        if ambient is A.RP2_2T2:
            for code in QUARTIC_TWO_LINE_CODES:
                special[pair_scheme(ambient, parse_pair(code))] = ConstructionRecord(QUARTIC_TWO_LINES)
        return ConstructionSet(ambient, maximal, special)
    raise ValueError("construction tables cover the negative-chi cubics")


def _exceptional(ambient: CubicAmbient) -> list[Scheme]:
    n = ambient.handles
    return [pair_scheme(ambient, PairCode(1, orientable_surface(n, 2), 0, ANNULUS_MOBIUS)),
            pair_scheme(ambient, PairCode(0, orientable_surface(n - 1, 3), 0, ANNULUS_MOBIUS))]


def _empty(ambient: CubicAmbient) -> Scheme:
    return pair_scheme(ambient, PairCode(0, None, 0, ambient.components[0]))


# -- public API ---------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def ground_truth(ambient: CubicAmbient) -> tuple[CatalogEntry, ...]:
    """The classification list for ``ambient`` with construction provenance."""
    if ambient is A.RP2_S2:
        return tuple(CatalogEntry(forest_scheme(ambient, f, g), fam, rec)
                     for f, g, fam, rec in _rp2_s2_list())
    if ambient is A.RP2:
        rec = ConstructionRecord(QUARTIC_CONIC, None, "quartic and conic with no real common points")
        return tuple(CatalogEntry(forest_scheme(ambient, f), fam, rec) for f, fam in _rp2_list())
    covered = constructions(ambient).covered
    entries = []
    for s, fam in _negative_ground_truth(ambient):
        entries.append(CatalogEntry(s, fam, covered.get(s)))
    return tuple(entries)


@dataclass
class ClosureReport:
    ambient: CubicAmbient
    uncovered: list[Scheme]
    overreach: list[Scheme]

    @property
    def ok(self) -> bool:
        return not self.uncovered and not self.overreach

    def __str__(self) -> str:
        lines = [f"{self.ambient}: closure {'covers' if self.ok else 'does NOT cover'} the catalog"]
        lines += [f"  uncovered {s.code}" for s in self.uncovered]
        lines += [f"  constructed but not listed {s.code}" for s in self.overreach]
        return "\n".join(lines)


def closure_check(ambient: CubicAmbient) -> ClosureReport:
    """Compare the oval-removal closure of the construction entries with the catalog."""
    covered = set(constructions(ambient).covered)
    listed = [e.scheme for e in ground_truth(ambient)]
    listed_set = set(listed)
    uncovered = [s for s in listed if s not in covered]
    overreach = sorted((s for s in covered if s not in listed_set), key=lambda s: s.code)
    return ClosureReport(ambient, uncovered, overreach)


@dataclass
class VerifyReport:
    ambient: CubicAmbient
    admitted: int
    expected: int
    missing: list[Scheme]
    unexpected: list[Scheme]

    @property
    def ok(self) -> bool:
        return not self.missing and not self.unexpected

    def __str__(self) -> str:
        head = (f"{self.ambient}: {'pass' if self.ok else 'FAIL'}, "
                f"{self.admitted} admitted / {self.expected} listed")
        lines = [head]
        lines += [f"  over-excluded {s.code}" for s in self.missing]
        lines += [f"  not listed    {s.code}" for s in self.unexpected]
        return "\n".join(lines)


def verify(ambient: CubicAmbient, rules=RULES) -> VerifyReport:
    """Set comparison of the classified admitted schemes against the catalog."""
    admitted = classify(ambient, rules).admitted
    expected = [e.scheme for e in ground_truth(ambient)]
    a, e = set(admitted), set(expected)
    return VerifyReport(ambient, len(a), len(e),
                        [s for s in expected if s not in a],
                        [s for s in admitted if s not in e])


def entry_for(scheme: Scheme) -> Optional[CatalogEntry]:
    for e in ground_truth(scheme.ambient):
        if e.scheme == scheme:
            return e
    return None


def all_entries() -> list[CatalogEntry]:
    return [e for a in AMBIENTS for e in ground_truth(a)]
