"""Real schemes: a cubic surface type together with the arrangement of the curve.

Positive-chi ambients carry oval forests (one per component).  Negative-chi
ambients carry a pair code describing the two halves ``B+`` (g >= 0) and
``B-`` (g <= 0) of the surface.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .codes import (
    EMPTY,
    AnnulusMobius,
    OvalForest,
    PairCode,
    canonicalize_on_sphere,
    format_pair,
    parse_forest,
    parse_pair,
)
from .surfaces import (
    ANNULUS,
    MOBIUS_BAND,
    CompactSurface,
    CubicAmbient,
    ParseError,
    crosscap_surface,
    format_surface,
    sphere,
)


@dataclass(frozen=True)
class Scheme:
    ambient: CubicAmbient
    forest_rp2: Optional[OvalForest] = None
    forest_s2: Optional[OvalForest] = None
    pair: Optional[PairCode] = None

    def __post_init__(self):
        if self.ambient.positive:
            if self.pair is not None or self.forest_rp2 is None:
                raise ValueError(f"{self.ambient} schemes are given by oval forests")
            if self.ambient is CubicAmbient.RP2_S2:
                s2 = canonicalize_on_sphere(self.forest_s2 or EMPTY)
                object.__setattr__(self, "forest_s2", s2)
            elif self.forest_s2 is not None:
                raise ValueError("RP2 has no sphere component")
        elif self.pair is None or self.forest_rp2 is not None or self.forest_s2 is not None:
            raise ValueError(f"{self.ambient} schemes are given by pair codes")
        else:
            validate_pair(self.pair, self.ambient)

    @property
    def code(self) -> str:
        return format_scheme(self)

    @property
    def b0(self) -> int:
        return b0(self)

    def __str__(self) -> str:
        return self.code


def forest_scheme(ambient: CubicAmbient, rp2: OvalForest, s2: Optional[OvalForest] = None) -> Scheme:
    if ambient is CubicAmbient.RP2_S2 and s2 is None:
        s2 = EMPTY
    return Scheme(ambient, forest_rp2=rp2, forest_s2=s2)


def pair_scheme(ambient: CubicAmbient, pair: PairCode) -> Scheme:
    return Scheme(ambient, pair=pair)


def format_scheme(s: Scheme) -> str:
    if s.pair is not None:
        return format_pair(s.pair)
    if s.ambient is CubicAmbient.RP2:
        return s.forest_rp2.code
    return f"{s.forest_rp2.code}@RP2 | {s.forest_s2.code}@S2"


def parse_scheme(text: str, ambient: Optional[CubicAmbient] = None) -> Scheme:
    """Parse scheme text.

    Forests are ``FOREST`` or ``FOREST@RP2 [| FOREST@S2]``; negative-chi
    schemes are pair codes.  Without ``ambient`` a pair code is placed on the
    cubic whose Euler characteristic is chi(B+) + chi(B-).
    """
    s = text.strip()
    if "," in s:
        pair = parse_pair(text)
        if ambient is None:
            chi = sum(c.euler_characteristic for c in pair.plus_components() + pair.minus_components())
            matches = [a for a in CubicAmbient if not a.positive and a.euler_characteristic == chi]
            if not matches:
                raise ParseError(f"no cubic with chi = {chi} for this pair code", text, 0)
            ambient = matches[0]
        if ambient.positive:
            raise ParseError(f"{ambient} schemes are written as oval forests", text, 0)
        return pair_scheme(ambient, pair)
    parts = [p for p in s.split("|")]
    if len(parts) > 2:
        raise ParseError("at most one '|' separator", text, s.index("|", s.index("|") + 1))
    forests = {}
    offset = len(text) - len(text.lstrip())
    for part in parts:
        body = part.strip()
        tag = "RP2"
        if "@" in body:
            body, tag = (x.strip() for x in body.rsplit("@", 1))
        if tag not in ("RP2", "S2") or tag in forests:
            raise ParseError("bad ambient component tag", text, offset + part.find("@"))
        try:
            forests[tag] = parse_forest(body)
        except ParseError as exc:
            lead = offset + len(part) - len(part.lstrip())
            raise ParseError(str(exc).split(" at offset")[0], text, lead + exc.pos) from None
        offset += len(part) + 1
    if "RP2" not in forests:
        raise ParseError("missing RP2 component", text, 0)
    if ambient is None:
        ambient = CubicAmbient.RP2_S2 if "S2" in forests else CubicAmbient.RP2
    if not ambient.positive:
        raise ParseError(f"{ambient} schemes are written as pair codes", text, 0)
    if ambient is CubicAmbient.RP2 and "S2" in forests:
        raise ParseError("RP2 has no sphere component", text, 0)
    return forest_scheme(ambient, forests["RP2"], forests.get("S2"))


# -- regions -------------------------------------------------------------------


class Region(NamedTuple):
    surface: CompactSurface
    depth: int
    component: str  # "RP2" or "S2"


@dataclass(frozen=True)
class RegionDecomposition:
    ambient: CubicAmbient
    regions: tuple[Region, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum(r.surface.euler_characteristic for r in self.regions)

    @property
    def boundary_incidences(self) -> int:
        return sum(r.surface.punctures for r in self.regions)

    def component(self, tag: str) -> tuple[Region, ...]:
        return tuple(r for r in self.regions if r.component == tag)


def _forest_regions(f: OvalForest, outer: CompactSurface, tag: str) -> list[Region]:
    regions = [Region(outer.puncture(len(f.ovals)), 0, tag)]

    def walk(forest: OvalForest, depth: int):
        for interior in forest.ovals:
            regions.append(Region(sphere(1 + len(interior.ovals)), depth, tag))
            walk(interior, depth + 1)

    walk(f, 1)
    return regions


def regions_of(s: Scheme) -> RegionDecomposition:
    """Complement components of the curve, with nesting depth."""
    if not s.ambient.positive:
        raise ValueError("region decomposition is defined for forest schemes")
    regions = _forest_regions(s.forest_rp2, crosscap_surface(1), "RP2")
    if s.forest_s2 is not None:
        regions += _forest_regions(s.forest_s2, sphere(), "S2")
    return RegionDecomposition(s.ambient, tuple(regions))


# -- half pairs ----------------------------------------------------------------


@dataclass(frozen=True)
class HalfPair:
    """Components of ``B+`` and ``B-``."""

    plus: tuple[CompactSurface, ...]
    minus: tuple[CompactSurface, ...]

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(sorted(self.plus)))
        object.__setattr__(self, "minus", tuple(sorted(self.minus)))

    @property
    def chi_plus(self) -> int:
        return sum(c.euler_characteristic for c in self.plus)

    @property
    def chi_minus(self) -> int:
        return sum(c.euler_characteristic for c in self.minus)

    @property
    def boundary_plus(self) -> int:
        return sum(c.punctures for c in self.plus)

    @property
    def boundary_minus(self) -> int:
        return sum(c.punctures for c in self.minus)

    @property
    def b0(self) -> int:
        return self.boundary_plus

    @property
    def minus_nonorientable(self) -> bool:
        return any(not c.orientable for c in self.minus)

    @property
    def parity_ok(self) -> bool:
        return (self.chi_plus - self.b0) % 2 == 0 and (self.chi_minus - 1 - self.b0) % 2 == 0

    @property
    def admissible(self) -> bool:
        """Sign convention: parity of both sides holds and ``B-`` is nonorientable."""
        return self.parity_ok and self.minus_nonorientable

    @property
    def minus_is_annulus_mobius(self) -> bool:
        return self.minus == tuple(sorted((ANNULUS, MOBIUS_BAND)))

    def __str__(self) -> str:
        fmt = lambda side: " u ".join(format_surface(c) for c in side) or "0"
        return f"B+ = {fmt(self.plus)}; B- = {fmt(self.minus)}"


def raw_colorings(s: Scheme) -> list[HalfPair]:
    """Every sign assignment alternating across each oval, before conventions.

    A component carrying ovals is split into even- and odd-depth regions; a
    closed component without ovals goes wholly to one side.
    """
    dec = regions_of(s)
    per_component = []
    for tag in ("RP2", "S2"):
        regs = dec.component(tag)
        if not regs:
            continue
        even = tuple(r.surface for r in regs if r.depth % 2 == 0)
        odd = tuple(r.surface for r in regs if r.depth % 2 == 1)
        per_component.append([(even, odd), (odd, even)])
    result = []
    for choice in itertools.product(*per_component):
        plus = tuple(c for p, _ in choice for c in p)
        minus = tuple(c for _, m in choice for c in m)
        result.append(HalfPair(plus, minus))
    return result


def colorings(s: Scheme) -> list[HalfPair]:
    """Admissible half pairs of a forest scheme (duplicates removed, order kept)."""
    seen = []
    for hp in raw_colorings(s):
        if hp.admissible and hp not in seen:
            seen.append(hp)
    return seen


# -- pair validation -------------------------------------------------------------


class PairError(ValueError):
    pass


class ChiMismatch(PairError):
    pass


class BoundaryMismatch(PairError):
    pass


class ParityViolation(PairError):
    pass


class OrientabilityViolation(PairError):
    pass


class ShapeViolation(PairError):
    pass


def validate_pair(pair: PairCode, ambient: CubicAmbient) -> HalfPair:
    """Check a pair code against a negative-chi ambient and return its half pair."""
    if ambient.positive:
        raise ValueError("pair codes describe curves on the negative-chi cubics")
    hp = HalfPair(tuple(pair.plus_components()), tuple(pair.minus_components()))
    if not hp.minus_nonorientable:
        raise OrientabilityViolation(f"B- = {pair} is orientable")
    if hp.boundary_plus != hp.boundary_minus:
        raise BoundaryMismatch(
            f"{hp.boundary_plus} boundary circles on B+ but {hp.boundary_minus} on B-")
    chi = hp.chi_plus + hp.chi_minus
    if chi != ambient.euler_characteristic:
        raise ChiMismatch(
            f"chi(B+) + chi(B-) = {hp.chi_plus} + {hp.chi_minus} = {chi},"
            f" expected {ambient.euler_characteristic}")
    if not hp.parity_ok:
        raise ParityViolation(
            f"b0 = {hp.b0} but chi(B+) = {hp.chi_plus}, chi(B-) = {hp.chi_minus}")
    _check_shape(pair)
    return hp


def _check_shape(pair: PairCode):
    pb, mb = pair.plus_big, pair.minus_big
    if isinstance(mb, AnnulusMobius):
        if pair.minus_disks:
            raise ShapeViolation("annulus plus Moebius band minus side has no disks")
        if pb is None or pb.punctures < 2:
            raise ShapeViolation("B+ must meet both the annulus and the Moebius band")
        return
    if mb is None:
        raise ShapeViolation("B- has no non-disk component")
    b0 = pair.plus_disks + (pb.punctures if pb is not None else 0)
    if b0 == 0:
        if pb is not None or pair.minus_disks or not mb.closed:
            raise ShapeViolation("empty curve: B- must be the whole surface")
        return
    if mb.closed or (pb is not None and pb.closed):
        raise ShapeViolation("a closed component would be disjoint from the curve")
    if pb is None:
        if pair.minus_disks:
            raise ShapeViolation("disks on both sides glue into spheres")
        return
    if pb.punctures - pair.minus_disks < 1:
        raise ShapeViolation("B+ and B- big components share no boundary circle")


class FamilyParams(NamedTuple):
    """``<alpha u Big_{beta+gamma}, beta u kRP2_{alpha+gamma}>``."""

    big: str
    alpha: int
    beta: int
    gamma: int
    k: int


def family_params(pair: PairCode) -> Optional[FamilyParams]:
    """Family parameters, or None for the empty curve and the exceptional shape."""
    mb = pair.minus_big
    if isinstance(mb, AnnulusMobius) or mb is None or mb.closed or mb.orientable:
        return None
    pb = pair.plus_big
    if pb is None:
        return FamilyParams("S2", pair.plus_disks - 1, 0, 1, mb.kind.genus)
    big = format_surface(CompactSurface(pb.kind))
    return FamilyParams(big, pair.plus_disks, pair.minus_disks,
                        pb.punctures - pair.minus_disks, mb.kind.genus)


def family_pair(big: CompactSurface, alpha: int, beta: int, gamma: int, k: int) -> PairCode:
    """Pair code of a family member; ``big`` is the closed plus-side surface."""
    return PairCode(alpha, big.puncture(beta + gamma), beta, crosscap_surface(k, alpha + gamma))


def b0(s: Scheme) -> int:
    if s.pair is None:
        return s.forest_rp2.oval_count + (s.forest_s2.oval_count if s.forest_s2 else 0)
    p = s.pair
    return p.plus_disks + (p.plus_big.punctures if p.plus_big is not None else 0)


def half_pair(s: Scheme) -> HalfPair:
    return validate_pair(s.pair, s.ambient)
