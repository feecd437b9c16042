"""Compact surface types, Euler characteristics and the five real cubic surfaces."""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass


class ParseError(ValueError):
    """Malformed code text. ``pos`` is the byte offset of the offending token."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        super().__init__(f"{message} at offset {pos}: {text!r}")
        self.text = text
        self.pos = pos


@dataclass(frozen=True, order=True)
class SurfaceKind:
    """Closed connected surface.

    ``genus`` counts handles when orientable and crosscaps otherwise.
    """

    orientable: bool
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if not self.orientable and self.genus < 1:
            raise ValueError("a nonorientable surface needs at least one crosscap")

    @property
    def euler_characteristic(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus
        return 2 - self.genus


def normalize(handles: int = 0, crosscaps: int = 0) -> SurfaceKind:
    """Reduce a connected sum of ``handles`` tori and ``crosscaps`` projective planes.

    With at least one crosscap every handle trades for two crosscaps, so the
    result is pure-handle (orientable) or pure-crosscap.
    """
    if handles < 0 or crosscaps < 0:
        raise ValueError("counts must be nonnegative")
    if crosscaps == 0:
        return SurfaceKind(True, handles)
    return SurfaceKind(False, crosscaps + 2 * handles)


SPHERE = SurfaceKind(True, 0)
TORUS = SurfaceKind(True, 1)
PROJECTIVE_PLANE = SurfaceKind(False, 1)


@dataclass(frozen=True, order=True)
class CompactSurface:
    """Connected compact surface: a closed kind with ``punctures`` open disks removed."""

    kind: SurfaceKind
    punctures: int = 0

    def __post_init__(self):
        if self.punctures < 0:
            raise ValueError("punctures must be nonnegative")

    @property
    def orientable(self) -> bool:
        return self.kind.orientable

    @property
    def closed(self) -> bool:
        return self.punctures == 0

    @property
    def is_disk(self) -> bool:
        return self.kind == SPHERE and self.punctures == 1

    @property
    def euler_characteristic(self) -> int:
        return self.kind.euler_characteristic - self.punctures

    def puncture(self, k: int = 1) -> CompactSurface:
        return CompactSurface(self.kind, self.punctures + k)

    def __str__(self) -> str:
        return format_surface(self)


def euler_characteristic(s: CompactSurface) -> int:
    return s.euler_characteristic


def sphere(punctures: int = 0) -> CompactSurface:
    return CompactSurface(SPHERE, punctures)


def orientable_surface(genus: int, punctures: int = 0) -> CompactSurface:
    return CompactSurface(SurfaceKind(True, genus), punctures)


def crosscap_surface(crosscaps: int, punctures: int = 0) -> CompactSurface:
    return CompactSurface(SurfaceKind(False, crosscaps), punctures)


DISK = sphere(1)
ANNULUS = sphere(2)
MOBIUS_BAND = crosscap_surface(1, 1)


_SURF_RE = re.compile(r"(?P<count>\d+)?(?P<base>S2|T2|RP2)(?:_(?P<punct>\d+))?")


def parse_surface(text: str, offset: int = 0) -> CompactSurface:
    """Parse a surface token such as ``S2_2``, ``3T2_2`` or ``7RP2``."""
    stripped = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    m = _SURF_RE.fullmatch(stripped)
    if m is None:
        raise ParseError("malformed surface token", text, lead)
    count, base, punct = m.group("count"), m.group("base"), m.group("punct")
    k = int(punct) if punct is not None else 0
    if base == "S2":
        if count is not None:
            raise ParseError("sphere token takes no multiplicity", text, lead)
        return sphere(k)
    n = int(count) if count is not None else 1
    if n < 1:
        raise ParseError("multiplicity must be positive", text, lead)
    if base == "T2":
        return orientable_surface(n, k)
    return crosscap_surface(n, k)


def format_surface(s: CompactSurface) -> str:
    if s.kind.orientable:
        g = s.kind.genus
        base = "S2" if g == 0 else ("T2" if g == 1 else f"{g}T2")
    else:
        c = s.kind.genus
        base = "RP2" if c == 1 else f"{c}RP2"
    return base if s.punctures == 0 else f"{base}_{s.punctures}"


class CubicAmbient(enum.Enum):
    """Diffeomorphism types of a nonsingular real cubic surface in RP^3."""

    RP2_S2 = "RP2+S2"
    RP2 = "RP2"
    RP2_T2 = "3RP2"
    RP2_2T2 = "5RP2"
    RP2_3T2 = "7RP2"

    @property
    def token(self) -> str:
        return self.value

    @property
    def components(self) -> tuple[CompactSurface, ...]:
        return _AMBIENT_COMPONENTS[self]

    @property
    def euler_characteristic(self) -> int:
        return sum(c.euler_characteristic for c in self.components)

    @property
    def handles(self) -> int:
        """Number of handles n in RP2 # nT2 (0 for the positive ambients)."""
        return _AMBIENT_HANDLES.get(self, 0)

    @property
    def positive(self) -> bool:
        return self.euler_characteristic > 0

    @classmethod
    def parse(cls, text: str) -> CubicAmbient:
        for a in cls:
            if a.value == text.strip():
                return a
        raise ParseError("unknown ambient", text, 0)

    def __str__(self) -> str:
        return self.value


_AMBIENT_COMPONENTS = {
    CubicAmbient.RP2_S2: (crosscap_surface(1), sphere()),
    CubicAmbient.RP2: (crosscap_surface(1),),
    CubicAmbient.RP2_T2: (CompactSurface(normalize(1, 1)),),
    CubicAmbient.RP2_2T2: (CompactSurface(normalize(2, 1)),),
    CubicAmbient.RP2_3T2: (CompactSurface(normalize(3, 1)),),
}
_AMBIENT_HANDLES = {
    CubicAmbient.RP2_T2: 1,
    CubicAmbient.RP2_2T2: 2,
    CubicAmbient.RP2_3T2: 3,
}

# Classification order: RP2+S2, RP2, 7RP2, 5RP2, 3RP2.
AMBIENTS = (
    CubicAmbient.RP2_S2,
    CubicAmbient.RP2,
    CubicAmbient.RP2_3T2,
    CubicAmbient.RP2_2T2,
    CubicAmbient.RP2_T2,
)
