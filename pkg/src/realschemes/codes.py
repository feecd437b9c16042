"""Nested-oval codes and half-pair codes.

Forest grammar (ASCII ``u`` stands for disjoint union)::

    FOREST := "<" BODY ">"
    BODY   := "" | TERM { "u" TERM }
    TERM   := INT | "1<" BODY ">"

Pair grammar::

    PAIR     := "<" SIDE "," SIDE ">"
    SIDE     := INT | SURFLIST | INT "u" SURFLIST
    SURFLIST := SURF { "u" SURF }

A SURFLIST with more than one surface is only accepted for the annulus plus
Moebius band minus side ``S2_2 u RP2_1``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Optional, Union

from .surfaces import (
    ANNULUS,
    DISK,
    MOBIUS_BAND,
    CompactSurface,
    ParseError,
    format_surface,
    parse_surface,
)


def _term_key(interior: "OvalForest") -> tuple[int, str]:
    return (1 + interior.oval_count, "1" + interior.code)


@dataclass(frozen=True, eq=False)
class OvalForest:
    """A collection of ovals, each given by the forest in its interior.

    Siblings are kept in canonical order, so equality is structural.
    """

    ovals: tuple["OvalForest", ...] = ()

    def __post_init__(self):
        ordered = tuple(sorted(self.ovals, key=_term_key))
        object.__setattr__(self, "ovals", ordered)

    @classmethod
    def flat(cls, n: int) -> OvalForest:
        return cls(tuple(EMPTY for _ in range(n)))

    @functools.cached_property
    def oval_count(self) -> int:
        return sum(1 + o.oval_count for o in self.ovals)

    @functools.cached_property
    def code(self) -> str:
        return print_forest(self)

    @property
    def empty_ovals(self) -> int:
        return sum(1 for o in self.ovals if not o.ovals)

    @property
    def nested(self) -> tuple[OvalForest, ...]:
        return tuple(o for o in self.ovals if o.ovals)

    @property
    def depth(self) -> int:
        return max((1 + o.depth for o in self.ovals), default=0)

    def __str__(self) -> str:
        return self.code

    def __hash__(self):
        return hash(self.code)

    def __eq__(self, other):
        if not isinstance(other, OvalForest):
            return NotImplemented
        return self.code == other.code


EMPTY = OvalForest()


def nest(*inner: OvalForest) -> OvalForest:
    """One oval containing the union of ``inner`` forests."""
    return OvalForest((union(*inner),))


def union(*forests: OvalForest) -> OvalForest:
    return OvalForest(tuple(o for f in forests for o in f.ovals))


def chain(n: int) -> OvalForest:
    """``n`` ovals each containing the next."""
    f = EMPTY
    for _ in range(n):
        f = OvalForest((f,))
    return f


def print_forest(f: OvalForest) -> str:
    parts = []
    if f.empty_ovals:
        parts.append(str(f.empty_ovals))
    parts.extend("1" + print_forest(o) for o in f.nested)
    return "<" + " u ".join(parts) + ">"


class _ForestParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str):
        raise ParseError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        self.skip()
        start = self.pos
        if self.peek() == "-":
            self.error("negative count")
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a count")
        value = int(self.text[start:self.pos])
        if value <= 0:
            self.pos = start
            self.error("count must be positive")
        return value

    def forest(self) -> OvalForest:
        self.expect("<")
        ovals = []
        if self.peek() != ">":
            ovals.extend(self.term())
            while self.peek() == "u":
                self.pos += 1
                ovals.extend(self.term())
        self.expect(">")
        return OvalForest(tuple(ovals))

    def term(self) -> list[OvalForest]:
        start = self.pos
        n = self.integer()
        if self.peek() == "<":
            if n != 1:
                self.pos = start
                self.error("only a single oval may enclose a collection")
            return [self.forest()]
        return [EMPTY] * n

    def parse(self) -> OvalForest:
        f = self.forest()
        if self.peek():
            self.error("trailing characters")
        return f


def parse_forest(text: str) -> OvalForest:
    return _ForestParser(text).parse()


# -- sphere canonicalization -------------------------------------------------


def _region_tree(f: OvalForest) -> list[list[int]]:
    """Adjacency lists of the complement regions; region 0 is the outer one."""
    adj: list[list[int]] = [[]]

    def walk(forest: OvalForest, parent: int):
        for interior in forest.ovals:
            adj.append([])
            me = len(adj) - 1
            adj[parent].append(me)
            adj[me].append(parent)
            walk(interior, me)

    walk(f, 0)
    return adj


def _rooted(adj: list[list[int]], node: int, parent: int) -> OvalForest:
    return OvalForest(tuple(_rooted(adj, c, node) for c in adj[node] if c != parent))


def nesting_pairs(f: OvalForest, depth: int = 0) -> int:
    """Number of (oval, enclosing oval) pairs."""
    return sum(depth + nesting_pairs(o, depth + 1) for o in f.ovals)


def sphere_rootings(f: OvalForest) -> list[OvalForest]:
    """The forest seen from every complement region of the curve on S^2."""
    adj = _region_tree(f)
    return [_rooted(adj, r, -1) for r in range(len(adj))]


def canonicalize_on_sphere(f: OvalForest) -> OvalForest:
    """Minimal-nesting code of ``f`` on S^2; ties go to the smallest printed code."""
    return min(sphere_rootings(f), key=lambda g: (nesting_pairs(g), g.code))


# -- pair codes --------------------------------------------------------------


@dataclass(frozen=True)
class AnnulusMobius:
    """The minus side S2_2 u RP2_1 (annulus plus Moebius band)."""

    components: tuple[CompactSurface, ...] = field(default=(ANNULUS, MOBIUS_BAND))

    @property
    def punctures(self) -> int:
        return 3

    @property
    def euler_characteristic(self) -> int:
        return 0

    @property
    def orientable(self) -> bool:
        return False

    def __str__(self) -> str:
        return "S2_2 u RP2_1"


ANNULUS_MOBIUS = AnnulusMobius()

BigPart = Union[CompactSurface, AnnulusMobius]


@dataclass(frozen=True)
class PairCode:
    """``<j u F, n u G>``: disk counts and the non-disk part of each side.

    A disk passed as a big part is folded into the disk count.
    """

    plus_disks: int = 0
    plus_big: Optional[CompactSurface] = None
    minus_disks: int = 0
    minus_big: Optional[BigPart] = None

    def __post_init__(self):
        if self.plus_disks < 0 or self.minus_disks < 0:
            raise ValueError("disk counts must be nonnegative")
        if isinstance(self.plus_big, AnnulusMobius):
            raise ValueError("the annulus plus Moebius band shape only occurs on the minus side")
        if self.plus_big is not None and self.plus_big.is_disk:
            object.__setattr__(self, "plus_disks", self.plus_disks + 1)
            object.__setattr__(self, "plus_big", None)
        if isinstance(self.minus_big, CompactSurface) and self.minus_big.is_disk:
            object.__setattr__(self, "minus_disks", self.minus_disks + 1)
            object.__setattr__(self, "minus_big", None)

    @property
    def exceptional(self) -> bool:
        return isinstance(self.minus_big, AnnulusMobius)

    def plus_components(self) -> list[CompactSurface]:
        big = [self.plus_big] if self.plus_big is not None else []
        return [*(_disks(self.plus_disks)), *big]

    def minus_components(self) -> list[CompactSurface]:
        if self.minus_big is None:
            big = []
        elif isinstance(self.minus_big, AnnulusMobius):
            big = list(self.minus_big.components)
        else:
            big = [self.minus_big]
        return [*(_disks(self.minus_disks)), *big]

    @property
    def code(self) -> str:
        return format_pair(self)

    def __str__(self) -> str:
        return self.code


def _disks(n: int) -> list[CompactSurface]:
    return [DISK] * n


def _format_side(disks: int, big) -> str:
    if big is None:
        return str(disks)
    big_text = str(big) if isinstance(big, AnnulusMobius) else format_surface(big)
    return big_text if disks == 0 else f"{disks} u {big_text}"


def format_pair(p: PairCode) -> str:
    return f"<{_format_side(p.plus_disks, p.plus_big)}, {_format_side(p.minus_disks, p.minus_big)}>"


def _parse_side(text: str, offset: int, minus: bool, full: str):
    items = []
    start = 0
    for i, ch in enumerate(text + "u"):
        if ch == "u":
            items.append((text[start:i], offset + start))
            start = i + 1
    disks = 0
    surfaces: list[CompactSurface] = []
    for idx, (item, pos) in enumerate(items):
        token = item.strip()
        lead = pos + len(item) - len(item.lstrip())
        if not token:
            raise ParseError("empty item", full, lead)
        if token.isdigit():
            if idx != 0:
                raise ParseError("disk count must come first", full, lead)
            disks = int(token)
        elif token.startswith("-"):
            raise ParseError("negative count", full, lead)
        else:
            surfaces.append(parse_surface(token, lead))
    if not surfaces:
        return disks, None
    if len(surfaces) == 1:
        return disks, surfaces[0]
    if minus and sorted(surfaces) == sorted([ANNULUS, MOBIUS_BAND]):
        return disks, ANNULUS_MOBIUS
    raise ParseError("a side has at most one non-disk component", full, offset)


def parse_pair(text: str) -> PairCode:
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    if not s.startswith("<"):
        raise ParseError("expected '<'", text, lead)
    if not s.endswith(">"):
        raise ParseError("expected '>'", text, lead + len(s))
    body = s[1:-1]
    if body.count(",") != 1:
        raise ParseError("a pair code has exactly two sides", text, lead + 1)
    comma = body.index(",")
    pdisks, pbig = _parse_side(body[:comma], lead + 1, False, text)
    mdisks, mbig = _parse_side(body[comma + 1:], lead + 2 + comma, True, text)
    return PairCode(pdisks, pbig, mdisks, mbig)
