"""Structural candidate schemes for each cubic and their classification."""
from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .codes import ANNULUS_MOBIUS, EMPTY, OvalForest, PairCode, canonicalize_on_sphere, union
from .restrictions import HARNACK_BOUND, RULES, Verdict, derived_k, evaluate
from .schemes import FamilyParams, Scheme, family_pair, family_params, forest_scheme, pair_scheme
from .surfaces import (
    AMBIENTS,
    CompactSurface,
    CubicAmbient,
    crosscap_surface,
    format_surface,
    orientable_surface,
    sphere,
)


@functools.lru_cache(maxsize=None)
def forests_of_size(n: int) -> tuple[OvalForest, ...]:
    """All oval forests on RP2 with exactly ``n`` ovals, sorted by code."""
    if n == 0:
        return (EMPTY,)
    found = set()
    for m in range(1, n + 1):
        for interior in forests_of_size(m - 1):
            tree = OvalForest((interior,))
            for rest in forests_of_size(n - m):
                found.add(union(tree, rest))
    return tuple(sorted(found, key=lambda f: f.code))


@functools.lru_cache(maxsize=None)
def sphere_forests_of_size(n: int) -> tuple[OvalForest, ...]:
    """Canonical codes of curves with ``n`` ovals on S2."""
    found = {canonicalize_on_sphere(f) for f in forests_of_size(n)}
    return tuple(sorted(found, key=lambda f: f.code))


def plus_bigs(ambient: CubicAmbient) -> list[CompactSurface]:
    """Closed non-disk B+ surfaces that fit on ``ambient``, in family order."""
    bigs = [sphere()]
    bigs += [orientable_surface(j) for j in range(1, 6)]
    bigs += [crosscap_surface(2 * j) for j in range(1, 6)]
    return [b for b in bigs if derived_k(ambient, b.kind.euler_characteristic, 1) >= 1]


def exceptional_pairs(ambient: CubicAmbient) -> list[PairCode]:
    n = ambient.handles
    return [
        PairCode(1, orientable_surface(n, 2), 0, ANNULUS_MOBIUS),
        PairCode(0, orientable_surface(n - 1, 3), 0, ANNULUS_MOBIUS),
    ]


def empty_pair(ambient: CubicAmbient) -> PairCode:
    return PairCode(0, None, 0, ambient.components[0])


def _family_candidates(ambient: CubicAmbient) -> Iterator[Scheme]:
    for big in plus_bigs(ambient):
        chi = big.kind.euler_characteristic
        for alpha in range(HARNACK_BOUND):
            for beta in range(HARNACK_BOUND - alpha):
                for gamma in range(1, HARNACK_BOUND - alpha - beta + 1):
                    k = derived_k(ambient, chi, gamma)
                    if k >= 1:
                        yield pair_scheme(ambient, family_pair(big, alpha, beta, gamma, k))


def candidates(ambient: CubicAmbient) -> Iterator[Scheme]:
    """Structural candidates, without duplicates, in a deterministic order."""
    if ambient is CubicAmbient.RP2:
        for n in range(HARNACK_BOUND + 1):
            for f in forests_of_size(n):
                yield forest_scheme(ambient, f)
    elif ambient is CubicAmbient.RP2_S2:
        for n in range(HARNACK_BOUND + 1):
            for a in range(n, -1, -1):
                for f in forests_of_size(a):
                    for g in sphere_forests_of_size(n - a):
                        yield forest_scheme(ambient, f, g)
    else:
        yield from _family_candidates(ambient)
        for p in exceptional_pairs(ambient):
            yield pair_scheme(ambient, p)
        yield pair_scheme(ambient, empty_pair(ambient))


def family_order(ambient: CubicAmbient) -> list[str]:
    """Family names in classification order: plus-side big types, then the two specials."""
    return [format_surface(b) for b in plus_bigs(ambient)] + ["exceptional", "empty"]


def family_of(scheme: Scheme) -> str:
    """Classification list item of a negative-chi scheme (``"1"``, ``"2"``, ...); ``"forest"`` otherwise."""
    if scheme.ambient.positive:
        return "forest"
    order = family_order(scheme.ambient)
    p = family_params(scheme.pair)
    if p is not None:
        name = p.big
    elif scheme.pair.exceptional:
        name = "exceptional"
    else:
        name = "empty"
    return str(order.index(name) + 1)


def params_of(scheme: Scheme) -> Optional[FamilyParams]:
    return None if scheme.ambient.positive else family_params(scheme.pair)


@dataclass
class Classification:
    ambient: CubicAmbient
    admitted: list[Scheme]
    excluded: list[tuple[Scheme, Verdict]]

    @property
    def structural(self) -> int:
        return len(self.admitted) + len(self.excluded)


def classify(ambient: CubicAmbient, rules=RULES) -> Classification:
    admitted, excluded = [], []
    for s in candidates(ambient):
        v = evaluate(s, rules)
        if v.admitted:
            admitted.append(s)
        else:
            excluded.append((s, v))
    return Classification(ambient, admitted, excluded)


class Counts(NamedTuple):
    structural: int
    admitted: int
    excluded: int


def counts(rules=RULES) -> dict[CubicAmbient, Counts]:
    out = {}
    for a in AMBIENTS:
        c = classify(a, rules)
        out[a] = Counts(c.structural, len(c.admitted), len(c.excluded))
    return out
