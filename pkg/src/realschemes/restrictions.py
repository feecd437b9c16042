"""Exclusion rules for real schemes of sextic curves on cubic surfaces.

Each rule has an applicability guard and a check; a scheme is excluded when
an applicable rule's check fails.  Rule ids are stable strings used by the
CLI and the JSON export.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Callable, Optional

from .schemes import (
    FamilyParams,
    HalfPair,
    Scheme,
    colorings,
    family_params,
    half_pair,
    raw_colorings,
)
from .surfaces import CubicAmbient

HARNACK_BOUND = 5  # genus 4 curve: at most g + 1 real components
HALF_CB_SQUARE = 6  # (1/2) CB.CB for the complexified cubic surface

A7 = CubicAmbient.RP2_3T2
A5 = CubicAmbient.RP2_2T2


class Facts:
    """Quantities derived from a scheme, computed lazily and shared by all rules."""

    def __init__(self, scheme: Scheme):
        self.scheme = scheme
        self.ambient = scheme.ambient

    @functools.cached_property
    def b0(self) -> int:
        return self.scheme.b0

    @functools.cached_property
    def half_pairs(self) -> list[HalfPair]:
        if self.ambient.positive:
            return colorings(self.scheme)
        return [half_pair(self.scheme)]

    @functools.cached_property
    def params(self) -> Optional[FamilyParams]:
        if self.ambient.positive:
            return None
        return family_params(self.scheme.pair)

    @functools.cached_property
    def chi_plus(self) -> Optional[int]:
        return None if self.ambient.positive else self.half_pairs[0].chi_plus

    @functools.cached_property
    def chi_minus(self) -> Optional[int]:
        return None if self.ambient.positive else self.half_pairs[0].chi_minus

    @functools.cached_property
    def bounding_chis(self) -> list[int]:
        """chi of every subsurface bounded by the curve (one side per component)."""
        return sorted({hp.chi_plus for hp in raw_colorings(self.scheme)})

    def family(self, ambient: CubicAmbient, big: str, gamma: Optional[int] = 1) -> bool:
        p = self.params
        return (self.ambient is ambient and p is not None and p.big == big
                and (gamma is None or p.gamma == gamma))

    @property
    def ab(self) -> tuple[int, int]:
        return (self.params.alpha, self.params.beta)


@dataclass(frozen=True)
class Outcome:
    ok: bool
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Rule:
    id: str
    citation: str
    applies: Callable[[Facts], bool]
    check: Callable[[Facts], Outcome]


@dataclass(frozen=True)
class Verdict:
    violated: tuple[str, ...] = ()

    @property
    def admitted(self) -> bool:
        return not self.violated

    @property
    def status(self) -> str:
        return "admitted" if self.admitted else "excluded"

    def __str__(self) -> str:
        if self.admitted:
            return "Admitted"
        return "Excluded [" + ", ".join(self.violated) + "]"


# -- checks ----------------------------------------------------------------------


def _nonpositive(components) -> int:
    return sum(1 for c in components if c.euler_characteristic <= 0)


def lemma_holds(hp: HalfPair) -> bool:
    """At most one non-positive-chi component on B+; same on B- unless B- is
    exactly an annulus plus a Moebius band.

    The Moebius band of a forest scheme is the outer region of the RP2
    component, so its core is always essential there.
    """
    if _nonpositive(hp.plus) > 1:
        return False
    return _nonpositive(hp.minus) <= 1 or hp.minus_is_annulus_mobius


def _harnack(f: Facts) -> Outcome:
    return Outcome(f.b0 <= HARNACK_BOUND, {"b0": f.b0, "bound": HARNACK_BOUND})


def _lemma(f: Facts) -> Outcome:
    passing = [hp for hp in f.half_pairs if lemma_holds(hp)]
    details = {
        "admissible_colorings": [str(hp) for hp in f.half_pairs],
        "passing": [str(hp) for hp in passing],
    }
    return Outcome(bool(passing), details)


def _t1_cong(f: Facts) -> Outcome:
    targets = {5: (5,), 4: (4, 6)}[f.b0]
    chis = f.bounding_chis
    residues = sorted({c % 8 for c in chis})
    hits = [c for c in chis if c % 8 in targets]
    return Outcome(bool(hits), {"side_chis": chis, "residues_mod_8": residues,
                                "required_mod_8": list(targets), "witnesses": hits})


def _t3_rkgk(f: Facts) -> Outcome:
    a, b = f.ab
    chi = a - b + 1
    targets = (3,) if a + b == 4 else (2, 4)
    return Outcome(chi % 8 in targets, {"chi_plus": chi, "residue_mod_8": chi % 8,
                                        "required_mod_8": list(targets)})


def _mod4_rule(shift: int):
    def check(f: Facts) -> Outcome:
        a, b = f.ab
        value = a - b - shift
        return Outcome(value % 4 == 3, {"alpha-beta-%d" % shift: value,
                                        "residue_mod_4": value % 4, "required_mod_4": 3})
    return check


def _g_dot_g(f: Facts) -> list[int]:
    # D+ and D- are disks; E is the non-disk component of B+ capped by a disk.
    chi_e = f.scheme.pair.plus_big.euler_characteristic + 1
    s = 1 + chi_e + 1
    return [HALF_CB_SQUARE - 2 * s + 4, HALF_CB_SQUARE - 2 * s - 4]


def _t3_brown(f: Facts) -> Outcome:
    a, b = f.ab
    diff = b - a
    if (a, b) == (1, 1):
        gg = _g_dot_g(f)
        return Outcome(False, {"beta-alpha": diff, "residue_mod_8": diff % 8,
                               "type_II": "beta-alpha = 0 mod 8 contradicts the Brown invariant",
                               "type_I_G.G": gg, "required_G.G": 0})
    targets = (4,) if a + b == 4 else (3, 5)
    return Outcome(diff % 8 in targets, {"beta-alpha": diff, "residue_mod_8": diff % 8,
                                         "required_mod_8": list(targets)})


def _f_dot_f(f: Facts) -> Outcome:
    ff = HALF_CB_SQUARE - 2 * f.chi_plus
    bound = "F.F = 0" if f.ambient is A7 else "F.F <= 0"
    return Outcome(False, {"chi_plus": f.chi_plus, "F.F": ff, "required": bound})


def _tuple_rule(reason: str):
    def check(f: Facts) -> Outcome:
        return Outcome(False, {"chi_plus": f.chi_plus, "chi_minus": f.chi_minus,
                               "reason": reason})
    return check


def _struct_k(f: Facts) -> Outcome:
    p = f.params
    big_chi = f.scheme.pair.plus_big.kind.euler_characteristic if f.scheme.pair.plus_big else 2
    k = derived_k(f.ambient, big_chi, p.gamma)
    return Outcome(k >= 1 and k == p.k, {"k_derived": k, "k_code": p.k})


def derived_k(ambient: CubicAmbient, big_chi: int, gamma: int) -> int:
    """Crosscaps of the B- big component forced by chi(B+) + chi(B-) = chi(ambient)."""
    return big_chi + 2 - 2 * gamma - ambient.euler_characteristic


RULES: tuple[Rule, ...] = (
    Rule("HARNACK",
         "Harnack bound: a genus 4 real curve has at most 5 components",
         lambda f: True, _harnack),
    Rule("LEMMA-A",
         "some admissible coloring has at most one B+ component with chi <= 0, and "
         "at most one such B- component unless B- is an annulus and a Moebius band",
         lambda f: True, _lemma),
    Rule("T1-CONG",
         "dividing-type congruence: some bounded half has chi = 5 mod 8 for "
         "5 ovals, chi = 4 or 6 mod 8 for 4 ovals",
         lambda f: f.ambient is CubicAmbient.RP2_S2 and f.b0 in (4, 5), _t1_cong),
    Rule("T3-RKGK",
         "Rokhlin and Kharlamov-Gudkov-Krakhnov congruences on chi(B+) "
         "for a sphere B+ big part",
         lambda f: f.family(A7, "S2") and sum(f.ab) in (3, 4), _t3_rkgk),
    Rule("T3-74D-T2",
         "congruence alpha - beta - 1 = 3 mod 4 when alpha + beta = 4",
         lambda f: f.family(A7, "T2") and sum(f.ab) == 4, _mod4_rule(1)),
    Rule("T3-74D-2T2",
         "congruence alpha - beta - 3 = 3 mod 4 when alpha + beta = 4",
         lambda f: f.family(A7, "2T2") and sum(f.ab) == 4, _mod4_rule(3)),
    Rule("T3-BROWN-3T2",
         "Guillou-Marin congruence chi(B-) = 3 + Brown invariant mod 8; "
         "(1,1) also fails the complex orientation formula",
         lambda f: f.family(A7, "3T2") and (sum(f.ab) in (3, 4) or f.ab == (1, 1)),
         _t3_brown),
    Rule("T3-FF-3T2",
         "self-intersection F.F = 6 - 2 chi(B+) must vanish for an orientable surface in S^4",
         lambda f: f.family(A7, "3T2") and f.ab == (4, 0), _f_dot_f),
    Rule("T3-74C-2RP2",
         "nonorientable B+ with chi = -1 is forbidden",
         lambda f: f.family(A7, "2RP2") and f.ab == (2, 2),
         _tuple_rule("chi(B+) = -1 with B+ nonorientable")),
    Rule("T3-74CB-6RP2",
         "(2,1) fails the chi = -1 orientability bound on B-, (3,1) and (2,2) the Arnold-type bound",
         lambda f: f.family(A7, "6RP2") and f.ab in ((2, 1), (3, 1), (2, 2)),
         _tuple_rule("B- orientability bound for (2,1); Arnold-type bound for (3,1), (2,2)")),
    Rule("T4-FF-2T2",
         "F.F = 6 - 2 = 4 > 0 contradicts the negative definite form of the quotient",
         lambda f: f.family(A5, "2T2") and f.ab == (4, 0), _f_dot_f),
    Rule("STRUCT-K",
         "crosscap count k = chi(Big) + 2 - 2 gamma - chi(ambient), k >= 1",
         lambda f: not f.ambient.positive and f.params is not None, _struct_k),
)

RULE_IDS = tuple(r.id for r in RULES)


def applicable(scheme: Scheme, rules=RULES) -> list[tuple[Rule, Outcome]]:
    facts = Facts(scheme)
    return [(r, r.check(facts)) for r in rules if r.applies(facts)]


def evaluate(scheme: Scheme, rules=RULES) -> Verdict:
    """Run every applicable rule and collect all violations."""
    violated = {r.id for r, out in applicable(scheme, rules) if not out.ok}
    return Verdict(tuple(sorted(violated)))


def _fmt(value) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def explain(scheme: Scheme, rules=RULES) -> str:
    facts = Facts(scheme)
    lines = [f"scheme  {scheme.code}", f"ambient {scheme.ambient} (chi = {scheme.ambient.euler_characteristic})",
             f"b0      {facts.b0}"]
    if facts.params is not None:
        p = facts.params
        lines.append(f"family  Big = {p.big}, alpha = {p.alpha}, beta = {p.beta}, "
                     f"gamma = {p.gamma}, k = {p.k}")
    if facts.chi_plus is not None:
        lines.append(f"chi(B+) = {facts.chi_plus}, chi(B-) = {facts.chi_minus}")
    results = applicable(scheme, rules)
    for rule, out in results:
        lines.append(f"{'PASS' if out.ok else 'FAIL'} {rule.id}: {rule.citation}")
        for key, value in out.details.items():
            lines.append(f"    {key}: {_fmt(value)}")
    applied = {r.id for r, _ in results}
    skipped = [r.id for r in rules if r.id not in applied]
    if skipped:
        lines.append("not applicable: " + ", ".join(skipped))
    verdict = Verdict(tuple(sorted({r.id for r, o in results if not o.ok})))
    lines.append(f"verdict {verdict}")
    return "\n".join(lines)
