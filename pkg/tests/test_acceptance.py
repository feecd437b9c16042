"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""
import random
import time
from collections import Counter

import pytest

from realschemes import catalog
from realschemes.codes import (
    ANNULUS_MOBIUS,
    EMPTY,
    OvalForest,
    PairCode,
    canonicalize_on_sphere,
    chain,
    nest,
    parse_forest,
    parse_pair,
    print_forest,
    union,
)
from realschemes.enumerator import candidates, classify, family_of
from realschemes.restrictions import evaluate
from realschemes.schemes import (
    colorings,
    family_params,
    forest_scheme,
    parse_scheme,
    validate_pair,
)
from realschemes.surfaces import (
    CompactSurface,
    CubicAmbient,
    SurfaceKind,
)

A = CubicAmbient
N_RANDOM = 10_000
EXPECTED_ADMITTED = {A.RP2_S2: 31, A.RP2: 17, A.RP2_3T2: 157, A.RP2_2T2: 113, A.RP2_T2: 58}


def test_criterion_1_counts(criterion):
    got, slowest = {}, 0.0
    for amb in EXPECTED_ADMITTED:
        start = time.perf_counter()
        got[amb] = len(classify(amb).admitted)
        slowest = max(slowest, time.perf_counter() - start)
    ok = got == EXPECTED_ADMITTED and sum(got.values()) == 376 and slowest < 1.0
    detail = ", ".join(f"{a.token} {n}" for a, n in got.items())
    assert criterion(1, ok, f"admitted {detail}; total {sum(got.values())}; "
                            f"slowest ambient {slowest * 1000:.0f} ms")


# (family item, alpha, beta, gamma) -> rule id, as listed for the 7-crosscap cubic
EXPECTED_7RP2_EXCLUSIONS = {
    **{("1", a, b, 1): "T3-RKGK" for a, b in [(0, 3), (0, 4), (1, 2), (1, 3), (2, 2), (4, 0)]},
    **{("2", a, b, 1): "T3-74D-T2" for a, b in [(1, 3), (3, 1)]},
    **{("3", a, b, 1): "T3-74D-2T2" for a, b in [(0, 4), (2, 2), (4, 0)]},
    **{("4", a, b, 1): "T3-BROWN-3T2" for a, b in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]},
    ("4", 4, 0, 1): "T3-FF-3T2",
    ("5", 2, 2, 1): "T3-74C-2RP2",
    **{("7", a, b, 1): "T3-74CB-6RP2" for a, b in [(2, 1), (3, 1), (2, 2)]},
}


def test_criterion_2_attribution_on_7rp2(criterion):
    got = {}
    for s, verdict in classify(A.RP2_3T2).excluded:
        p = family_params(s.pair)
        got[(family_of(s), p.alpha, p.beta, p.gamma)] = verdict.violated
    expected = {k: (v,) for k, v in EXPECTED_7RP2_EXCLUSIONS.items()}
    per_rule = Counter(v[0] for v in got.values() if len(v) == 1)
    ok = len(got) == 22 and got == expected
    assert criterion(2, ok, f"{len(got)} excluded; per rule {dict(sorted(per_rule.items()))}")


def test_criterion_3_negative_cubics(criterion):
    five = [s.code for s, _ in classify(A.RP2_2T2).excluded]
    three = [s.code for s, _ in classify(A.RP2_T2).excluded]
    expected = parse_scheme("<4 u 2T2_1, RP2_5>", A.RP2_2T2).code
    ok = five == [expected] and three == []
    assert criterion(3, ok, f"5RP2 excludes {five}; 3RP2 excludes {three}")


def _t1_displayed() -> set:
    """The two displayed non-realizable patterns on RP2 u S2 (with at most 5 ovals)."""
    out = set()
    for a in range(5):
        for b in range(5):
            body = union(OvalForest.flat(a), nest(OvalForest.flat(b)))
            if a > 0 and b > 1 and body.oval_count <= 5:
                out.add(forest_scheme(A.RP2_S2, body, EMPTY))
            if b > 0 and (a, b) != (0, 1) and body.oval_count + 1 <= 5:
                out.add(forest_scheme(A.RP2_S2, body, OvalForest.flat(1)))
    return out


def _t1_pattern_domain() -> set:
    out = set()
    for a in range(5):
        for b in range(5):
            body = union(OvalForest.flat(a), nest(OvalForest.flat(b)))
            for g in (EMPTY, OvalForest.flat(1)):
                if body.oval_count + g.oval_count <= 5:
                    out.add(forest_scheme(A.RP2_S2, body, g))
    return out


def _t1_emergent() -> set:
    """Schemes removed by the congruence and by nothing else."""
    return {s for s, v in classify(A.RP2_S2).excluded if v.violated == ("T1-CONG",)}


# Three sphere-side arrangements are also cut by the congruence; they satisfy the
# non-positive-component count in every coloring, so nothing else removes them.
T1_EXTRA = {"<>@RP2 | <2 u 1<1>>@S2", "<>@RP2 | <2 u 1<2>>@S2", "<>@RP2 | <3 u 1<1>>@S2"}


@pytest.mark.xfail(strict=True, reason="the congruence also removes three sphere-side "
                   "arrangements outside the displayed patterns; see the README")
def test_criterion_4_emergent_congruence(criterion):
    emergent, displayed = _t1_emergent(), _t1_displayed()
    listed = {e.scheme for e in catalog.ground_truth(A.RP2_S2)}
    extra = sorted(s.code for s in emergent - displayed)
    missing = sorted(s.code for s in displayed - emergent)
    ok = emergent == displayed and not (emergent & listed)
    criterion(4, ok, f"{len(emergent)} excluded by T1-CONG, {len(displayed)} displayed; "
                     f"extra {extra}; missing {missing}; hits listed {len(emergent & listed)}")
    assert ok


def test_criterion_4_on_displayed_family(criterion):
    emergent, displayed = _t1_emergent(), _t1_displayed()
    listed = {e.scheme for e in catalog.ground_truth(A.RP2_S2)}
    on_domain = emergent & _t1_pattern_domain()
    extra = {s.code for s in emergent - displayed}
    ok = on_domain == displayed and not (emergent & listed) and extra == T1_EXTRA
    assert criterion("4 (pattern family only)", ok,
                     f"{len(on_domain)} = {len(displayed)} on the <a u 1<b>> family, "
                     f"0 listed types hit, {len(extra)} documented extras")


def test_criterion_5_lemma_on_rp2(criterion):
    def lemma_fails(s):
        return "LEMMA-A" in evaluate(s).violated

    chain3, chain4 = forest_scheme(A.RP2, chain(3)), forest_scheme(A.RP2, chain(4))
    other = parse_scheme("<1<1<2>>>")
    c = classify(A.RP2)
    fired = {r for _, v in c.excluded for r in v.violated}
    admitted = set(c.admitted) == {e.scheme for e in catalog.ground_truth(A.RP2)}
    ok = (not lemma_fails(chain3) and lemma_fails(chain4) and lemma_fails(other)
          and admitted and len(c.admitted) == 17 and fired == {"LEMMA-A"})
    assert criterion(5, ok, f"chain3 passes, chain4 and <1<1<2>>> fail; "
                            f"{len(c.admitted)} admitted; rules fired {sorted(fired)}")


# -- criterion 6 ----------------------------------------------------------------------


def random_forest(rng: random.Random, max_ovals: int = 8) -> OvalForest:
    """Random recursive tree: each new oval goes inside a uniformly chosen region."""
    n = rng.randint(0, max_ovals)
    children: list[list[int]] = [[]]
    for node in range(1, n + 1):
        children[rng.randrange(node)].append(node)
        children.append([])

    def build(v):
        return OvalForest(tuple(build(c) for c in children[v]))

    return build(0)


NEGATIVE_CANDIDATES = [s for a in (A.RP2_3T2, A.RP2_2T2, A.RP2_T2) for s in candidates(a)]


def random_pair_code(rng: random.Random) -> PairCode:
    """Grammar-level pair code, not necessarily a valid scheme."""

    def surface():
        if rng.random() < 0.5:
            kind = SurfaceKind(True, rng.randint(0, 5))
        else:
            kind = SurfaceKind(False, rng.randint(1, 11))
        return CompactSurface(kind, rng.randint(0, 6))

    plus = surface() if rng.random() < 0.8 else None
    minus = ANNULUS_MOBIUS if rng.random() < 0.1 else (surface() if rng.random() < 0.9 else None)
    return PairCode(rng.randint(0, 5), plus, rng.randint(0, 5), minus)


def test_criterion_6_structural_invariants(criterion):
    rng = random.Random(20260516)
    counts = Counter()
    failures = []
    for _ in range(N_RANDOM):
        # half pairs of random forest schemes and of drawn pair schemes
        amb = rng.choice([A.RP2, A.RP2_S2])
        f = random_forest(rng)
        s = forest_scheme(amb, f, random_forest(rng, 4) if amb is A.RP2_S2 else None)
        ps = rng.choice(NEGATIVE_CANDIDATES)
        cases = [(hp, amb) for hp in colorings(s)]
        cases.append((validate_pair(ps.pair, ps.ambient), ps.ambient))
        for prop in ("chi", "boundary", "nonorientable"):
            counts[prop] += 1
        for hp, a in cases:
            if hp.chi_plus + hp.chi_minus != a.euler_characteristic:
                failures.append(("chi", str(hp)))
            if hp.boundary_plus != hp.boundary_minus:
                failures.append(("boundary", str(hp)))
            if not hp.minus_nonorientable:
                failures.append(("nonorientable", str(hp)))
        # parser round trips
        counts["forest round trip"] += 1
        if parse_forest(print_forest(f)) != f:
            failures.append(("forest round trip", f.code))
        p = random_pair_code(rng)
        counts["pair round trip"] += 1
        if parse_pair(p.code) != p:
            failures.append(("pair round trip", p.code))
        # sphere canonicalization
        counts["sphere idempotent"] += 1
        c = canonicalize_on_sphere(f)
        if canonicalize_on_sphere(c) != c or c.oval_count != f.oval_count:
            failures.append(("sphere idempotent", f.code))
    ok = not failures and min(counts.values()) >= N_RANDOM
    assert criterion(6, ok, f"cases per property {dict(counts)}; failures {failures[:3]}")


def test_criterion_7_closure(criterion):
    reports = [catalog.closure_check(a) for a in (A.RP2_3T2, A.RP2_2T2, A.RP2_T2)]
    ok = all(r.ok for r in reports)
    detail = ", ".join(f"{r.ambient.token} uncovered {len(r.uncovered)}" for r in reports)
    assert criterion(7, ok, detail)


def test_criterion_8_family_counts(criterion):
    from_enumerator = Counter(family_of(s) for s in classify(A.RP2_3T2).admitted)
    from_tables = Counter(e.family for e in catalog.ground_truth(A.RP2_3T2))
    expected = [28, 29, 22, 8, 30, 25, 12]
    enum_list = [from_enumerator[str(i)] for i in range(1, 8)]
    table_list = [from_tables[str(i)] for i in range(1, 8)]
    ok = enum_list == table_list == expected and sum(from_enumerator.values()) == 157
    assert criterion(8, ok, f"enumerator {enum_list}, tables {table_list}")
