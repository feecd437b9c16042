import itertools

import networkx as nx
import pytest

from realschemes.codes import (
    ANNULUS_MOBIUS,
    EMPTY,
    OvalForest,
    PairCode,
    canonicalize_on_sphere,
    chain,
    format_pair,
    nest,
    nesting_pairs,
    parse_forest,
    parse_pair,
    print_forest,
    sphere_rootings,
    union,
)
from realschemes.enumerator import forests_of_size, sphere_forests_of_size
from realschemes.surfaces import ParseError, crosscap_surface, orientable_surface, sphere


def region_graph(f: OvalForest) -> nx.Graph:
    g = nx.Graph()
    g.add_node(0)

    def walk(forest, parent):
        for interior in forest.ovals:
            me = g.number_of_nodes()
            g.add_edge(parent, me)
            walk(interior, me)

    walk(f, 0)
    return g


# -- forests -------------------------------------------------------------------------


def test_parse_examples():
    f = parse_forest("<3 u 1<1>>")
    assert f.oval_count == 5
    assert f.empty_ovals == 3 and len(f.nested) == 1
    assert parse_forest("<>") == EMPTY
    assert parse_forest("<1<1<1>>>") == chain(3)
    assert chain(3).depth == 3


def test_print_examples():
    assert print_forest(OvalForest.flat(2)) == "<2>"
    assert print_forest(chain(3)) == "<1<1<1>>>"
    assert print_forest(union(OvalForest.flat(1), nest(OvalForest.flat(1)))) == "<1 u 1<1>>"
    assert print_forest(EMPTY) == "<>"


def test_sibling_order_is_canonical():
    a = parse_forest("<1<2> u 1<1> u 2>")
    b = parse_forest("<1 u 1<1> u 1 u 1<2>>")
    assert a == b
    assert a.code == "<2 u 1<1> u 1<2>>"
    # equal oval counts: ties go to the smaller printed subcode
    assert parse_forest("<1<2> u 1<1<1>>>").code == "<1<1<1>> u 1<2>>"


def test_whitespace_tolerated():
    assert parse_forest("  < 2 u 1 < 1 > >  ").code == "<2 u 1<1>>"


@pytest.mark.parametrize("bad,pos", [
    ("<0>", 1), ("<-1>", 1), ("<2<1>>", 1), ("<1 u>", 4), ("<1", 2), ("1>", 0),
    ("<1> x", 4), ("<u>", 1), ("<1<>", 4),
])
def test_parse_errors_with_offset(bad, pos):
    with pytest.raises(ParseError) as info:
        parse_forest(bad)
    assert info.value.pos == pos


@pytest.mark.parametrize("n,count", list(enumerate([1, 1, 2, 4, 9, 20, 48])))
def test_forest_counts_are_rooted_trees(n, count):
    # forests with n ovals <-> rooted trees with n + 1 nodes
    assert len(forests_of_size(n)) == count


@pytest.mark.parametrize("n", range(7))
def test_forest_round_trip(n):
    for f in forests_of_size(n):
        assert parse_forest(print_forest(f)) == f
        assert f.oval_count == n


# -- sphere canonicalization -------------------------------------------------------


def test_sphere_examples():
    assert canonicalize_on_sphere(chain(2)).code == "<2>"
    assert canonicalize_on_sphere(parse_forest("<1 u 1<1>>")).code == "<1 u 1<1>>"
    assert canonicalize_on_sphere(chain(3)).code == "<1 u 1<1>>"


def brute_min_nesting(f: OvalForest) -> int:
    g = region_graph(f)
    # rooted at r, an oval nests inside (distance - 1) others
    return min(sum(d - 1 for d in nx.single_source_shortest_path_length(g, r).values() if d)
               for r in g.nodes)


@pytest.mark.parametrize("n", range(7))
def test_canonical_form_minimizes_nesting(n):
    for f in forests_of_size(n):
        c = canonicalize_on_sphere(f)
        assert nesting_pairs(c) == brute_min_nesting(f)
        ties = [r.code for r in sphere_rootings(f) if nesting_pairs(r) == nesting_pairs(c)]
        assert c.code == min(ties)


@pytest.mark.parametrize("n", range(7))
def test_canonical_form_is_unrooted_isomorphism_class(n):
    forests = forests_of_size(n)
    graphs = [region_graph(f) for f in forests]
    canon = [canonicalize_on_sphere(f) for f in forests]
    for i, j in itertools.combinations(range(len(forests)), 2):
        same = nx.is_isomorphic(graphs[i], graphs[j])
        assert same == (canon[i] == canon[j])


@pytest.mark.parametrize("n,count", list(enumerate([1, 1, 1, 2, 3, 6, 11])))
def test_sphere_class_counts_are_free_trees(n, count):
    assert len(sphere_forests_of_size(n)) == count


def test_canonicalization_idempotent():
    for n in range(7):
        for f in forests_of_size(n):
            c = canonicalize_on_sphere(f)
            assert canonicalize_on_sphere(c) == c
            assert c.oval_count == f.oval_count


# -- pair codes --------------------------------------------------------------------


def test_exceptional_pair_codec():
    p = parse_pair("<1 u 3T2_2, S2_2 u RP2_1>")
    assert p == PairCode(1, orientable_surface(3, 2), 0, ANNULUS_MOBIUS)
    assert p.exceptional
    assert format_pair(p) == "<1 u 3T2_2, S2_2 u RP2_1>"
    assert parse_pair("<1 u 3T2_2, RP2_1 u S2_2>") == p


def test_empty_pair_codec():
    p = parse_pair("<0, 7RP2>")
    assert p == PairCode(0, None, 0, crosscap_surface(7))
    assert format_pair(p) == "<0, 7RP2>"


def test_family_member_codec():
    p = parse_pair("<2 u S2_3, 1 u 7RP2_3>")
    assert p == PairCode(2, sphere(3), 1, crosscap_surface(7, 3))
    assert p.code == "<2 u S2_3, 1 u 7RP2_3>"


def test_zero_disk_prefix_accepted_and_dropped():
    p = parse_pair("<0 u S2_4, 3 u 7RP2_1>")
    assert p.code == "<S2_4, 3 u 7RP2_1>"
    assert parse_pair(p.code) == p


def test_disk_big_folds_into_count():
    assert parse_pair("<S2_1, 8RP2_1>") == PairCode(1, None, 0, crosscap_surface(8, 1))
    assert PairCode(2, sphere(1), 0, None).plus_disks == 3


def test_components():
    p = parse_pair("<1 u 3T2_2, S2_2 u RP2_1>")
    assert len(p.plus_components()) == 2
    assert sorted(c.punctures for c in p.minus_components()) == [1, 2]


@pytest.mark.parametrize("bad", [
    "<1 u T2_2 u S2_2, 3RP2_1>",   # two big parts on the plus side
    "<S2_2 u RP2_1, 3>",            # exceptional shape on the plus side
    "<1, S2_2 u S2_2>",            # two-component minus side other than the exceptional one
    "<1 u 2, 3RP2_1>",             # count after the first item
    "<1, 2, 3>",
    "<1 3RP2_1>",
    "1, 3RP2_1>",
    "<1, 3RP2_1",
    "<-1, 3RP2_1>",
    "<1 u , 3RP2_1>",
    "<1 u Q2, 3RP2_1>",
])
def test_pair_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_pair(bad)


def test_pair_error_offset_points_into_text():
    with pytest.raises(ParseError) as info:
        parse_pair("<1 u Q2, 3RP2_1>")
    assert info.value.pos == 5


def test_negative_disk_count_rejected():
    with pytest.raises(ValueError):
        PairCode(-1, None, 0, None)
