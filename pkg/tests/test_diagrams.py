import pytest
from hypothesis import given
from hypothesis import strategies as st

from surgerykit.catalog import (
    HOPF,
    TORUS_2_4,
    TREFOIL_LEFT,
    TREFOIL_RIGHT,
    UNKNOT,
    braid_closure,
    random_braid_diagram,
)
from surgerykit.diagrams import (
    LinkDiagram,
    component_count,
    component_edges,
    crossing_signs,
    disjoint_union,
    is_planar,
    linking_number,
    mirror,
    parse_pd,
    reverse,
    self_writhe,
    serialize_pd,
    writhe,
)
from surgerykit.errors import PDError

import random


def seeded_diagrams():
    rng = random.Random(20240)
    return [random_braid_diagram(rng, 8) for _ in range(40)]


# -- parsing --------------------------------------------------------------

def test_parse_hopf_components():
    # hand-traced: under arcs 1->2 and 3->4, over passes close the cycles
    d = parse_pd("X(1,4,2,3) X(3,2,4,1)")
    assert component_count(d) == 2
    assert component_edges(d, 0) == (1, 2)
    assert component_edges(d, 1) == (3, 4)


def test_parse_free_loop():
    d = parse_pd("O")
    assert d.free_loops == 1
    assert len(d.crossings) == 0
    assert component_count(d) == 1


def test_parse_comments_and_whitespace():
    d = parse_pd("# a comment\n X(1,4,2,3)   X(3,2,4,1) # trailing\n O")
    assert len(d.crossings) == 2
    assert d.free_loops == 1


def test_parse_label_count_error():
    with pytest.raises(PDError, match="occurs"):
        parse_pd("X(1,1,2,3)")


def test_parse_orientation_error():
    # labels all occur twice, but edge 1 would need two heads
    with pytest.raises(PDError, match="close up"):
        parse_pd("X(1,2,3,4) X(1,3,2,4)")


def test_parse_syntax_error():
    with pytest.raises(PDError, match="bad PD token"):
        parse_pd("X(1,4,2,3) Y(1)")
    with pytest.raises(PDError, match="positive"):
        parse_pd("X(0,1,1,0)")


def test_single_crossing_kink_is_valid():
    # every stated validation rule holds for this one-crossing curl
    d = parse_pd("X(1,1,2,2)")
    assert component_count(d) == 1
    assert writhe(d) == 1


def test_round_trip():
    for d in (HOPF, TREFOIL_LEFT, TORUS_2_4, parse_pd("X(1,1,2,2) O O")):
        assert parse_pd(serialize_pd(d)) == d


@given(st.integers(min_value=0, max_value=10_000))
def test_round_trip_random(seed):
    d = random_braid_diagram(random.Random(seed), 8)
    assert parse_pd(serialize_pd(d)) == d


# -- component counts ------------------------------------------------------

def test_trefoil_single_component():
    assert component_count(TREFOIL_LEFT) == 1
    assert component_count(TREFOIL_RIGHT) == 1


def test_component_count_additive():
    for a, b in [(HOPF, TREFOIL_LEFT), (UNKNOT, HOPF), (TORUS_2_4, UNKNOT)]:
        assert component_count(disjoint_union(a, b)) == component_count(a) + component_count(b)


# -- writhe and signs -------------------------------------------------------

def test_trefoil_writhe():
    assert writhe(TREFOIL_RIGHT) == 3
    assert writhe(TREFOIL_LEFT) == -3


def test_unknot_writhe():
    assert writhe(UNKNOT) == 0


def test_mirror_negates_writhe():
    for d in (HOPF, TREFOIL_LEFT, TORUS_2_4, parse_pd("X(1,1,2,2)")):
        assert writhe(mirror(d)) == -writhe(d)
        assert component_count(mirror(d)) == component_count(d)


def test_mirror_involution():
    from surgerykit.diagrams import diagram_data

    for d in seeded_diagrams():
        assert writhe(mirror(d)) == -writhe(d)
        data = diagram_data(d)
        one_sided = any(
            all(not j.is_under for j in run) or all(j.is_under for j in run)
            for run in data.junction_runs
        )
        if not one_sided:
            # orientation of a component that never passes under is a
            # convention, not data; elsewhere the mirror is an involution
            assert mirror(mirror(d)) == d


def test_reverse_preserves_signs():
    for d in seeded_diagrams():
        assert crossing_signs(reverse(d)) == crossing_signs(reverse(d))
        assert writhe(reverse(d)) == writhe(d)


def test_self_writhe_splits_writhe():
    for d in seeded_diagrams():
        n = component_count(d)
        total = sum(self_writhe(d, c) for c in range(n))
        cross_terms = sum(
            2 * linking_number(d, i, j) for i in range(n) for j in range(i + 1, n)
        )
        assert total + cross_terms == writhe(d)


# -- linking numbers ---------------------------------------------------------

def test_hopf_linking():
    assert abs(linking_number(HOPF, 0, 1)) == 1


def test_split_linking_zero():
    d = disjoint_union(UNKNOT, UNKNOT)
    assert linking_number(d, 0, 1) == 0


def test_torus_link_linking():
    assert component_count(TORUS_2_4) == 2
    assert abs(linking_number(TORUS_2_4, 0, 1)) == 2


def test_linking_symmetry():
    for d in seeded_diagrams():
        n = component_count(d)
        for i in range(n):
            for j in range(i + 1, n):
                assert linking_number(d, i, j) == linking_number(d, j, i)


def test_linking_errors():
    with pytest.raises(PDError):
        linking_number(HOPF, 0, 0)
    with pytest.raises(PDError):
        linking_number(HOPF, 0, 5)


# -- planarity ----------------------------------------------------------------

def test_braid_closures_planar():
    for d in seeded_diagrams():
        assert is_planar(d)


def test_virtual_code_detected():
    # a combinatorially consistent code that cannot be drawn flat
    d = LinkDiagram(((1, 4, 2, 3), (2, 3, 4, 1)))
    assert not is_planar(d)


def test_builtin_fixtures():
    assert component_count(HOPF) == 2
    assert component_count(braid_closure([1, 1], 2)) == 2
    assert braid_closure([], 3).free_loops == 3
