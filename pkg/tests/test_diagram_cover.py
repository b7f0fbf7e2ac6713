import pytest
from hypothesis import assume, given, strategies as st

from hfkbraid.braid import BraidWord, parse_braid
from hfkbraid.cover import (knot_alexander, lift_alexander, lift_alexander_raw, lift_invariants,
                            page_presentation, surgery_seifert_matrix)
from hfkbraid.diagram import CAPCUP, DisconnectedDiagram, brute_force_spanning_trees, closure_diagram
from hfkbraid.freegroup import abelianize, monodromy_of_braid
from hfkbraid.intlinalg import NotRationalHomologySphere, alexander_from_monodromy, det_int
from hfkbraid.laurent import LaurentPoly

from strategies import GENUS1, MIXED4, SQUARES4, fully_alternating_braids, knot_braids

TREFOIL = LaurentPoly({-1: 1, 0: -1, 1: 1})
FIG8 = LaurentPoly({-1: -1, 0: 3, 1: -1})


def D(text):
    return closure_diagram(parse_braid(text))


@pytest.mark.parametrize("text,det", [("b=2: s1^3", 3), (GENUS1, 5), ("b=3: s1^2 s2^-3", 6), (MIXED4, 8), (SQUARES4, 16)])
def test_determinants(text, det):
    assert D(text).determinant() == det


def test_torus_signatures():
    for n in range(1, 8):
        assert D(f"b=2: s1^{n}").signature() == -(n - 1)
        assert D(f"b=2: s1^{-n}").signature() == n - 1


def test_figure_eight():
    d = D(GENUS1)
    assert d.num_components() == 1
    assert d.is_alternating()
    assert d.signature() == 0
    assert knot_alexander(d) == FIG8


def test_knot_alexander_trefoil():
    assert knot_alexander(D("b=2: s1^3")) == TREFOIL
    assert knot_alexander(D("b=3: s1 s2")) == LaurentPoly.const(1)


def test_resolution_semantics():
    d = D("b=3: s1 s2^-1")
    assert d.resolve(0, 0).letters == ((2, -1),)
    assert d.resolve(0, 1).letters == ((1, CAPCUP), (2, -1))


def test_disconnected():
    d = D("b=3: s1")
    assert not d.is_connected()
    with pytest.raises(DisconnectedDiagram):
        d.determinant()


def test_euler_characteristic():
    for t in (GENUS1, MIXED4, SQUARES4):
        assert D(t).euler_characteristic() == 2


small_braids = st.integers(1, 3).flatmap(lambda g: st.lists(
    st.tuples(st.integers(1, 2 * g), st.sampled_from([1, -1])), min_size=1, max_size=8).map(
    lambda ls: BraidWord(2 * g + 1, tuple(ls))))


@given(fully_alternating_braids(max_len=9))
def test_alternating_braids_give_alternating_diagrams(w):
    d = closure_diagram(w)
    assert d.is_alternating()
    t = d.tait_graph()
    assert t.spanning_trees() == d.determinant()


@given(fully_alternating_braids(strands=(3, 5), max_len=7))
def test_kirchhoff_vs_brute_force(w):
    t = closure_diagram(w).tait_graph()
    assume(len(t.edges) <= 9)
    assert t.spanning_trees() == brute_force_spanning_trees(t)


@given(knot_braids())
def test_mirror_negates_signature(w):
    d = closure_diagram(w)
    assert d.mirror().signature() == -d.signature()
    assert d.mirror().determinant() == d.determinant()


@given(knot_braids())
def test_goeritz_determinant_matches_alexander(w):
    d = closure_diagram(w)
    assert d.is_connected() and d.num_components() == 1
    assert knot_alexander(d).evaluate(-1) in (d.determinant(), -d.determinant())
    assert knot_alexander(d).is_symmetric()


@given(small_braids)
def test_three_routes_to_the_lift(w):
    """Monodromy, page presentation and surgered Seifert form agree; all
    three notice an infinite H1."""
    d = closure_diagram(w)
    a = abelianize(monodromy_of_braid(w))
    h1 = abs(det_int([[int(i == j) - a[i][j] for j in range(len(a))] for i in range(len(a))]))
    if h1 == 0:
        with pytest.raises(NotRationalHomologySphere):
            lift_alexander(d)
        with pytest.raises(NotRationalHomologySphere):
            lift_invariants(d)
        return
    mono = alexander_from_monodromy(a)
    assert lift_alexander(d) == mono
    inv = lift_invariants(d)
    assert inv.alexander == mono
    assert inv.h1_order == h1
    assert inv.determinant == abs(mono.evaluate(-1))


def test_lift_of_unknot_closures():
    # the closure of s1 s2 is an unknot; the lifted axis is the trefoil
    inv = lift_invariants(D("b=3: s1 s2"))
    assert inv.alexander == TREFOIL
    assert abs(inv.signature) == 2
    assert lift_invariants(D("b=3: s1 s2^-1")).signature == 0


def test_cap_cup_diagrams():
    d = D(MIXED4).resolve(1, 1)
    assert any(k == CAPCUP for _, k in d.letters)
    p = page_presentation(d)
    assert p.num_caps == 1
    assert lift_alexander(d) == lift_invariants(d).alexander
    assert not lift_alexander_raw(d).is_zero()


def test_surgery_matrix_integrality():
    s = surgery_seifert_matrix(D(MIXED4))
    assert s.h1_order == 8
