import pytest
from hypothesis import given, strategies as st

from hfkbraid.braid import BraidWord, parse_braid
from hfkbraid.floer import (GenusBoundError, NotStaircase, SignPatternError, StaircaseForm, StaircaseWord,
                            braid_loop_multiplicities, eftekhary_check,
                            eftekhary_check_braid, find_staircase_equivalent, hfk_from_torsion,
                            loop_complement_cohomology, staircase_hfk, staircase_parse, torsion_coeffs)
from hfkbraid.foxcalc import refined_torsion
from hfkbraid.laurent import LaurentPoly

from strategies import COUNTER, GENUS1, MIXED4, SQUARES4, cell_complex_h0, staircase_exponents


def test_genus1_table():
    w = parse_braid(GENUS1)
    tab = hfk_from_torsion(refined_torsion(w), w.genus)
    assert tab.column_shapes() == sorted([((-1, 1), (0, 3), (1, 1))] + [((0, 1),)] * 4)
    assert tab.top_rank() == 1
    assert tab.euler_characteristic() == LaurentPoly({-1: -1, 0: 7, 1: -1})
    assert set(tab.tau.values()) == {0}


@pytest.mark.parametrize("m,n", [(-1, 1), (-2, 3), (-5, 5), (-3, 4)])
def test_twist_family_table(m, n):
    w = BraidWord(3, ((1, 1),) * n + ((2, -1),) * -m)
    tab = hfk_from_torsion(refined_torsion(w), 1)
    level = {j: sum(r for (_, jj), r in tab.ranks.items() if jj == j) for j in (-1, 0, 1)}
    assert level == {1: 1, 0: 2 - m * n, -1: 1}
    assert tab.grading(0) == 0


def test_table_errors():
    tor = refined_torsion(parse_braid("b=3: s1 s2"))
    with pytest.raises(SignPatternError):
        hfk_from_torsion(tor, 1)
    with pytest.raises(GenusBoundError):
        hfk_from_torsion(refined_torsion(parse_braid(MIXED4)), 1)


def test_torsion_coeffs():
    tc = torsion_coeffs(LaurentPoly({-1: -1, 0: 7, 1: -1}))
    assert tc.t == {0: -1, 1: 0}
    tc = torsion_coeffs(LaurentPoly({-2: 1, -1: -14, 0: 34, 1: -14, 2: 1}))
    assert tc.t[1] == 1 and tc.b[1] == 1
    assert tc.t[2] == 0
    with pytest.raises(ValueError):
        torsion_coeffs(LaurentPoly({0: 1, 1: 1}))


def test_squares4_staircase():
    f = staircase_parse(parse_braid(SQUARES4))
    assert (f.m, f.s, f.T_total) == (0, 1, 9)
    hf = staircase_hfk(f)
    assert hf.top == {0: 1}
    assert hf.next_level == {-1: 1, 0: 9}
    rep = eftekhary_check(f)
    assert rep.hf_plus_total == 10 and rep.cohomology.total == 10 and rep.agrees
    assert (rep.cohomology.h0, rep.cohomology.h1) == (10, 0)


def test_unit_exponents():
    f = staircase_parse(parse_braid("b=7: s1 s2 s3 s4"))
    assert (f.m, f.s, f.T_total) == (1, 1, 0)
    rep = eftekhary_check(f)
    assert rep.cohomology.h0 == 1 and rep.cohomology.h1 == 2 * f.m + f.s - 1


def test_counterexample_mismatch():
    w = parse_braid(COUNTER)
    with pytest.raises(NotStaircase) as e:
        staircase_parse(w)
    assert e.value.equivalent == parse_braid("b=7: s1 s2 s3 s4 s5 s6^2")
    rep = eftekhary_check_braid(w)
    assert rep.hf_plus_total == 2
    assert rep.cohomology.total == 3
    assert not rep.agrees


def test_staircase_rejections():
    with pytest.raises(NotStaircase):
        staircase_parse(parse_braid("b=5: s1 s2 s3"))  # odd run
    with pytest.raises(NotStaircase):
        staircase_parse(parse_braid("b=5: s1 s2^-1 s3 s4"))


def test_find_equivalent_fixed_point():
    w = parse_braid(SQUARES4)
    assert find_staircase_equivalent(w) == BraidWord(5, tuple(
        (i, 1) for i in (1, 1, 2, 2, 3, 3, 4, 4)))


def test_loop_cohomology_small_cases():
    assert loop_complement_cohomology([0, 0]).total == 3  # torus: H0 + H1 = 1 + 2
    c = loop_complement_cohomology([1, 1])
    assert (c.h0, c.h1) == (1, 0)
    c = loop_complement_cohomology([2, 0, 0, 0])  # two annuli cut off one piece
    assert c.h0 == 2
    assert loop_complement_cohomology(braid_loop_multiplicities(parse_braid(COUNTER))).h0 == 3


@given(staircase_exponents())
def test_chi_cross_check(data):
    b, words = data
    f = StaircaseForm(b, tuple(StaircaseWord(s, e) for s, e in words))
    n = f.loop_multiplicities()
    c = loop_complement_cohomology(n)
    g = len(n) // 2
    assert c.h0 - c.h1 == 2 - 2 * g - c.chi_curves
    assert c.chi_curves == -sum(x * y for x, y in zip(n, n[1:]))


@given(staircase_exponents())
def test_hf_plus_equals_cohomology(data):
    b, words = data
    f = StaircaseForm(b, tuple(StaircaseWord(s, e) for s, e in words))
    rep = eftekhary_check(f)
    assert rep.agrees
    assert staircase_parse(rep.braid) == f


multiplicities = st.integers(1, 3).flatmap(lambda g: st.lists(st.integers(0, 4), min_size=2 * g, max_size=2 * g))


@given(multiplicities)
def test_loop_cohomology_matches_cell_model(n):
    c = loop_complement_cohomology(n)
    assert c.h0 == cell_complex_h0(n)
    g = len(n) // 2
    if any(n):
        # F minus a nonempty graph has no H2
        assert c.h1 == c.h0 - (2 - 2 * g) + c.chi_curves
    else:
        assert (c.h0, c.h1) == (1, 2 * g)
