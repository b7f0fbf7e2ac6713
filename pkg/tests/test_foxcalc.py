import pytest
from hypothesis import given, strategies as st

from hfkbraid.braid import BraidWord, parse_braid
from hfkbraid.foxcalc import (TorsionNormalizationError, fox_derivative, fox_pushforward,
                              format_group_ring, fundamental_identity_defect, h1_of_monodromy, push_forward,
                              refined_torsion, refined_torsion_of_monodromy)
from hfkbraid.freegroup import abelianize, monodromy_of_braid
from hfkbraid.intlinalg import AbelianGroup, alexander_from_monodromy
from hfkbraid.laurent import LaurentPoly

from strategies import (GENUS1, MIXED4, P41, P61, P812, mixed4_display, mixed4_printed_monodromy, fully_alternating_braids,
                        group_ring, display_group, unit_equivalent)



@st.composite
def word_and_group(draw):
    rank = draw(st.integers(1, 3))
    invs = tuple(draw(st.lists(st.integers(2, 4), min_size=1, max_size=2)))
    imgs = tuple(tuple(draw(st.integers(0, d - 1)) for d in invs) for _ in range(rank))
    gens = [g for x in range(1, rank + 2) for g in (x, -x)]
    w = tuple(draw(st.lists(st.sampled_from(gens), max_size=12)))
    return w, rank, AbelianGroup(invs, 0, imgs)


@given(word_and_group())
def test_fundamental_identity(data):
    w, rank, group = data
    assert fundamental_identity_defect(w, rank, group).is_zero()


@given(word_and_group())
def test_pushforward_agrees_with_prefix_expansion(data):
    w, rank, group = data
    for x in range(1, rank + 2):
        assert fox_pushforward(w, x, group, rank) == push_forward(fox_derivative(w, x), group, rank)


def test_fox_derivative_basic():
    # d(x y x^-1)/dx = 1 - x y x^-1
    assert fox_derivative((1, 2, -1), 1) == [(1, ()), (-1, (1, 2, -1))]


def test_genus1_torsion_display():
    tor = refined_torsion(parse_braid(GENUS1))
    g = tor.group
    assert g.invariants == (5,)
    e = g.generator_images[0]  # gamma_1 -> e
    # -T - Te + (1 - 3T + T^2) e^2 - Te^3 - Te^4
    printed = group_ring(g, [((0,), {1: -1}), (e, {1: -1}), (g.scale(e, 2), {0: 1, 1: -3, 2: 1}),
                        (g.scale(e, 3), {1: -1}), (g.scale(e, 4), {1: -1})])
    assert unit_equivalent(tor.element, printed)
    assert sorted(map(str, tor.polys().values())) == sorted([str(P41)] + ["1"] * 4)


@pytest.mark.parametrize("m", range(-5, 0))
@pytest.mark.parametrize("n", range(1, 6))
def test_twist_family_closed_form(m, n):
    w = BraidWord(3, ((1, 1),) * n + ((2, -1),) * -m)
    f = monodromy_of_braid(w)
    # the displayed labels: gamma_1 -> e1 (order n), gamma_2 -> e2 (order |m|)
    G = AbelianGroup((n, -m), 0, ((1 % n, 0), (0, 1 % -m)))
    tor = refined_torsion_of_monodromy(f, True, G)
    terms = [((a, b), {0: 1}) for a in range(n) for b in range(-m)]
    terms.append(((0, 0), {-1: -1, 0: 2, 1: -1}))
    assert unit_equivalent(tor.element, group_ring(G, terms))
    assert alexander_from_monodromy(abelianize(f)) == LaurentPoly({-1: -1, 0: 2 - m * n, 1: -1})


def test_mixed4_printed_images_reproduce_display():
    f = mixed4_printed_monodromy()
    assert abelianize(f) == [[1, 2, -2, -2], [2, 5, -4, -4], [0, -2, 4, 3], [0, -2, 5, 4]]
    G = display_group()
    tor = refined_torsion_of_monodromy(f, True, G)
    assert unit_equivalent(tor.element, mixed4_display(G))


def test_mixed4_braid_torsion_up_to_relabeling():
    f = monodromy_of_braid(parse_braid(MIXED4))
    G = display_group()
    tor = refined_torsion_of_monodromy(f, True, G)
    # H1 automorphism e1 -> e2 e3, e2 -> e1, e3 -> e3 identifies our labels with the display
    phi = {(1, 0, 0): (0, 1, 1), (0, 1, 0): (1, 0, 0), (0, 0, 1): (0, 0, 1)}

    def image(h):
        out = (0, 0, 0)
        for basis, target in phi.items():
            if h[basis.index(1)]:
                out = G.add(out, target)
        return out

    display = mixed4_display(G)
    moved = {image(h): p for h, p in display.coefficient_polys().items()}
    assert all(tor.polys()[h] == p for h, p in moved.items())
    assert h1_of_monodromy(f).invariants == (2, 2, 2)


def test_mixed4_specializes_to_alexander():
    tor = refined_torsion(parse_braid(MIXED4))
    assert tor.element.specialize() == LaurentPoly({-2: 1, -1: -14, 0: 34, 1: -14, 2: 1})
    assert sorted(str(p) for p in tor.polys().values()) == sorted(
        [str(P812)] + [str(P61)] * 2 + [str(P41)] * 3 + ["1"] * 2)


def test_sign_pattern_enforced():
    with pytest.raises(TorsionNormalizationError):
        refined_torsion(parse_braid("b=3: s1 s2"), require_sign_pattern=True)


def test_format_group_ring():
    tor = refined_torsion(parse_braid(GENUS1))
    assert "-T^-1 + 3 - T" in format_group_ring(tor.element)


@given(fully_alternating_braids())
def test_alexander_symmetric_and_h1(w):
    f = monodromy_of_braid(w)
    delta = alexander_from_monodromy(abelianize(f))
    assert delta.is_symmetric()
    assert delta.evaluate(1) == h1_of_monodromy(f).order


@given(fully_alternating_braids())
def test_torsion_specialization_and_sign_pattern(w):
    tor = refined_torsion(w)
    delta = alexander_from_monodromy(abelianize(monodromy_of_braid(w)))
    assert tor.element.specialize() == delta
    for p in tor.polys().values():
        assert p.is_symmetric()
        assert all(a * (-1) ** (j % 2) > 0 for j, a in p.coeffs.items())
