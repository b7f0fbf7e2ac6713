from collections import Counter

import pytest
from hypothesis import given

from hfkbraid.braid import parse_braid
from hfkbraid.diagram import closure_diagram
from hfkbraid.restree import (TreeCapExceeded, TreeConfig, alexander_multiset, det_additivity_audit,
                              determinant_multiset, is_quasi_alternating_annular, is_twisted_unknot_base,
                              leaf_census, tree_to_dict, tree_to_dot, wehrli_tree)

from strategies import GENUS1, MIXED4, SQUARES4, fully_alternating_braids


def tree(text, **kw):
    return wehrli_tree(closure_diagram(parse_braid(text)), TreeConfig(**kw))


def test_mixed4_tree():
    census = leaf_census(tree(MIXED4))
    assert len(census) == 8
    assert alexander_multiset(census) == Counter({
        "T^-2 - 7T^-1 + 13 - 7T + T^2": 1, "-2T^-1 + 5 - 2T": 2, "-T^-1 + 3 - T": 3, "1": 2})
    assert all(r.signature == 0 for r in census)
    assert det_additivity_audit(tree(MIXED4)) == []


def test_squares4_tree():
    census = leaf_census(tree(SQUARES4))
    assert len(census) == 16
    assert determinant_multiset(census) == Counter({1: 8, 3: 5, 7: 2, 5: 1})


def test_genus1_tree():
    census = leaf_census(tree(GENUS1))
    assert len(census) == 5
    assert alexander_multiset(census) == Counter({"1": 4, "-T^-1 + 3 - T": 1})


def test_cap():
    with pytest.raises(TreeCapExceeded):
        tree(MIXED4, max_crossings=5)


def test_no_leaf_invariants():
    root = tree(MIXED4, leaf_invariants=False)
    assert all(l.leaf is None for l in root.leaves())


def test_exports():
    root = tree(GENUS1)
    d = tree_to_dict(root)
    assert d["id"] == "uuuu" and len(d["children"]) == 2
    dot = tree_to_dot(root)
    assert dot.startswith("digraph") and dot.count("->") == 2 * (len(root.leaves()) - 1)


def test_qprime():
    ok, cert = is_quasi_alternating_annular(closure_diagram(parse_braid(MIXED4)))
    assert ok and cert.determinant == 8
    ok, _ = is_quasi_alternating_annular(closure_diagram(parse_braid(SQUARES4)))
    assert not ok


def test_twisted_unknot_base():
    assert is_twisted_unknot_base(closure_diagram(parse_braid("b=3: s1 s2^-1")))
    assert not is_twisted_unknot_base(closure_diagram(parse_braid(GENUS1)))


@given(fully_alternating_braids(max_len=12))
def test_leaf_count_is_determinant(w):
    d = closure_diagram(w)
    root = wehrli_tree(d, TreeConfig(leaf_invariants=False))
    assert len(root.leaves()) == d.determinant()
    assert det_additivity_audit(root) == []


@given(fully_alternating_braids(max_len=12))
def test_leaves_are_twisted_unknots_with_signature_zero(w):
    root = wehrli_tree(closure_diagram(w))
    for r in leaf_census(root):
        assert r.components == 1
        assert r.link_determinant == 1
        assert r.signature == 0
