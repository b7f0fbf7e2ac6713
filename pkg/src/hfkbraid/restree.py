"""Wehrli resolution trees on annular closures and the Q' certificate."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .cover import LiftInvariants, lift_invariants
from .diagram import CAPCUP, AnnularDiagram, DisconnectedDiagram
from .laurent import LaurentPoly


class TreeCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class TreeConfig:
    max_crossings: int = 24
    leaf_invariants: bool = True


@dataclass
class ResolutionNode:
    base: AnnularDiagram
    states: tuple[int | None, ...]  # per letter of ``base``: None, 0 or 1
    branch: int | None = None  # letter index resolved at this node
    children: list[ResolutionNode] = field(default_factory=list)
    leaf: LiftInvariants | None = None

    @property
    def diagram(self) -> AnnularDiagram:
        return apply_states(self.base, self.states)

    @property
    def node_id(self) -> str:
        return "".join("u" if s is None else str(s) for s, (_, k) in zip(self.states, self.base.letters) if k)

    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> list[ResolutionNode]:
        if self.is_leaf():
            return [self]
        return [x for c in self.children for x in c.leaves()]

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()


def apply_states(base: AnnularDiagram, states) -> AnnularDiagram:
    letters = []
    for (i, k), s in zip(base.letters, states):
        if s is None:
            letters.append((i, k))
        elif s == 1:
            letters.append((i, CAPCUP))
    return AnnularDiagram(base.strands, tuple(letters))


def _with(states, c, r):
    s = list(states)
    s[c] = r
    return tuple(s)


def wehrli_tree(d: AnnularDiagram, config: TreeConfig = TreeConfig()) -> ResolutionNode:
    """Depth-first tree: at each node branch on the first crossing (from the
    current index on) whose two resolutions both keep the projection
    connected; otherwise the node is a leaf."""
    if not d.is_connected():
        raise DisconnectedDiagram("the resolution tree needs a connected diagram")
    if d.num_crossings > config.max_crossings:
        raise TreeCapExceeded(f"{d.num_crossings} crossings exceed the cap of {config.max_crossings}")
    d.require_connected()
    root = ResolutionNode(d, (None,) * len(d.letters))
    stack = [(root, 0)]
    while stack:
        node, start = stack.pop()
        for c in range(start, len(d.letters)):
            if d.letters[c][1] == CAPCUP or node.states[c] is not None:
                continue
            s0, s1 = _with(node.states, c, 0), _with(node.states, c, 1)
            if apply_states(d, s0).is_connected() and apply_states(d, s1).is_connected():
                node.branch = c
                node.children = [ResolutionNode(d, s0), ResolutionNode(d, s1)]
                stack.append((node.children[1], c + 1))
                stack.append((node.children[0], c + 1))
                break
    if config.leaf_invariants:
        for leaf in root.leaves():
            ld = leaf.diagram
            if ld.strands % 2 and ld.num_components() == 1:
                leaf.leaf = lift_invariants(ld)
    return root


@dataclass(frozen=True)
class LeafRecord:
    node_id: str
    components: int
    link_determinant: int
    alexander: LaurentPoly | None
    determinant: int | None
    signature: int | None


def leaf_census(root: ResolutionNode) -> list[LeafRecord]:
    out = []
    for leaf in root.leaves():
        ld = leaf.diagram
        inv = leaf.leaf
        out.append(LeafRecord(leaf.node_id, ld.num_components(), ld.determinant(),
                              inv.alexander if inv else None,
                              inv.determinant if inv else None,
                              inv.signature if inv else None))
    return out


def alexander_multiset(census) -> Counter:
    return Counter(str(r.alexander) for r in census)


def determinant_multiset(census) -> Counter:
    return Counter(r.determinant for r in census)


def det_additivity_audit(root: ResolutionNode) -> list[tuple[str, int, int, int]]:
    """(node, det, det0, det1) for every branch node where additivity fails."""
    bad = []
    for node in root.walk():
        if node.children:
            dd = node.diagram.determinant()
            d0, d1 = (c.diagram.determinant() for c in node.children)
            if dd != d0 + d1:
                bad.append((node.node_id, dd, d0, d1))
    return bad


def is_twisted_unknot_base(d: AnnularDiagram) -> bool:
    """Base case of Q': a connected alternating one-component diagram with
    determinant 1 meeting the disc an odd number of times, none of whose
    crossings can be resolved both ways keeping the projection connected."""
    if d.strands % 2 == 0 or not d.is_connected() or d.num_components() != 1:
        return False
    if not d.is_alternating() or d.determinant() != 1:
        return False
    for c, (_, k) in enumerate(d.letters):
        if k != CAPCUP and d.resolve(c, 0).is_connected() and d.resolve(c, 1).is_connected():
            return False
    return True


@dataclass(frozen=True)
class QCertificate:
    letters: tuple[tuple[int, int], ...]
    crossing: int | None  # None at a base case
    children: tuple[QCertificate, ...] = ()
    determinant: int = 1


def is_quasi_alternating_annular(d: AnnularDiagram, max_crossings: int = 14):
    """(True, certificate) if d is certified in Q' by exhaustive search,
    (False, None) otherwise."""
    if d.num_crossings > max_crossings:
        raise TreeCapExceeded(f"{d.num_crossings} crossings exceed the cap of {max_crossings}")
    b = d.strands

    @lru_cache(maxsize=None)
    def cert(letters):
        dd = AnnularDiagram(b, letters)
        if not dd.is_connected():
            return None
        if is_twisted_unknot_base(dd):
            return QCertificate(letters, None, (), 1)
        det = dd.determinant()
        for c, (_, k) in enumerate(letters):
            if k == CAPCUP:
                continue
            d0, d1 = dd.resolve(c, 0), dd.resolve(c, 1)
            if not (d0.is_connected() and d1.is_connected()):
                continue
            a0, a1 = d0.determinant(), d1.determinant()
            if a0 <= 0 or a1 <= 0 or a0 + a1 != det:
                continue
            c0 = cert(d0.letters)
            if c0 is None:
                continue
            c1 = cert(d1.letters)
            if c1 is None:
                continue
            return QCertificate(letters, c, (c0, c1), det)
        return None

    c = cert(d.letters)
    return c is not None, c


def tree_to_dict(root: ResolutionNode) -> dict:
    def node(n: ResolutionNode):
        out = {"id": n.node_id, "states": [s for s, (_, k) in zip(n.states, n.base.letters) if k]}
        if n.children:
            out["branch"] = n.branch
            out["children"] = [node(c) for c in n.children]
        elif n.leaf is not None:
            out["leaf"] = {"alexander": n.leaf.alexander.to_pairs(), "determinant": n.leaf.determinant,
                           "signature": n.leaf.signature}
        return out
    return node(root)


def tree_to_dot(root: ResolutionNode) -> str:
    lines = ["digraph restree {", "  node [shape=box, fontname=monospace];"]
    for n in root.walk():
        label = n.node_id or "root"
        if n.is_leaf() and n.leaf is not None:
            label += f"\\n{n.leaf.alexander}"
        lines.append(f'  "{n.node_id}" [label="{label}"];')
        for r, c in enumerate(n.children):
            lines.append(f'  "{n.node_id}" -> "{c.node_id}" [label="{r}"];')
    lines.append("}")
    return "\n".join(lines)
