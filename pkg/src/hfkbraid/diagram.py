"""Annular closure diagrams and their checkerboard combinatorics.

A diagram is a cyclic word of letters on ``b`` strand positions. A letter is
``(i, k)`` with ``k = +1/-1`` for a crossing sigma_i^k and ``k = 0`` for a
cap-cup pair joining positions i, i+1 (the 1-resolution of a crossing).
Letter j sits between level boundary j (below) and j+1 (above); boundary
N is boundary 0. Position 1 is next to the axis, gap 0 is the disc around
the axis and gap b is the unbounded face.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .braid import BraidWord
from .intlinalg import det_int, symmetric_signature

CAPCUP = 0


class DisconnectedDiagram(ValueError):
    pass


class _UF:
    def __init__(self, n: int):
        self.p = list(range(n))

    def find(self, x: int) -> int:
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a: int, b: int) -> None:
        self.p[self.find(a)] = self.find(b)

    def classes(self, items) -> int:
        return len({self.find(x) for x in items})


@dataclass(frozen=True)
class Crossing:
    level: int
    index: int
    sign: int      # letter exponent: sigma_i^sign (unoriented crossing type)
    oriented_sign: int
    parallel: bool  # both strands run the same way around the axis


@dataclass(frozen=True)
class DiagramInvariants:
    determinant: int
    signature: int
    black_regions: int
    positive_crossings: int


@dataclass(frozen=True)
class TaitGraph:
    vertices: int
    edges: tuple[tuple[int, int, int], ...]  # (u, v, crossing sign)
    black: bool = True

    def spanning_trees(self) -> int:
        """Kirchhoff count (loops ignored, multi-edges counted)."""
        n = self.vertices
        if n <= 1:
            return 1
        lap = [[0] * n for _ in range(n)]
        for u, v, _ in self.edges:
            if u != v:
                lap[u][u] += 1
                lap[v][v] += 1
                lap[u][v] -= 1
                lap[v][u] -= 1
        return det_int([r[1:] for r in lap[1:]])

    def is_connected(self) -> bool:
        uf = _UF(max(self.vertices, 1))
        for u, v, _ in self.edges:
            uf.union(u, v)
        return uf.classes(range(self.vertices)) <= 1


@dataclass(frozen=True)
class AnnularDiagram:
    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        b = self.strands
        if b < 1:
            raise ValueError("strand count must be positive")
        for i, k in self.letters:
            if not 1 <= i <= b - 1 or k not in (-1, 0, 1):
                raise ValueError(f"bad letter {(i, k)} for {b} strands")

    @classmethod
    def from_braid(cls, w: BraidWord) -> AnnularDiagram:
        return cls(w.strands, tuple(w.letters))

    def __len__(self):
        return len(self.letters)

    @property
    def num_crossings(self) -> int:
        return sum(1 for _, k in self.letters if k)

    def resolve(self, level: int, r: int) -> AnnularDiagram:
        """0 drops the crossing (oriented smoothing of a braid crossing),
        1 replaces it with a cap-cup pair."""
        i, k = self.letters[level]
        if k == CAPCUP:
            raise ValueError(f"letter {level} is not a crossing")
        if r not in (0, 1):
            raise ValueError("resolution must be 0 or 1")
        rest = list(self.letters)
        if r == 0:
            del rest[level]
        else:
            rest[level] = (i, CAPCUP)
        return AnnularDiagram(self.strands, tuple(rest))

    def mirror(self) -> AnnularDiagram:
        return AnnularDiagram(self.strands, tuple((i, -k) for i, k in self.letters))

    # -- strands ---------------------------------------------------------
    def _pt(self, j: int, p: int) -> int:
        n = len(self.letters)
        return (j % n) * self.strands + (p - 1)

    @cached_property
    def _arcs(self):
        """Per letter j: the arcs (point, point) through that layer; the
        last two are the crossing strands or the cap and the cup."""
        out = []
        for j, (i, k) in enumerate(self.letters):
            arcs = []
            for p in range(1, self.strands + 1):
                if p in (i, i + 1):
                    continue
                arcs.append((self._pt(j, p), self._pt(j + 1, p)))
            if k == CAPCUP:
                arcs.append((self._pt(j, i), self._pt(j, i + 1)))
                arcs.append((self._pt(j + 1, i), self._pt(j + 1, i + 1)))
            else:
                arcs.append((self._pt(j, i), self._pt(j + 1, i + 1)))
                arcs.append((self._pt(j, i + 1), self._pt(j + 1, i)))
            out.append(arcs)
        return out

    @cached_property
    def _traversal(self):
        """(component id per point, direction per (letter, arc)) where the
        direction is +1 if the arc is run from its first to second end."""
        n, b = len(self.letters), self.strands
        if n == 0:
            return list(range(b)), {}
        adj: dict[int, list[tuple[int, int, int]]] = {}
        for j, arcs in enumerate(self._arcs):
            for a_i, (x, y) in enumerate(arcs):
                adj.setdefault(x, []).append((y, j, a_i))
                adj.setdefault(y, []).append((x, j, a_i))
        comp = [-1] * (n * b)
        direction: dict[tuple[int, int], int] = {}
        c = 0
        for start in range(n * b):
            if comp[start] >= 0:
                continue
            # leave each new component upward when possible
            cur = start
            nxt = next((e for e in adj[start] if e[1] == start // b and self._arcs[e[1]][e[2]][0] == start),
                       adj[start][0])
            while True:
                comp[cur] = c
                y, j, a_i = nxt
                x0, _ = self._arcs[j][a_i]
                if (j, a_i) in direction:
                    break
                direction[(j, a_i)] = 1 if x0 == cur else -1
                cur = y
                nxt = next((e for e in adj[cur] if (e[1], e[2]) != (j, a_i)), nxt)
            c += 1
        return comp, direction

    def num_components(self) -> int:
        if not self.letters:
            return self.strands
        return len(set(self._traversal[0]))

    def crossings(self) -> list[Crossing]:
        out = []
        _, direction = self._traversal
        for j, (i, k) in enumerate(self.letters):
            if k == CAPCUP:
                continue
            arcs = self._arcs[j]
            d1, d2 = direction[(j, len(arcs) - 2)], direction[(j, len(arcs) - 1)]
            parallel = d1 == d2
            out.append(Crossing(j, i, k, k if parallel else -k, parallel))
        return out

    def is_alternating(self) -> bool:
        """Over and under alternate along every component. For sigma_i^+
        the strand running from position i to i+1 is taken to be over."""
        seq: dict[int, list[bool]] = {}
        comp = self._traversal[0]
        # order crossings along each component by walking it again
        n, b = len(self.letters), self.strands
        if n == 0:
            return True
        adj: dict[int, list[tuple[int, int, int]]] = {}
        for j, arcs in enumerate(self._arcs):
            for a_i, (x, y) in enumerate(arcs):
                adj.setdefault(x, []).append((y, j, a_i))
                adj.setdefault(y, []).append((x, j, a_i))
        seen: set[tuple[int, int]] = set()
        for start in range(n * b):
            if comp[start] in seq:
                continue
            walk: list[bool] = []
            cur = start
            nxt = adj[start][0]
            while (nxt[1], nxt[2]) not in seen:
                y, j, a_i = nxt
                seen.add((j, a_i))
                i, k = self.letters[j]
                arcs = self._arcs[j]
                if k != CAPCUP and a_i >= len(arcs) - 2:
                    rising = a_i == len(arcs) - 2  # from position i to i+1
                    walk.append(rising == (k == 1))
                cur = y
                nxt = next((e for e in adj[cur] if (e[1], e[2]) != (j, a_i)), nxt)
            seq[comp[start]] = walk
            if any(walk[m] == walk[(m + 1) % len(walk)] for m in range(len(walk))):
                return False
        return True

    def pieces(self) -> int:
        """Connected pieces of the projection to the annulus."""
        n, b = len(self.letters), self.strands
        if n == 0:
            return b
        uf = _UF(n * b)
        for j, arcs in enumerate(self._arcs):
            for x, y in arcs:
                uf.union(x, y)
            i, k = self.letters[j]
            if k != CAPCUP:
                uf.union(arcs[-2][0], arcs[-1][0])
        return uf.classes(range(n * b))

    def is_connected(self) -> bool:
        return self.pieces() == 1

    # -- faces -----------------------------------------------------------
    def _gap(self, j: int, g: int) -> int:
        n = len(self.letters)
        return (j % n) * (self.strands + 1) + g

    @cached_property
    def _faces(self):
        """face id per region piece (level, gap)."""
        n, b = len(self.letters), self.strands
        if n == 0:
            return list(range(b + 1))
        uf = _UF(n * (b + 1))
        for j, (i, k) in enumerate(self.letters):
            for g in range(b + 1):
                if g == i:
                    continue
                uf.union(self._gap(j, g), self._gap(j + 1, g))
            if k == CAPCUP:
                lo = [g for g in (i - 1, i + 1)]
                uf.union(self._gap(j, lo[0]), self._gap(j, lo[1]))
        roots = {}
        out = []
        for x in range(n * (b + 1)):
            r = uf.find(x)
            out.append(roots.setdefault(r, len(roots)))
        return out

    def face(self, j: int, g: int) -> int:
        if not self.letters:
            return g
        return self._faces[self._gap(j, g)]

    def num_faces(self) -> int:
        return len(set(self._faces))

    def face_is_white(self, f: int) -> bool:
        """The unbounded face (gap b) is white; colour = gap parity."""
        g = self._faces.index(f) % (self.strands + 1) if self.letters else f
        return g % 2 == self.strands % 2

    def annular_faces(self) -> tuple[int, int]:
        """(face around the axis, unbounded face)."""
        return self.face(0, 0), self.face(0, self.strands)

    def _crossing_faces(self, c: Crossing):
        j, i = c.level, c.index
        below, above = self.face(j, i), self.face(j + 1, i)
        left, right = self.face(j, i - 1), self.face(j, i + 1)
        mid_white = i % 2 == self.strands % 2
        return below, above, left, right, mid_white

    def euler_characteristic(self) -> int:
        v = self.num_crossings
        return v - 2 * v + self.num_faces()

    # -- checkerboard invariants -----------------------------------------
    def tait_graph(self, black: bool = True) -> TaitGraph:
        faces = sorted({f for f in set(self._faces) if self.face_is_white(f) != black})
        idx = {f: n for n, f in enumerate(faces)}
        edges = []
        for c in self.crossings():
            below, above, left, right, mid_white = self._crossing_faces(c)
            if mid_white != black:
                u, v = below, above
            else:
                u, v = left, right
            edges.append((idx[u], idx[v], c.sign))
        return TaitGraph(len(faces), tuple(edges), black)

    def goeritz(self, white_parity: int | None = None):
        """Goeritz matrix on the white regions (full, unreduced) and the
        per-crossing incidence numbers eta. ``white_parity`` overrides the
        colouring (gap parity of the white faces)."""
        b = self.strands
        wp = b % 2 if white_parity is None else white_parity
        faces = sorted({f for f in set(self._faces) if (self._gap_of(f) % 2) == wp})
        idx = {f: n for n, f in enumerate(faces)}
        m = len(faces)
        g = [[0] * m for _ in range(m)]
        etas = []
        for c in self.crossings():
            below, above, left, right, _ = self._crossing_faces(c)
            if c.index % 2 == wp:
                r, s, eta = below, above, -c.sign
            else:
                r, s, eta = left, right, c.sign
            etas.append((c, eta, c.index % 2 == wp))
            if r != s:
                a, bb = idx[r], idx[s]
                g[a][bb] -= eta
                g[bb][a] -= eta
                g[a][a] += eta
                g[bb][bb] += eta
        return g, etas

    def _gap_of(self, f: int) -> int:
        if not self.letters:
            return f
        return self._faces.index(f) % (self.strands + 1)

    def require_connected(self):
        if not self.is_connected():
            raise DisconnectedDiagram(f"diagram has {self.pieces()} pieces")

    def determinant(self) -> int:
        self.require_connected()
        g, _ = self.goeritz()
        if len(g) <= 1:
            return 1
        return abs(det_int([r[1:] for r in g[1:]]))

    def signature(self, white_parity: int | None = None) -> int:
        """Gordon-Litherland: sign(G) minus the eta-sum over type II
        crossings, for the orientation found by traversal."""
        self.require_connected()
        g, etas = self.goeritz(white_parity)
        sig = symmetric_signature([r[1:] for r in g[1:]]) if len(g) > 1 else 0
        mu = 0
        for c, eta, white_is_mid in etas:
            # the oriented smoothing merges above/below for parallel strands,
            # left/right otherwise; type II when it merges the shaded faces
            merges_mid = c.parallel
            if merges_mid != white_is_mid:
                mu += eta
        return sig - mu

    def invariants(self) -> DiagramInvariants:
        black = sum(1 for f in set(self._faces) if not self.face_is_white(f))
        npos = sum(1 for c in self.crossings() if c.oriented_sign > 0)
        return DiagramInvariants(self.determinant(), self.signature(), black, npos)


def closure_diagram(w: BraidWord) -> AnnularDiagram:
    return AnnularDiagram.from_braid(w)


def brute_force_spanning_trees(t: TaitGraph) -> int:
    """Enumerate edge subsets of size V-1 and count the trees."""
    n = t.vertices
    if n <= 1:
        return 1
    count = 0
    for sub in combinations(range(len(t.edges)), n - 1):
        uf = _UF(n)
        ok = True
        for e in sub:
            u, v, _ = t.edges[e]
            if uf.find(u) == uf.find(v):
                ok = False
                break
            uf.union(u, v)
        count += ok
    return count
