"""The lifted axis in the branched double cover of an annular diagram.

Two independent routes:

* ``page_presentation``: pi_1 of the complement of (link + axis), read off
  page by page (Artin moves at crossings, a relation and a fresh generator
  at each cap-cup). Fox calculus with meridians of the link sent to -1 and
  the axis meridian to T gives the Alexander polynomial of the lift; with
  the axis filled in and meridians sent to T^(+-1) it gives the Alexander
  polynomial of the link itself (knots only).
* ``surgery_seifert_matrix``: the diagram is the closure of
  (sigma_1..sigma_2g) followed by the surgery letters; upstairs this is
  surgery on page-parallel copies of the chain curves in the fibre of
  T(2, 2g+1). Pushing the Seifert form of that fibre through the surgery
  gives a Seifert matrix of the lift, hence its signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import CAPCUP, AnnularDiagram
from .freegroup import inverse, reduce
from .intlinalg import NotRationalHomologySphere, bareiss_det, det_int, symmetric_signature, symmetrize
from .laurent import LaurentPoly

ONE = LaurentPoly.const(1)


@dataclass(frozen=True)
class PagePresentation:
    strands: int
    num_caps: int
    relations: tuple[tuple[int, ...], ...]  # caps first, then one closure relation per position
    t: int  # generator id of the axis meridian

    @property
    def rank(self) -> int:
        return self.strands + 1 + self.num_caps

    def generators(self) -> list[int]:
        return list(range(1, self.rank + 1))


def page_presentation(d: AnnularDiagram) -> PagePresentation:
    b = d.strands
    t = b + 1
    cur: list[tuple[int, ...]] = [(p,) for p in range(1, b + 1)]
    caps: list[tuple[int, ...]] = []
    nxt = t + 1
    for i, k in d.letters:
        a, c = cur[i - 1], cur[i]
        if k == 1:
            cur[i - 1], cur[i] = reduce(a + c + inverse(a)), a
        elif k == -1:
            cur[i - 1], cur[i] = c, reduce(inverse(c) + a + c)
        else:
            caps.append(reduce(a + c))
            cur[i - 1], cur[i] = (nxt,), (-nxt,)
            nxt += 1
    closing = [reduce((t, p, -t) + inverse(cur[p - 1])) for p in range(1, b + 1)]
    return PagePresentation(b, len(caps), tuple(caps + closing), t)


def _fox_row(word, gens, image):
    """Fox derivatives of ``word`` along ``gens`` pushed through the abelian
    character ``image`` (generator id -> (sign, T-exponent))."""
    acc = {g: {} for g in gens}
    sgn, ex = 1, 0
    for x in word:
        g = abs(x)
        s, e = image[g]
        if x > 0:
            if g in acc:
                acc[g][ex] = acc[g].get(ex, 0) + sgn
            sgn, ex = sgn * s, ex + e
        else:
            sgn, ex = sgn * s, ex - e
            if g in acc:
                acc[g][ex] = acc[g].get(ex, 0) - sgn
    return [LaurentPoly(acc[g]) for g in gens]


def fox_matrix(p: PagePresentation, image, drop_gen: int | None = None, rows=None):
    gens = [g for g in p.generators() if g != drop_gen]
    rels = p.relations if rows is None else [p.relations[r] for r in rows]
    return [_fox_row(r, gens, image) for r in rels]


def lift_alexander_raw(d: AnnularDiagram) -> LaurentPoly:
    """Fox minor for the lifted axis, before normalization: equals
    |H_1(cover)| * Delta up to a unit, or 0 if b_1(cover) > 0."""
    p = page_presentation(d)
    image = {g: (-1, 0) for g in p.generators()}
    image[p.t] = (1, 1)
    m = fox_matrix(p, image, drop_gen=p.t)
    full = bareiss_det(m, ONE)
    return full.exact_div(LaurentPoly({1: 1, 0: -1}))


def lift_alexander(d: AnnularDiagram, h1_order: int | None = None) -> LaurentPoly:
    """Symmetrized Alexander polynomial of the lifted axis with
    Delta(1) = |H_1(cover)| (taken from the raw minor if not supplied)."""
    raw = lift_alexander_raw(d)
    v = abs(raw.evaluate(1)) if not raw.is_zero() else 0
    if v == 0:
        raise NotRationalHomologySphere("branched double cover has positive first Betti number")
    return symmetrize(raw, v if h1_order is None else h1_order)


def strand_directions(d: AnnularDiagram):
    """+1/-1 per position at boundary 0 and per cap-cup (the direction of
    the strand leaving the cup at the lower position), from the traversal
    orientation."""
    b = d.strands
    if not d.letters:
        return [1] * b, []
    _, direction = d._traversal
    base = [0] * b
    for a_i, (x, y) in enumerate(d._arcs[0]):
        dr = direction[(0, a_i)]
        if x < b:
            base[x] = dr
        if y < b and y != x:
            base[y] = -dr  # second end of a cap at boundary 0
    caps = []
    for j, (i, k) in enumerate(d.letters):
        if k == CAPCUP:
            cup = len(d._arcs[j]) - 1
            caps.append(-direction[(j, cup)])
    return base, caps


def knot_alexander(d: AnnularDiagram) -> LaurentPoly:
    """Alexander polynomial of a one-component diagram (axis forgotten),
    normalized symmetric with Delta(1) = 1."""
    if d.num_components() != 1:
        raise ValueError("knot_alexander needs a one-component diagram")
    b = d.strands
    p = page_presentation(d)
    base, caps = strand_directions(d)
    image = {q: (1, base[q - 1]) for q in range(1, b + 1)}
    image[p.t] = (1, 0)
    for n, e in enumerate(caps):
        image[p.t + 1 + n] = (1, e)
    # fill the axis back in (t = 1); one closing relation is redundant
    rels = [tuple(x for x in r if abs(x) != p.t) for r in p.relations]
    rels = rels[:p.num_caps] + rels[p.num_caps + 1:]
    gens = [g for g in p.generators() if g not in (p.t, 1)]
    m = [_fox_row(reduce(r), gens, image) for r in rels]
    raw = bareiss_det(m, ONE)
    return symmetrize(raw, 1) if raw.evaluate(1) in (1, -1) else _bad(raw)


def _bad(raw):
    raise ArithmeticError(f"Alexander minor {raw} does not evaluate to +-1 at T=1")


wirtinger_alexander = knot_alexander


# -- surgery route ------------------------------------------------------

def base_seifert_matrix(g: int) -> list[list[int]]:
    """Seifert form of the fibre of T(2, 2g+1) on the chain curves."""
    n = 2 * g
    v = [[0] * n for _ in range(n)]
    for i in range(n):
        v[i][i] = -1
        if i + 1 < n:
            v[i][i + 1] = 1
    return v


@dataclass(frozen=True)
class SurgeryData:
    curves: tuple[tuple[int, int], ...]  # (chain index, page framing) in page order
    linking: tuple[tuple[int, ...], ...]
    seifert: tuple[tuple[Fraction, ...], ...]

    @property
    def h1_order(self) -> int:
        return abs(det_int([list(r) for r in self.linking])) if self.linking else 1


def surgery_curves(d: AnnularDiagram):
    """Surgery letters after cancelling the base monodromy of T(2, b)."""
    n = d.strands - 1
    cancel = [(i, -1) for i in range(n, 0, -1)]
    out = []
    for i, k in cancel + list(d.letters):
        out.append((i, -k if k else 0))
    return out


def surgery_seifert_matrix(d: AnnularDiagram) -> SurgeryData:
    if d.strands % 2 == 0:
        raise ValueError("odd strand count required")
    g = (d.strands - 1) // 2
    v0 = base_seifert_matrix(g)
    curves = surgery_curves(d)
    k = len(curves)
    lam = [[0] * k for _ in range(k)]
    for a, (ia, fa) in enumerate(curves):
        lam[a][a] = v0[ia - 1][ia - 1] + fa
        for c in range(a + 1, k):
            ic = curves[c][0]
            lam[a][c] = lam[c][a] = v0[ia - 1][ic - 1]
    n = 2 * g
    if k == 0:
        vy = [[Fraction(x) for x in r] for r in v0]
        return SurgeryData((), (), tuple(tuple(r) for r in vy))
    # (V0 C)[x][a] = V0[x][c_a]; right = Lambda^-1 (V0 C)^T
    v0c = [[v0[x][curves[a][0] - 1] for a in range(k)] for x in range(n)]
    right = _rational_solve(lam, [[v0c[y][a] for y in range(n)] for a in range(k)])
    vy = [[v0[x][y] - sum((e * right[a][y] for a, e in enumerate(v0c[x]) if e), Fraction(0))
           for y in range(n)] for x in range(n)]
    return SurgeryData(tuple(curves), tuple(tuple(r) for r in lam), tuple(tuple(r) for r in vy))


def _rational_solve(m, rhs):
    """X with m X = rhs, by Gauss-Jordan over Q (sparse rows stay cheap)."""
    n = len(m)
    a = [[Fraction(x) for x in r] + [Fraction(x) for x in b] for r, b in zip(m, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise NotRationalHomologySphere("surgery linking matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        if p != 1:
            a[c] = [x / p for x in a[c]]
        nz = [(j, x) for j, x in enumerate(a[c]) if x]
        for r in range(n):
            f = a[r][c]
            if r != c and f:
                row = a[r]
                for j, x in nz:
                    row[j] -= f * x
    return [r[n:] for r in a]


@dataclass(frozen=True)
class LiftInvariants:
    alexander: LaurentPoly
    determinant: int
    signature: int
    h1_order: int


def lift_invariants(d: AnnularDiagram) -> LiftInvariants:
    """Alexander polynomial, determinant and signature of the lifted axis
    from the surgered Seifert form."""
    s = surgery_seifert_matrix(d)
    h = s.h1_order
    v = [list(r) for r in s.seifert]
    n = len(v)
    if n == 0:
        return LiftInvariants(ONE, 1, 0, h)
    sym = [[v[i][j] + v[j][i] for j in range(n)] for i in range(n)]
    sig = symmetric_signature(sym)
    w = [[int(x * h) for x in r] for r in v]  # integral: h * Lambda^-1 is
    if any(Fraction(wx) != x * h for r, rr in zip(w, v) for wx, x in zip(r, rr)):
        raise ArithmeticError("scaled Seifert matrix is not integral")
    mat = [[LaurentPoly({0: w[i][j], 1: -w[j][i]}) for j in range(n)] for i in range(n)]
    raw = bareiss_det(mat, ONE)
    if h != 1:
        raw = raw.exact_div(LaurentPoly.const(h ** (n - 1)))
    if raw.is_zero():
        raise NotRationalHomologySphere("degenerate Seifert form")
    alex = symmetrize(raw, abs(raw.evaluate(1)))
    return LiftInvariants(alex, abs(alex.evaluate(-1)), sig, h)
