"""Rank tables for knot Floer homology of the lifted axis.

* ``hfk_from_torsion``: ranks read off the coefficients of (T-1) * refined
  torsion, one column per Spin^c label.
* ``torsion_coeffs``: t_s and b_s from a symmetric Alexander polynomial.
* staircase braids: parsing, the predicted groups at the top two levels and
  the HF+ / H*(F - C) comparison, including loop sets that are not in
  staircase form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .braid import BraidWord
from .foxcalc import RefinedTorsion
from .laurent import LaurentPoly


class SignPatternError(ValueError):
    """A coefficient violates the (-1)^j rank-sign pattern."""


class GenusBoundError(ValueError):
    pass


class NotStaircase(ValueError):
    def __init__(self, msg, equivalent: BraidWord | None = None):
        super().__init__(msg)
        self.equivalent = equivalent


@dataclass(frozen=True)
class HFKTable:
    genus: int
    labels: tuple[tuple[int, ...], ...]
    ranks: dict  # (label, j) -> rank, nonzero entries only
    tau: dict = field(default_factory=dict)

    def grading(self, j: int) -> int:
        return j % 2

    def column(self, s) -> dict[int, int]:
        return {j: r for (h, j), r in self.ranks.items() if h == s}

    def top_rank(self) -> int:
        return sum(r for (_, j), r in self.ranks.items() if j == self.genus)

    def total_rank(self) -> int:
        return sum(self.ranks.values())

    def euler_characteristic(self) -> LaurentPoly:
        return sum((LaurentPoly({j: (-1) ** (j % 2) * r}) for (_, j), r in self.ranks.items()), LaurentPoly())

    def column_shapes(self) -> list[tuple[tuple[int, int], ...]]:
        return sorted(tuple(sorted(self.column(s).items())) for s in self.labels)


def hfk_from_torsion(tor: RefinedTorsion, genus: int) -> HFKTable:
    ranks = {}
    for s, p in tor.polys().items():
        for j, a in p.coeffs.items():
            if a * (-1) ** (j % 2) < 0:
                raise SignPatternError(f"coefficient {a} of T^{j} at {s} breaks the (-1)^j pattern")
            if abs(j) > genus:
                raise GenusBoundError(f"T^{j} at {s} lies beyond genus {genus}")
            ranks[(s, j)] = abs(a)
    labels = tuple(sorted(tor.polys()))
    return HFKTable(genus, labels, ranks, {s: 0 for s in labels})


@dataclass(frozen=True)
class TorsionCoeffs:
    a: dict[int, int]
    t: dict[int, int]  # s >= 0
    b: dict[int, int]  # s > 0

    def b_parity(self) -> int:
        return sum(self.b.values()) % 2


def torsion_coeffs(delta: LaurentPoly) -> TorsionCoeffs:
    if not delta.is_symmetric():
        raise ValueError(f"{delta} is not symmetric")
    if delta.evaluate(1) <= 0:
        raise ValueError("Delta(1) must be positive")
    a = delta.coeffs
    top = delta.max_degree()
    t = {s: sum(j * a.get(s + j, 0) for j in range(1, top - s + 1)) for s in range(0, top + 1)}
    b = {s: (-1) ** (s + 1) * t[s] for s in range(1, top + 1)}
    return TorsionCoeffs(a, t, b)


# -- staircase braids -----------------------------------------------------

@dataclass(frozen=True)
class StaircaseWord:
    start: int
    exponents: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.exponents) // 2

    @property
    def T(self) -> int:
        e = self.exponents
        return sum(e[l] * e[l + 1] - 1 for l in range(len(e) - 1))


@dataclass(frozen=True)
class StaircaseForm:
    strands: int
    words: tuple[StaircaseWord, ...]

    @property
    def genus(self) -> int:
        return (self.strands - 1) // 2

    @property
    def m(self) -> int:
        return self.genus - sum(w.k for w in self.words)

    @property
    def s(self) -> int:
        return len(self.words)

    @property
    def T_total(self) -> int:
        return sum(w.T for w in self.words)

    def loop_multiplicities(self) -> list[int]:
        n = [0] * (self.strands - 1)
        for w in self.words:
            for l, e in enumerate(w.exponents):
                n[w.start - 1 + l] = e
        return n


def _runs(letters):
    out: list[list[int]] = []
    for i, s in letters:
        if out and out[-1][0] == i:
            out[-1][1] += s
        else:
            out.append([i, s])
    return out


def _parse_runs(w: BraidWord) -> StaircaseForm:
    if any(s < 0 for _, s in w.letters):
        raise NotStaircase("staircase braids are positive")
    runs = _runs(w.letters)
    if len({i for i, _ in runs}) != len(runs):
        raise NotStaircase("a generator appears in two separate runs")
    words: list[list[tuple[int, int]]] = []
    for i, e in runs:
        if words and i == words[-1][-1][0] + 1:
            words[-1].append((i, e))
        else:
            words.append([(i, e)])
    out = []
    for grp in words:
        if out and grp[0][0] <= out[-1].start + 2 * out[-1].k:
            raise NotStaircase("staircase words must use disjoint, separated index ranges in increasing order")
        if len(grp) % 2:
            raise NotStaircase(f"word starting at s{grp[0][0]} has odd run length {len(grp)}")
        out.append(StaircaseWord(grp[0][0], tuple(e for _, e in grp)))
    return StaircaseForm(w.strands, tuple(out))


def find_staircase_equivalent(w: BraidWord, limit: int = 200_000) -> BraidWord | None:
    """Breadth-first search over positive braid relations and cyclic
    rotation (both preserve the closure) for a staircase word."""
    if any(s < 0 for _, s in w.letters):
        return None
    start = tuple(i for i, _ in w.letters)
    seen = {start}
    queue = deque([start])
    while queue and len(seen) < limit:
        cur = queue.popleft()
        cand = BraidWord(w.strands, tuple((i, 1) for i in cur))
        try:
            _parse_runs(cand)
            return cand
        except NotStaircase:
            pass
        n = len(cur)
        nxts = [cur[1:] + cur[:1]]
        for p in range(n - 1):
            a, b = cur[p], cur[p + 1]
            if abs(a - b) >= 2:
                nxts.append(cur[:p] + (b, a) + cur[p + 2:])
            if p + 2 < n and abs(a - b) == 1 and cur[p + 2] == a:
                nxts.append(cur[:p] + (b, a, b) + cur[p + 3:])
        for x in nxts:
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return None


def staircase_parse(w: BraidWord) -> StaircaseForm:
    w.require_odd()
    try:
        return _parse_runs(w)
    except NotStaircase as e:
        eq = find_staircase_equivalent(w)
        if eq is not None and eq != w:
            raise NotStaircase(f"{w} is not in staircase form ({e}); its closure equals that of "
                               f"the staircase braid {eq}", eq) from None
        raise


@dataclass(frozen=True)
class StaircaseHFK:
    top: dict[int, int]            # grading -> rank at j = g
    next_level: dict[int, int]     # grading -> rank at j = g - 1
    hf_plus: dict[int, int]        # grading -> rank at s_{g-2}

    @property
    def hf_plus_total(self) -> int:
        return sum(self.hf_plus.values())


def _acc(d, k, v):
    if v:
        d[k] = d.get(k, 0) + v


def staircase_hfk(f: StaircaseForm) -> StaircaseHFK:
    m, s, T = f.m, f.s, f.T_total
    top = {m: 1}
    nxt: dict[int, int] = {}
    _acc(nxt, m - 1, 2 * m + s)
    _acc(nxt, m, T)
    hfp: dict[int, int] = {}
    _acc(hfp, m, T + 1)
    _acc(hfp, m - 1, 2 * m + s - 1)
    return StaircaseHFK(top, nxt, hfp)


@dataclass(frozen=True)
class Cohomology:
    h0: int
    h1: int
    chi_curves: int

    @property
    def total(self) -> int:
        return self.h0 + self.h1


def loop_complement_cohomology(n: list[int]) -> Cohomology:
    """Ranks of H^0, H^1 of the closed genus-g surface cut along n_l parallel
    copies of the chain curve gamma_l (l = 1..2g), counted piece by piece,
    with the Euler characteristic check against chi(C) = -(intersections)."""
    if len(n) % 2 or any(x < 0 for x in n):
        raise ValueError("need nonnegative multiplicities for an even-length chain")
    g = len(n) // 2
    used = [x > 0 for x in n]
    if not any(used):
        return Cohomology(1, 2 * g, 0)
    h0 = 1  # the region away from the curves; connected since the chain is
    h1 = 0
    for l, x in enumerate(n):
        if x <= 1:
            continue
        nb = sum(1 for q in (l - 1, l + 1) if 0 <= q < len(n) and used[q])
        if nb:
            h0 += (x - 1) * nb  # strips cut into rectangles by the neighbours
        else:
            h0 += x - 1  # annuli
            h1 += x - 1
    for l in range(len(n) - 1):
        h0 += max(n[l] - 1, 0) * max(n[l + 1] - 1, 0) * (used[l] and used[l + 1])
    runs = []
    r = 0
    for u in used + [False]:
        if u:
            r += 1
        elif r:
            runs.append(r)
            r = 0
    chi_big = 2 - 2 * g + sum(x - 1 for x in runs)
    h1 += 1 - chi_big
    chi_c = -sum(n[l] * n[l + 1] for l in range(len(n) - 1))
    if h0 - h1 != (2 - 2 * g) - chi_c:
        raise AssertionError(f"Euler characteristic check failed for {n}")
    return Cohomology(h0, h1, chi_c)


def complement_cohomology(f: StaircaseForm) -> Cohomology:
    """H*(F - C) for the loops of a staircase braid: H^0 = 1 + sum T_j,
    H^1 = 2m + s - 1, checked against the piecewise count."""
    c = Cohomology(1 + f.T_total, 2 * f.m + f.s - 1, -sum(
        a * b for w in f.words for a, b in zip(w.exponents, w.exponents[1:])))
    direct = loop_complement_cohomology(f.loop_multiplicities())
    if (direct.h0, direct.h1) != (c.h0, c.h1):
        raise AssertionError(f"closed form {c} disagrees with piecewise count {direct}")
    return c


def braid_loop_multiplicities(w: BraidWord) -> list[int]:
    n = [0] * (w.strands - 1)
    for i, _ in w.letters:
        n[i - 1] += 1
    return n


@dataclass(frozen=True)
class EftekharyReport:
    braid: BraidWord
    staircase: BraidWord
    hf_plus: dict[int, int]
    cohomology: Cohomology
    grading_alignment: dict[str, int]

    @property
    def hf_plus_total(self) -> int:
        return sum(self.hf_plus.values())

    @property
    def agrees(self) -> bool:
        return self.hf_plus_total == self.cohomology.total


def eftekhary_check(f: StaircaseForm) -> EftekharyReport:
    hf = staircase_hfk(f)
    coh = complement_cohomology(f)
    letters = tuple((w.start + l, 1) for w in f.words for l, e in enumerate(w.exponents) for _ in range(e))
    br = BraidWord(f.strands, letters)
    return EftekharyReport(br, br, hf.hf_plus, coh, {"H0": f.m, "H1": f.m - 1})


def eftekhary_check_braid(w: BraidWord) -> EftekharyReport:
    """Compare HF+ (from a staircase braid with the same closure) with
    H*(F - C) for the loops of ``w`` itself."""
    try:
        return eftekhary_check(staircase_parse(w))
    except NotStaircase as err:
        eq = err.equivalent
        if eq is None:
            raise
    f = _parse_runs(eq)
    hf = staircase_hfk(f)
    coh = loop_complement_cohomology(braid_loop_multiplicities(w))
    return EftekharyReport(w, eq, hf.hf_plus, coh, {"H0": f.m, "H1": f.m - 1})
