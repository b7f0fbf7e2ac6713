"""Exact integer linear algebra: Smith normal form, cokernels, Alexander polynomials.

Matrices are plain lists of lists of Python ints; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .laurent import LaurentPoly


class NotRationalHomologySphere(ValueError):
    """det(I - A) = 0, so the cover has infinite first homology."""


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def transpose(a):
    return [list(r) for r in zip(*a)] if a else []


def bareiss_det(m, one=1):
    """Fraction-free determinant.

    Entries may be ints or any exact commutative ring elements supporting
    ``exact_div`` (e.g. LaurentPoly). ``one`` is the ring identity.
    """
    n = len(m)
    if n == 0:
        return one
    a = [list(r) for r in m]
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return one * 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _div(num, prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def _is_zero(x) -> bool:
    return x == 0 if isinstance(x, int) else x.is_zero()


def _div(x, y):
    if isinstance(x, int) and isinstance(y, int):
        q, r = divmod(x, y)
        assert r == 0, "Bareiss step must be exact"
        return q
    return x.exact_div(y)


def smith_normal_form(m):
    """Return (U, D, V) with U*M*V = D, U and V unimodular, D diagonal and
    d1 | d2 | ... with nonnegative entries."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    d = [list(map(int, r)) for r in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, k):  # row dst += k * row src
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):
        for r in d:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero magnitude in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, rows):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    add_row(t, i, -q)
                    if d[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    add_col(t, j, -q)
                    if d[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                # divisibility of the rest of the block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if d[i][j] % d[t][t]), None)
                if bad is None:
                    break
                add_row(bad[0], t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, d, v


def diagonal(d) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


@dataclass(frozen=True)
class AbelianGroup:
    """Z/d1 + ... + Z/dr + Z^free, with the images of the input generators.

    ``generator_images[i]`` is a tuple of length r + free: torsion coordinates
    reduced mod the invariant factors, then free coordinates.
    """

    invariants: tuple[int, ...]
    free_rank: int
    generator_images: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int | None:
        return None if self.free_rank else prod(self.invariants)

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def reduce(self, h) -> tuple[int, ...]:
        h = tuple(h)
        r = len(self.invariants)
        return tuple(x % d for x, d in zip(h[:r], self.invariants)) + h[r:]

    def add(self, a, b) -> tuple[int, ...]:
        return self.reduce(x + y for x, y in zip(a, b))

    def neg(self, a) -> tuple[int, ...]:
        return self.reduce(-x for x in a)

    def scale(self, a, k: int) -> tuple[int, ...]:
        return self.reduce(k * x for x in a)

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * (len(self.invariants) + self.free_rank)

    def elements(self) -> list[tuple[int, ...]]:
        if self.free_rank:
            raise ValueError("infinite group")
        out = [()]
        for d in self.invariants:
            out = [h + (x,) for h in out for x in range(d)]
        return out

    def image_of_word(self, exps) -> tuple[int, ...]:
        """Image of the element sum_i exps[i] * gen_i."""
        h = self.zero
        for i, k in enumerate(exps):
            if k:
                h = self.add(h, self.scale(self.generator_images[i], k))
        return h

    def __str__(self):
        parts = [f"Z/{d}" for d in self.invariants] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def cokernel(m, generators=None) -> AbelianGroup:
    """Z^n / column span of the square matrix m, with the images of the
    standard basis vectors (optionally labelled by ``generators``)."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("cokernel expects a square matrix")
    if generators is not None and len(generators) != n:
        raise ValueError("one label per generator")
    u, d, _ = smith_normal_form(m)
    diag = diagonal(d)
    keep_t = [k for k, x in enumerate(diag) if x > 1]
    keep_f = [k for k, x in enumerate(diag) if x == 0]
    invariants = tuple(diag[k] for k in keep_t)
    images = []
    for i in range(n):
        col = [u[r][i] for r in range(n)]
        tor = tuple(col[k] % diag[k] for k in keep_t)
        fre = tuple(col[k] for k in keep_f)
        images.append(tor + fre)
    return AbelianGroup(invariants, len(keep_f), tuple(images))


def det_int(m) -> int:
    return bareiss_det(m, 1)


def char_matrix(a):
    """The matrix I - tA with LaurentPoly entries."""
    n = len(a)
    return [[LaurentPoly({0: int(i == j), 1: -a[i][j]}) for j in range(n)] for i in range(n)]


def symmetrize(p: LaurentPoly, value_at_one: int) -> LaurentPoly:
    """Multiply p by the unique unit +-T^k making it T <-> T^-1 symmetric with
    p(1) = value_at_one > 0."""
    if p.is_zero():
        raise NotRationalHomologySphere("polynomial vanishes identically")
    lo, hi = p.min_degree(), p.max_degree()
    if (lo + hi) % 2:
        raise ArithmeticError(f"odd span polynomial {p} cannot be symmetrized")
    q = p.shift(-(lo + hi) // 2)
    if q.evaluate(1) < 0:
        q = -q
    if not q.is_symmetric():
        raise ArithmeticError(f"{p} is not symmetric up to a unit")
    if q.evaluate(1) != value_at_one:
        raise ArithmeticError(f"normalization gives {q.evaluate(1)} at T=1, expected {value_at_one}")
    return q


def alexander_from_monodromy(a) -> LaurentPoly:
    """Symmetrized, positively normalized det(I - tA)."""
    n = len(a)
    h1 = det_int([[int(i == j) - a[i][j] for j in range(n)] for i in range(n)])
    if h1 == 0:
        raise NotRationalHomologySphere("det(I - A) = 0: not a rational homology sphere")
    raw = bareiss_det(char_matrix(a), LaurentPoly.const(1))
    return symmetrize(raw, abs(h1))


def alternating_sign_pattern(p: LaurentPoly) -> bool:
    """True if the coefficient of T^j has sign (-1)^j (or vanishes) for all j."""
    return all(a * (-1) ** (e % 2) > 0 for e, a in p.coeffs.items())


def symmetric_signature(m) -> int:
    """Signature of a symmetric rational matrix by congruence diagonalization."""
    from fractions import Fraction
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    sig = 0
    k = 0
    while k < n:
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if piv is not None:
                a[k], a[piv] = a[piv], a[k]
                for r in a:
                    r[k], r[piv] = r[piv], r[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:  # zero row: contributes nothing
                    k += 1
                    continue
                # row/col k += row/col j makes the pivot 2*a[k][j] (a[j][j] = 0)
                for c in range(n):
                    a[k][c] += a[j][c]
                for r in range(n):
                    a[r][k] += a[r][j]
        p = a[k][k]
        sig += 1 if p > 0 else -1
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
        for i in range(k + 1, n):
            a[k][i] = Fraction(0)
        for i in range(k + 1, n):
            a[i][k] = Fraction(0)
        k += 1
    return sig
