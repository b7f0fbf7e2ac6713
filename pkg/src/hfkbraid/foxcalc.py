"""Fox calculus over Z[H1 x <T>] and the refined torsion of the binding complement.

Group ring elements are keyed by (h, n): h an element of the finite abelian
group H (invariant-factor coordinates), n the power of T.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .braid import BraidWord, is_fully_alternating
from .freegroup import FreeEndomorphism, Word, abelianize, monodromy_of_braid, reduce
from .intlinalg import AbelianGroup, NotRationalHomologySphere, alexander_from_monodromy, cokernel
from .laurent import LaurentPoly

Key = tuple[tuple[int, ...], int]


class TorsionNormalizationError(ArithmeticError):
    pass


class GroupRingElem:
    __slots__ = ("group", "_c")

    def __init__(self, group: AbelianGroup, coeffs=None):
        if not group.is_finite():
            raise ValueError("group ring over an infinite group is not supported")
        self.group = group
        c: dict[Key, int] = {}
        for (h, n), a in (coeffs or {}).items():
            k = (group.reduce(h), n)
            c[k] = c.get(k, 0) + a
        self._c = {k: a for k, a in c.items() if a}

    @classmethod
    def _raw(cls, group, c):
        x = object.__new__(cls)
        x.group = group
        x._c = c
        return x

    @classmethod
    def unit(cls, group, h=None, n: int = 0, a: int = 1):
        h = group.zero if h is None else group.reduce(h)
        return cls._raw(group, {(h, n): a} if a else {})

    @classmethod
    def zero_of(cls, group):
        return cls._raw(group, {})

    @property
    def coeffs(self) -> dict[Key, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other):
        c = dict(self._c)
        for k, a in other._c.items():
            v = c.get(k, 0) + a
            if v:
                c[k] = v
            else:
                c.pop(k, None)
        return GroupRingElem._raw(self.group, c)

    def __neg__(self):
        return GroupRingElem._raw(self.group, {k: -a for k, a in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElem._raw(self.group, {k: a * other for k, a in self._c.items() if a * other})
        add = self.group.add
        c: dict[Key, int] = {}
        for (h1, n1), a1 in self._c.items():
            for (h2, n2), a2 in other._c.items():
                k = (add(h1, h2), n1 + n2)
                c[k] = c.get(k, 0) + a1 * a2
        return GroupRingElem._raw(self.group, {k: a for k, a in c.items() if a})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupRingElem):
            return NotImplemented
        return self.group.invariants == other.group.invariants and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def translate(self, h) -> GroupRingElem:
        add = self.group.add
        return GroupRingElem._raw(self.group, {(add(k, h), n): a for (k, n), a in self._c.items()})

    def shift(self, n: int) -> GroupRingElem:
        return GroupRingElem._raw(self.group, {(h, m + n): a for (h, m), a in self._c.items()})

    def conjugate(self) -> GroupRingElem:
        """h -> -h, T -> T^-1."""
        neg = self.group.neg
        return GroupRingElem._raw(self.group, {(neg(h), -n): a for (h, n), a in self._c.items()})

    def map_group(self, target: AbelianGroup, hom) -> GroupRingElem:
        """Push forward along a group homomorphism given as a function on elements."""
        c: dict[Key, int] = {}
        for (h, n), a in self._c.items():
            k = (target.reduce(hom(h)), n)
            c[k] = c.get(k, 0) + a
        return GroupRingElem(target, c)

    def coefficient_polys(self) -> dict[tuple[int, ...], LaurentPoly]:
        """h -> p_h(T) for every h in the support."""
        acc: dict[tuple[int, ...], dict[int, int]] = {}
        for (h, n), a in self._c.items():
            acc.setdefault(h, {})[n] = a
        return {h: LaurentPoly(d) for h, d in sorted(acc.items()) if not LaurentPoly(d).is_zero()}

    def poly_at(self, h) -> LaurentPoly:
        h = self.group.reduce(h)
        return LaurentPoly({n: a for (k, n), a in self._c.items() if k == h})

    def specialize(self) -> LaurentPoly:
        """Send every group element to 1."""
        return LaurentPoly([(n, a) for (_, n), a in self._c.items()])

    def __repr__(self):
        return f"GroupRingElem({format_group_ring(self)})"

    __str__ = lambda self: format_group_ring(self)


def format_group_element(h, sym: str = "e") -> str:
    parts = [f"{sym}{i + 1}" + ("" if x == 1 else f"^{x}") for i, x in enumerate(h) if x]
    return " ".join(parts) if parts else "1"


def format_group_ring(x: GroupRingElem) -> str:
    polys = x.coefficient_polys()
    if not polys:
        return "0"
    out = []
    for h, p in polys.items():
        label = format_group_element(h)
        out.append(f"({p})" + ("" if label == "1" else f"*{label}"))
    return " + ".join(out)


@dataclass(frozen=True)
class Presentation:
    """Generators gamma_1..gamma_r and t (encoded as r + 1); one relation
    gamma_i^-1 t R(gamma_i) t^-1 per surface generator."""

    rank: int
    relations: tuple[Word, ...]

    @property
    def t(self) -> int:
        return self.rank + 1


def build_presentation(f: FreeEndomorphism) -> Presentation:
    t = f.rank + 1
    rels = tuple(reduce((-(i + 1), t) + img + (-t,)) for i, img in enumerate(f.images))
    return Presentation(f.rank, rels)


def fox_derivative(w, x: int) -> list[tuple[int, Word]]:
    """Formal sum of signed prefixes: d w / d x as [(coeff, word), ...]."""
    if x <= 0:
        raise ValueError("differentiate with respect to a positive generator label")
    out: list[tuple[int, Word]] = []
    prefix: list[int] = []
    for y in w:
        if y == x:
            out.append((1, tuple(prefix)))
        elif y == -x:
            out.append((-1, tuple(prefix) + (y,)))
        prefix.append(y)
    return out


def word_image(group: AbelianGroup, w, rank: int) -> Key:
    """Image of a word in H x <T>; gamma_i -> group.generator_images[i-1], t -> T."""
    h = group.zero
    n = 0
    for y in w:
        g = abs(y)
        s = 1 if y > 0 else -1
        if g == rank + 1:
            n += s
        elif 1 <= g <= rank:
            h = group.add(h, group.scale(group.generator_images[g - 1], s))
        else:
            raise ValueError(f"unknown generator {y}")
    return h, n


def push_forward(terms, group: AbelianGroup, rank: int) -> GroupRingElem:
    c: dict[Key, int] = {}
    for a, w in terms:
        k = word_image(group, w, rank)
        c[k] = c.get(k, 0) + a
    return GroupRingElem(group, c)


def fox_pushforward(w, x: int, group: AbelianGroup, rank: int) -> GroupRingElem:
    """Pushforward of d w / d x, computed in one pass without materializing prefixes."""
    if not 1 <= abs(x) <= rank + 1:
        raise ValueError(f"unknown generator {x}")
    c: dict[Key, int] = {}
    h, n = group.zero, 0
    imgs = group.generator_images
    for y in w:
        g = abs(y)
        if g == rank + 1:
            step_h, step_n = group.zero, (1 if y > 0 else -1)
        elif 1 <= g <= rank:
            step_h, step_n = (imgs[g - 1] if y > 0 else group.neg(imgs[g - 1])), 0
        else:
            raise ValueError(f"unknown generator {y}")
        if y == x:
            c[(h, n)] = c.get((h, n), 0) + 1
        h, n = group.add(h, step_h), n + step_n
        if y == -x:  # d(x^-1)/dx = -x^-1, so the prefix includes the letter
            c[(h, n)] = c.get((h, n), 0) - 1
    return GroupRingElem(group, c)


def torsion_matrix(p: Presentation, group: AbelianGroup) -> list[list[GroupRingElem]]:
    """Entry (i, j) = pushforward of d r_i / d gamma_j; the t column is dropped."""
    if len(p.relations) != p.rank:
        raise ValueError("need one relation per surface generator")
    return [[fox_pushforward(r, j + 1, group, p.rank) for j in range(p.rank)] for r in p.relations]


def group_ring_det(m: list[list[GroupRingElem]], group: AbelianGroup) -> GroupRingElem:
    """Laplace expansion along rows, memoized on the set of remaining columns."""
    n = len(m)
    if n == 0:
        return GroupRingElem.unit(group)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> GroupRingElem:
        if row == n - 1:
            return m[row][cols[0]]
        acc = GroupRingElem.zero_of(group)
        for k, c in enumerate(cols):
            entry = m[row][c]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:k] + cols[k + 1:])
            if sub.is_zero():
                continue
            term = entry * sub
            acc = acc - term if k % 2 else acc + term
        return acc

    return minor(0, tuple(range(n)))


@dataclass
class RefinedTorsion:
    """Normalized (T - 1) * refined torsion, with bookkeeping about the unit used."""

    element: GroupRingElem
    group: AbelianGroup
    raw_determinant: GroupRingElem
    unit_sign: int
    unit_t_shift: int
    unit_translation: tuple[int, ...]
    conjugation_symmetric: bool
    metadata: dict = field(default_factory=dict)

    def polys(self) -> dict[tuple[int, ...], LaurentPoly]:
        """p_s(T) for every label s in H (zeros included)."""
        cp = self.element.coefficient_polys()
        return {h: cp.get(h, LaurentPoly()) for h in self.group.elements()}


def _span(p: LaurentPoly) -> int:
    return -1 if p.is_zero() else p.max_degree() - p.min_degree()


def normalize_torsion(det: GroupRingElem, alexander: LaurentPoly, require_sign_pattern: bool = True):
    """Find the unit +-T^a e^h described in the module docs; returns
    (element, sign, a, h, conjugation_symmetric)."""
    group = det.group
    if det.is_zero():
        raise TorsionNormalizationError("torsion determinant vanishes")
    spec = det.specialize()
    if spec.is_zero():
        raise TorsionNormalizationError("specialized determinant vanishes")
    lo, hi = spec.min_degree(), spec.max_degree()
    if (lo + hi) % 2:
        raise TorsionNormalizationError("odd T-span: no symmetrizing shift")
    a = -(lo + hi) // 2
    sign = 1 if spec.shift(a).evaluate(1) > 0 else -1
    base = det.shift(a) * sign
    if base.specialize() != alexander:
        raise TorsionNormalizationError(
            f"specialization {base.specialize()} does not match Alexander polynomial {alexander}")
    polys = base.coefficient_polys()
    for h, p in polys.items():
        if not p.is_symmetric():
            raise TorsionNormalizationError(f"coefficient at {h} is not symmetric: {p}")
        if require_sign_pattern and not all(c * (-1) ** (e % 2) > 0 for e, c in p.coeffs.items()):
            raise TorsionNormalizationError(f"coefficient at {h} violates the (-1)^j sign pattern: {p}")
        if p.evaluate(1) < 0 and require_sign_pattern:
            raise TorsionNormalizationError(f"negative count at {h}")

    elements = group.elements()
    symmetric = []
    for h in elements:
        moved = base.translate(h)
        if moved.conjugate() == moved:
            symmetric.append(h)
    candidates = symmetric or elements

    def key(h):
        return (-_span(base.translate(h).poly_at(group.zero)), h)

    h = min(candidates, key=key)
    return base.translate(h), sign, a, h, bool(symmetric)


def h1_of_monodromy(f: FreeEndomorphism) -> AbelianGroup:
    a = abelianize(f)
    n = len(a)
    return cokernel([[int(i == j) - a[i][j] for j in range(n)] for i in range(n)],
                    generators=[f"g{i + 1}" for i in range(n)])


def refined_torsion_of_monodromy(f: FreeEndomorphism, require_sign_pattern: bool = True,
                                 group: AbelianGroup | None = None) -> RefinedTorsion:
    alex = alexander_from_monodromy(abelianize(f))
    if group is None:
        group = h1_of_monodromy(f)
    if not group.is_finite():
        raise NotRationalHomologySphere("H1 is infinite")
    pres = build_presentation(f)
    mat = torsion_matrix(pres, group)
    det = group_ring_det(mat, group)
    elem, sign, a, h, sym = normalize_torsion(det, alex, require_sign_pattern)
    return RefinedTorsion(elem, group, det, sign, a, h, sym,
                          {"labels": "H1 elements up to the translation recorded in unit_translation"})


def refined_torsion(w: BraidWord, require_sign_pattern: bool | None = None) -> RefinedTorsion:
    """(T - 1) times the refined torsion of the binding complement of the
    branched double cover of the closure of w."""
    w.require_odd()
    if require_sign_pattern is None:
        require_sign_pattern = is_fully_alternating(w)
    return refined_torsion_of_monodromy(monodromy_of_braid(w), require_sign_pattern)


def fundamental_identity_defect(w, rank: int, group: AbelianGroup) -> GroupRingElem:
    """sum_x (dw/dx)(x - 1) - (w - 1), pushed forward; zero for every word."""
    total = GroupRingElem.zero_of(group)
    one = GroupRingElem.unit(group)
    for x in range(1, rank + 2):
        d = fox_pushforward(w, x, group, rank)
        xi = GroupRingElem.unit(group, *word_image(group, (x,), rank))
        total = total + d * (xi - one)
    wi = GroupRingElem.unit(group, *word_image(group, w, rank))
    return total - (wi - one)
