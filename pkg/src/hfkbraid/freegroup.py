"""Free groups on the chain loops gamma_1..gamma_{b-1} and Dehn twist automorphisms.

A word is a tuple of nonzero ints: ``k`` stands for gamma_k and ``-k`` for
its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Word = tuple[int, ...]


def reduce(w: Sequence[int]) -> Word:
    """Free reduction (stack based, so idempotent)."""
    out: list[int] = []
    for x in w:
        if x == 0:
            raise ValueError("0 is not a generator")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def power(w: Sequence[int], n: int) -> Word:
    base = tuple(w) if n >= 0 else inverse(w)
    return reduce(base * abs(n))


def exponent_sums(w: Sequence[int], rank: int) -> list[int]:
    v = [0] * rank
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def format_word(w: Sequence[int], sym: str = "g") -> str:
    """Run-length rendering, e.g. ``g1 g2 g1^2 g2``."""
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        n = (j - i) * (1 if w[i] > 0 else -1)
        parts.append(f"{sym}{abs(w[i])}" + ("" if n == 1 else f"^{n}"))
        i = j
    return " ".join(parts)


def parse_word(text: str) -> Word:
    """Inverse of :func:`format_word` (``g`` or ``t`` prefixes are not mixed)."""
    import re
    out: list[int] = []
    for g, e in re.findall(r"[a-zA-Z](\d+)(?:\^(-?\d+))?", text):
        out.extend(power((int(g),), int(e) if e else 1))
    return reduce(out)


@dataclass(frozen=True)
class FreeEndomorphism:
    """Endomorphism of the free group of given rank, by generator images."""

    rank: int
    images: tuple[Word, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError("one image per generator")
        object.__setattr__(self, "images", tuple(reduce(w) for w in self.images))

    @classmethod
    def identity(cls, rank: int) -> FreeEndomorphism:
        return cls(rank, tuple((i,) for i in range(1, rank + 1)))

    def apply(self, w: Sequence[int]) -> Word:
        out: list[int] = []
        for x in w:
            img = self.images[abs(x) - 1]
            out.extend(img if x > 0 else inverse(img))
        return reduce(out)

    def __call__(self, w):
        return self.apply(w)

    def is_identity(self) -> bool:
        return self == FreeEndomorphism.identity(self.rank)


def compose(f: FreeEndomorphism, g: FreeEndomorphism) -> FreeEndomorphism:
    """(f o g)(x) = f(g(x))."""
    if f.rank != g.rank:
        raise ValueError(f"rank mismatch: {f.rank} vs {g.rank}")
    return FreeEndomorphism(f.rank, tuple(f.apply(img) for img in g.images))


def dehn_twist(i: int, sign: int, rank: int) -> FreeEndomorphism:
    """Twist along gamma_i on the chain.

    Positive twist, i odd:  g_{i+1} -> g_i g_{i+1},  g_{i-1} -> g_{i-1} g_i^-1.
    Positive twist, i even: g_{i+1} -> g_{i+1} g_i,  g_{i-1} -> g_i^-1 g_{i-1}.
    The negative twist is the inverse; other generators are fixed. The
    parity-dependent side keeps twists on disjoint curves commuting and
    makes the twists satisfy the braid relations.
    """
    if not 1 <= i <= rank:
        raise ValueError(f"twist index {i} out of range 1..{rank}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    images = [(k,) for k in range(1, rank + 1)]
    odd = i % 2 == 1
    if i + 1 <= rank:
        images[i] = (sign * i, i + 1) if odd else (i + 1, sign * i)
    if i - 1 >= 1:
        images[i - 2] = (i - 1, -sign * i) if odd else (-sign * i, i - 1)
    return FreeEndomorphism(rank, tuple(images))


def monodromy_of_letters(letters, rank: int) -> FreeEndomorphism:
    """D_{l1} o D_{l2} o ... o D_{lk}: the rightmost letter acts first."""
    f = FreeEndomorphism.identity(rank)
    for i, s in reversed(list(letters)):
        f = compose(dehn_twist(i, s, rank), f)
    return f


def monodromy_of_braid(w) -> FreeEndomorphism:
    return monodromy_of_letters(w.letters, w.strands - 1)


def abelianize(f: FreeEndomorphism) -> list[list[int]]:
    """Integer matrix whose column i is the exponent-sum vector of f(gamma_i)."""
    cols = [exponent_sums(img, f.rank) for img in f.images]
    return [[cols[j][i] for j in range(f.rank)] for i in range(f.rank)]
