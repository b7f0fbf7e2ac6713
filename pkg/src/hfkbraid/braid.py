"""Annular braid words: parsing and the alternating conditions."""

from __future__ import annotations

import re
from dataclasses import dataclass


class BraidSyntaxError(ValueError):
    pass


class EvenStrandCount(ValueError):
    """The link meets the spanning disc of the axis an even number of times."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...]  # (index, +-1)

    def __post_init__(self):
        if self.strands < 1:
            raise BraidSyntaxError(f"strand count must be positive, got {self.strands}")
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise BraidSyntaxError(f"generator index {i} out of range 1..{self.strands - 1}")
            if s not in (1, -1):
                raise BraidSyntaxError(f"letter exponent must be +-1, got {s}")

    def __len__(self):
        return len(self.letters)

    @property
    def genus(self) -> int:
        return (self.strands - 1) // 2

    def indices(self) -> set[int]:
        return {i for i, _ in self.letters}

    def mirror(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in self.letters))

    def reverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(reversed(self.letters)))

    def __add__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def permutation(self) -> list[int]:
        """perm[p] = end position of the strand starting at position p (0-based)."""
        pos = list(range(self.strands))  # pos[strand] = current position
        at = list(range(self.strands))   # at[position] = strand
        for i, _ in self.letters:
            a, b = at[i - 1], at[i]
            at[i - 1], at[i] = b, a
            pos[a], pos[b] = i, i - 1
        return pos

    def num_components(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for p in range(self.strands):
            if not seen[p]:
                count += 1
                while not seen[p]:
                    seen[p] = True
                    p = perm[p]
        return count

    def require_odd(self) -> None:
        if self.strands % 2 == 0:
            raise EvenStrandCount(
                f"{self.strands} strands: the link must meet the spanning disc of the axis an odd number of times")

    def __str__(self):
        return format_braid(self)


_TOKEN = re.compile(r"s(\d+)(?:\^(-?\d+))?$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``b=<int>: s1 s2^-1 ...``; the ``b=`` prefix may be omitted, in
    which case the strand count is (max index) + 1."""
    text = text.strip()
    m = re.match(r"b\s*=\s*(-?\d+)\s*:(.*)$", text, re.S)
    strands = None
    body = text
    if m:
        strands = int(m.group(1))
        body = m.group(2)
        if strands < 1:
            raise BraidSyntaxError(f"strand count must be positive, got {strands}")
    letters: list[tuple[int, int]] = []
    for tok in body.split():
        t = _TOKEN.match(tok)
        if not t:
            raise BraidSyntaxError(f"cannot parse token {tok!r}")
        idx = int(t.group(1))
        exp = int(t.group(2)) if t.group(2) is not None else 1
        if idx < 1:
            raise BraidSyntaxError(f"generator index must be >= 1 in {tok!r}")
        s = 1 if exp > 0 else -1
        letters.extend([(idx, s)] * abs(exp))
    if strands is None:
        strands = max((i for i, _ in letters), default=0) + 1
    return BraidWord(strands, tuple(letters))


def format_braid(w: BraidWord) -> str:
    parts = []
    k = 0
    L = w.letters
    while k < len(L):
        j = k
        while j < len(L) and L[j] == L[k]:
            j += 1
        i, s = L[k]
        n = (j - k) * s
        parts.append(f"s{i}" + ("" if n == 1 else f"^{n}"))
        k = j
    return f"b={w.strands}:" + ("".join(" " + p for p in parts))


def is_alternating_annular(w: BraidWord) -> bool:
    sign_of: dict[int, int] = {}
    for i, s in w.letters:
        if sign_of.setdefault(i, s) != s:
            return False
    return all(sign_of[i] == -sign_of[i + 1] for i in sign_of if i + 1 in sign_of)


def is_fully_alternating(w: BraidWord) -> bool:
    return is_alternating_annular(w) and w.indices() == set(range(1, w.strands))
