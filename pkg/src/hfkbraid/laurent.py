"""Integer Laurent polynomials in one variable T."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Finitely supported map exponent -> nonzero integer coefficient.

    Immutable; hashable; equality is coefficientwise.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, a in items:
            c[int(e)] = c.get(int(e), 0) + int(a)
        self._c = {e: a for e, a in sorted(c.items()) if a}

    @classmethod
    def const(cls, a: int) -> LaurentPoly:
        return cls({0: a})

    @classmethod
    def monomial(cls, e: int, a: int = 1) -> LaurentPoly:
        return cls({e: a})

    @classmethod
    def from_list(cls, coeffs: list[int], low: int = 0) -> LaurentPoly:
        """coeffs[k] is the coefficient of T^(low + k)."""
        return cls({low + k: a for k, a in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._c))

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._c))

    def __add__(self, other):
        other = _coerce(other)
        c = dict(self._c)
        for e, a in other._c.items():
            c[e] = c.get(e, 0) + a
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            (e, a), = self._c.items()
            if a not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly({-e * (-n): a ** (-n)})
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by T^k."""
        return LaurentPoly({e + k: a for e, a in self._c.items()})

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        """Exact division; raises ArithmeticError if there is a remainder."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        lo_a, lo_b = self.min_degree(), other.min_degree()
        num = [self[lo_a + k] for k in range(self.max_degree() - lo_a + 1)]
        den = [other[lo_b + k] for k in range(other.max_degree() - lo_b + 1)]
        if len(den) > len(num):
            raise ArithmeticError("inexact Laurent division")
        quot = [0] * (len(num) - len(den) + 1)
        for k in range(len(quot) - 1, -1, -1):
            a = num[k + len(den) - 1]
            if a % den[-1]:
                raise ArithmeticError("inexact Laurent division")
            q = a // den[-1]
            quot[k] = q
            if q:
                for i, d in enumerate(den):
                    num[k + i] -= q * d
        if any(num):
            raise ArithmeticError("inexact Laurent division")
        return LaurentPoly.from_list(quot, lo_a - lo_b)

    def conjugate(self) -> LaurentPoly:
        """T -> T^-1."""
        return LaurentPoly({-e: a for e, a in self._c.items()})

    def is_symmetric(self) -> bool:
        return self == self.conjugate()

    def evaluate(self, x: int = 1):
        if x == 0:
            raise ZeroDivisionError("evaluation at 0")
        from fractions import Fraction
        total = Fraction(0)
        for e, a in self._c.items():
            total += a * Fraction(x) ** e
        return int(total) if total.denominator == 1 else total

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"

    def __str__(self):
        return format_laurent(self)

    def to_pairs(self) -> list[list[int]]:
        return [[e, a] for e, a in self._c.items()]

    @classmethod
    def from_pairs(cls, pairs) -> LaurentPoly:
        return cls((e, a) for e, a in pairs)

    def sort_key(self):
        return tuple(self._c.items())


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


def format_laurent(p: LaurentPoly, var: str = "T") -> str:
    """Lowest exponent first, e.g. ``-T^-1 + 7 - T``."""
    if p.is_zero():
        return "0"
    out = []
    for e, a in p.coeffs.items():
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if e == 0:
            term = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            term = mono if mag == 1 else f"{mag}{mono}"
        out.append((sign, term))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, term in out[1:]:
        s += f" {sign} {term}"
    return s


T = LaurentPoly.monomial(1)
