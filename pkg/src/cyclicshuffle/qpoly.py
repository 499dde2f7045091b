"""Polynomials in ``q`` with exact integer coefficients."""
from __future__ import annotations

from itertools import zip_longest
from typing import Iterable


class QPoly:
    """Dense integer polynomial; ``coeffs[k]`` is the coefficient of ``q**k``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> QPoly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [coeff])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPoly:
        """Sum of ``q**e`` over ``exponents`` (a generating polynomial)."""
        c: list[int] = []
        for e in exponents:
            if e >= len(c):
                c.extend([0] * (e + 1 - len(c)))
            c[e] += 1
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: int) -> int:
        total = 0
        for a in reversed(self.coeffs):
            total = total * q + a
        return total

    def __add__(self, other: QPoly | int) -> QPoly:
        other = _coerce(other)
        return QPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-a for a in self.coeffs)

    def __sub__(self, other: QPoly | int) -> QPoly:
        return self + (-_coerce(other))

    def __mul__(self, other: QPoly | int) -> QPoly:
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> QPoly:
        """Multiply by ``q**k``."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return QPoly((0,) * k + self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if k == 0:
                terms.append(str(a))
                continue
            mono = "q" if k == 1 else f"q^{k}"
            terms.append(mono if a == 1 else f"{a}{mono}")
        return " + ".join(terms) if terms else "0"


def _coerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly([x])
    raise TypeError(f"cannot combine QPoly with {type(x).__name__}")
