"""Exact complex scalars with rational parts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def _to_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, (int, Fraction, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class Coefficient:
    """``re + im*i`` with ``re`` and ``im`` exact fractions.

    Floats are rejected on purpose; every check in this package is an exact
    equality.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _to_fraction(self.re))
        object.__setattr__(self, "im", _to_fraction(self.im))

    @classmethod
    def of(cls, value) -> "Coefficient":
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, complex):
            raise TypeError("complex floats are not exact; pass Coefficient(re, im)")
        return cls(_to_fraction(value))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __neg__(self) -> "Coefficient":
        return Coefficient(-self.re, -self.im)

    def __add__(self, other) -> "Coefficient":
        other = Coefficient.of(other)
        return Coefficient(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "Coefficient":
        return self + (-Coefficient.of(other))

    def __rsub__(self, other) -> "Coefficient":
        return Coefficient.of(other) - self

    def __mul__(self, other) -> "Coefficient":
        o = Coefficient.of(other)
        return Coefficient(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Coefficient":
        o = Coefficient.of(other)
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("scalar division by zero; use a Calpanic zero term instead")
        return Coefficient(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other) -> "Coefficient":
        return Coefficient.of(other) / self

    def __pow__(self, k: int) -> "Coefficient":
        if k < 0:
            return Coefficient(1) / (self ** -k)
        out = Coefficient(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, Coefficient):
            return self.re == other.re and self.im == other.im
        try:
            other = Coefficient.of(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def components(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def opposes(self, other: "Coefficient") -> bool:
        """True if some component of ``self`` and ``other`` has strictly opposite sign."""
        return any(
            _sign(a) * _sign(b) < 0 for a, b in zip(self.components(), other.components())
        )

    def overlap(self, other: "Coefficient") -> "Coefficient":
        """Componentwise cancelled magnitude, signed like ``self``.

        For each component with opposing signs this is
        ``sign(self_c) * min(|self_c|, |other_c|)``; other components give 0.
        """
        parts = []
        for a, b in zip(self.components(), other.components()):
            if _sign(a) * _sign(b) < 0:
                parts.append(_sign(a) * min(abs(a), abs(b)))
            else:
                parts.append(Fraction(0))
        return Coefficient(*parts)

    def __repr__(self) -> str:
        if self.im == 0:
            return f"Coefficient({self.re})"
        return f"Coefficient({self.re}, {self.im})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sep = "+" if self.im > 0 else "-"
        return f"{self.re}{sep}{abs(self.im)}i"


ONE = Coefficient(1)
I = Coefficient(0, 1)
