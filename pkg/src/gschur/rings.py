"""Exact coefficient rings: the integers, the rationals, and prime fields."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .shapes import require_prime


@dataclass(frozen=True, slots=True)
class ModP:
    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _other(self, other) -> int:
        if isinstance(other, ModP):
            if other.p != self.p:
                raise TypeError(f"cannot mix GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        raise TypeError(f"cannot combine GF({self.p}) with {type(other).__name__}")

    def __add__(self, other):
        return ModP(self.value + self._other(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return ModP(self.value - self._other(other), self.p)

    def __rsub__(self, other):
        return ModP(self._other(other) - self.value, self.p)

    def __mul__(self, other):
        return ModP(self.value * self._other(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.value, self.p)

    def inverse(self) -> "ModP":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * ModP(self._other(other), self.p).inverse()

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)


class Ring:
    """One of Z, Q, GF(p).  ``ring(x)`` maps an integer (or a compatible
    scalar) into the ring; mixing rings raises TypeError."""

    def __init__(self, kind: str, p: int | None = None):
        if kind not in ("Z", "Q", "GF"):
            raise ValueError(f"unknown ring kind {kind!r}")
        if kind == "GF":
            require_prime(p)
        self.kind, self.p = kind, p

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.kind == "GF" else self.kind

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "GF" else 0

    def __call__(self, x):
        if self.kind == "Z":
            if isinstance(x, Fraction) and x.denominator == 1:
                return int(x.numerator)
            if isinstance(x, int) and not isinstance(x, bool):
                return x
            raise TypeError(f"{x!r} is not an integer")
        if self.kind == "Q":
            if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
                return Fraction(x)
            raise TypeError(f"{x!r} is not rational")
        if isinstance(x, ModP):
            if x.p != self.p:
                raise TypeError(f"{x!r} is not in GF({self.p})")
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return ModP(x, self.p)
        raise TypeError(f"cannot map {x!r} into GF({self.p})")

    def parse(self, text: str):
        """Inverse of :meth:`format`."""
        if self.kind == "Q":
            return Fraction(text)
        return self(int(text))

    @staticmethod
    def format(x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Ring) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"Ring({self.name})"


ZZ = Ring("Z")
QQ = Ring("Q")


def GF(p: int) -> Ring:
    return Ring("GF", p)


def parse_ring(name: "str | Ring") -> Ring:
    if isinstance(name, Ring):
        return name
    text = name.strip()
    if text in ("Z", "ZZ"):
        return ZZ
    if text in ("Q", "QQ"):
        return QQ
    m = re.fullmatch(r"GF\((\d+)\)|GF(\d+)", text)
    if m:
        return GF(int(m.group(1) or m.group(2)))
    raise ValueError(f"unknown ring {name!r}; use Z, Q or GF(p)")
