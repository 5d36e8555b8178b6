"""Exact dyadic rationals i / 2**j.

These are the values of the short surreals.  The engine uses them only for
naming tree nodes, converting calculator input, and as a test oracle; they
never participate in the order relation or in Conway arithmetic itself.
"""

from __future__ import annotations

from .errors import SurrealSyntaxError


class Dyadic:
    """An exact rational with a power-of-two denominator, in lowest terms.

    ``num / 2**exp`` with ``exp == 0`` or ``num`` odd.
    """

    __slots__ = ("num", "exp")

    def __init__(self, num: int, exp: int = 0):
        if exp < 0:
            raise ValueError("exponent must be non-negative")
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        self.num = num
        self.exp = exp

    # -- arithmetic (used by oracles and naming, never by Conway ops) --

    def __add__(self, other: "Dyadic") -> "Dyadic":
        if self.exp >= other.exp:
            return Dyadic(self.num + (other.num << (self.exp - other.exp)), self.exp)
        return Dyadic((self.num << (other.exp - self.exp)) + other.num, other.exp)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        return self + (-other)

    def __mul__(self, other: "Dyadic") -> "Dyadic":
        return Dyadic(self.num * other.num, self.exp + other.exp)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp)

    def half_sum(self, other: "Dyadic") -> "Dyadic":
        """Exact midpoint (self + other) / 2."""
        s = self + other
        return Dyadic(s.num, s.exp + 1)

    # -- comparisons: exact integer cross-multiplication --

    def _cmp_key(self, other: "Dyadic") -> tuple[int, int]:
        return self.num << other.exp, other.num << self.exp

    def __lt__(self, other: "Dyadic") -> bool:
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other: "Dyadic") -> bool:
        a, b = self._cmp_key(other)
        return a <= b

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.num == other.num and self.exp == other.exp

    def __hash__(self) -> int:
        return hash((self.num, self.exp))

    def __gt__(self, other: "Dyadic") -> bool:
        return other < self

    def __ge__(self, other: "Dyadic") -> bool:
        return other <= self

    def is_integer(self) -> bool:
        return self.exp == 0

    def __float__(self) -> float:
        return self.num / (1 << self.exp)

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def __repr__(self) -> str:
        return f"Dyadic({self})"


ZERO = Dyadic(0)
ONE = Dyadic(1)


def parse_dyadic(text: str) -> Dyadic:
    """Parse ``i`` or ``i/d`` where d must be a positive power of two.

    Rejects other denominators: values like 1/3 have no finite surreal
    representation.
    """
    text = text.strip()
    if "/" in text:
        num_part, den_part = text.split("/", 1)
        num = int(num_part)
        den = int(den_part)
        if den <= 0 or den & (den - 1) != 0:
            raise SurrealSyntaxError("denominator must be a power of two")
        return Dyadic(num, den.bit_length() - 1)
    return Dyadic(int(text))
