"""Arithmetic in the prime field GF(p).

Every phase-space label (lattice site ``q``, crystal momentum index ``p``,
displacement components) is a residue modulo a prime. Keeping those labels
as :class:`FieldElement` values makes the closure of addition, negation,
multiplication and division explicit.

>>> F7 = make_field(7)
>>> F7(3) * F7(4)
FieldElement(5, p=7)
>>> inv(F7(3))
FieldElement(5, p=7)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenCharacteristic, ModulusMismatch, NotPrime, ZeroDivision

MAX_MODULUS = 2**31


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeModulus:
    """A validated prime modulus ``p``.

    Calling the modulus with an integer builds the canonical element,
    so ``make_field(5)(-1)`` is ``FieldElement(4, p=5)``.
    """

    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or int(self.p) != self.p:
            raise NotPrime(f"modulus must be an integer, got {self.p!r}")
        if self.p >= MAX_MODULUS:
            raise NotPrime(f"modulus {self.p} exceeds supported range (< 2**31)")
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value, self)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(v, self) for v in range(self.p)]

    def __len__(self):
        return self.p

    def __repr__(self):
        return f"GF({self.p})"


def make_field(p: int) -> PrimeModulus:
    return PrimeModulus(int(p))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, x, y) with a*x + b*y = g
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class FieldElement:
    """Canonical residue ``value`` in ``[0, p)`` of the field ``modulus``."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: PrimeModulus | int):
        if not isinstance(modulus, PrimeModulus):
            modulus = make_field(modulus)
        self.modulus = modulus
        self.value = int(value) % modulus.p

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.modulus.p != self.modulus.p:
                raise ModulusMismatch(
                    f"cannot combine elements of GF({self.p}) and GF({other.p})"
                )
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return FieldElement(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return FieldElement(-self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.p), self.modulus)

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise ZeroDivision(f"0 has no inverse in GF({self.p})")
        _, x, _ = _egcd(self.value, self.p)
        return FieldElement(x, self.modulus)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FieldElement({self.value}, p={self.p})"


def _check(a: FieldElement, b: FieldElement) -> None:
    if a.p != b.p:
        raise ModulusMismatch(f"cannot combine elements of GF({a.p}) and GF({b.p})")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a + b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a * b


def inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse by the extended Euclidean algorithm."""
    return a.inverse()


def div(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a * b.inverse()


def half(modulus: PrimeModulus | int) -> FieldElement:
    """Return ``2**-1`` in GF(p); undefined in characteristic two."""
    if not isinstance(modulus, PrimeModulus):
        modulus = make_field(modulus)
    if modulus.p == 2:
        raise EvenCharacteristic("2 has no inverse in GF(2)")
    return FieldElement(2, modulus).inverse()
