"""Exact coefficient rings: integers, rationals and prime fields.

Scalars are plain Python objects: ``int`` for Z and F_p (prime-field values
normalized into ``[0, p)``), ``fractions.Fraction`` for Q. Ring descriptors
carry the ring-specific operations (coercion, inversion, normalization) so
that hot loops can use native ``+``/``*`` and only normalize where needed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import MixedRings

Scalar = int | Fraction


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Ring:
    """Descriptor for one exact coefficient ring."""

    token: str
    is_field: bool
    characteristic: int
    zero: Scalar
    one: Scalar

    def coerce(self, value) -> Scalar:
        raise NotImplementedError

    def normalize(self, value: Scalar) -> Scalar:
        """Post-arithmetic cleanup (reduction mod p); identity for Z and Q."""
        return value

    def inverse(self, value: Scalar) -> Scalar:
        raise NotImplementedError

    def scalar_to_json(self, value: Scalar):
        return int(value)

    def __repr__(self) -> str:
        return self.token

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.token == other.token

    def __hash__(self) -> int:
        return hash(self.token)


class IntegerRing(Ring):
    token = "Z"
    is_field = False
    characteristic = 0
    zero = 0
    one = 1

    def coerce(self, value) -> int:
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        if isinstance(value, Fraction):
            if value.denominator == 1:
                return int(value)
            raise ValueError(f"{value} is not an integer")
        raise ValueError(f"cannot coerce {value!r} into Z")

    def inverse(self, value: Scalar) -> int:
        if value in (1, -1):
            return int(value)
        raise ZeroDivisionError(f"{value} is not a unit in Z")


class RationalField(Ring):
    token = "Q"
    is_field = True
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        raise ValueError(f"cannot coerce {value!r} into Q")

    def inverse(self, value: Scalar) -> Fraction:
        return Fraction(1) / value

    def scalar_to_json(self, value: Scalar):
        value = self.coerce(value)
        if value.denominator == 1:
            return int(value)
        return f"{value.numerator}/{value.denominator}"


class PrimeField(Ring):
    is_field = True

    def __init__(self, p: int) -> None:
        if not _is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        self.p = p
        self.token = f"F{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, value) -> int:
        if isinstance(value, int) and not isinstance(value, bool):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ValueError(f"denominator of {value} vanishes mod {self.p}")
            return value.numerator * pow(den, self.p - 2, self.p) % self.p
        raise ValueError(f"cannot coerce {value!r} into F_{self.p}")

    def normalize(self, value: Scalar) -> int:
        return value % self.p

    def inverse(self, value: Scalar) -> int:
        value = value % self.p
        if value == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return pow(value, self.p - 2, self.p)


ZZ = IntegerRing()
QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    """The prime field with ``p`` elements (``p`` must be prime)."""
    return PrimeField(p)


def ring_from_token(token: str, p: int | None = None) -> Ring:
    """Resolve a ring descriptor from its serialized token ("Z", "Q", "Fp", "F5")."""
    if token == "Z":
        return ZZ
    if token == "Q":
        return QQ
    if token == "Fp":
        if p is None:
            raise ValueError("ring token 'Fp' requires a modulus")
        return GF(p)
    if token.startswith("F") and token[1:].isdigit():
        return GF(int(token[1:]))
    raise ValueError(f"unknown ring token {token!r}")


def parse_scalar(ring: Ring, raw) -> Scalar:
    """Parse a JSON scalar: an int or a reduced "num/den" string."""
    if isinstance(raw, str):
        return ring.coerce(Fraction(raw))
    return ring.coerce(raw)


def require_same_ring(a: Ring, b: Ring) -> None:
    if a != b:
        raise MixedRings(f"ring mismatch: {a} vs {b}")
