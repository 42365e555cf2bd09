"""Prime-field residues and base-p digit combinatorics.

Everything downstream (polynomial coefficients, lattice formulas, the
brute-force solver) reduces to the handful of primitives here: validated
prime moduli, canonical residues, base-p digit vectors, Lucas binomials
and the digit-dominance set G_m.
"""

from __future__ import annotations

from itertools import product

# Desk-scale guardrails: degrees stay below 2^32, digit-dominance sets
# below 2^20 entries.
DEGREE_GUARD = 1 << 32
GSET_GUARD = 1 << 20


class GuardError(ValueError):
    """Input would exceed the desk-scale guard for this operation."""


def is_prime(n: int) -> bool:
    """Deterministic primality check by trial division (desk-scale inputs)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


class Prime(int):
    """A validated prime modulus; behaves exactly like the underlying int."""

    def __new__(cls, p) -> "Prime":
        p = int(p)
        if p >= 1 << 31:
            raise GuardError(f"modulus {p} exceeds the supported 31-bit range")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return super().__new__(cls, p)


class FpElement:
    """A fully reduced residue modulo a prime.

    Arithmetic stays closed under the modulus; mixing moduli raises.
    Comparisons against plain ints reduce the int first.
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        p = int(p)
        self.p = p
        self.value = int(value) % p

    def _lift(self, other) -> "FpElement":
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        return FpElement(other, self.p)

    def __add__(self, other):
        other = self._lift(other)
        return FpElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return FpElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return FpElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElement(pow(self.value, e, self.p), self.p)

    def inverse(self) -> "FpElement":
        # Fermat: a^(p-2) inverts a for prime p.
        if self.value == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.p}")
        return FpElement(pow(self.value, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"F{self.p}({self.value})"


def digits(m: int, p: int) -> list[int]:
    """Base-p digit vector of m, least significant first, trailing zeros trimmed."""
    if m < 0:
        raise ValueError("digits requires m >= 0")
    out = []
    while m:
        m, r = divmod(m, p)
        out.append(r)
    return out


def from_digits(ds, p: int) -> int:
    """Inverse of :func:`digits`."""
    value = 0
    for d in reversed(list(ds)):
        value = value * p + d
    return value


def s_index(m: int, p: int) -> int:
    """Index of the least nonzero base-p digit of m (m >= 1)."""
    if m <= 0:
        raise ValueError("s_index is undefined for m = 0")
    e = 0
    while m % p == 0:
        m //= p
        e += 1
    return e


def binom_mod_p(m: int, j: int, p: int) -> FpElement:
    """Binomial coefficient C(m, j) mod p via the Lucas digit product.

    Follows the usual convention C(a, b) = 0 for b < 0 or b > a.
    """
    if j < 0 or j > m:
        return FpElement(0, p)
    acc = 1
    while j:
        m, cm = divmod(m, p)
        j, cj = divmod(j, p)
        if cj > cm:
            return FpElement(0, p)
        # small-digit binomial, exact
        num, den = 1, 1
        for t in range(cj):
            num *= cm - t
            den *= t + 1
        acc = acc * ((num // den) % p) % p
    return FpElement(acc, p)


def g_set(m: int, p: int) -> list[int]:
    """All g >= 0 whose base-p digits are dominated by those of m, ascending.

    Equivalently (Lucas): the g with C(m, g) not divisible by p.  The set is
    symmetric under g -> m - g.
    """
    if m < 0:
        raise ValueError("g_set requires m >= 0")
    ds = digits(m, p)
    size = 1
    for c in ds:
        size *= c + 1
        if size > GSET_GUARD:
            raise GuardError(f"G_{m} would have more than {GSET_GUARD} elements")
    members = []
    for choice in product(*(range(c + 1) for c in ds)):
        members.append(from_digits(choice, p))
    members.sort()
    return members
