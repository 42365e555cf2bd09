"""Logarithmic vector fields on the three concurrent lines x, y, x+y.

The arrangement is fixed as {ker x, ker y, ker(x+y)}; any three distinct
concurrent lines reduce to this one by a linear change of coordinates, and
fixing coordinates makes the (x+y)-divisibility test concrete.

A vector field theta = f dx + g dy with f, g homogeneous of one common
degree belongs to the module of multiplicity mu = (m1, m2, m3) iff
x^m1 | f, y^m2 | g and (x+y)^m3 | f + g.  Two members form a basis exactly
when their coefficient determinant is a nonzero scalar multiple of
x^m1 y^m2 (x+y)^m3 (Saito's criterion).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .fpcore import DEGREE_GUARD, GuardError
from .homopoly import HomoPoly, binomial_power


class CertificationError(RuntimeError):
    """A pair that must certify as a basis failed Saito's criterion.

    This always signals an implementation bug, never a mathematical failure.
    """


class Multiplicity(NamedTuple):
    """Multiplicity triple (m1, m2, m3) for the lines x, y, x+y."""

    mu1: int
    mu2: int
    mu3: int

    @property
    def total(self) -> int:
        return self.mu1 + self.mu2 + self.mu3

    @property
    def max_part(self) -> int:
        return max(self)

    def scaled(self, c: int) -> "Multiplicity":
        return Multiplicity(c * self.mu1, c * self.mu2, c * self.mu3)


def as_multiplicity(value) -> Multiplicity:
    """Coerce a triple to a validated Multiplicity."""
    if isinstance(value, Multiplicity):
        mu = value
    else:
        a, b, c = value
        mu = Multiplicity(int(a), int(b), int(c))
    if min(mu) < 0:
        raise ValueError(f"multiplicities must be nonnegative, got {tuple(mu)}")
    if mu.total > DEGREE_GUARD:
        raise GuardError(f"|mu| = {mu.total} exceeds the desk-scale guard")
    return mu


def dist1(mu, nu) -> int:
    """1-norm distance between two lattice points."""
    return sum(abs(a - b) for a, b in zip(mu, nu))


class VectorField:
    """theta = f dx + g dy with f, g homogeneous of equal degree (or zero)."""

    __slots__ = ("f", "g")

    def __init__(self, f: HomoPoly, g: HomoPoly):
        if f.p != g.p:
            raise ValueError("component modulus mismatch")
        if not (f.is_zero or g.is_zero) and f.degree != g.degree:
            raise ValueError(
                f"components must share a degree, got {f.degree} and {g.degree}"
            )
        self.f = f
        self.g = g

    @property
    def p(self) -> int:
        return self.f.p

    @property
    def degree(self) -> int | None:
        """Common degree of the nonzero components (None for the zero field)."""
        if not self.f.is_zero:
            return self.f.degree
        return self.g.degree

    @property
    def is_zero(self) -> bool:
        return self.f.is_zero and self.g.is_zero

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.f == other.f and self.g == other.g

    def __hash__(self):
        return hash((self.f, self.g))

    def apply_to_sum(self) -> HomoPoly:
        """theta(x + y) = f + g."""
        return self.f + self.g

    def scale(self, c: int) -> "VectorField":
        return VectorField(self.f.scale(c), self.g.scale(c))

    def frobenius(self, q: int) -> "VectorField":
        return VectorField(self.f.frobenius_scale(q), self.g.frobenius_scale(q))

    def to_text(self) -> str:
        """Canonical text form "(f) dx + (g) dy".

        Fields proportional to dy - dx (the x+y-killing shape) print as
        "(g) dy - (g) dx" so that sign-free residues stay readable.
        """
        if self.is_zero:
            return "(0) dx + (0) dy"
        if self.f.is_zero:
            return f"({self.g.to_text()}) dy"
        if self.g.is_zero:
            return f"({self.f.to_text()}) dx"
        if self.f == -self.g:
            t = self.g.to_text()
            return f"({t}) dy - ({t}) dx"
        return f"({self.f.to_text()}) dx + ({self.g.to_text()}) dy"

    def __repr__(self):
        return f"VectorField({self.to_text()})"


@dataclass(frozen=True)
class BasisPair:
    """Ordered homogeneous basis (low, high) with deg low <= deg high."""

    low: VectorField
    high: VectorField
    certified: bool = False

    def __post_init__(self):
        dl, dh = self.low.degree, self.high.degree
        if dl is not None and dh is not None and dl > dh:
            raise ValueError("basis pair must be ordered by degree")

    @property
    def exponents(self) -> tuple[int, int]:
        return (self.low.degree, self.high.degree)


def defining_poly(mu, p: int) -> HomoPoly:
    """x^m1 y^m2 (x+y)^m3 over F_p."""
    mu = as_multiplicity(mu)
    row = binomial_power(mu.mu3, p)  # never zero: leading coefficient is 1
    coeffs = [0] * (mu.total + 1)
    for j, c in enumerate(row.coeffs):
        coeffs[mu.mu1 + j] = c
    return HomoPoly(p, coeffs)


def in_module(theta: VectorField, mu) -> bool:
    """Membership of theta in the logarithmic module of multiplicity mu."""
    mu = as_multiplicity(mu)
    return (
        theta.f.divisible_by_axis("x", mu.mu1)
        and theta.g.divisible_by_axis("y", mu.mu2)
        and theta.apply_to_sum().divisible_by_linear_power(mu.mu3)
    )


def saito_det(t1: VectorField, t2: VectorField) -> HomoPoly:
    """Coefficient determinant f1*g2 - f2*g1."""
    return t1.f * t2.g - t2.f * t1.g


def saito_check(t1: VectorField, t2: VectorField, mu) -> bool:
    """Saito's criterion: both fields in the module and det = c * Q, c != 0."""
    mu = as_multiplicity(mu)
    if not (in_module(t1, mu) and in_module(t2, mu)):
        return False
    return saito_det(t1, t2).projectively_equal(defining_poly(mu, t1.p))
