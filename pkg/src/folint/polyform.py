"""Projective 1-forms on the plane and their invariance certificates.

A foliation of degree ``r`` is ``A dX0 + B dX1 + C dX2`` with ``A, B, C``
homogeneous of degree ``r + 1``, no common factor, and
``X0*A + X1*B + X2*C = 0``.  A curve ``F = 0`` is invariant iff ``F``
divides every component of ``Omega ^ dF``; a pencil ``<F, G>`` is a first
integral iff ``Omega ^ (G dF - F dG)`` vanishes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import AllZero, DegenerateField, DegreeMismatch, DependentPencil, EulerViolation
from .poly import Poly, X, gcd

__all__ = [
    "ProjectiveOneForm",
    "ProjectiveTwoForm",
    "AffineOneForm",
    "saturate",
    "vector_field_to_form",
    "form_from_pencil",
    "wedge_with_differential",
    "is_invariant",
    "is_first_integral",
    "exact_divide",
    "proportional",
]


@dataclass(frozen=True)
class ProjectiveOneForm:
    A: Poly
    B: Poly
    C: Poly

    @property
    def coefficients(self):
        return (self.A, self.B, self.C)

    @property
    def degree(self) -> int:
        """Degree ``r`` of the foliation (coefficient degree minus one)."""
        return max(p.degree for p in self.coefficients) - 1

    def __str__(self):
        return f"({self.A}) dX0 + ({self.B}) dX1 + ({self.C}) dX2"


@dataclass(frozen=True)
class ProjectiveTwoForm:
    """Coefficients of ``dX1^dX2``, ``dX2^dX0`` and ``dX0^dX1``."""

    P: Poly
    Q: Poly
    R: Poly

    @property
    def components(self):
        return (self.P, self.Q, self.R)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)


@dataclass(frozen=True)
class AffineOneForm:
    """``a dx + b dy`` on an affine chart."""

    a: Poly
    b: Poly

    def order(self) -> int:
        return min(p.order() for p in (self.a, self.b) if not p.is_zero())

    def saturated(self) -> "AffineOneForm":
        if self.a.is_zero() and self.b.is_zero():
            raise AllZero("zero 1-form")
        g = gcd(self.a, self.b)
        if g.is_constant():
            return self
        return AffineOneForm(self.a.exact_divide(g), self.b.exact_divide(g))

    def vector_field(self):
        """Dual field ``b d/dx - a d/dy`` as a pair of components."""
        return self.b, -self.a

    def translate(self, point) -> "AffineOneForm":
        return AffineOneForm(self.a.translate(point), self.b.translate(point))

    def __str__(self):
        return f"({self.a}) dx + ({self.b}) dy"


def _euler(A: Poly, B: Poly, C: Poly) -> Poly:
    return X(0) * A + X(1) * B + X(2) * C


def saturate(A: Poly, B: Poly, C: Poly) -> ProjectiveOneForm:
    """Check the Euler condition and strip the common factor of ``A, B, C``."""
    if A.is_zero() and B.is_zero() and C.is_zero():
        raise AllZero("all three coefficients vanish")
    nonzero = [p for p in (A, B, C) if not p.is_zero()]
    if any(not p.is_homogeneous() for p in nonzero) or len({p.degree for p in nonzero}) != 1:
        raise DegreeMismatch("coefficients must be homogeneous of one common degree")
    if not _euler(A, B, C).is_zero():
        raise EulerViolation("X0*A + X1*B + X2*C is not identically zero")
    g = gcd(A, B, C)
    if not g.is_constant():
        A, B, C = (p.exact_divide(g) for p in (A, B, C))
    return ProjectiveOneForm(A, B, C)


def vector_field_to_form(U: Poly, V: Poly, W: Poly) -> ProjectiveOneForm:
    """Expand ``det [[dX0, dX1, dX2], [X0, X1, X2], [U, V, W]]`` and saturate."""
    A = X(1) * W - X(2) * V
    B = X(2) * U - X(0) * W
    C = X(0) * V - X(1) * U
    if A.is_zero() and B.is_zero() and C.is_zero():
        raise DegenerateField("the vector field is a multiple of the radial field")
    return saturate(A, B, C)


def form_from_pencil(F: Poly, G: Poly) -> ProjectiveOneForm:
    """Foliation whose leaves are the members of ``<F, G>``: saturation of ``G dF - F dG``."""
    if F.degree != G.degree:
        raise DegreeMismatch("pencil members must have equal degree")
    comps = [G * F.diff(i) - F * G.diff(i) for i in range(3)]
    return saturate(*comps)


def _wedge(coeffs, grads) -> ProjectiveTwoForm:
    A, B, C = coeffs
    F0, F1, F2 = grads
    return ProjectiveTwoForm(B * F2 - C * F1, C * F0 - A * F2, A * F1 - B * F0)


def wedge_with_differential(omega: ProjectiveOneForm, F: Poly) -> ProjectiveTwoForm:
    return _wedge(omega.coefficients, [F.diff(i) for i in range(3)])


def is_invariant(omega: ProjectiveOneForm, F: Poly) -> bool:
    """True iff ``F`` divides every component of ``Omega ^ dF``."""
    if F.is_zero() or F.is_constant():
        raise ValueError("invariance is defined for nonconstant curves")
    w = wedge_with_differential(omega, F)
    return all(F.divides(c) for c in w.components)


def proportional(F: Poly, G: Poly) -> bool:
    if F.is_zero() or G.is_zero():
        return True
    return F.monic() == G.monic()


def is_first_integral(omega: ProjectiveOneForm, F: Poly, G: Poly) -> bool:
    """True iff ``Omega ^ (G dF - F dG) = 0``."""
    if F.degree != G.degree or not F.is_homogeneous() or not G.is_homogeneous():
        raise DegreeMismatch("pencil members must be homogeneous of equal degree")
    if proportional(F, G):
        raise DependentPencil("pencil members are linearly dependent")
    grads = [G * F.diff(i) - F * G.diff(i) for i in range(3)]
    return _wedge(omega.coefficients, grads).is_zero()


def exact_divide(N: Poly, D: Poly) -> Poly | None:
    """``Q`` with ``N == Q*D``, or ``None`` when ``D`` does not divide ``N``."""
    return N.exact_divide(D)
