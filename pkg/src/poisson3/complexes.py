"""Graded cochain complexes of polynomial multivector fields.

A linear bivector preserves the polynomial coefficient degree, so for each
multivector degree q and coefficient degree d the span of basis cochains
(monomial times wedge generator) is finite and the differential restricts to
a map between neighbouring q at fixed d.  This module enumerates those bases
and builds the exact matrices of the differential and of Lie-derivative
operators; the cohomology module reduces them.
"""

from fractions import Fraction

from . import linalg
from .multivector import (
    MultiVector,
    NCOMP,
    Polynomial,
    monomial_key,
    schouten_bracket,
)


class DegreeError(ValueError):
    """An operator failed to preserve the coefficient grading."""


def monomials(degree):
    """Exponent triples of total degree d, leading monomial first."""
    if degree < 0:
        return []
    out = []
    for i in range(degree + 1):
        for j in range(degree + 1 - i):
            out.append((i, j, degree - i - j))
    out.sort(key=monomial_key, reverse=True)
    return out


class GradedBasis:
    """Ordered basis of the (q, d) cochain space.

    Elements are (component index, monomial) pairs, ordered by monomial
    (leading first) and then by component index; size is
    binom(3, q) * (d+1)(d+2)/2.
    """

    __slots__ = ("q", "d", "elements", "_index")

    def __init__(self, q, d):
        if q not in (0, 1, 2, 3):
            raise ValueError("cochain degree must be 0..3, got %r" % (q,))
        if d < 0:
            raise ValueError("coefficient degree must be >= 0, got %r" % (d,))
        self.q = q
        self.d = d
        self.elements = [
            (idx, mono) for mono in monomials(d) for idx in range(NCOMP[q])
        ]
        self._index = {elem: pos for pos, elem in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def position(self, idx, mono):
        return self._index[(idx, mono)]

    def multivector(self, position):
        idx, mono = self.elements[position]
        return MultiVector(self.q, {idx: Polynomial.monomial(mono)})

    def decompose(self, value):
        """Coordinates of a multivector in this basis (sparse dict).

        Raises DegreeError if a coefficient monomial falls outside degree d
        and ValueError on a multivector degree mismatch.
        """
        if value.is_zero():
            return {}
        if value.degree != self.q:
            raise ValueError("expected degree %d, got %d" % (self.q, value.degree))
        coords = {}
        for idx, poly in value.components.items():
            for mono, coeff in poly.terms.items():
                if sum(mono) != self.d:
                    raise DegreeError(
                        "monomial %r has degree %d, expected %d" % (mono, sum(mono), self.d)
                    )
                coords[self._index[(idx, mono)]] = coeff
        return coords

    def reconstruct(self, coords):
        """Multivector with the given sparse coordinates."""
        comps = {}
        for position, coeff in coords.items():
            idx, mono = self.elements[position]
            comps.setdefault(idx, {})[mono] = coeff
        return MultiVector(self.q, {idx: Polynomial(terms) for idx, terms in comps.items()})


class OperatorCell:
    """Matrix of a graded operator on one (q, d) cochain space."""

    __slots__ = ("source", "target", "columns")

    def __init__(self, source, target, columns):
        self.source = source
        self.target = target
        self.columns = columns

    @property
    def nrows(self):
        return len(self.target)

    @property
    def ncols(self):
        return len(self.source)

    def apply(self, coords):
        return linalg.matvec(self.columns, coords)


def operator_matrix(operator, q, d):
    """Matrix of V -> [operator, V] on the (q, d) basis.

    The bracket lowers the total coefficient degree by one, so the operator
    preserves the grading exactly when its own coefficients are homogeneous
    linear.  Any violation surfaces as a DegreeError when an image is
    decomposed in the target basis.
    """
    source = GradedBasis(q, d)
    out_q = q + operator.degree - 1
    if not 0 <= out_q <= 3:
        raise ValueError("operator maps degree %d outside 0..3" % (q,))
    target = GradedBasis(out_q, d)
    columns = []
    for position in range(len(source)):
        image = schouten_bracket(operator, source.multivector(position))
        columns.append(target.decompose(image))
    return OperatorCell(source, target, columns)


def differential_matrix(pi, q, d):
    """Matrix of the complex differential [pi, .] : (q, d) -> (q+1, d).

    For q = 3 the target space is taken at degree 3 with zero columns, so
    chaining q and q+1 stays uniform for the rank bookkeeping upstream.
    """
    if pi.degree != 2:
        raise ValueError("differential needs a bivector, got degree %d" % (pi.degree,))
    source = GradedBasis(q, d)
    if q == 3:
        return OperatorCell(source, GradedBasis(3, d), [{} for _ in range(len(source))])
    return operator_matrix(pi, q, d)


def poisson_differential(pi, value):
    """The differential applied to one multivector: [pi, value]."""
    if pi.degree != 2:
        raise ValueError("differential needs a bivector, got degree %d" % (pi.degree,))
    if value.degree == 3:
        return MultiVector.zero(3)
    return schouten_bracket(pi, value)


def closed_form_differential(pi, value):
    """Differential computed from closed-form component formulas.

    Only valid for bivectors pi = (P dx + Q dy) ^ dz with P, Q independent
    of z.  This is a deliberately independent route from the bracket
    machinery; tests compare the two on random inputs.
    """
    if pi.degree != 2 or pi.component(2):
        raise ValueError("closed form needs a bivector with no dx^dy part")
    p = -pi.component(1)
    q = pi.component(0)
    if p.diff(2) or q.diff(2):
        raise ValueError("closed form needs z-independent coefficients")

    def along(h):  # directional derivative along P dx + Q dy
        return p * h.diff(0) + q * h.diff(1)

    if value.degree == 0:
        g = value.component(0)
        gz = g.diff(2)
        return MultiVector.vector(gz * p, gz * q, -along(g))
    if value.degree == 1:
        a, b, c = (value.component(i) for i in range(3))
        wx = along(b) - a * q.diff(0) - b * q.diff(1) + q * c.diff(2)
        wy = -along(a) + a * p.diff(0) + b * p.diff(1) - p * c.diff(2)
        wz = p * b.diff(2) - q * a.diff(2)
        return MultiVector.bivector(wx, wy, wz)
    if value.degree == 2:
        wx, wy, wz = (value.component(i) for i in range(3))
        coeff = p * wx.diff(2) + q * wy.diff(2) + (p.diff(0) + q.diff(1)) * wz - along(wz)
        return MultiVector.trivector(coeff)
    return MultiVector.zero(3)


def rotation_field():
    """Infinitesimal rotation of the (x, y)-plane: -y dx + x dy."""
    return MultiVector.vector(
        Polynomial.monomial((0, 1, 0), -1), Polynomial.variable("x"), Polynomial.zero()
    )


def rotation_matrix(q, d):
    """Matrix of the Lie derivative along the rotation field on (q, d)."""
    return operator_matrix(rotation_field(), q, d)


def invariant_basis(q, d):
    """Canonical basis of the rotation-invariant subspace of (q, d).

    Returns (basis, vectors): the ambient GradedBasis and a list of sparse
    coordinate vectors spanning the kernel of the rotation Lie derivative.
    """
    cell = rotation_matrix(q, d)
    _, vectors = linalg.kernel_basis(cell.columns, len(cell.source))
    return cell.source, vectors


def invariant_multivectors(q, d):
    """The invariant sub-basis as multivectors."""
    basis, vectors = invariant_basis(q, d)
    return [basis.reconstruct(v) for v in vectors]
