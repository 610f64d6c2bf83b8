"""Cohomology of the graded complexes: ranks, dimensions, representatives.

Each (q, d) cell is closed under the differential of a linear bivector, so
its cohomology is kernel-modulo-image of two finite exact matrices.
Representatives are canonical: the kernel is put in reduced echelon form,
the rows whose leading coordinate is not a pivot of the image echelon are
kept and reduced against the image, then scaled to coprime integers.  Two
runs over the same input produce byte-identical output.
"""

from fractions import Fraction

from . import linalg
from .complexes import (
    GradedBasis,
    differential_matrix,
    invariant_basis,
    rotation_field,
)
from .multivector import MultiVector, schouten_bracket


class CohomologyCell:
    """One (q, d) slot: dimensions, ranks, canonical representatives."""

    __slots__ = ("q", "d", "dim_cochains", "rank_out", "rank_in", "representatives")

    def __init__(self, q, d, dim_cochains, rank_out, rank_in, representatives):
        self.q = q
        self.d = d
        self.dim_cochains = dim_cochains
        self.rank_out = rank_out
        self.rank_in = rank_in
        self.representatives = representatives

    @property
    def dim_h(self):
        return self.dim_cochains - self.rank_out - self.rank_in

    def __repr__(self):
        return "CohomologyCell(q=%d, d=%d, dim_h=%d)" % (self.q, self.d, self.dim_h)


def _cell_from_columns(q, d, dim, out_columns, in_columns):
    """Reduce one cell given the outgoing and incoming differential columns."""
    rank_out, kernel = linalg.kernel_basis(out_columns, dim)
    in_pivots, in_echelon = linalg.rref(in_columns)
    ker_pivots, ker_echelon = linalg.rref(kernel)
    reps = []
    image_pivots = set(in_pivots)
    for pivot, row in zip(ker_pivots, ker_echelon):
        if pivot in image_pivots:
            continue
        reduced = linalg.reduce_against(in_pivots, in_echelon, row)
        reps.append(linalg.integer_normalize(reduced))
    cell = CohomologyCell(q, d, dim, rank_out, len(in_pivots), reps)
    assert cell.dim_h == len(reps)
    return cell


def cohomology_cell(pi, q, d):
    """Cohomology of the (q, d) cell of the complex of pi.

    Representatives are returned as coordinate vectors; use
    `cell_multivectors` or the table interface for multivector form.
    """
    out_cell = differential_matrix(pi, q, d)
    in_columns = differential_matrix(pi, q - 1, d).columns if q > 0 else []
    return _cell_from_columns(q, d, len(out_cell.source), out_cell.columns, in_columns)


def cell_multivectors(cell):
    """Canonical representatives of a cell as multivectors."""
    basis = GradedBasis(cell.q, cell.d)
    return [basis.reconstruct(v) for v in cell.representatives]


class CohomologyTable:
    """All cells with q = 0..3 and d = 0..dmax for one bivector."""

    __slots__ = ("dmax", "cells")

    def __init__(self, dmax, cells):
        self.dmax = dmax
        self.cells = cells

    def cell(self, q, d):
        return self.cells[(q, d)]

    def dim_h(self, q, d):
        return self.cells[(q, d)].dim_h

    def total(self, q):
        return sum(cell.dim_h for (cq, _), cell in self.cells.items() if cq == q)

    @property
    def totals(self):
        return {q: self.total(q) for q in range(4)}

    @property
    def stable(self):
        """True when the top three coefficient degrees carry no cohomology."""
        if self.dmax < 2:
            return False
        return all(
            cell.dim_h == 0
            for (_, d), cell in self.cells.items()
            if d >= self.dmax - 2
        )


def cohomology_table(pi, dmax):
    """Cohomology of every (q, d) cell with d <= dmax.

    Differential matrices are computed once per cell and shared between the
    rank-out and rank-in sides.
    """
    cells = {}
    for d in range(dmax + 1):
        mats = [differential_matrix(pi, q, d) for q in range(4)]
        for q in range(4):
            in_columns = mats[q - 1].columns if q > 0 else []
            cells[(q, d)] = _cell_from_columns(
                q, d, len(mats[q].source), mats[q].columns, in_columns
            )
    return CohomologyTable(dmax, cells)


def _restrict(columns, source_vectors, target_vectors):
    """Matrix of a map restricted to invariant sub-bases on both sides."""
    out = []
    for vec in source_vectors:
        image = linalg.matvec(columns, vec)
        coeffs = linalg.solve_combination(target_vectors, image)
        if coeffs is None:
            raise ValueError("operator does not preserve the invariant subspace")
        out.append(coeffs)
    return out


def invariant_cohomology(pi, q, d):
    """Cohomology of the rotation-invariant subcomplex at (q, d).

    Only defined when the bivector itself is rotation invariant; anything
    else is rejected since the subspaces would not form a complex.
    Representatives come back in ambient (q, d) coordinates.
    """
    if not schouten_bracket(rotation_field(), pi).is_zero():
        raise ValueError("bivector is not rotation invariant")
    vectors = {}
    for qq in (q - 1, q, q + 1):
        if 0 <= qq <= 3:
            _, vectors[qq] = invariant_basis(qq, d)
    out_columns = (
        _restrict(differential_matrix(pi, q, d).columns, vectors[q], vectors[q + 1])
        if q < 3
        else [{} for _ in vectors[q]]
    )
    in_columns = (
        _restrict(differential_matrix(pi, q - 1, d).columns, vectors[q - 1], vectors[q])
        if q > 0
        else []
    )
    cell = _cell_from_columns(q, d, len(vectors[q]), out_columns, in_columns)
    # map representatives from sub-basis coordinates back to the ambient basis
    ambient = []
    for rep in cell.representatives:
        coords = {}
        for j, factor in rep.items():
            for i, c in vectors[q][j].items():
                val = coords.get(i, Fraction(0)) + factor * c
                if val:
                    coords[i] = val
                elif i in coords:
                    del coords[i]
        ambient.append(linalg.integer_normalize(coords))
    cell.representatives = ambient
    return cell


def coboundary_witness(pi, target):
    """A multivector V with [pi, V] == target, or None.

    The target must have homogeneous coefficients (each graded cell is
    searched exactly, nothing is approximated).
    """
    if target.is_zero():
        return MultiVector.zero(max(target.degree - 1, 0))
    d = target.coefficient_degree()
    if not target.is_coefficient_homogeneous(d):
        raise ValueError("witness search needs homogeneous coefficients")
    if target.degree == 0:
        return None
    cell = differential_matrix(pi, target.degree - 1, d)
    coords = cell.target.decompose(target)
    combo = linalg.solve_combination(cell.columns, coords)
    if combo is None:
        return None
    return cell.source.reconstruct(combo)


def resonances(tau, c, dmax):
    """Exponent pairs (i, j) with i + tau*j == c and i + j <= dmax.

    i, j are nonnegative integers; pairs are listed by increasing j.  For
    each j there is at most one i, so the enumeration is immediate.
    """
    tau = Fraction(tau)
    c = Fraction(c)
    out = []
    for j in range(dmax + 1):
        i = c - tau * j
        if i.denominator == 1 and i >= 0 and i + j <= dmax:
            out.append((int(i), j))
    return out
