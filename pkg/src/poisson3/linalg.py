"""Exact sparse linear algebra over the rationals.

Vectors are dicts {index: nonzero Fraction}; matrices are lists of such
column dicts.  Everything reduces to one canonical routine: reduced row
echelon form, whose output is unique for a given row space, so ranks,
kernels, and cohomology representatives downstream are deterministic.
"""

from fractions import Fraction
from math import gcd


def _clean(vec):
    return {i: c for i, c in vec.items() if c}


def rref(rows):
    """Reduced row echelon form of a list of sparse row vectors.

    Returns (pivots, echelon_rows) where pivots[r] is the leading index of
    echelon_rows[r], in increasing order.  Zero rows are dropped.
    """
    work = [_clean(dict(r)) for r in rows]
    work = [r for r in work if r]
    pivots = []
    echelon = []
    while work:
        col = min(min(r) for r in work)
        pick = next(i for i, r in enumerate(work) if min(r) == col)
        row = work.pop(pick)
        inv = Fraction(1) / row[col]
        row = {i: c * inv for i, c in row.items()}
        for other in work:
            factor = other.get(col)
            if factor:
                for i, c in row.items():
                    val = other.get(i, Fraction(0)) - factor * c
                    if val:
                        other[i] = val
                    elif i in other:
                        del other[i]
        work = [r for r in work if r]
        # clear the new pivot column in the rows already placed
        for placed in echelon:
            factor = placed.get(col)
            if factor:
                for i, c in row.items():
                    val = placed.get(i, Fraction(0)) - factor * c
                    if val:
                        placed[i] = val
                    elif i in placed:
                        del placed[i]
        pivots.append(col)
        echelon.append(row)
    order = sorted(range(len(pivots)), key=lambda r: pivots[r])
    return [pivots[r] for r in order], [echelon[r] for r in order]


def reduce_against(pivots, echelon, vec):
    """Subtract echelon rows to zero out the pivot coordinates of vec."""
    out = dict(vec)
    for pivot, row in zip(pivots, echelon):
        factor = out.get(pivot)
        if factor:
            for i, c in row.items():
                val = out.get(i, Fraction(0)) - factor * c
                if val:
                    out[i] = val
                elif i in out:
                    del out[i]
    return _clean(out)


def rank(columns):
    """Rank of a matrix given as a list of sparse columns."""
    pivots, _ = rref(columns)
    return len(pivots)


def kernel_basis(columns, ncols):
    """Canonical basis of {v : sum_j v[j] columns[j] = 0}.

    Built from the reduced echelon form of the rows of the matrix, one vector
    per free column, normalized to coprime integers with positive leading
    entry.  (rank, basis) is returned; rank + len(basis) == ncols.
    """
    rows = {}
    for j, col in enumerate(columns):
        for i, c in col.items():
            rows.setdefault(i, {})[j] = c
    pivots, echelon = rref(rows.values())
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {free: Fraction(1)}
        for pivot, row in zip(pivots, echelon):
            coeff = row.get(free)
            if coeff:
                vec[pivot] = -coeff
        basis.append(integer_normalize(vec))
    return len(pivots), basis


def integer_normalize(vec):
    """Scale to coprime integer entries with a positive leading coefficient."""
    if not vec:
        return {}
    lead = min(vec)
    denom_lcm = 1
    for c in vec.values():
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    scaled = {i: c * denom_lcm for i, c in vec.items()}
    num_gcd = 0
    for c in scaled.values():
        num_gcd = gcd(num_gcd, abs(c.numerator))
    sign = -1 if scaled[lead] < 0 else 1
    factor = Fraction(sign, num_gcd) if num_gcd else Fraction(sign)
    return {i: c * factor for i, c in scaled.items()}


def matvec(columns, vec):
    """Matrix times sparse vector: sum_j vec[j] * columns[j]."""
    out = {}
    for j, factor in vec.items():
        if not factor:
            continue
        for i, c in columns[j].items():
            val = out.get(i, Fraction(0)) + factor * c
            if val:
                out[i] = val
            elif i in out:
                del out[i]
    return out


def compose(outer_columns, inner_columns):
    """Columns of outer @ inner (columns of inner mapped through outer)."""
    return [matvec(outer_columns, col) for col in inner_columns]


def solve_combination(columns, target):
    """Coefficients expressing target as a combination of columns, or None.

    When the columns are linearly independent the solution is unique.
    """
    rows = {}
    for j, col in enumerate(columns):
        for i, c in col.items():
            rows.setdefault(i, {})[j] = c
    rhs_col = len(columns)
    for i, c in target.items():
        if c:
            rows.setdefault(i, {})[rhs_col] = c
    pivots, echelon = rref(rows.values())
    coeffs = {}
    for pivot, row in zip(pivots, echelon):
        if pivot == rhs_col:
            return None  # inconsistent system
        value = row.get(rhs_col)
        if value:
            coeffs[pivot] = value
    # back-substitution is already done by rref; free columns get zero
    return coeffs
