"""Exact rational rank / kernel / solve routines on sparse columns."""

import random
from fractions import Fraction

from poisson3.linalg import (
    compose,
    integer_normalize,
    kernel_basis,
    matvec,
    rank,
    reduce_against,
    rref,
    solve_combination,
)


def _columns_from_rows(rows):
    ncols = max(len(r) for r in rows)
    cols = []
    for j in range(ncols):
        col = {}
        for i, row in enumerate(rows):
            if row[j]:
                col[i] = Fraction(row[j])
        cols.append(col)
    return cols


def _det2(m):
    return Fraction(m[0][0]) * m[1][1] - Fraction(m[0][1]) * m[1][0]


def test_identity_matrix():
    cols = _columns_from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rank(cols) == 3
    rk, kern = kernel_basis(cols, 3)
    assert rk == 3 and kern == []


def test_zero_matrix_four_by_five():
    cols = [{} for _ in range(5)]
    assert rank(cols) == 0
    rk, kern = kernel_basis(cols, 5)
    assert rk == 0
    assert len(kern) == 5
    assert kern == [{j: Fraction(1)} for j in range(5)]


def test_rank_one_matrix_with_kernel():
    cols = _columns_from_rows([[1, 2], [2, 4]])
    rk, kern = kernel_basis(cols, 2)
    assert rk == 1
    assert len(kern) == 1
    # kernel spanned by (2, -1), integer normalized with positive leading entry
    assert kern[0] == {0: Fraction(2), 1: Fraction(-1)}


def test_rank_against_determinant_on_random_two_by_two():
    rng = random.Random(101)
    for _ in range(60):
        m = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2)]
             for _ in range(2)]
        cols = [{i: m[i][j] for i in range(2) if m[i][j]} for j in range(2)]
        expected_full = _det2(m) != 0
        assert (rank(cols) == 2) == expected_full


def test_kernel_vectors_annihilate_matrix():
    rng = random.Random(103)
    for _ in range(40):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        cols = []
        for _ in range(ncols):
            col = {}
            for i in range(nrows):
                if rng.random() < 0.4:
                    col[i] = Fraction(rng.randint(-5, 5))
            cols.append({i: v for i, v in col.items() if v})
        rk, kern = kernel_basis(cols, ncols)
        # rank-nullity over an exact field
        assert rk + len(kern) == ncols
        assert rk == rank(cols)
        for vec in kern:
            assert matvec(cols, vec) == {}


def test_solve_combination_positive_and_negative():
    cols = _columns_from_rows([[1, 0], [0, 1], [1, 1]])
    target = {0: Fraction(2), 1: Fraction(-3), 2: Fraction(-1)}
    combo = solve_combination(cols, target)
    assert combo == {0: Fraction(2), 1: Fraction(-3)}
    assert solve_combination(cols, {0: Fraction(1), 2: Fraction(5)}) is None
    # zero target always solvable by the empty combination
    assert solve_combination(cols, {}) == {}


def test_solve_combination_reconstructs_random_images():
    rng = random.Random(107)
    for _ in range(30):
        cols = []
        for _ in range(4):
            cols.append({i: Fraction(rng.randint(-3, 3))
                         for i in range(5) if rng.random() < 0.5})
        coeffs = {j: Fraction(rng.randint(-3, 3)) for j in range(4)}
        target = {}
        for j, c in coeffs.items():
            for i, v in cols[j].items():
                target[i] = target.get(i, Fraction(0)) + c * v
        target = {i: v for i, v in target.items() if v}
        combo = solve_combination(cols, target)
        assert combo is not None
        rebuilt = {}
        for j, c in combo.items():
            for i, v in cols[j].items():
                rebuilt[i] = rebuilt.get(i, Fraction(0)) + c * v
        assert {i: v for i, v in rebuilt.items() if v} == target


def test_integer_normalize():
    vec = {0: Fraction(2, 3), 2: Fraction(-4, 3)}
    assert integer_normalize(vec) == {0: Fraction(1), 2: Fraction(-2)}
    # leading (lowest index) entry is made positive
    vec = {1: Fraction(-1, 2), 2: Fraction(3, 2)}
    assert integer_normalize(vec) == {1: Fraction(1), 2: Fraction(-3)}
    assert integer_normalize({}) == {}


def test_rref_is_idempotent_and_canonical():
    rng = random.Random(109)
    for _ in range(20):
        rows = [{j: Fraction(rng.randint(-3, 3)) for j in range(4)
                 if rng.random() < 0.7} for _ in range(3)]
        rows = [{j: v for j, v in r.items() if v} for r in rows]
        pivots, echelon = rref(rows)
        again_pivots, again = rref(echelon)
        assert again == echelon and again_pivots == pivots
        assert len(pivots) == len(echelon)
        # pivot columns are strictly increasing and pivot entries are 1
        assert pivots == sorted(set(pivots))
        for p, row in zip(pivots, echelon):
            assert row[p] == 1
            # pivot column cleared everywhere else
            for other in echelon:
                assert other is row or p not in other


def test_compose_matches_manual_product():
    # outer: 2x2 swap, inner: 2x2 diag(1, 2)
    outer = [{1: Fraction(1)}, {0: Fraction(1)}]
    inner = [{0: Fraction(1)}, {1: Fraction(2)}]
    prod = compose(outer, inner)
    assert prod == [{1: Fraction(1)}, {0: Fraction(2)}]


def test_reduce_against_reports_membership():
    rows = [{0: Fraction(1)}, {1: Fraction(1)}]
    pivots, echelon = rref(rows)
    inside = reduce_against(pivots, echelon, {0: Fraction(3), 1: Fraction(-2)})
    assert inside == {}
    outside = reduce_against(pivots[:1], echelon[:1], {1: Fraction(1)})
    assert outside == {1: Fraction(1)}
