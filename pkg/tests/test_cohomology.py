"""Cohomology cells, tables, invariant subcomplex, witnesses, resonances."""

import random
from fractions import Fraction

import pytest

from poisson3 import (
    Algebra,
    GradedBasis,
    MultiVector,
    cell_multivectors,
    coboundary_witness,
    cohomology_cell,
    cohomology_table,
    differential_matrix,
    invariant_cohomology,
    linear_poisson,
    parse_multivector,
    poisson_differential,
    resonances,
)
from poisson3.linalg import rank

BOOK1 = Algebra("book", Fraction(1))


def mv(text):
    return parse_multivector(text)


def _spans_same_classes(pi, cell, exprs):
    """The given cocycles span the computed cohomology classes of the cell."""
    basis = GradedBasis(cell.q, cell.d)
    in_columns = differential_matrix(pi, cell.q - 1, cell.d).columns if cell.q else []
    coords = []
    for expr in exprs:
        value = mv(expr)
        assert poisson_differential(pi, value).is_zero()
        coords.append(basis.decompose(value))
    base = rank(in_columns)
    assert rank(in_columns + coords) == base + len(exprs)
    assert rank(in_columns + coords + list(cell.representatives)) == base + cell.dim_h
    return True


# ---------------------------------------------------------------- cells


def test_heisenberg_casimir_cell():
    pi = linear_poisson("heisenberg")
    cell = cohomology_cell(pi, 0, 1)
    assert (cell.dim_cochains, cell.rank_out, cell.rank_in) == (3, 2, 0)
    assert cell.dim_h == 1
    assert cell_multivectors(cell) == [mv("z")]


def test_book_tau_one_vector_cell():
    pi = linear_poisson(BOOK1)
    cell = cohomology_cell(pi, 1, 1)
    assert cell.dim_h == 3
    assert _spans_same_classes(pi, cell, ["y*dx", "x*dy", "y*dy"])


def test_so3_vector_cells_vanish():
    pi = linear_poisson("so3")
    for d in range(5):
        assert cohomology_cell(pi, 1, d).dim_h == 0
        assert cohomology_cell(pi, 2, d).dim_h == 0


def test_cell_representatives_are_cocycles_mod_image():
    rng = random.Random(307)
    structures = [BOOK1, Algebra("book", Fraction(-2, 3)), Algebra("heisenberg"),
                  Algebra("euclidean"), Algebra("semi_open_book")]
    for alg in structures:
        pi = linear_poisson(alg)
        for _ in range(4):
            q = rng.randint(0, 3)
            d = rng.randint(0, 5)
            cell = cohomology_cell(pi, q, d)
            assert len(cell.representatives) == cell.dim_h
            out = differential_matrix(pi, q, d)
            in_cols = differential_matrix(pi, q - 1, d).columns if q else []
            for rep in cell.representatives:
                assert out.apply(rep) == {}
            # independent mod the image
            assert rank(in_cols + list(cell.representatives)) == \
                cell.rank_in + cell.dim_h


def test_cells_are_deterministic():
    pi = linear_poisson(Algebra("spiral", Fraction(1)))
    a = cohomology_cell(pi, 2, 1)
    b = cohomology_cell(pi, 2, 1)
    assert a.representatives == b.representatives


# ---------------------------------------------------------------- tables


def test_book_tau_one_table():
    table = cohomology_table(linear_poisson(BOOK1), 10)
    assert table.totals == {0: 1, 1: 4, 2: 3, 3: 0}
    assert table.stable
    for (q, d), cell in table.cells.items():
        if d > 1:
            assert cell.dim_h == 0


def test_aff_table_is_flat():
    table = cohomology_table(linear_poisson("aff_x_r"), 6)
    for d in range(7):
        assert [table.dim_h(q, d) for q in range(4)] == [1, 2, 1, 0]
    assert not table.stable


def test_abelian_table_is_full_cochain_space():
    table = cohomology_table(linear_poisson("abelian"), 4)
    for (q, d), cell in table.cells.items():
        assert cell.dim_h == cell.dim_cochains == len(GradedBasis(q, d))


def test_sl2_table_casimir_pattern():
    table = cohomology_table(linear_poisson("sl2"), 4)
    for d in range(5):
        expect = 1 if d % 2 == 0 else 0
        assert table.dim_h(0, d) == expect
        assert table.dim_h(1, d) == 0
        assert table.dim_h(2, d) == 0
        assert table.dim_h(3, d) == expect


def test_euler_characteristic_matches_cochain_alternating_sum():
    structures = ["heisenberg", "aff_x_r", "euclidean", "sl2",
                  Algebra("book", Fraction(3, 5)), Algebra("book", Fraction(-1))]
    for alg in structures:
        table = cohomology_table(linear_poisson(alg), 6)
        for d in range(7):
            chains = sum((-1) ** q * len(GradedBasis(q, d)) for q in range(4))
            homology = sum((-1) ** q * table.dim_h(q, d) for q in range(4))
            assert chains == homology


def test_table_shares_ranks_between_neighbouring_cells():
    table = cohomology_table(linear_poisson("euclidean"), 4)
    for d in range(5):
        for q in range(3):
            assert table.cell(q, d).rank_out == table.cell(q + 1, d).rank_in


def test_stability_needs_three_empty_degrees():
    pi = linear_poisson(BOOK1)
    assert not cohomology_table(pi, 1).stable
    assert cohomology_table(pi, 4).stable


# ---------------------------------------------------------------- invariant


def test_invariant_cohomology_examples():
    pi = linear_poisson("euclidean")
    casimir = invariant_cohomology(pi, 0, 2)
    assert casimir.dim_h == 1
    assert cell_multivectors(casimir) == [mv("x^2 + y^2")]
    euler = invariant_cohomology(pi, 1, 1)
    assert euler.dim_h == 1
    assert cell_multivectors(euler) == [mv("x*dx + y*dy")]


def test_invariant_cohomology_matches_full_for_euclidean():
    pi = linear_poisson("euclidean")
    table = cohomology_table(pi, 5)
    for q in range(4):
        for d in range(6):
            assert invariant_cohomology(pi, q, d).dim_h == table.dim_h(q, d)


def test_invariant_cohomology_accepts_heisenberg():
    pi = linear_poisson("heisenberg")
    cell = invariant_cohomology(pi, 0, 1)
    assert cell.dim_h == 1
    assert cell_multivectors(cell) == [mv("z")]


def test_invariant_cohomology_rejects_non_invariant_bivector():
    with pytest.raises(ValueError, match="not rotation invariant"):
        invariant_cohomology(linear_poisson("aff_x_r"), 1, 1)


# ---------------------------------------------------------------- witnesses


def test_coboundary_witness_positive():
    pi = linear_poisson(BOOK1)
    target = mv("x*dx^dz + y*dy^dz")
    witness = coboundary_witness(pi, target)
    assert witness is not None
    assert poisson_differential(pi, witness) == target


def test_coboundary_witness_negative_on_genuine_class():
    pi = linear_poisson(BOOK1)
    assert coboundary_witness(pi, mv("y*dy^dz")) is None
    assert coboundary_witness(linear_poisson("heisenberg"), mv("y*dx")) is None


def test_coboundary_witness_edge_cases():
    pi = linear_poisson("heisenberg")
    zero = coboundary_witness(pi, MultiVector.zero(2))
    assert zero is not None and zero.is_zero() and zero.degree == 1
    assert coboundary_witness(pi, mv("x^2")) is None
    with pytest.raises(ValueError):
        coboundary_witness(pi, mv("x*dx + dz"))


# ---------------------------------------------------------------- resonances


def test_resonance_examples():
    assert resonances(Fraction(1, 2), Fraction(1), 10) == [(1, 0), (0, 2)]
    assert resonances(Fraction(3, 5), Fraction(1), 10) == [(1, 0)]
    assert resonances(Fraction(1), Fraction(1), 20) == [(1, 0), (0, 1)]
    assert resonances(Fraction(-2, 3), Fraction(1), 12) == [(1, 0), (3, 3), (5, 6)]
    assert resonances(Fraction(-2, 3), Fraction(1), 20) == [
        (1, 0), (3, 3), (5, 6), (7, 9)]
    assert resonances(Fraction(3, 5), Fraction(1, 7), 5) == []


def test_resonance_pairs_satisfy_defining_equation():
    rng = random.Random(311)
    for _ in range(40):
        tau = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        if tau == 0:
            continue
        c = Fraction(rng.randint(0, 4))
        dmax = rng.randint(0, 15)
        pairs = resonances(tau, c, dmax)
        assert pairs == sorted(pairs, key=lambda p: p[1])
        assert len({j for (_, j) in pairs}) == len(pairs)
        for (i, j) in pairs:
            assert i >= 0 and j >= 0 and i + j <= dmax
            assert Fraction(i) + tau * j == c


def test_resonances_predict_extra_second_cohomology():
    # beyond the weight-field class at d = 1, extra classes appear exactly
    # in the coefficient degrees i + j of the nontrivial resonance pairs
    for tau in (Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)):
        table = cohomology_table(linear_poisson(Algebra("book", tau)), 8)
        generic = {d: (1 if d == 1 else 0) for d in range(9)}
        excess = {d for d in range(9) if table.dim_h(2, d) > generic[d]}
        predicted = {i + j for (i, j) in resonances(tau, Fraction(1), 8)
                     if (i, j) != (1, 0)}
        assert excess == predicted
