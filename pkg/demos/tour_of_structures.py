"""A tour of the registry: brackets, bivectors, modular fields, cohomology.

Run with:  python3 demos/tour_of_structures.py
"""

from fractions import Fraction

from poisson3 import (
    Algebra,
    KINDS,
    cohomology_table,
    format_multivector,
    jacobi_defect,
    linear_poisson,
    modular_class_check,
    structure_constants,
)


def instantiate(kind):
    if kind == "book":
        return Algebra(kind, Fraction(1, 3))
    if kind == "spiral":
        return Algebra(kind, Fraction(1))
    return Algebra(kind)


def main():
    print("Nine three-dimensional Lie algebras, their dual Poisson structures,")
    print("and the polynomial Poisson cohomology totals up to degree 8.\n")
    for kind in KINDS:
        alg = instantiate(kind)
        pi = linear_poisson(alg)
        label = alg.name if alg.tau is None else "%s (tau=%s)" % (alg.name, alg.tau)
        print("=== %s" % label)
        table = structure_constants(alg).c
        if not table:
            print("  brackets: all zero")
        for (i, j, k), value in sorted(table.items()):
            coeff = "" if value == 1 else "%s " % value
            print("  [e%d, e%d] has term %se%d" % (i + 1, j + 1, coeff, k + 1))
        print("  pi = %s" % format_multivector(pi))
        assert jacobi_defect(alg).is_zero()
        check = modular_class_check(alg)
        print("  modular field = %s (unimodular: %s)"
              % (format_multivector(check.field), "yes" if check.unimodular else "no"))
        totals = cohomology_table(pi, 8).totals
        print("  dim H^q totals for d <= 8: %s\n"
              % " ".join("H^%d=%d" % (q, totals[q]) for q in range(4)))


if __name__ == "__main__":
    main()
