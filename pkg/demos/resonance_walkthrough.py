"""How the parameter of the book family controls its cohomology.

The structure x dx^dz + tau y dy^dz changes character with the arithmetic
of tau: extra cohomology classes appear exactly in the coefficient degrees
where a monomial x^i y^j has weighted degree i + tau j equal to 1.  This
script sweeps a few parameters and compares the predicted resonance degrees
with the computed tables.

Run with:  python3 demos/resonance_walkthrough.py
"""

from fractions import Fraction

from poisson3 import (
    Algebra,
    cell_multivectors,
    cohomology_table,
    format_multivector,
    linear_poisson,
    resonances,
)

DMAX = 10


def sweep(tau):
    alg = Algebra("book", tau)
    pi = linear_poisson(alg)
    table = cohomology_table(pi, DMAX)
    pairs = resonances(tau, Fraction(1), DMAX)
    print("tau = %s" % tau)
    print("  resonant exponent pairs (i + tau j = 1): %s"
          % (" ".join("(%d,%d)" % p for p in pairs) or "none"))
    print("  dim H^2 by coefficient degree:",
          [table.dim_h(2, d) for d in range(DMAX + 1)])
    for (q, d), cell in sorted(table.cells.items()):
        if cell.dim_h and q == 2:
            reps = ", ".join(format_multivector(v) for v in cell_multivectors(cell))
            print("    d=%-2d  %s" % (d, reps))
    print("  totals:", table.totals, "stable:", table.stable)
    print()


def main():
    print("Resonances of the book family at c = 1, dmax = %d\n" % DMAX)
    for tau in (Fraction(1), Fraction(1, 2), Fraction(1, 3),
                Fraction(3, 5), Fraction(-2, 3)):
        sweep(tau)
    print("Negative parameters with p = q are special: the weight field")
    print("x dx - y dy is divergence free, so a z-line family survives in")
    print("H^2 and H^3 in every degree:")
    sweep(Fraction(-1))


if __name__ == "__main__":
    main()
