"""Second-order obstructions for two explicit deformation families.

A bivector w is Poisson exactly when [w, w] = 0.  Adding a perturbation to
a Poisson bivector produces a self-bracket that obstructs the deformation;
for these two families the engine knows a closed form for that obstruction
and checks it against the general bracket machinery.

Run with:  python3 demos/deformation_obstructions.py
"""

from fractions import Fraction

from poisson3 import (
    Algebra,
    Polynomial,
    coboundary_witness,
    deformation_identity_check,
    format_multivector,
    linear_poisson,
    parse_multivector,
    poisson_differential,
)


def show(family, first, second, note):
    check = deformation_identity_check(family, first, second)
    print("family %r, %s" % (family, note))
    print("  deformed  w = %s" % format_multivector(check.deformed))
    print("  [w, w]      = %s" % format_multivector(check.bracket))
    print("  closed form = %s" % format_multivector(check.closed_form))
    print("  residual    = %s" % format_multivector(check.residual))
    assert check.residual.is_zero()
    print()


def main():
    x2 = Polynomial.monomial((2, 0, 0))
    y2 = Polynomial.monomial((0, 2, 0))
    show("heisenberg", x2, y2, "g1 = x^2, g2 = y^2")
    show("heisenberg", x2, x2, "symmetric data, obstruction cancels")

    u = Polynomial.variable(0)  # radial profile f(u) = u
    z = Polynomial.variable(2)
    show("euclidean", u, z, "f(u) = u, g = z")

    print("A vanishing obstruction does not mean the perturbation is trivial;")
    print("exactness is decided by a witness search.  For the symmetric book")
    print("structure the euler bivector is a coboundary:")
    pi = linear_poisson(Algebra("book", Fraction(1)))
    target = parse_multivector("x*dx^dz + y*dy^dz")
    witness = coboundary_witness(pi, target)
    print("  [pi, %s] = %s" % (
        format_multivector(witness), format_multivector(target)))
    assert poisson_differential(pi, witness) == target


if __name__ == "__main__":
    main()
