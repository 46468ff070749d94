"""From a rational series to its syntactic algebra and back."""

from thinflat.poly import Poly2
from thinflat.series import (
    RationalForm,
    as_frobenius,
    coeff_table,
    fit_rational,
    frobenius_to_rational,
    rational_equal,
    syntactic_algebra,
)

z = RationalForm.make(Poly2({(0, 0): 1, (1, 1): 1}), (1, 0, -1), (1, -1))
print("Z =", z)
alg = syntactic_algebra(z)
print("d =", alg.d, "basis =", alg.basis)
print("q1 =", [str(c) for c in alg.q1], "q2 =", [str(c) for c in alg.q2])

back = frobenius_to_rational(as_frobenius(alg))
print("Frobenius round trip equal:", rational_equal(back, z))

table = coeff_table(z, 6, 6)
fitted = fit_rational(table, (2, 1, 1, 1))
print("refit from a 6x6 table:", fitted, "equal:", fitted is not None and rational_equal(fitted, z))
