"""Skein dimensions against state-space dimensions after the negligible quotient."""

from thinflat.gligible import dims_table
from thinflat.poly import Poly2
from thinflat.series import RationalForm, geometric, syntactic_algebra

examples = {
    "ones": geometric(1, 1, 1),
    "T2": RationalForm.make(Poly2.monomial(0, 1)),
    "mixed": RationalForm.make(Poly2({(0, 0): 1, (1, 1): 1}), (1, 0, -1), (1, -1)),
}
for name, z in examples.items():
    alg = syntactic_algebra(z)
    print(f"{name} (d={alg.d})")
    print("  n  skein  state")
    for n, s, t in dims_table(alg, 3, cap=6):
        print(f"  {n}  {s:5}  {t:5}")
