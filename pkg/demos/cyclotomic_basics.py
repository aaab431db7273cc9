"""Exact scalar arithmetic: roots of unity, q-integers, small linear algebra.

Run:  python3 demos/cyclotomic_basics.py
"""

from hopfcheck.cyclotomic import Cyclotomic, q_factorial, q_int, root_of_unity
from hopfcheck.linalg import Matrix, invert_matrix, kernel, minimal_polynomial

zeta = root_of_unity(12)
print("zeta_12 =", zeta.pretty())
print("zeta_12^6 =", (zeta**6).pretty(), " (exactly -1)")
print("1/(1 + zeta_12) =", (Cyclotomic.one() + zeta).inverse().pretty())

xi = root_of_unity(3)
print("\nq-integers at xi = zeta_3:")
for n in range(4):
    print(f"  ({n})_xi = {q_int(n, xi).pretty()}   ({n})_xi! = {q_factorial(n, xi).pretty()}")

c = Cyclotomic.coerce
m = Matrix([[c(1), xi, c(0)], [c(0), c(1), xi**2], [xi, c(0), c(1)]], ncols=3)
print("\n3x3 matrix over Q(zeta_3):")
print("  minimal polynomial coefficients:", [t.pretty() for t in minimal_polynomial(m)])
print("  kernel dimension:", kernel(m).dim)
inv = invert_matrix(m)
print("  M^-1 M == I:", inv @ m == Matrix.identity(3))
