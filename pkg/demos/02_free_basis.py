# Constructing an explicit free basis of the module of order-m operators
# that preserve the ideal of the defining polynomial, for m >= n - 2.
# Each basis element comes from a flat X and an order j <= i_X: it is the
# product of the forms missing X, an order-j pencil operator, and a power
# of X's direction derivation.

from arrops import basis_3arr, parse_arrangement

arr = parse_arrangement("x1; x2; x3; x1-x2")

fb = basis_3arr(arr, 2)
print("order m = 2, module rank =", len(fb.operators))
print("exponents:", list(fb.exponents))
print("determinant certificate: det = c * Q^t with c =", fb.saito.c, ", t =", fb.saito.t)
print()
for op, deg, prov in zip(fb.operators, fb.degrees, fb.provenance):
    tag = f"flat {tuple(prov['flat_direction'])}, j={prov['j']}"
    print(f"  deg {deg}  [{tag}]  {op.text()}")

# The same machinery at m = 3 needs one extra hyperplane (chosen
# automatically from an integer family that misses every current flat).
fb3 = basis_3arr(arr, 3)
print("\norder m = 3, exponents:", list(fb3.exponents))
print("certificate exponent t =", fb3.saito.t, "(equals the rank of the order-2 module)")

# Degenerate (rank <= 2) arrangements factor through a 2-variable problem
# and are free at every order.
from arrops import basis_nonessential

pencil = parse_arrangement("x1; x2; x1-x2", dim=3)
fb_p = basis_nonessential(pencil, 2)
print("\nrank-2 arrangement at m = 2, exponents:", list(fb_p.exponents))
