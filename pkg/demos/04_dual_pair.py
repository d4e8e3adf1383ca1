# The flats of the (extended) arrangement produce a basis of the space of
# degree-m polynomials: for each flat X and order j <= i_X, take the product
# of the forms missing X, a degree-j monomial in X's kernel coordinates,
# and a power of X's section form.  Dualizing gives constant-coefficient
# operators; the pairing matrix is exactly the identity.

from arrops import dual_pair, extend, parse_arrangement

arr = parse_arrangement("x1; x2; x3; x1-x2")
pair = dual_pair(extend(arr, 2))

print("degree-2 polynomial basis and dual operators:")
for poly, eta, (direction, j, u) in zip(pair.basis_polys, pair.dual_operators, pair.labels):
    print(f"  flat {direction}, j={j}, u={u}:")
    print(f"      b   = {poly.text()}")
    print(f"      b*  = {eta.text()}")

matrix = pair.pairing_matrix()
size = len(matrix)
identity = all(matrix[i][k] == (1 if i == k else 0) for i in range(size) for k in range(size))
print("\npairing matrix is the identity:", identity)
