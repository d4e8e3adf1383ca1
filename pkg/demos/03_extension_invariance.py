# The construction at order m extends the arrangement to m + 2 hyperplanes.
# The extension is a free choice: any distinct hyperplanes work, and the
# exponent multiset cannot depend on it.  This demo builds the order-3
# basis three ways and checks the exact counting identities that make the
# bookkeeping come out right.

from arrops import basis_3arr, check_identities, extend, parse_arrangement
from arrops.extension import hyperplanes_from_forms

arr = parse_arrangement("x1; x2; x3; x1-x2")

for label, forms in [("auto", None), ("x1+x2", ["x1+x2"]), ("x1+x2-x3", ["x1+x2-x3"])]:
    ext = extend(arr, 3, hyperplanes_from_forms(forms) if forms else None)
    fb = basis_3arr(arr, 3, ext)
    print(
        f"extension {label:>10}: added {[h.text() for h in ext.added]},",
        f"generic = {ext.condition_a}, exponents = {list(fb.exponents)}",
    )

# The identities behind the scenes: the per-flat capacities add up to the
# module rank, and a double count of (plane, extended plane) incidences
# matches (n_extended - 1) * n.  When the added hyperplanes are generic the
# flat count of the extension is also predicted exactly.
print()
for label, forms in [("auto", None), ("x1+x2-x3", ["x1+x2-x3"])]:
    ext = extend(arr, 3, hyperplanes_from_forms(forms) if forms else None)
    print(f"identities for {label}:", check_identities(ext))
