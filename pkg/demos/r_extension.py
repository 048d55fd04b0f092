"""Walk through the one-dimensional extension of the solvable algebra R with nilradical NF_n."""

from __future__ import annotations

import sys
from fractions import Fraction

from leibext import OrbitElement, act, build_extension, compute_H2, fingerprint, leibniz_check
from leibext import catalog
from leibext.catalog.families import r_family
from leibext.harness import r_theorem_spec

n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
print(f"R with nilradical NF_{n}")
for pt in [(0, -n - 1), (0, 0), (0, 1), (1, -1)]:
    h2 = compute_H2(catalog.representation("R", pt, n))
    print(f"  action {pt}: dim Z2={h2.z2.dim}, dim B2={h2.b2.dim}, dim H2={h2.dim}")

spec = r_theorem_spec(n)
ext = build_extension(spec)
print("extension is Leibniz:", leibniz_check(ext)[0])
print("equals stored table:", ext == catalog.get("R_hat", n=n).table)
print("fingerprint:", fingerprint(ext))

# scaling omega by 6 and normalizing back with a = 1, lam = 1/6
el = OrbitElement(spec.omega.scaled(6), spec.rep)
back = act(r_family(n)(a=1), Fraction(1, 6), el)
print("normalized coefficient:", back.omega.value(n - 1, 0)[0])
