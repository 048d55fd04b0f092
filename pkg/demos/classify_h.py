"""Normalize random H^2 classes of the five-dimensional algebra H into the classified list.

Each class is first written in the case's listed basis so the per-case witnesses can be tried.
"""

from __future__ import annotations

import random

from leibext import OrbitElement, compute_H2, normalize_in_orbit
from leibext import catalog
from leibext.catalog.families import families_for
from leibext.catalog.theorems import THEOREM_CASES
from leibext.harness import coordinates, explicit_witnesses, omega_from_text, theorem_targets
from leibext.linalg import format_rational, random_rational

rng = random.Random(1)
targets = theorem_targets("H")
for case in THEOREM_CASES:
    if case.algebra != "H":
        continue
    rep = catalog.representation("H", case.action)
    h2 = compute_H2(rep)
    w = h2.representatives[0].scaled(random_rational(rng, nonzero=True))
    for r in h2.representatives[1:]:
        w = w + r.scaled(random_rational(rng, nonzero=True))
    basis = [omega_from_text(rep.g, t) for t in case.basis]
    d = coordinates(h2.b2.basis, basis, w)
    m = normalize_in_orbit(OrbitElement(w, rep), families_for("H"), targets,
                           explicit=explicit_witnesses(case, d))
    if m.matched:
        delta = ",".join(format_rational(x) for x in m.coords)
        print(f"case {case.case:>4}: -> {m.target}" + (f" (delta={delta})" if delta else "")
              + f" via {m.witness.family}, lam={format_rational(m.witness.lam)}")
    else:
        print(f"case {case.case:>4}: no witness found on the grid")
