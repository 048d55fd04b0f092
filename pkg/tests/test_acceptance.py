"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

from __future__ import annotations

import random
from collections import Counter

from conftest import record

from leibext import catalog
from leibext.algebra import fingerprint, leibniz_check
from leibext.catalog.families import families_for
from leibext.cohomology import BilinearMap, compute_B2, compute_H2, compute_Z2
from leibext.harness import (
    FAIL,
    INCONCLUSIVE,
    check_automorphisms,
    check_bases,
    check_classification,
    check_lemma,
    check_r_theorem,
)
from leibext.linalg import random_rational
from leibext.orbit import OrbitElement, act


def _dims(rep):
    z, b = compute_Z2(rep), compute_B2(rep)
    return z.dim, b.dim


def _finish(number, problems, ok_text):
    ok = not problems
    record(number, ok, ok_text if ok else f"{len(problems)} problems, first: {problems[0]}")
    assert ok, problems


def test_criterion_01_leibniz_identity_on_every_table():
    entries = catalog.all_entries()
    problems = [e.name for e in entries if not leibniz_check(e.table)[0]]
    _finish(1, problems, f"{len(entries)} tables, zero violations")


def test_criterion_02_r_dimension_counts():
    problems, n_points = [], 0
    for n in (2, 3, 4, 5):
        points = [((0, -n - 1), (n + 2, n + 1))]
        points += [((0, g2), (n + 1, n + 1)) for g2 in (0, 1, -n)]
        points += [((g1, -g1), (n, n)) for g1 in (1, -2)]
        for pt, want in points:
            n_points += 1
            got = _dims(catalog.representation("R", pt, n))
            if got != want:
                problems.append(f"n={n} {pt}: expected {want}, computed {got}")
    _finish(2, problems, f"{n_points} points match")


def _rows_match(algebras):
    problems, pairs = [], Counter()
    for row in catalog.expectations():
        if row.algebra not in algebras:
            continue
        got = _dims(catalog.representation(row.algebra, row.point, row.n))
        pairs[(row.algebra, row.case, got)] += 1
        if got != (row.z2, row.b2):
            problems.append(f"{row.label}: expected {(row.z2, row.b2)}, computed {got}")
    return problems, pairs


def test_criterion_03_h_dimension_counts():
    problems, pairs = _rows_match({"H"})
    per_case = Counter(p[2] for p in pairs)  # one entry per case, generic cases counted once
    want = Counter({(6, 5): 5, (5, 5): 1, (5, 3): 2, (5, 4): 2, (4, 4): 1})
    if per_case != want:
        problems.append(f"case pattern {dict(per_case)} differs from {dict(want)}")
    generic = [k for k, v in pairs.items() if v == 2]
    if len(generic) != 2:
        problems.append(f"generic cases sampled twice: {generic}")
    _finish(3, problems, "eleven cases match, generic cases at two points")


def test_criterion_04_l_dimension_counts():
    problems, pairs = _rows_match({"L1", "L2", "L3"})
    _finish(4, problems, f"{sum(pairs.values())} rows match")


def test_criterion_05_printed_bases_span_z2():
    checks = [c for c in check_bases(0) if c.name.startswith("cocycle basis")]
    problems = [c.name for c in checks if c.status == FAIL]
    _finish(5, problems, f"{len(checks)} printed bases span Z2")


def test_criterion_06_r_extension_end_to_end():
    checks = check_r_theorem(0)
    wanted = ("one-dimensional only", "equals the stored table", "scaling law")
    problems = [f"{c.name}: {c.detail}" for c in checks
                if any(w in c.name for w in wanted) and c.status == FAIL]
    _finish(6, problems, "uniqueness, table and scaling law hold for n=2..5")


def test_criterion_07_classifications_end_to_end():
    checks = check_classification(0)
    problems = [f"{c.name}: {c.detail}" for c in checks if c.status == FAIL]
    # every orbit normalization must land; only invariant comparisons may stay open
    problems += [c.name for c in checks if c.status == INCONCLUSIVE and "normalizes" in c.name]
    swaps = sum("swap automorphism" in c.name for c in checks)
    if swaps != 4:
        problems.append(f"expected 4 swap relations for H, saw {swaps}")
    norm = sum("normalizes" in c.name for c in checks)
    _finish(7, problems, f"{norm} normalizations and {swaps} swaps verified")


def test_criterion_08_nilradical_lemma():
    checks = [c for c in check_lemma(0) + check_r_theorem(0) if c.name.startswith("nilradical lemma")]
    problems = [c.name for c in checks if "LEMMA_VIOLATION" in c.detail or c.status == FAIL]
    _finish(8, problems, f"{len(checks)} extensions, zero LEMMA_VIOLATION")


def test_criterion_09_automorphism_families():
    checks = check_automorphisms(0, count=10)
    problems = [f"{c.name}: {c.detail}" for c in checks if c.status == FAIL]
    _finish(9, problems, f"{len(checks)} family checks pass")


def test_criterion_10_property_suite():
    rng = random.Random(2024)
    problems = []
    rows = catalog.expectations()
    for row in rows:
        rep = catalog.representation(row.algebra, row.point, row.n)
        z, b = compute_Z2(rep), compute_B2(rep)
        if not b.basis <= z.basis:
            problems.append(f"B2 not in Z2 at {row.label}")
        if compute_H2(rep, z, b).dim != z.dim - b.dim:
            problems.append(f"dim H2 at {row.label}")
        fams = families_for(row.algebra, row.n)
        for k in range(8):
            fam = fams[k % len(fams)]
            phi = fam(**{p: random_rational(rng, p in fam.nonzero) for p in fam.params})
            if compute_B2(rep, phi.matrix).basis != b.basis:
                problems.append(f"B2 depends on phi ({fam.name}) at {row.label}")
                break
    for k in range(20):
        name = ("H", "L1", "L2", "L3")[k % 4]
        fams = families_for(name)
        p1, p2 = (f(**{p: random_rational(rng, p in f.nonzero) for p in f.params})
                  for f in (rng.choice(fams), rng.choice(fams)))
        l1, l2 = random_rational(rng, True), random_rational(rng, True)
        row = rng.choice([r for r in rows if r.algebra == name])
        rep = catalog.representation(name, row.point)
        w = BilinearMap.zero(5)
        for r in compute_H2(rep).representatives:
            w = w + r.scaled(random_rational(rng))
        el = OrbitElement(w, rep)
        if act(p1, l1, act(p2, l2, el)) != act(p2.compose(p1), l1 * l2, el):
            problems.append(f"action law fails on {name}")
    for e in catalog.all_entries():
        fp = fingerprint(e.table)
        for _ in range(10):
            perm = list(range(e.table.dim))
            rng.shuffle(perm)
            if fingerprint(e.table.permuted(perm)) != fp:
                problems.append(f"fingerprint of {e.name} not invariant")
                break
    _finish(10, problems, "all properties hold")
