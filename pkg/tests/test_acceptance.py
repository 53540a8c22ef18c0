"""Acceptance criteria, one test each; ``conftest.py`` prints a pass/fail line per criterion."""

import json
import time

from poeg.catalog import abelian_groups_up_to, abelian_p_groups_up_to, default_catalog, parse_group_descriptor
from poeg.graph import build_poeg, components
from poeg.groups import construct_group, cyclic
from poeg.numtheory import factorize
from poeg.polynomial import IntPolynomial, integer_root_factorization
from poeg.report import RunReport
from poeg.spectra import (
    ADJACENCY,
    LAPLACIAN,
    integrality_verdict,
    is_equitable,
    laplacian_spectrum_abelian,
    lspec_zn_odd_eigenvalue_set,
    lspec_zpr_closed_form,
    order_partition,
)
from poeg.structure import clique_closed_form_abelian, max_clique
from poeg.suites import (
    Z315_SET,
    Z105_SET,
    quotient_checks,
    run_suite,
    suite_planarity,
)


def criterion(n, title):
    def mark(fn):
        fn.criterion = n
        fn.title = title
        return fn
    return mark


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def group(desc):
    return construct_group(parse_group_descriptor(desc))


@criterion(1, "Z5 quotient matrix and x^2 - 2x - 4")
def test_c01_z5_quotient():
    with Timer() as t:
        G = group("Z:5")
        g = build_poeg(G)
        ok, Q = is_equitable(g, order_partition(G))
        poly = Q.char_poly()
        roots, residual = integer_root_factorization(poly)
    assert ok and Q.b == ((0, 4), (1, 2))
    assert poly == IntPolynomial((-4, -2, 1))
    assert roots == [] and residual == poly
    assert t.elapsed < 1.0


@criterion(2, "adjacency integrality sweep")
def test_c02_adjacency_sweep():
    with Timer() as t:
        two = run_suite("integral-2group", 128)
        odd = run_suite("irrational-cyclic-p", 343)
    assert two.failed == 0 and two.passed > 0
    assert sum(c.check == "adjacency integral" for c in two.checks) == 44
    assert odd.failed == 0
    assert {c.group for c in odd.checks if c.check == "irrational adjacency eigenvalue"} == {
        "Z:3", "Z:9", "Z:27", "Z:81", "Z:243", "Z:5", "Z:25", "Z:125", "Z:7", "Z:49", "Z:343"}
    assert sum(c.check == "quotient divides char poly" for c in odd.checks) == 11
    assert t.elapsed < 60


@criterion(3, "Laplacian integrality sweep, engine = brute force")
def test_c03_laplacian_sweep():
    with Timer() as t:
        res = run_suite("laplacian-abelian", 100)
    assert res.failed == 0
    assert sum(c.check == "character engine matches" and c.passed for c in res.checks) == len(abelian_groups_up_to(100))
    assert t.elapsed < 120


@criterion(4, "L-spec of Z9 and Z27")
def test_c04_lspec_z9_z27():
    expected = {9: ((0, 2), (1, 3), (3, 3), (4, 1)), 27: ((0, 5), (1, 9), (3, 9), (4, 4))}
    for n, r in ((9, 2), (27, 3)):
        assert lspec_zpr_closed_form(3, r).eigenvalues == expected[n]
        assert laplacian_spectrum_abelian(construct_group(cyclic(n))).eigenvalues == expected[n]


@criterion(5, "Z315 and Z105 Laplacian eigenvalue sets")
def test_c05_z315_z105():
    with Timer() as t:
        for n, expected in ((315, Z315_SET), (105, Z105_SET)):
            assert lspec_zn_odd_eigenvalue_set(factorize(n)) == expected
            assert laplacian_spectrum_abelian(construct_group(cyclic(n))).values == expected
    assert Z315_SET == {0, 3, 5, 7, 8, 9, 10, 12, 14, 15, 16, 17, 19, 21, 24}
    assert t.elapsed < 30


@criterion(6, "planarity verdicts and necessary clauses")
def test_c06_planarity():
    with Timer() as t:
        res = suite_planarity(100)
    expected = [c for c in res.checks if c.check == "expected verdict"]
    assert len(expected) == 11 and all(c.passed for c in expected)
    implied = [c for c in res.checks if c.check == "planar implies a listed clause"]
    assert len(implied) == len(default_catalog(100)) and all(c.passed for c in implied)
    assert t.elapsed < 10


@criterion(7, "2-group sufficiency census")
def test_c07_two_group_sufficiency():
    with Timer() as t:
        res = suite_planarity(100)
    checks = [c for c in res.checks if c.check == "2-group sufficiency"]
    assert checks and all(c.passed for c in checks)
    allowed = {"CLIQUE(1)", "CLIQUE(2)", "CLIQUE(4)", "CYCLE4", "CUBE"}
    for c in checks:
        assert {label for label, _ in c.detail["census"]} <= allowed
    assert t.elapsed < 30


@criterion(8, "clique number closed forms")
def test_c08_clique():
    with Timer() as t:
        res = run_suite("clique", 128)
        spots = {d: max_clique(build_poeg(group(d))).omega for d in ("Z:2xZ:2xZ:2", "Z:3xZ:3", "Z:25")}
    assert res.failed == 0 and res.passed == len(abelian_p_groups_up_to(128))
    assert spots == {"Z:2xZ:2xZ:2": 8, "Z:3xZ:3": 5, "Z:25": 3}
    assert all(clique_closed_form_abelian(group(d)) == w for d, w in spots.items())
    assert t.elapsed < 60


@criterion(9, "trace, kernel and quotient divisibility properties")
def test_c09_properties():
    bad = []
    for spec in default_catalog(100):
        G = construct_group(spec)
        g = build_poeg(G)
        adj = integrality_verdict(g, ADJACENCY)
        lap = integrality_verdict(g, LAPLACIAN)
        if adj.trace() != 0 or lap.trace() != 2 * g.edge_count:
            bad.append((spec.descriptor(), "trace"))
        if lap.multiplicity(0) != len(components(g)):
            bad.append((spec.descriptor(), "kernel"))
        q = quotient_checks(G, g)
        if not all(v for k, v in q.items() if k.endswith("divides")):
            bad.append((spec.descriptor(), "divisibility"))
    assert bad == []


@criterion(10, "conjecture findings report")
def test_c10_conjectures():
    with Timer() as t:
        first = run_suite("conjectures", 100)
        second = run_suite("conjectures", 100)
    assert first.ok and first.failed == 0 and first.passed == 0
    assert all(c.passed is None and isinstance(c.detail["holds"], bool) for c in first.checks)

    def report(res):
        return RunReport(["verify", "conjectures"], None, [c.to_dict() for c in res.sorted_checks()],
                         res.tallies()).to_json(wall_time=False)

    assert report(first) == report(second)
    doc = json.loads(report(first))
    assert doc["tallies"]["findings"] == len(first.checks) > 0
    assert t.elapsed < 240  # two sweeps, each under 120 s
