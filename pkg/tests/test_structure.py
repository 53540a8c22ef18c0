import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from poeg.catalog import parse_group_descriptor
from poeg.graph import Graph, build_poeg
from poeg.groups import UnsupportedOperation, construct_group, cyclic, dihedral
from poeg.structure import (
    clique_closed_form_abelian,
    detect_forbidden_2group_subgroups,
    elementary_abelian_rank,
    generated_subgroup,
    is_planar,
    max_clique,
    planar_by_minors,
    planarity_necessary_condition,
    to_networkx,
    two_group_sufficiency_check,
)


def group(desc):
    return construct_group(parse_group_descriptor(desc))


small_graphs = st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.lists(
    st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=28)))


@settings(max_examples=120, deadline=None)
@given(small_graphs)
def test_planarity_matches_minor_oracle(data):
    n, edges = data
    g = Graph.from_edges(n, edges)
    assert is_planar(g).planar == planar_by_minors(g)


def test_minor_oracle_on_classics():
    k5 = Graph.complete(5)
    k33 = Graph.from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert not planar_by_minors(k5) and not planar_by_minors(k33)
    assert planar_by_minors(Graph.from_edges(8, [(u, v) for u, v in nx.convert_node_labels_to_integers(
        nx.hypercube_graph(3)).edges()]))


@pytest.mark.parametrize("desc", ["Z:5", "Z:8", "Dic:2", "Z:4xZ:2", "Z:3", "Z:7", "D:4", "Z:6"])
def test_poeg_planarity_matches_minor_oracle(desc):
    g = build_poeg(group(desc))
    assert is_planar(g).planar == planar_by_minors(g)


def test_planarity_witness():
    res = is_planar(build_poeg(group("Z:7")), witness=True)
    assert not res.planar
    res = is_planar(Graph.from_edges(3, [(0, 1), (1, 2)]), witness=True)
    assert res.planar and res.witness is not None


def test_edge_bound_shortcut():
    assert is_planar(build_poeg(group("A4"))).method == "edge-bound"


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.lists(
    st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=50))))
def test_max_clique_matches_networkx(data):
    n, edges = data
    g = Graph.from_edges(n, edges)
    res = max_clique(g)
    assert res.omega == max(len(c) for c in nx.find_cliques(to_networkx(g)))
    assert all(g.adjacency[a, b] for a, b in itertools.combinations(res.witness, 2))


def test_max_clique_deterministic():
    g = build_poeg(group("Z:3xZ:3"))
    assert max_clique(g) == max_clique(g)
    assert max_clique(Graph.from_edges(0, [])).omega == 0


@pytest.mark.parametrize("desc,omega", [("Z:2xZ:2xZ:2", 8), ("Z:3xZ:3", 5), ("Z:25", 3),
                                        ("Z:9xZ:3", 5), ("Z:5xZ:5xZ:5", 63)])
def test_clique_spot_values(desc, omega):
    G = group(desc)
    assert max_clique(build_poeg(G)).omega == omega == clique_closed_form_abelian(G)


def test_rank():
    assert elementary_abelian_rank(group("Z:9"), 3) == 1
    assert elementary_abelian_rank(group("Z:4xZ:2xZ:3"), 2) == 2
    with pytest.raises(UnsupportedOperation):
        elementary_abelian_rank(group("D:4"), 2)
    with pytest.raises(ValueError):
        clique_closed_form_abelian(group("Z:6"))


def test_generated_subgroup():
    G = construct_group(dihedral(4))
    assert len(generated_subgroup(G, [1])) == 4
    assert len(generated_subgroup(G, [1, 4])) == 8


@pytest.mark.parametrize("desc,d4,z23", [
    ("D:4", True, False), ("Z:2xZ:2xZ:2", False, True), ("Dic:2", False, False),
    ("Z:8xZ:2", False, False), ("D:4xZ:2", True, True), ("Dic:2xZ:2", False, False),
    ("D:8", True, False), ("Z:16", False, False),
])
def test_forbidden_subgroups(desc, d4, z23):
    flags = detect_forbidden_2group_subgroups(group(desc))
    assert (flags["has_D4"], flags["has_Z2cubed"]) == (d4, z23)


def test_forbidden_requires_two_group():
    with pytest.raises(ValueError):
        detect_forbidden_2group_subgroups(group("Z:6"))


@pytest.mark.parametrize("desc,clause", [
    ("Z:5", "Z5"), ("Z:27", "cyclic 3-group"), ("Z:9", "cyclic 3-group"),
    ("Dic:2", "2-group with 1 or 3 involutions"), ("Z:8xZ:2", "2-group with 1 or 3 involutions"),
    ("Dic:3", "2^m 3^n with unique subgroups of order 2 and 3"), ("Z:6", "2^m 3^n with unique subgroups of order 2 and 3"),
    ("Z:7", None), ("Z:3xZ:3", None), ("D:4", None),
])
def test_planarity_clause(desc, clause):
    assert planarity_necessary_condition(group(desc))["clause"] == clause


def test_sufficiency_census():
    rec = two_group_sufficiency_check(group("Dic:2xZ:2"))
    assert rec["hypothesis"] and rec["planar"] and rec["passed"]
    assert rec["census"] == [("CLIQUE(4)", 1), ("CYCLE4", 3)]
    rec = two_group_sufficiency_check(group("Z:16"))
    assert rec["passed"] and rec["degenerate"] == [("CLIQUE(1)", 2), ("CLIQUE(2)", 6)]
    rec = two_group_sufficiency_check(group("D:4"))
    assert not rec["hypothesis"] and rec["passed"]
