import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from poeg.groups import (
    InvalidGroupTable,
    UnsupportedOperation,
    atom,
    bundled_a4,
    character_sum_S,
    character_sum_S_float,
    character_indices,
    construct_group,
    cyclic,
    dicyclic,
    dihedral,
    element_order_abelian,
    element_order_by_powers,
    format_cayley_table,
    p_torsion,
    parse_cayley_table,
    prime_order_set,
    product,
)


def test_trivial_group():
    G = construct_group(cyclic(1))
    assert G.order == 1 and G.orders.tolist() == [1]


def test_product_shape_and_order():
    G = construct_group(product(cyclic(2), cyclic(4)))
    assert G.order == 8 and G.abelian_shape == (2, 4)
    assert G.exponent == 4


def test_bad_specs():
    with pytest.raises(ValueError):
        cyclic(0)
    with pytest.raises(ValueError):
        dihedral(1)
    with pytest.raises(ValueError):
        dicyclic(1)


def test_dihedral_orders():
    G = construct_group(dihedral(4))
    assert G.order == 8 and not G.is_abelian
    assert sorted(G.orders.tolist()) == [1, 2, 2, 2, 2, 2, 4, 4]


def test_quaternion_has_one_involution():
    G = construct_group(dicyclic(2))
    assert sorted(G.orders.tolist()) == [1, 2, 4, 4, 4, 4, 4, 4]
    G16 = construct_group(dicyclic(4))
    assert int((G16.orders == 2).sum()) == 1


def test_a4_orders():
    G = construct_group(bundled_a4())
    assert G.order == 12
    assert sorted(G.orders.tolist()) == [1, 2, 2, 2] + [3] * 8


@pytest.mark.parametrize("spec", [cyclic(12), product(cyclic(3), cyclic(9)), dihedral(6),
                                  dicyclic(3), bundled_a4(), product(dicyclic(2), cyclic(2))])
def test_group_axioms(spec):
    G = construct_group(spec)
    T = G.table.astype(np.int64)
    n = G.order
    assert (T[0] == np.arange(n)).all() and (T[:, 0] == np.arange(n)).all()
    assert all(sorted(row) == list(range(n)) for row in T.tolist())
    for a in range(n):
        assert (T[T[a]] == T[a][T]).all()
    for g in range(n):
        assert G.op(g, G.inverse(g)) == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=3))
def test_orders_three_ways(shape):
    G = construct_group(product(*(cyclic(n) for n in shape)))
    for g in range(G.order):
        o = int(G.orders[g])
        assert o == element_order_by_powers(G, g) == element_order_abelian(G, g)


def test_coords_roundtrip():
    G = construct_group(product(cyclic(3), cyclic(4)))
    assert G.coords(7) == (1, 3)
    assert all(G.index_of(G.coords(g)) == g for g in range(G.order))


def test_p_torsion_size():
    G = construct_group(product(cyclic(2), cyclic(4), cyclic(3)))
    assert len(p_torsion(G, 2)) == 4
    assert len(p_torsion(G, 3)) == 3
    with pytest.raises(ValueError):
        p_torsion(G, 4)
    with pytest.raises(UnsupportedOperation):
        p_torsion(construct_group(dihedral(3)), 2)


def test_atoms_partition_group():
    G = construct_group(product(cyclic(4), cyclic(6)))
    seen = set()
    for g in range(G.order):
        a = atom(G, g)
        assert g in a
        if min(a) == g:
            assert not (a & seen)
            seen |= a
    assert seen == set(range(G.order))


def test_prime_order_set_z8():
    G = construct_group(cyclic(8))
    assert prime_order_set(G) == {4}


@pytest.mark.parametrize("shape", [(9,), (2, 4), (3, 3), (15,), (2, 2, 6)])
def test_character_sum_rule_matches_float_sum(shape):
    G = construct_group(product(*(cyclic(n) for n in shape)))
    for t in character_indices(G):
        assert abs(character_sum_S(G, t) - character_sum_S_float(G, t)) < 1e-9


def test_character_sum_rejects_bad_index():
    G = construct_group(cyclic(5))
    with pytest.raises(ValueError):
        character_sum_S(G, (5,))


def test_cayley_table_roundtrip(tmp_path):
    G = construct_group(dihedral(3))
    text = format_cayley_table(G.table)
    order, table = parse_cayley_table(text)
    assert order == 6 and (table == G.table).all()
    p = tmp_path / "s3.json"
    p.write_text(json.dumps({"order": 6, "table": G.table.tolist()}))
    from poeg.groups import cayley_table
    H = construct_group(cayley_table(p))
    assert sorted(H.orders.tolist()) == [1, 2, 2, 2, 3, 3]


def test_invalid_tables_name_the_axiom():
    bad_identity = "order: 2\ntable:\n1 0\n0 1\n"
    with pytest.raises(InvalidGroupTable) as e:
        parse_cayley_table(bad_identity)
    assert e.value.axiom == "identity"
    # a loop that is not associative
    loop = np.array([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3],
                     [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])
    with pytest.raises(InvalidGroupTable) as e:
        parse_cayley_table(format_cayley_table(loop))
    assert e.value.axiom == "associativity"
    with pytest.raises(InvalidGroupTable) as e:
        parse_cayley_table("order: 2\ntable:\n0 1\n1 5\n")
    assert e.value.axiom == "closure"
