import math
from collections import Counter

import pytest

from poeg.catalog import (
    DescriptorError,
    abelian_groups,
    abelian_groups_up_to,
    abelian_p_groups_up_to,
    default_catalog,
    parse_group_descriptor,
    two_group_catalog,
)
from poeg.groups import construct_group, cyclic, dicyclic, dihedral, product
from poeg.numtheory import factorize

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15]


def test_parse_examples():
    assert parse_group_descriptor("Z:315") == cyclic(315)
    assert parse_group_descriptor("Z:2xZ:4") == product(cyclic(2), cyclic(4))
    assert parse_group_descriptor("D:4") == dihedral(4) and dihedral(4).order == 8
    assert parse_group_descriptor("Dic:2") == dicyclic(2)
    assert parse_group_descriptor("A4").order == 12
    assert parse_group_descriptor("Z:3xA4").order == 36


@pytest.mark.parametrize("bad", ["Z", "Z:", "Q:8", "Z:3x", "Z:0", "D:1", "table:", "Z:3yZ:4"])
def test_parse_errors_name_token(bad):
    with pytest.raises(DescriptorError) as e:
        parse_group_descriptor(bad)
    assert "grammar" in str(e.value) or "bad token" in str(e.value)


def test_descriptor_roundtrip():
    for spec in default_catalog(30):
        assert parse_group_descriptor(spec.descriptor()) == spec


@pytest.mark.parametrize("n", range(2, 101))
def test_abelian_count(n):
    expected = math.prod(PARTITION_NUMBERS[e] for _, e in factorize(n))
    groups = abelian_groups(n)
    assert len(groups) == expected
    assert all(g.order == n for g in groups)


@pytest.mark.parametrize("n", [8, 16, 27, 32, 64, 81])
def test_abelian_classes_distinct(n):
    # element-order statistics separate abelian groups of prime-power order
    stats = [tuple(sorted(Counter(construct_group(s).orders.tolist()).items())) for s in abelian_groups(n)]
    assert len(set(stats)) == len(stats)


def test_catalog_sizes():
    assert len(abelian_groups_up_to(100)) == 184
    assert len(abelian_p_groups_up_to(128)) == 64
    names = [s.descriptor() for s in default_catalog(100)]
    assert len(names) == len(set(names))
    assert "A4" in names and "D:16" in names and "Dic:8" in names


def test_two_group_catalog():
    specs = two_group_catalog(64)
    assert all(s.order & (s.order - 1) == 0 and s.order <= 64 for s in specs)
    assert "Dic:2xZ:2" in [s.descriptor() for s in specs]
