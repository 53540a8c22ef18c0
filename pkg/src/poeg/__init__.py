"""Prime order element graphs of finite groups: exact spectra, partitions, planarity and cliques."""

from .catalog import parse_group_descriptor
from .graph import Graph, build_cayley_sum, build_poeg, classify_component, component_census, components
from .groups import (
    Group,
    GroupSpec,
    construct_group,
    cyclic,
    dicyclic,
    dihedral,
    product,
)
from .polynomial import IntPolynomial, char_poly, integer_root_factorization
from .spectra import (
    SpectrumReport,
    integrality_verdict,
    laplacian_spectrum_abelian,
    lspec_zn_odd_eigenvalue_set,
    lspec_zpr_closed_form,
    order_partition,
)
from .structure import is_planar, max_clique

__all__ = [
    "Graph", "Group", "GroupSpec", "IntPolynomial", "SpectrumReport",
    "build_cayley_sum", "build_poeg", "char_poly", "classify_component", "component_census",
    "components", "construct_group", "cyclic", "dicyclic", "dihedral", "integer_root_factorization",
    "integrality_verdict", "is_planar", "laplacian_spectrum_abelian", "lspec_zn_odd_eigenvalue_set",
    "lspec_zpr_closed_form", "max_clique", "order_partition", "parse_group_descriptor", "product",
]
