"""Algorithms for 3-uniform hypergraphs without linear cycles."""

from lcfree.core import (
    Hypergraph,
    LinkGraph,
    Matching,
    induced,
    is_independent,
    link_graph,
    maximum_matching,
    min_strong_degree,
    new_hypergraph,
    strong_degree,
)
from lcfree.cycles import CycleCertificate, find_linear_cycle, verify_cycle
from lcfree.construct import independent_two_fifths, rho_partition, three_coloring

__all__ = [
    "CycleCertificate",
    "Hypergraph",
    "LinkGraph",
    "Matching",
    "find_linear_cycle",
    "independent_two_fifths",
    "induced",
    "is_independent",
    "link_graph",
    "maximum_matching",
    "min_strong_degree",
    "new_hypergraph",
    "rho_partition",
    "strong_degree",
    "three_coloring",
    "verify_cycle",
]
