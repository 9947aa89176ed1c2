"""Exact τ-vectors of simplicial complexes: averaged Betti numbers of induced subcomplexes."""
from __future__ import annotations

from .bounds import BoundRow, figure5_table, mu_bound_pair, tightness_inequalities
from .canon import CanonicalForm, canonical_form, isomorphic
from .catalog import CatalogEntry, CatalogParseError, batch_tau, bl_match_census, parse_facet_list, serialize
from .complex import ComplexError, FaceVectors, SimplicialComplex, join
from .constructions import (
    billera_lee,
    billera_lee_3sphere,
    boundary_simplex,
    connected_sum,
    cycle,
    cycle_join,
    cyclic_polytope_boundary,
    lower_cyclic_facets,
    simplex_join,
    stack,
    stacked_sphere,
)
from .flips import Flip, apply_flip, enumerate_flips, flip_explore
from .graphs import Graph, bl_graph, bl_tau0, peo_bound, tau0_bounds_strongly_connected, tau0_graph
from .homology import inclusion_injective, is_tight, reduced_betti
from .identities import closed_form_tau, g2_one_bounds, verify_identities
from .linalg import GF2, QQ, Field
from .tau import (
    CapExceeded,
    hochster_table,
    mu_vector,
    sigma_vector,
    tau_from_table,
    tau_vector,
    tightness_report,
)
from .vectors import BettiVector, TauVector

__all__ = [
    "BettiVector", "BoundRow", "CanonicalForm", "CapExceeded", "CatalogEntry", "CatalogParseError",
    "ComplexError", "FaceVectors", "Field", "Flip", "GF2", "Graph", "QQ", "SimplicialComplex", "TauVector",
    "apply_flip", "batch_tau", "billera_lee", "billera_lee_3sphere", "bl_graph", "bl_match_census", "bl_tau0",
    "boundary_simplex", "canonical_form", "closed_form_tau", "connected_sum", "cycle", "cycle_join",
    "cyclic_polytope_boundary", "enumerate_flips", "figure5_table", "flip_explore", "g2_one_bounds",
    "hochster_table", "inclusion_injective", "is_tight", "isomorphic", "join", "lower_cyclic_facets",
    "mu_bound_pair", "mu_vector", "parse_facet_list", "peo_bound", "reduced_betti", "serialize",
    "sigma_vector", "simplex_join", "stack", "stacked_sphere", "tau0_bounds_strongly_connected",
    "tau0_graph", "tau_from_table", "tau_vector", "tightness_inequalities", "tightness_report",
    "verify_identities",
]
