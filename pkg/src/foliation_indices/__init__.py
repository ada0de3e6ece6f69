"""Exact local and global indices of holomorphic foliations with invariant hypersurfaces."""

from .chern import GlobalData, identity_sweep
from .indices import (
    IndexRefusal,
    LocalContext,
    NotInvariant,
    PointIndices,
    RegularPoint,
    UncertifiedDimension,
    compute_indices,
    germ_indices,
)
from .localalgebra import GroebnerBasis, buchberger, local_dim, truncated_quotient_dim
from .oracle import oracle_quotient_dim
from .parser import ParseError, format_polynomial, parse_polynomial, parse_scenario
from .polynomial import Polynomial, VectorField
from .verify import IndexReport, Scenario, foliation_degree_affine, load_scenario, run_scenario

__all__ = [
    "GlobalData",
    "GroebnerBasis",
    "IndexRefusal",
    "IndexReport",
    "LocalContext",
    "NotInvariant",
    "ParseError",
    "PointIndices",
    "Polynomial",
    "RegularPoint",
    "Scenario",
    "UncertifiedDimension",
    "VectorField",
    "buchberger",
    "compute_indices",
    "foliation_degree_affine",
    "format_polynomial",
    "germ_indices",
    "identity_sweep",
    "load_scenario",
    "local_dim",
    "oracle_quotient_dim",
    "parse_polynomial",
    "parse_scenario",
    "run_scenario",
    "truncated_quotient_dim",
]

__version__ = "0.1.0"
