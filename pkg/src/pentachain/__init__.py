"""Pentagonal cylinder and Mobius chain graphs: exact invariants,
spectral decomposition, and brute-force verification."""

from .closed_form import (
    IndexReport,
    gutman,
    index_report,
    kemeny,
    kf_star,
    schultz,
    spanning_trees,
    surd_pair,
)
from .graphs import ChainFamily, ChainGraph, VertexClass, build_chain, export_graph
from .spectral import decompose, decomposed_spectra, laplacian, normalized_laplacian

__all__ = [
    "ChainFamily",
    "ChainGraph",
    "IndexReport",
    "VertexClass",
    "build_chain",
    "decompose",
    "decomposed_spectra",
    "export_graph",
    "gutman",
    "index_report",
    "kemeny",
    "kf_star",
    "laplacian",
    "normalized_laplacian",
    "schultz",
    "spanning_trees",
    "surd_pair",
]

__version__ = "0.1.0"
