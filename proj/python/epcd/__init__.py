"""Two-community detection by extreme points of the projected label cube."""

from ._epcd import (
    EigenSolverError,
    Embedding,
    EpcdError,
    Graph,
    IoError,
    ParseError,
    aep_detect,
    embedding,
    ep_detect,
    largest_connected_component,
    les,
    load_edge_list,
    misclustered_fraction,
    nmi,
    objective,
    parse_edge_list,
    population_spectrum,
    regularizer_tau,
    sample_dcsbm,
    scr,
)

__all__ = [
    "EigenSolverError",
    "Embedding",
    "EpcdError",
    "Graph",
    "IoError",
    "ParseError",
    "aep_detect",
    "embedding",
    "ep_detect",
    "largest_connected_component",
    "les",
    "load_edge_list",
    "misclustered_fraction",
    "nmi",
    "objective",
    "parse_edge_list",
    "population_spectrum",
    "regularizer_tau",
    "sample_dcsbm",
    "scr",
]
