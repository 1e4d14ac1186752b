"""Eccentricity matrices of graphs: construction, spectra, exact inertia and verification sweeps."""

from .closed_forms import (
    FamilySpectrum,
    barbell_spectrum,
    block_a_spectrum,
    cocktail_spectrum,
    cone_spectrum,
    corona_spectrum,
    join_ecc_matrix,
    multipartite_spectrum,
    star_spectrum,
    wheel_spectrum,
)
from .formats import parse_edge_list, parse_graph6, to_graph6
from .graph import Graph, GraphError, complement, corona, enumerate_labeled_trees, family, join, make_graph
from .linalg import Inertia, Spectrum, charpoly_exact, eig_symmetric, inertia_exact, jacobi_eigenvalues
from .metric import DisconnectedGraphError, apsp, eccentricity_matrix, is_irreducible, support_graph
from .surd import Surd

__version__ = "0.1.0"
