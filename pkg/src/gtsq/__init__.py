"""Generalized tree shifts and the spectra of q-Laplacian-type tree matrices."""

from .exactpoly import BiPoly, aux_poly, charpoly
from .gts import HasseDiagram, ShiftSite, apply_shift, build_hasse, shift_sites
from .matrices import exp_distance, exp_distance_qt, q_laplacian, qt_laplacian
from .spectra import Spectrum, eigen, herm_eigen, poly_roots, sym_eigen
from .trees import LabelledTree, TreeCode, canonical_code, decode, enumerate_trees

__all__ = [
    "BiPoly",
    "HasseDiagram",
    "LabelledTree",
    "ShiftSite",
    "Spectrum",
    "TreeCode",
    "apply_shift",
    "aux_poly",
    "build_hasse",
    "canonical_code",
    "charpoly",
    "decode",
    "eigen",
    "enumerate_trees",
    "exp_distance",
    "exp_distance_qt",
    "herm_eigen",
    "poly_roots",
    "q_laplacian",
    "qt_laplacian",
    "shift_sites",
    "sym_eigen",
]
