"""Exact computation of the cyclic orders of twisted K-homology of compact simple Lie groups."""

from .orders import GroupSpec, closed_form_order, cross_check
from .rootrep import build_root_system, holo_induce_dim, to_dominant, weyl_dim
from .snf import smith_normal_form
from .tate import TateSpec, build_complex, homology, koszul_reference

__all__ = [
    "GroupSpec",
    "closed_form_order",
    "cross_check",
    "build_root_system",
    "holo_induce_dim",
    "to_dominant",
    "weyl_dim",
    "smith_normal_form",
    "TateSpec",
    "build_complex",
    "homology",
    "koszul_reference",
]

__version__ = "0.1.0"
