"""Combinatorial toolkit for systolic simplicial complexes.

Largeness and systolicity checks, combinatorial balls and their
retractions, chamber-complex predicates, path lifting between spheres,
integral homology, example generators and Bass–Serre tree balls.
"""
from .complex import (
    SimplicialComplex,
    barycentric_subdivision,
    build_complex,
    closure,
    complement_subcomplex,
    full_subcomplex,
    is_full,
    join,
    link,
)
from .largeness import check_systolic, is_flag, is_k_large, is_locally_k_large
from .balls import BallTower, elementary_contraction, projection, push_path, retraction
from .chamber import chamber_report, lift_path, r_condition, sphere_connectivity_sequence
from .homology import homology, smith_normal_form
from .generators import flat_torus, glued_halfplanes, platonic, triangular_disk, wheel
from .developments import cayley_graph, segment_development_ball, vertex_complement_connected
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex", "barycentric_subdivision", "build_complex", "closure", "complement_subcomplex",
    "full_subcomplex", "is_full", "join", "link", "check_systolic", "is_flag", "is_k_large",
    "is_locally_k_large", "BallTower", "elementary_contraction", "projection", "push_path", "retraction",
    "chamber_report", "lift_path", "r_condition", "sphere_connectivity_sequence", "homology",
    "smith_normal_form", "flat_torus", "glued_halfplanes", "platonic", "triangular_disk", "wheel",
    "cayley_graph", "segment_development_ball", "vertex_complement_connected", "BACKEND",
]
