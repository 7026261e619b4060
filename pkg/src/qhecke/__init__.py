"""Exact combinatorics of finite quiver Hecke algebras of affine type C.

Graded dimensions via standard tableaux, the q-deformed Fock space and its
crystal, dominant maximal weights, and the representation-type
classification, all over exact integer and rational arithmetic.
"""

from .cartan import CartanDatum, RootSum, Weight
from .fock import (
    CrystalGraph,
    CrystalVertex,
    FockVector,
    apply_e,
    apply_f,
    apply_word_f_then_e,
    crystal_e,
    crystal_f,
    generate_highest_weight_crystal,
    signature_reduce,
)
from .grdim import (
    graded_dim,
    graded_dim_beta,
    graded_dim_n,
    idempotent_nonzero,
    kostka_q,
    kostka_q_total,
    oracle_graded_dim,
    simple_count,
)
from .qpoly import QLaurent
from .reptype import (
    Classification,
    MaxWeightDatum,
    classify,
    dominantize,
    max_dominant_weights,
    weight_decompose,
    weyl_orbit_probe,
)
from .young import (
    Node,
    StandardTableau,
    addable_nodes,
    codeg,
    content,
    d_above,
    d_below,
    d_total,
    deg,
    removable_nodes,
    residue,
    residue_sequence,
    standard_tableaux,
    standard_tableaux_with_residues,
)

__version__ = "0.1.0"

__all__ = [
    "CartanDatum", "RootSum", "Weight", "QLaurent",
    "Node", "StandardTableau",
    "residue", "addable_nodes", "removable_nodes",
    "d_below", "d_above", "d_total", "content",
    "standard_tableaux", "standard_tableaux_with_residues",
    "residue_sequence", "deg", "codeg",
    "FockVector", "apply_e", "apply_f", "apply_word_f_then_e",
    "signature_reduce", "crystal_e", "crystal_f",
    "CrystalGraph", "CrystalVertex", "generate_highest_weight_crystal",
    "kostka_q", "kostka_q_total", "graded_dim", "graded_dim_beta",
    "graded_dim_n", "idempotent_nonzero", "oracle_graded_dim", "simple_count",
    "MaxWeightDatum", "Classification", "max_dominant_weights",
    "dominantize", "weight_decompose", "classify", "weyl_orbit_probe",
]
