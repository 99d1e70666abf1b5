"""Supersimple 2-(n,4,lambda) designs, move calculus and hole stabilizers.

Points are 0-based throughout the Python API.
"""

from ._core import (
    ConwayError,
    Design,
    Group,
    Permutation,
    boolean_quadruple_system,
    builtin,
    builtin_names,
    canonical_form,
    canonical_hash,
    check_degree_bounds,
    check_lambda3_classification,
    count_designs,
    elementary_move,
    enumerate_designs,
    evaluate_moves,
    hole_stabilizer,
    hole_stabilizer_generators,
    hole_stabilizer_report,
    is_canonical,
    load_design,
    parse_design,
    projective_plane_3,
    recognize,
    relabel,
    serialize_design,
    signature,
    support_criterion,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
