"""Exact twisted Spin^c indices and Witten genera of generalized complete
intersections in products of projective spaces and generalized Bott
manifolds.

All arithmetic is exact: rationals cross the boundary as strings such as
"-7/24", bundles as lists of integer root vectors in generator coordinates.
"""

from ._core import (
    ManifoldModel,
    ModelError,
    ParseError,
    SearchError,
    SeriesError,
    SpinCError,
    __version__,
    check_string_gci,
    corpus_verify,
    eisenstein,
    elliptic,
    fano_c1_check,
    load_manifold,
    manifold_from_json,
    modular_fit,
    phi_c,
    point,
    product_of_projective_spaces,
    projective_space,
    search_string,
    witten,
    witten_of_gci,
)

__all__ = [
    "ManifoldModel",
    "ModelError",
    "ParseError",
    "SearchError",
    "SeriesError",
    "SpinCError",
    "__version__",
    "check_string_gci",
    "corpus_verify",
    "eisenstein",
    "elliptic",
    "fano_c1_check",
    "load_manifold",
    "manifold_from_json",
    "modular_fit",
    "phi_c",
    "point",
    "product_of_projective_spaces",
    "projective_space",
    "search_string",
    "witten",
    "witten_of_gci",
]
