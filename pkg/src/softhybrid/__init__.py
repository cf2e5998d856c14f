"""Soft hybrid sets: soft, fuzzy-soft, fp-soft and fpfs sets over finite spaces.

Set algebra lives in :mod:`softhybrid.core`, the pair-valued measures in
:mod:`softhybrid.measures`, a dense brute-force reference in
:mod:`softhybrid.oracle`, the theorem checker in :mod:`softhybrid.identities`
and the JSON workspace format in :mod:`softhybrid.dataset`.
"""

from .core import (
    TOL,
    CardinalPair,
    ParameterSpace,
    SoftHybridSet,
    Universe,
    Variant,
    absolute,
    and_product,
    complement,
    equals,
    intersection,
    is_subset,
    make_set,
    null,
    or_product,
    pair_add,
    pair_eq,
    pair_leq,
    reduce_left,
    reduce_right,
    union,
)
from .dataset import Workspace, load_fixture, load_workspace, parse_workspace, serialize_workspace
from .errors import SoftSetError
from .measures import (
    EvaluationDomain,
    MeasurePair,
    RankedSet,
    cardinality,
    depth,
    depth_norm,
    entropy,
    rank_representatives,
    similarity,
    subsethood,
)

__all__ = [
    "TOL",
    "CardinalPair",
    "EvaluationDomain",
    "MeasurePair",
    "ParameterSpace",
    "RankedSet",
    "SoftHybridSet",
    "SoftSetError",
    "Universe",
    "Variant",
    "Workspace",
    "absolute",
    "and_product",
    "cardinality",
    "complement",
    "depth",
    "depth_norm",
    "entropy",
    "equals",
    "intersection",
    "is_subset",
    "load_fixture",
    "load_workspace",
    "make_set",
    "null",
    "or_product",
    "pair_add",
    "pair_eq",
    "pair_leq",
    "parse_workspace",
    "rank_representatives",
    "reduce_left",
    "reduce_right",
    "serialize_workspace",
    "similarity",
    "subsethood",
    "union",
]
