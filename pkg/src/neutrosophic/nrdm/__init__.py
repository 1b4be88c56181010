"""Neutrosophic relational data model."""
from .algebra import (
    n_complement,
    n_difference,
    n_intersect,
    n_join,
    n_product,
    n_project,
    n_select_guard,
    n_union,
    with_split,
)
from .relation import (
    ABSENT,
    Classification,
    ConfidencePair,
    FuzzyRelation,
    MultiRelation,
    NeutroRelation,
    Scheme,
    classify,
    combine,
    split,
)
