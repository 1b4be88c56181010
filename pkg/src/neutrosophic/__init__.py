"""Interval neutrosophic sets, logic, inference and a belief/doubt relational model."""
from . import errors, interval, ins, kernels, logic, inls, nrdm
from .errors import (
    DomainError, EvaluationError, NeutroError, NoOutputError, NoRuleFired, ParseError, SchemeError,
    UniverseMismatch,
)
from .interval import UnitInterval
from .ins import InsRelation, InsSet, InsTriple, SampledInsSet

__version__ = "0.1.0"
