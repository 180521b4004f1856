"""Workbench for finite strict double categories."""

from .core import (Boundary, Category, DoubleCategory, TwoCategory, ValidationReport, Violation,
                   compose_h, compose_v, hcomp, hid, oid, validate, validate_2category,
                   validate_category, vcomp, vid)
from .constructions import FixtureName, fixture, quin, square_category, transpose
from .pasting import PastingGrid, column, paste, row
from .companions import CompanionPair, MateDir, companion_mate, find_companions, str_2category
from .conjunctions import Conjunction, conj_2category, conj_mate, find_conjoints, third_from_two
from .psfunctor import DoublePseudofunctor, check_double_pseudofunctor
from .dslio import Document, parse, serialize

__version__ = "0.1.0"
