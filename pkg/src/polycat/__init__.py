"""Strict higher categories and polygraphs, with the word problem in low dimension."""

from .errors import (
    CompositionError, DimensionError, DomainError, ParseError, PolycatError, Report,
    StructuralError, TypingError, UnknownGenerator, UnsupportedDimension, Violation,
)
from .freecat import (
    NormalForm, Whisker, Word, decide_equal, enumerate_cells, infer_type, normalize,
    oracle_equal,
)
from .globset import STAR, GlobularSet, validate_globular
from .polygraph import Polygraph, make_polygraph, validate_polygraph
from .syntax import Comp, Gen, Id, parse_term
