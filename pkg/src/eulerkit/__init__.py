"""Finite abstract simplicial complexes, exactly.

Build complexes from facet label sets, compute f-vectors and Euler
characteristics, take stars, links, and closures, classify Euler complexes,
and machine-verify the exact counting identities that force an
odd-dimensional Euler complex to have Euler characteristic zero.
"""

from .complexes import EMPTY, Complex, Simplex, make_complex
from .counting import (
    BINOMIAL_SUM,
    COFACE_SUM,
    FACE_PARITY,
    LINK_COUNT,
    IdentityReport,
    alternating_binomial_sum,
    binomial,
    count_cofaces,
    count_faces,
    verify_all_coface_sums,
    verify_all_link_counts,
    verify_binomial_sum,
    verify_coface_sum,
    verify_face_parity,
    verify_link_count,
)
from .errors import (
    InputError,
    NotASimplexError,
    ParseError,
    PreconditionError,
    UnknownCorpusError,
)
from .eulercheck import EulerReport, LinkCheck, check_euler, verify_theorem
from .generators import (
    cone,
    cross_polytope_boundary,
    cycle,
    disjoint_union,
    full_simplex,
    join,
    random_pure_complex,
    simplex_boundary,
    suspension,
)
from .io import corpus_names, load_corpus, parse, serialize
from .operators import SimplexSet, closure, link, star

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "Complex",
    "Simplex",
    "make_complex",
    "binomial",
    "count_faces",
    "count_cofaces",
    "alternating_binomial_sum",
    "verify_binomial_sum",
    "verify_coface_sum",
    "verify_link_count",
    "verify_face_parity",
    "verify_all_coface_sums",
    "verify_all_link_counts",
    "IdentityReport",
    "COFACE_SUM",
    "LINK_COUNT",
    "BINOMIAL_SUM",
    "FACE_PARITY",
    "check_euler",
    "verify_theorem",
    "EulerReport",
    "LinkCheck",
    "SimplexSet",
    "star",
    "closure",
    "link",
    "full_simplex",
    "simplex_boundary",
    "cross_polytope_boundary",
    "cycle",
    "cone",
    "suspension",
    "join",
    "disjoint_union",
    "random_pure_complex",
    "parse",
    "serialize",
    "load_corpus",
    "corpus_names",
    "InputError",
    "ParseError",
    "NotASimplexError",
    "PreconditionError",
    "UnknownCorpusError",
]
