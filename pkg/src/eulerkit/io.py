"""Facet-list text format: parsing, canonical serialization, bundled corpus.

The format (full grammar in FORMAT.md): UTF-8 text, one facet per line,
vertex labels separated by runs of spaces or tabs.  Blank lines and lines
whose first non-whitespace character is ``#`` are ignored.  LF and CRLF line
endings are both accepted.

Serialization is canonical and byte-exact: labels within a facet sorted
lexicographically and joined by single spaces, facets sorted lexicographically
as token sequences, LF endings, trailing newline.  ``parse(serialize(x)) == x``
for every non-empty complex; the empty complex serializes to an empty stream,
and deliberately does not parse back (an input with no facets is an error,
which catches accidentally empty files).
"""

from __future__ import annotations

from importlib import resources

from .complexes import Complex, make_complex
from .errors import InputError, ParseError, UnknownCorpusError

_CORPUS = {
    "tetrahedron-surface": (
        "tetrahedron-surface.cplx",
        "boundary of the 3-simplex: a 2-sphere on 4 vertices (Euler, chi 2)",
    ),
    "rp2-6": (
        "rp2-6.cplx",
        "vertex-minimal projective plane: 6 vertices, 10 triangles (Euler, chi 1)",
    ),
    "torus-7": (
        "torus-7.cplx",
        "vertex-minimal torus: 7 vertices, 14 triangles (Euler, chi 0)",
    ),
    "bowtie": (
        "bowtie.cplx",
        "two triangles sharing one vertex (pure, not Euler)",
    ),
    "path-2": (
        "path-2.cplx",
        "two edges sharing one vertex (pure, not Euler)",
    ),
}


def parse(data: str | bytes) -> Complex:
    """Parse facet-list text into a :class:`Complex`.

    Raises :class:`ParseError` with a 1-based line number for duplicate
    labels on a line and for invalid labels, and without one for undecodable
    bytes or for input containing no facets at all.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    facets: list[list[str]] = []
    for lineno, raw in enumerate(data.replace("\r\n", "\n").split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(set(tokens)) != len(tokens):
            dup = next(t for t in tokens if tokens.count(t) > 1)
            raise ParseError(f"duplicate vertex {dup!r} in facet", line=lineno)
        try:
            facets.append([_checked_label(t) for t in tokens])
        except InputError as exc:
            raise ParseError(str(exc), line=lineno) from None
    if not facets:
        raise ParseError("no facets found: input is empty or only comments")
    return make_complex(facets)


def _checked_label(token: str) -> str:
    from .complexes import validate_label

    return validate_label(token)


def serialize(x: Complex) -> str:
    """Canonical facet-list text for ``x``; empty string for the empty complex."""
    lines = sorted(x.labels_of(f) for f in x.facets)
    return "".join(" ".join(toks) + "\n" for toks in lines)


def corpus_names() -> tuple[str, ...]:
    """Names accepted by :func:`load_corpus`, in listing order."""
    return tuple(_CORPUS)


def corpus_description(name: str) -> str:
    if name not in _CORPUS:
        raise UnknownCorpusError(
            f"unknown corpus complex {name!r}; valid names: {', '.join(_CORPUS)}"
        )
    return _CORPUS[name][1]


def load_corpus(name: str) -> Complex:
    """Load one of the bundled example complexes by name."""
    if name not in _CORPUS:
        raise UnknownCorpusError(
            f"unknown corpus complex {name!r}; valid names: {', '.join(_CORPUS)}"
        )
    filename = _CORPUS[name][0]
    data = resources.files(__package__).joinpath("corpus", filename).read_bytes()
    return parse(data)
