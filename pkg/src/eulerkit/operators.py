"""Star, closure, and link operators.

The star of a simplex is the set of simplices containing it; it is generally
not closed under faces, so it is returned as a :class:`SimplexSet` rather
than a :class:`~eulerkit.complexes.Complex`.  The closure of a simplex set is
the complex of all faces of its members.  The link of a simplex ``s`` is the
complex of simplices disjoint from ``s`` whose union with ``s`` still lies in
the complex.

``link`` is computed from that direct characterization (faces of ``f - s``
over the facets ``f`` containing ``s``); composing ``closure`` with ``star``
and filtering gives the same complex and is kept as a cross-check in the test
suite.  Taking the star or link of the empty simplex is rejected: the link of
the empty simplex would be the whole complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .complexes import Complex, Simplex, SimplexLike, make_complex
from .errors import NotASimplexError, PreconditionError


@dataclass(frozen=True)
class SimplexSet:
    """A set of simplices of one ambient complex, not necessarily face-closed."""

    complex: Complex
    members: frozenset[Simplex]

    def __post_init__(self) -> None:
        for s in self.members:
            if not self.complex.contains(s):
                raise NotASimplexError(
                    f"simplex {self.complex.labels_of(s)} is not in the ambient complex"
                )

    def __iter__(self) -> Iterator[Simplex]:
        return iter(sorted(self.members, key=lambda s: (len(s), s)))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s: object) -> bool:
        return s in self.members

    def member_labels(self) -> list[tuple[str, ...]]:
        """Members as label tuples, in canonical (dimension, lexicographic) order."""
        return [self.complex.labels_of(s) for s in self]


def _checked(x: Complex, s: SimplexLike, op: str) -> Simplex:
    t = x.simplex(s)
    if not t:
        raise PreconditionError(f"{op} of the empty simplex is not defined")
    if not x.contains(t):
        raise NotASimplexError(f"{x.labels_of(t)} is not a simplex of the complex")
    return t


def star(x: Complex, s: SimplexLike) -> SimplexSet:
    """All simplices of ``x`` containing ``s`` (including ``s`` itself)."""
    t = _checked(x, s, "star")
    tset = set(t)
    members = {
        u
        for k in range(len(t) - 1, x.dimension + 1)
        for u in x.simplices_of_dim(k)
        if tset.issubset(u)
    }
    return SimplexSet(complex=x, members=frozenset(members))


def closure(s: SimplexSet) -> Complex:
    """The complex of all faces of the members of ``s``.

    The returned complex's facets are the inclusion-maximal members; its
    vertex labels are re-indexed over the vertices that actually occur.
    """
    return make_complex(s.complex.labels_of(m) for m in s.members)


def link(x: Complex, s: SimplexLike) -> Complex:
    """The link of ``s``: faces of the closed star that are disjoint from ``s``.

    Equivalently the complex of all ``t`` with ``t & s`` empty and
    ``t | s`` a simplex of ``x``.  For a facet the result is the empty
    complex (only the empty simplex remains, and the representation
    identifies a bare empty simplex with the empty complex).
    """
    t = _checked(x, s, "link")
    tset = set(t)
    residues = []
    for f in x.facets:
        if tset.issubset(f):
            rest = tuple(v for v in f if v not in tset)
            if rest:
                residues.append(x.labels_of(rest))
    return make_complex(residues)
