"""Finite abstract simplicial complexes stored by their facets.

A complex is a finite family of finite vertex sets that is closed under
taking non-empty subsets.  Only the maximal members (facets) are stored;
every other face is derived on demand and memoized per dimension, so memory
stays proportional to the number of facets.

Vertices carry string labels.  Internally each label maps to a dense integer
id assigned in lexicographic label order, which makes the representation
canonical: building the same complex from permuted input yields an equal
value.  A simplex is a strictly increasing tuple of those ids.

All values are immutable and every operation is a pure function, so
instances may be shared freely across threads.  The lazily built face caches
hold values that are themselves immutable and identical on recomputation,
which makes concurrent first access benign.

Conventions (documented, tested):

* the empty complex has dimension -1 and counts as pure;
* the empty simplex ``()`` is a face of every non-empty complex but is never
  counted in f-vectors or Euler characteristics;
* a complex whose only face would be the empty simplex (e.g. the link of a
  facet) is represented as the empty complex.

All arithmetic is exact: counts and alternating sums use Python integers,
which cannot overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError, NotASimplexError

Simplex = tuple[int, ...]
"""A simplex in a complex's id space: a strictly increasing tuple of vertex ids."""

SimplexLike = Simplex | Iterable[int] | Iterable[str]
"""Anything coercible to a :data:`Simplex`: vertex ids or vertex labels."""


def validate_label(label: str) -> str:
    """Check that ``label`` is usable as a vertex label and return it.

    Labels must be non-empty strings without whitespace and must not start
    with ``#``, so that the facet-file format (see FORMAT.md) can round-trip
    every constructible complex.
    """
    if not isinstance(label, str):
        raise InputError(f"vertex label must be a string, got {type(label).__name__}")
    if not label:
        raise InputError("vertex label must be non-empty")
    if any(c.isspace() for c in label):
        raise InputError(f"vertex label {label!r} contains whitespace")
    if label.startswith("#"):
        raise InputError(f"vertex label {label!r} starts with '#'")
    return label


def _mask(s: Simplex) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Complex:
    """An abstract simplicial complex, canonically represented.

    ``labels[i]`` is the label of the vertex with id ``i``; labels are
    strictly increasing.  ``facets`` are the maximal simplices, pairwise
    incomparable under inclusion.  Use :func:`make_complex` to build one
    from facet label sets; the raw constructor validates but does not
    absorb non-maximal input.
    """

    labels: tuple[str, ...]
    facets: frozenset[Simplex]

    def __post_init__(self) -> None:
        if list(self.labels) != sorted(set(self.labels)):
            raise InputError("labels must be strictly increasing and unique")
        for lab in self.labels:
            validate_label(lab)
        seen: set[int] = set()
        n_vertices = len(self.labels)
        for f in self.facets:
            if not f:
                raise InputError("facets must be non-empty")
            if list(f) != sorted(set(f)):
                raise InputError(f"facet {f} is not a strictly increasing id tuple")
            if f[0] < 0 or f[-1] >= n_vertices:
                raise InputError(f"facet {f} has vertex ids outside the label table")
            seen.update(f)
        if seen != set(range(n_vertices)):
            raise InputError("every label must occur in some facet")
        masks = [_mask(f) for f in self.facets]
        for i, a in enumerate(masks):
            for b in masks[i + 1 :]:
                if a & b in (a, b):
                    raise InputError("facets must be pairwise incomparable")

    # -- basic queries ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.facets)

    def __repr__(self) -> str:
        if not self.facets:
            return "Complex(empty)"
        return f"Complex(dim={self.dimension}, vertices={len(self.labels)}, facets={len(self.facets)})"

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @cached_property
    def dimension(self) -> int:
        """Largest facet dimension; -1 for the empty complex."""
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def is_pure(self) -> bool:
        """True when all facets share one dimension (vacuously for the empty complex)."""
        return len({len(f) for f in self.facets}) <= 1

    # -- face enumeration (memoized) ----------------------------------------

    @cached_property
    def _faces_by_dim(self) -> tuple[frozenset[Simplex], ...]:
        by_dim: list[set[Simplex]] = [set() for _ in range(self.dimension + 1)]
        for f in self.facets:
            for k in range(len(f)):
                by_dim[k].update(combinations(f, k + 1))
        return tuple(frozenset(s) for s in by_dim)

    @cached_property
    def _masks_by_dim(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(_mask(s) for s in sorted(faces)) for faces in self._faces_by_dim
        )

    @cached_property
    def _facet_masks(self) -> tuple[int, ...]:
        return tuple(_mask(f) for f in self.facets)

    def simplices_of_dim(self, k: int) -> frozenset[Simplex]:
        """All k-dimensional simplices, i.e. the (k+1)-subsets of facets."""
        if k < 0:
            raise InputError(f"dimension must be non-negative, got {k}")
        if k > self.dimension:
            return frozenset()
        return self._faces_by_dim[k]

    def all_simplices(self) -> Iterator[Simplex]:
        """All non-empty simplices, by dimension then lexicographically."""
        for faces in self._faces_by_dim:
            yield from sorted(faces)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """Counts (s_0, ..., s_n) of simplices per dimension; () when empty."""
        return tuple(len(faces) for faces in self._faces_by_dim)

    @cached_property
    def euler_characteristic(self) -> int:
        """Alternating sum s_0 - s_1 + s_2 - ...; 0 for the empty complex."""
        return sum((-1) ** k * s for k, s in enumerate(self.f_vector))

    # -- membership ---------------------------------------------------------

    def contains(self, s: SimplexLike) -> bool:
        """True iff ``s`` is a subset of some facet.

        The empty simplex is contained in every non-empty complex; the empty
        complex contains nothing at all.  Unknown labels simply yield False;
        malformed input (duplicate vertices) raises :class:`InputError`.
        """
        try:
            t = self.simplex(s)
        except NotASimplexError:
            return False
        if not self.facets:
            return False
        m = _mask(t)
        return any(m & fm == m for fm in self._facet_masks)

    def simplex(self, vertices: SimplexLike) -> Simplex:
        """Coerce labels or ids to a canonical simplex of this complex's id space.

        Accepts an iterable of vertex labels or of vertex ids (possibly
        unsorted).  Raises :class:`NotASimplexError` for unknown labels or
        out-of-range ids, and :class:`InputError` for duplicates.  Membership
        is not checked; use :meth:`contains`.
        """
        items = list(vertices)
        if not items:
            return ()
        if all(isinstance(v, str) for v in items):
            ids = [self._label_ids.get(v) for v in items]
            for v, i in zip(items, ids):
                if i is None:
                    raise NotASimplexError(f"unknown vertex label {v!r}")
        elif all(isinstance(v, int) and not isinstance(v, bool) for v in items):
            ids = items
            for i in ids:
                if not 0 <= i < len(self.labels):
                    raise NotASimplexError(f"vertex id {i} outside the label table")
        else:
            raise InputError("simplex vertices must be all labels or all ids")
        out = tuple(sorted(ids))
        if len(set(out)) != len(out):
            raise InputError(f"duplicate vertices in simplex {items!r}")
        return out

    @cached_property
    def _label_ids(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def labels_of(self, s: Simplex) -> tuple[str, ...]:
        """The label tuple of a simplex given in this complex's id space."""
        return tuple(self.labels[i] for i in s)


def make_complex(facets: Iterable[Iterable[str]]) -> Complex:
    """Build a canonical :class:`Complex` from facet label sets.

    The input is a generating set: duplicate facets, and facets contained in
    other facets, are absorbed silently.  An empty facet is an error; an
    empty facet *list* yields the empty complex.
    """
    cleaned: list[tuple[str, ...]] = []
    for facet in facets:
        labs = [validate_label(v) for v in facet]
        if not labs:
            raise InputError("facets must be non-empty")
        if len(set(labs)) != len(labs):
            raise InputError(f"duplicate vertex label in facet {labs!r}")
        cleaned.append(tuple(labs))
    all_labels = tuple(sorted({v for f in cleaned for v in f}))
    ids = {lab: i for i, lab in enumerate(all_labels)}
    id_facets = {tuple(sorted(ids[v] for v in f)) for f in cleaned}
    maximal = _drop_absorbed(id_facets)
    return Complex(labels=all_labels, facets=frozenset(maximal))


def _drop_absorbed(facets: set[Simplex]) -> list[Simplex]:
    by_size = sorted(facets, key=len, reverse=True)
    kept: list[Simplex] = []
    kept_masks: list[int] = []
    for f in by_size:
        m = _mask(f)
        if not any(m & km == m for km in kept_masks):
            kept.append(f)
            kept_masks.append(m)
    return kept


EMPTY = make_complex([])
"""The empty complex: no vertices, no simplices, dimension -1."""
