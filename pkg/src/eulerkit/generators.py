"""Constructors for standard complexes and seeded random pure complexes.

Sphere triangulations (simplex boundaries, cross-polytope boundaries,
cycles), the cone / suspension / join / disjoint-union combinators, and a
deterministic fuzz generator.  Everything here is reproducible: identical
arguments (and seed, where applicable) yield identical complexes.

Labeling rules, chosen so outputs serialize canonically:

* generated vertices are labeled ``v0``, ``v1``, ... (``p<i>`` / ``q<i>``
  for the antipodal pairs of a cross-polytope);
* ``join`` and a colliding ``disjoint_union`` prefix left/right labels with
  ``L:`` and ``R:``;
* ``cone`` and ``suspension`` keep the base labels and add ``apex0`` (and
  ``apex1``), rejecting collisions.

The pseudo-random stream is splitmix64 (documented, with constants, in
FORMAT.md) so the fuzz corpus is reproducible bit for bit from the seed.
"""

from __future__ import annotations

from itertools import combinations, product
from math import comb

from .complexes import Complex, make_complex
from .errors import InputError, PreconditionError

_MASK64 = (1 << 64) - 1


def full_simplex(n: int) -> Complex:
    """The solid n-simplex: one facet on n+1 vertices v0..vn."""
    if n < 0:
        raise PreconditionError(f"need n >= 0, got {n}")
    return make_complex([[f"v{i}" for i in range(n + 1)]])


def simplex_boundary(n: int) -> Complex:
    """Boundary of the (n+1)-simplex: an n-sphere with chi = 1 + (-1)^n."""
    if n < 0:
        raise PreconditionError(f"need n >= 0, got {n}")
    verts = [f"v{i}" for i in range(n + 2)]
    return make_complex(combinations(verts, n + 1))


def cross_polytope_boundary(n: int) -> Complex:
    """Boundary of the n-dimensional cross-polytope: an (n-1)-sphere.

    2n vertices in antipodal pairs (p_i, q_i); the 2^n facets pick one vertex
    from each pair.  n=2 is the square, n=3 the octahedron surface.
    """
    if n < 1:
        raise PreconditionError(f"need n >= 1, got {n}")
    return make_complex(product(*[(f"p{i}", f"q{i}") for i in range(n)]))


def cycle(m: int) -> Complex:
    """The m-cycle (polygon boundary) on vertices v0..v(m-1); a 1-sphere."""
    if m < 3:
        raise PreconditionError(f"a cycle needs at least 3 vertices, got {m}")
    return make_complex([f"v{i}", f"v{(i + 1) % m}"] for i in range(m))


def cone(x: Complex, apex_label: str = "apex0") -> Complex:
    """Every facet of ``x`` extended by a fresh apex; chi is always 1."""
    if apex_label in x.labels:
        raise InputError(f"apex label {apex_label!r} is already a vertex")
    if not x:
        return make_complex([[apex_label]])
    return make_complex(
        list(x.labels_of(f)) + [apex_label] for f in x.facets
    )


def suspension(x: Complex) -> Complex:
    """Facets of ``x`` extended by either of two fresh apexes; chi = 2 - chi(x)."""
    if not x:
        raise PreconditionError("cannot suspend the empty complex")
    for apex in ("apex0", "apex1"):
        if apex in x.labels:
            raise InputError(f"apex label {apex!r} is already a vertex")
    facets = []
    for apex in ("apex0", "apex1"):
        facets.extend(list(x.labels_of(f)) + [apex] for f in x.facets)
    return make_complex(facets)


def join(x: Complex, y: Complex) -> Complex:
    """The join: unions of a facet of ``x`` and a facet of ``y``.

    Vertex sets are made disjoint by prefixing labels with ``L:`` and ``R:``.
    Joining with one point is the cone; with two points, the suspension
    (up to that relabeling).
    """
    lx = [[f"L:{v}" for v in x.labels_of(f)] for f in x.facets]
    ry = [[f"R:{v}" for v in y.labels_of(f)] for f in y.facets]
    if not lx:
        return make_complex(ry)
    if not ry:
        return make_complex(lx)
    return make_complex(f + g for f in lx for g in ry)


def disjoint_union(x: Complex, y: Complex) -> Complex:
    """Union of the two facet sets; chi adds.

    Labels are kept as-is when the two vertex sets are already disjoint
    (so ``X + empty == X``), and prefixed with ``L:`` / ``R:`` otherwise.
    """
    xf = [x.labels_of(f) for f in x.facets]
    yf = [y.labels_of(f) for f in y.facets]
    if set(x.labels) & set(y.labels):
        xf = [[f"L:{v}" for v in f] for f in xf]
        yf = [[f"R:{v}" for v in f] for f in yf]
    return make_complex(list(xf) + list(yf))


def _splitmix64(state: int):
    """One splitmix64 step: returns (new_state, output word)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def _unrank_subset(rank: int, n: int, k: int) -> tuple[int, ...]:
    """The rank-th k-subset of range(n) in lexicographic order."""
    out = []
    first = 0
    for seats in range(k, 0, -1):
        for v in range(first, n):
            below = comb(n - v - 1, seats - 1)
            if rank < below:
                out.append(v)
                first = v + 1
                break
            rank -= below
    return tuple(out)


def random_pure_complex(
    seed: int, n: int, num_facets: int, num_vertices: int
) -> Complex:
    """A reproducible pure n-dimensional complex on ``num_vertices`` vertices.

    Draws ``num_facets`` distinct (n+1)-subsets of the vertex pool using the
    splitmix64 stream seeded with ``seed``: each draw takes the next output
    word modulo C(num_vertices, n+1) as a subset rank and unranks it;
    duplicate draws are discarded and redrawn.  Vertices are labeled
    v0..v(num_vertices-1).

    The result is not filtered in any way (in particular it is almost never
    an Euler complex); it exists to fuzz identities that hold for every
    complex.
    """
    if n < 0:
        raise PreconditionError(f"need n >= 0, got {n}")
    if num_vertices < n + 1:
        raise PreconditionError(
            f"need num_vertices >= n+1, got {num_vertices} < {n + 1}"
        )
    if num_facets < 1:
        raise PreconditionError(f"need num_facets >= 1, got {num_facets}")
    total = comb(num_vertices, n + 1)
    if num_facets > total:
        raise PreconditionError(
            f"cannot pick {num_facets} distinct facets: only "
            f"C({num_vertices}, {n + 1}) = {total} exist"
        )
    state = seed & _MASK64
    chosen: set[tuple[int, ...]] = set()
    while len(chosen) < num_facets:
        state, word = _splitmix64(state)
        chosen.add(_unrank_subset(word % total, num_vertices, n + 1))
    return make_complex(
        [f"v{i}" for i in subset] for subset in sorted(chosen)
    )
