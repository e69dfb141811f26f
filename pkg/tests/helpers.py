"""Shared test support: brute-force oracles and input generators.

The oracles work on plain facet lists (collections of label frozensets) and
enumerate every subset directly, with no use of the library's face machinery,
so they stay independent of the code paths they check.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from hypothesis import strategies as st

from eulerkit import Complex, make_complex, random_pure_complex

Facets = list[frozenset[str]]


def to_facets(x: Complex) -> Facets:
    return [frozenset(x.labels_of(f)) for f in x.facets]


def brute_faces(facets: Facets) -> set[frozenset[str]]:
    """Every non-empty subset of every facet, deduplicated."""
    out: set[frozenset[str]] = set()
    for f in facets:
        fl = sorted(f)
        for r in range(1, len(fl) + 1):
            out.update(frozenset(c) for c in combinations(fl, r))
    return out


def brute_f_vector(facets: Facets) -> tuple[int, ...]:
    faces = brute_faces(facets)
    if not faces:
        return ()
    n = max(len(t) for t in faces) - 1
    return tuple(sum(1 for t in faces if len(t) == k + 1) for k in range(n + 1))


def brute_chi(facets: Facets) -> int:
    return sum((-1) ** k * s for k, s in enumerate(brute_f_vector(facets)))


def brute_star(facets: Facets, s: frozenset[str]) -> set[frozenset[str]]:
    return {t for t in brute_faces(facets) if s <= t}


def brute_link(facets: Facets, s: frozenset[str]) -> set[frozenset[str]]:
    """Non-empty link members: t disjoint from s with t | s a face."""
    faces = brute_faces(facets)
    return {t for t in faces if not (t & s) and (t | s) in faces}


def brute_cofaces(facets: Facets, s: frozenset[str], l: int) -> set[frozenset[str]]:
    return {t for t in brute_faces(facets) if s <= t and len(t) == l + 1}


def brute_is_euler(facets: Facets) -> tuple[bool, list[frozenset[str]]]:
    """(verdict, failing simplices) by checking every link's chi directly."""
    maximal = [f for f in facets if not any(f < g for g in facets)]
    if len({len(f) for f in maximal}) > 1:
        return False, []
    faces = brute_faces(facets)
    n = max(len(t) for t in faces) - 1
    bad = []
    for s in faces:
        k = len(s) - 1
        want = 0 if k == n else 1 + (-1) ** (n - k - 1)
        got = sum((-1) ** (len(t) - 1) for t in brute_link(facets, s))
        if got != want:
            bad.append(s)
    return not bad, sorted(bad, key=lambda t: (len(t), sorted(t)))


# -- deterministic fuzz corpus -------------------------------------------------

def fuzz_params(i: int) -> tuple[int, int, int, int]:
    """Parameters (seed, n, num_facets, num_vertices) for fuzz complex i.

    A fixed schedule covering dimensions 0..4, vertex pools up to 12, and up
    to 30 facets; the seed is the index, so the corpus is reproducible.
    """
    n = i % 5
    num_vertices = n + 1 + (i * 7) % (12 - n)
    cap = min(30, comb(num_vertices, n + 1))
    num_facets = 1 + (i * 13) % cap
    return i, n, num_facets, num_vertices


def fuzz_complex(i: int) -> Complex:
    seed, n, f, v = fuzz_params(i)
    return random_pure_complex(seed, n, f, v)


# -- hypothesis strategies -----------------------------------------------------

LABELS = "abcdefghij"

facet_lists = st.lists(
    st.frozensets(st.sampled_from(LABELS), min_size=1, max_size=4),
    min_size=1,
    max_size=8,
)

complexes = facet_lists.map(make_complex)
