"""Exact face/coface counting and machine verification of the counting identities.

Three exact integer identities are verified here, each with its two sides
computed by independent code paths (shared machinery is limited to binomial
coefficients and raw face enumeration, so a bug cannot cancel out):

* coface-sum: summing, over all k-simplices, the number of l-simplices
  containing each equals C(l+1, k+1) times the number of l-simplices.
* link-count: the number of l-simplices containing a fixed k-simplex ``s``
  equals the number of (l-k-1)-simplices of the link of ``s``; the witnessing
  bijection ``t -> s | t`` is checked explicitly for injectivity and
  surjectivity onto the cofaces.
* face-parity: for a pure Euler complex of odd dimension, twice the number of
  even-dimensional simplices equals a signed, binomially weighted double sum
  over the f-vector; evaluated term by term, it forces the Euler
  characteristic to vanish.

There is also the alternating binomial sum whose closed form (0 for even
arguments, 2 for odd) drives the face-parity identity; the sum is always
evaluated term by term and the closed form is treated as an invariant to
check, never as the implementation.

Verification results are returned as :class:`IdentityReport` values carrying
both side values, so a failure (which would indicate an implementation bug,
not bad input) is diagnosable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

from .complexes import Complex, Simplex, SimplexLike, _mask
from .errors import NotASimplexError, PreconditionError
from .operators import link

COFACE_SUM = "coface-sum"
LINK_COUNT = "link-count"
BINOMIAL_SUM = "binomial-sum"
FACE_PARITY = "face-parity"


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one exact identity: both sides, never just a boolean."""

    identity: str
    params: tuple[tuple[str, Any], ...]
    lhs: int
    rhs: int
    holds: bool
    bijection_ok: bool | None = None

    def describe(self) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in self.params)
        verdict = "holds" if self.holds else f"FAILS (lhs={self.lhs}, rhs={self.rhs})"
        return f"{self.identity}[{ps}]: {verdict}"


def binomial(n: int, k: int) -> int:
    """Exact C(n, k), with the convention that out-of-range k gives 0."""
    if n < 0:
        raise PreconditionError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def count_faces(y: Complex, l: int) -> int:
    """Number of l-simplices of ``y`` (the census written with a haček).

    Returns 0 above the dimension and below -1.  At l = -1 the convention is
    1 for a non-empty complex (the empty simplex is a face of everything) and
    0 for the empty complex, which makes the link-count identity uniform at
    its boundary case.
    """
    if l == -1:
        return 1 if y else 0
    if l < -1 or l > y.dimension:
        return 0
    return len(y.simplices_of_dim(l))


def count_cofaces(x: Complex, s: SimplexLike, l: int) -> int:
    """Number of l-simplices of ``x`` containing ``s`` (the hatted census)."""
    return len(_coface_set(x, s, l))


def _coface_set(x: Complex, s: SimplexLike, l: int) -> frozenset[Simplex]:
    t = x.simplex(s)
    if not x.contains(t):
        raise NotASimplexError(f"{x.labels_of(t)} is not a simplex of the complex")
    if l < len(t) - 1 or l > x.dimension:
        return frozenset()
    m = _mask(t)
    faces = sorted(x.simplices_of_dim(l))
    masks = x._masks_by_dim[l]
    return frozenset(u for u, um in zip(faces, masks) if um & m == m)


def verify_coface_sum(x: Complex, k: int, l: int) -> IdentityReport:
    """Check the coface-sum identity at dimensions (k, l), 0 <= k <= l <= dim."""
    if not 0 <= k <= l <= x.dimension:
        raise PreconditionError(
            f"need 0 <= k <= l <= dim, got k={k}, l={l}, dim={x.dimension}"
        )
    lhs = sum(count_cofaces(x, s, l) for s in x.simplices_of_dim(k))
    rhs = binomial(l + 1, k + 1) * count_faces(x, l)
    return IdentityReport(
        identity=COFACE_SUM,
        params=(("k", k), ("l", l)),
        lhs=lhs,
        rhs=rhs,
        holds=lhs == rhs,
    )


def verify_link_count(x: Complex, s: SimplexLike, l: int) -> IdentityReport:
    """Check the link-count identity for simplex ``s`` at dimension ``l``.

    ``lhs`` counts l-simplices containing ``s`` directly in the ambient
    complex; ``rhs`` counts (l-k-1)-simplices of the link complex.  At
    l = dim(s) the link's count of (-1)-simplices is taken to be 1: the link
    of a contained simplex always has the empty simplex as a face, even when
    the link is represented as the empty complex.  On top of the count
    comparison, the witnessing map ``t -> s | t`` is checked to be a
    bijection from the link's (l-k-1)-simplices onto the cofaces.
    """
    t = x.simplex(s)
    if not t:
        raise PreconditionError("link-count needs a non-empty simplex")
    if not x.contains(t):
        raise NotASimplexError(f"{x.labels_of(t)} is not a simplex of the complex")
    k = len(t) - 1
    if not k <= l <= x.dimension:
        raise PreconditionError(f"need dim(s) <= l <= dim, got l={l}")

    cofaces = _coface_set(x, t, l)
    lhs = len(cofaces)

    lk = link(x, t)
    r = l - k - 1
    if r == -1:
        rhs = 1
        link_faces: set[Simplex] = {()}
    else:
        rhs = count_faces(lk, r)
        link_faces = {x.simplex(lk.labels_of(u)) for u in lk.simplices_of_dim(r)}

    unions = {tuple(sorted(set(t) | set(u))) for u in link_faces}
    bijection_ok = len(unions) == len(link_faces) and unions == set(cofaces)

    return IdentityReport(
        identity=LINK_COUNT,
        params=(("simplex", x.labels_of(t)), ("l", l)),
        lhs=lhs,
        rhs=rhs,
        holds=lhs == rhs and bijection_ok,
        bijection_ok=bijection_ok,
    )


def alternating_binomial_sum(l: int) -> int:
    """Term-by-term value of sum over k < l of (-1)^(l-k-1) * C(l+1, k+1).

    Its closed form is 0 for even ``l`` and 2 for odd ``l``; see
    :func:`verify_binomial_sum`, which checks that numerically.
    """
    if l < 1:
        raise PreconditionError(f"need l >= 1, got {l}")
    return sum((-1) ** (l - k - 1) * binomial(l + 1, k + 1) for k in range(l))


def verify_binomial_sum(l: int) -> IdentityReport:
    """Compare the direct alternating binomial sum with its closed form."""
    lhs = alternating_binomial_sum(l)
    rhs = 1 + (-1) ** (l + 1)
    return IdentityReport(
        identity=BINOMIAL_SUM,
        params=(("l", l),),
        lhs=lhs,
        rhs=rhs,
        holds=lhs == rhs,
    )


def verify_face_parity(x: Complex) -> IdentityReport:
    """Check the face-parity identity on a pure Euler complex of odd dimension.

    Raises :class:`PreconditionError` naming the failed hypothesis when the
    input is empty, not pure, not an Euler complex, or of even dimension.
    """
    from .eulercheck import check_euler

    if not x:
        raise PreconditionError("face-parity needs a non-empty complex")
    report = check_euler(x)
    if not report.pure:
        raise PreconditionError("face-parity hypothesis failed: complex is not pure")
    if not report.is_euler:
        bad = report.checks[0]
        raise PreconditionError(
            "face-parity hypothesis failed: not an Euler complex "
            f"(link of {' '.join(bad.simplex)} has chi = {bad.link_chi}, "
            f"expected {bad.expected_chi})"
        )
    n = x.dimension
    if n % 2 == 0:
        raise PreconditionError(
            f"face-parity hypothesis failed: dimension {n} is even"
        )
    lhs = 2 * sum(count_faces(x, k) for k in range(0, n + 1, 2))
    rhs = 0
    for k in range(n):
        for l in range(k + 1, n + 1):
            rhs += (-1) ** (l - k - 1) * binomial(l + 1, k + 1) * count_faces(x, l)
    return IdentityReport(
        identity=FACE_PARITY,
        params=(("dimension", n),),
        lhs=lhs,
        rhs=rhs,
        holds=lhs == rhs,
    )


def verify_all_coface_sums(x: Complex) -> list[IdentityReport]:
    """Coface-sum reports for every valid pair 0 <= k <= l <= dim."""
    return [
        verify_coface_sum(x, k, l)
        for l in range(x.dimension + 1)
        for k in range(l + 1)
    ]


def verify_all_link_counts(x: Complex) -> list[IdentityReport]:
    """Link-count reports for every non-empty simplex and every valid l."""
    return [
        verify_link_count(x, s, l)
        for s in x.all_simplices()
        for l in range(len(s) - 1, x.dimension + 1)
    ]
