"""Membership decision for f-vectors of simplicial polytopes.

A vector is accepted iff its h-vector is palindromic with h_0 = 1 and the
difference vector up to the middle is an M-sequence.  Everything runs in
time polynomial in the bit size of the input, and rejections carry a
machine-readable first-failure reason.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .config import Caps, load_caps
from .errors import CapExceeded
from .macaulay import (MACAULAY_VIOLATION, NEGATIVE_ENTRY, OrthantPoint,
                       approximate_point, is_m_sequence)
from .vectors import FVector, GVector, f_to_h, g_to_h, h_to_f, h_to_g

ACCEPTED = "accepted"
REJECTED = "rejected"

NON_PALINDROMIC_H = "non-palindromic-h"
NON_INTEGER = "non-integer"


@dataclass(frozen=True)
class Decision:
    """Accepted with a g-vector certificate, or rejected with a reason."""

    verdict: str
    certificate: GVector | None = None
    reason: str | None = None
    index: int | None = None

    def __post_init__(self):
        if self.verdict == ACCEPTED and (self.certificate is None or self.reason):
            raise ValueError("accepted decisions carry a certificate and no reason")
        if self.verdict == REJECTED and (self.reason is None or self.certificate):
            raise ValueError("rejected decisions carry a reason and no certificate")

    @property
    def accepted(self) -> bool:
        return self.verdict == ACCEPTED


def decide_simplicial_f(v: FVector) -> Decision:
    """Decide whether v is the f-vector of some simplicial polytope."""
    h = f_to_h(v)
    if not h.is_palindromic():
        return Decision(REJECTED, reason=NON_PALINDROMIC_H)
    g = h_to_g(h)
    check = is_m_sequence(g)
    if not check:
        return Decision(REJECTED, reason=check.kind, index=check.index)
    return Decision(ACCEPTED, certificate=g)


def decide_simplicial_entries(d: int, entries) -> Decision:
    """Decide on raw entries, allowing non-integer or negative values.

    Such vectors are definitively not f-vectors, so they are rejected with
    a reason rather than treated as malformed requests.  Entries may be
    ints, integer-valued strings/Fractions, or non-integers.
    """
    parsed = []
    for e in entries:
        if isinstance(e, bool):
            return Decision(REJECTED, reason=NON_INTEGER)
        if isinstance(e, int):
            parsed.append(e)
            continue
        try:
            q = Fraction(str(e))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"unreadable entry {e!r}")
        if q.denominator != 1:
            return Decision(REJECTED, reason=NON_INTEGER)
        parsed.append(int(q))
    if len(parsed) != d:
        raise ValueError(f"expected {d} entries, got {len(parsed)}")
    for pos, e in enumerate(parsed, start=1):
        if e < 0:
            return Decision(REJECTED, reason=NEGATIVE_ENTRY, index=pos)
    return decide_simplicial_f(FVector(d, tuple(parsed)))


def connected_sum_g(g1: GVector, g2: GVector) -> GVector:
    """Coordinatewise sum; the implicit g_0 stays 1 (gluing along a facet)."""
    if g1.k != g2.k:
        raise ValueError(f"length mismatch: {g1.k} vs {g2.k}")
    return GVector(g1.k, tuple(a + b for a, b in zip(g1.entries, g2.entries)))


INTERIOR = "interior"
BOUNDARY = "boundary"
EXTREMAL_RAY = "extremal-ray"


@dataclass(frozen=True)
class BoundaryClass:
    """Position of a g-vector relative to the boundary of the orthant cone.

    kind is "interior" (no zero entry), "boundary" (zero-tail form
    (a_1..a_k, 0..0), reporting k), or "extremal-ray" (the k = 1 form).
    The all-zero vector sits at the apex and is reported as boundary with
    k = 0.
    """

    kind: str
    k: int | None = None


def classify_boundary(g: GVector) -> BoundaryClass:
    """Classify an M-sequence's position in the orthant cone.

    Mixed-zero patterns such as (2, 0, 1) never reach this point: a zero
    entry forces a zero tail in any M-sequence, so they are rejected by the
    precondition.
    """
    if g.k == 0:
        raise ValueError("empty g-vector has no cone position")
    check = is_m_sequence(g)
    if not check:
        raise ValueError(
            f"not an M-sequence ({check.kind} at index {check.index})")
    support = sum(1 for e in g.entries if e > 0)
    if support == g.k:
        return BoundaryClass(INTERIOR)
    if support == 1:
        return BoundaryClass(EXTREMAL_RAY, k=1)
    return BoundaryClass(BOUNDARY, k=support)


def _angle(x: OrthantPoint, g: GVector) -> float:
    """Angle between x and g seen from the orthant apex.

    Inner products stay exact rationals; the only float appears in the
    final acos for the threshold comparison.
    """
    inner = sum(a * b for a, b in zip(x.coords, g.entries))
    if inner == 0:
        return math.pi / 2
    nx = sum(a * a for a in x.coords)
    ng = sum(b * b for b in g.entries)
    cos_sq = Fraction(inner * inner, nx * ng)
    return math.acos(math.sqrt(min(1.0, float(cos_sq))))


def ray_density_witness(x: OrthantPoint, eps, caps: Caps | None = None) -> GVector:
    """An M-sequence whose ray from the apex is within eps of x's ray.

    If x itself is an M-sequence the hit is exact.  Otherwise scale x by
    doubling integers t and approximate; the l1 error grows sublinearly in
    t, so the angle shrinks below any positive eps.
    """
    caps = caps or load_caps()
    if all(c == 0 for c in x.coords):
        raise ValueError("x must be nonzero")
    eps = float(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    direct = GVector(x.k, x.coords)
    if is_m_sequence(direct):
        return direct
    t = 1
    for _ in range(caps.ray_doublings):
        cand = approximate_point(x.scaled(t))
        if any(cand.entries) and _angle(x, cand) < eps:
            return cand
        t *= 2
    raise CapExceeded(
        f"no scale up to 2^{caps.ray_doublings} reached angle < {eps}")
