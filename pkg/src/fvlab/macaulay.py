"""Macaulay representations, pseudo-powers, and M-sequence machinery.

The i-th Macaulay representation of a positive integer a is the unique
greedy expansion a = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j) with
a_i > a_{i-1} > ... > a_j >= j >= 1.  The pseudo-power a^<i> increments
both indices of every term and governs the maximal one-step growth of
M-sequences.  Everything here runs in time polynomial in the bit length
of the inputs: each top is found by binary search, never by scanning.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .vectors import GVector

NEGATIVE_ENTRY = "negative-entry"
MACAULAY_VIOLATION = "macaulay-violation"


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n."""
    return comb(n, k)


@dataclass(frozen=True)
class MacaulayRep:
    """Terms ((a_i, i), (a_{i-1}, i-1), ...) of the i-th representation."""

    index: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("index must be >= 1")
        if not self.terms:
            raise ValueError("the represented value must be positive")
        tops = [t for t, _ in self.terms]
        bots = [b for _, b in self.terms]
        if bots != list(range(self.index, self.index - len(bots), -1)):
            raise ValueError("bottom indices must run i, i-1, ... without gaps")
        if bots[-1] < 1:
            raise ValueError("bottom indices must stay >= 1")
        if any(t < b for t, b in self.terms):
            raise ValueError("each top must be >= its bottom index")
        if any(tops[j] <= tops[j + 1] for j in range(len(tops) - 1)):
            raise ValueError("tops must be strictly decreasing")

    def value(self) -> int:
        return sum(comb(t, b) for t, b in self.terms)


def _largest_top(rem: int, t: int) -> int:
    # largest n with C(n, t) <= rem; n <= rem + t since C(rem+t, t) > rem
    lo, hi = t, rem + t
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if comb(mid, t) <= rem:
            lo = mid
        else:
            hi = mid - 1
    return lo


def macaulay_rep(a: int, i: int) -> MacaulayRep:
    """The unique greedy i-th representation of a >= 1."""
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    if i < 1:
        raise ValueError(f"i must be >= 1, got {i}")
    terms = []
    rem = a
    t = i
    while rem > 0:
        top = _largest_top(rem, t)
        terms.append((top, t))
        rem -= comb(top, t)
        t -= 1
    return MacaulayRep(i, tuple(terms))


def pseudo_power(a: int, i: int) -> int:
    """a^<i>: increment both indices of every Macaulay term; 0^<i> = 0.

    The a = 0 convention reflects that an empty multicomplex level grows
    to nothing, and it forces all-zero tails in M-sequences.
    """
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    if a == 0:
        return 0
    return sum(comb(t + 1, b + 1) for t, b in macaulay_rep(a, i).terms)


@dataclass(frozen=True)
class MSequenceCheck:
    """Outcome of an M-sequence test, with the first violated index."""

    ok: bool
    index: int | None = None
    kind: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_m_sequence(g: GVector) -> MSequenceCheck:
    """Check (1, g_1, ..., g_k) for nonnegativity and g_{i+1} <= g_i^<i>.

    The failure index is 1-based: the position of the first negative entry,
    or the left index i of the first violated growth inequality.
    """
    for pos in range(1, g.k + 1):
        if g[pos] < 0:
            return MSequenceCheck(False, pos, NEGATIVE_ENTRY)
    for i in range(1, g.k):
        if g[i + 1] > pseudo_power(g[i], i):
            return MSequenceCheck(False, i, MACAULAY_VIOLATION)
    return MSequenceCheck(True)


def _least_with_growth(target: int, t: int) -> int:
    # min m >= 0 with m^<t> >= target; pseudo_power is monotone and >= identity
    if target <= 0:
        return 0
    lo, hi = 1, 1
    while pseudo_power(hi, t) < target:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if pseudo_power(mid, t) >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo


def least_msequence_with_coordinate(i: int, a: int, k: int) -> GVector:
    """Least M-sequence in reversed lexicographic order with g_i = a.

    Entries after position i are zero; entries before are built backwards,
    each the least value whose pseudo-power covers its successor.  Binary
    search keeps the whole construction polynomial in the bit length of a.
    """
    if not 1 <= i <= k:
        raise ValueError(f"need 1 <= i <= k, got i={i}, k={k}")
    if a < 0:
        raise ValueError(f"a must be nonnegative, got {a}")
    g = [0] * k
    g[i - 1] = a
    for t in range(i - 1, 0, -1):
        g[t - 1] = _least_with_growth(g[t], t)
    return GVector(k, tuple(g))


@dataclass(frozen=True)
class OrthantPoint:
    """A point of the nonnegative integer orthant in R^k.

    k >= 1 in polytope use; k = 0 is allowed for degenerate cones.
    """

    k: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"k must be a nonnegative integer, got {self.k!r}")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {len(self.coords)}")
        if any(c < 0 for c in self.coords):
            raise ValueError("coordinates must be nonnegative")

    def l1(self) -> int:
        return sum(self.coords)

    def scaled(self, t: int) -> OrthantPoint:
        return OrthantPoint(self.k, tuple(t * c for c in self.coords))


def approximate_point(x: OrthantPoint) -> GVector:
    """An M-sequence close to x in l1 norm.

    Sums the least M-sequences pinned at each coordinate x_i; realizable
    g-vectors are closed under coordinatewise addition, so the sum is again
    an M-sequence.  The implicit leading 1 is kept implicit and not summed.
    The l1 error is O(||x||_1^((k-1)/k)), and for a single nonzero last
    coordinate that exponent is tight.
    """
    parts = [least_msequence_with_coordinate(i, x.coords[i - 1], x.k)
             for i in range(1, x.k + 1) if x.coords[i - 1] > 0]
    total = [0] * x.k
    for p in parts:
        for j in range(x.k):
            total[j] += p[j + 1]
    return GVector(x.k, tuple(total))


def l1_distance(x: OrthantPoint, g: GVector) -> int:
    if x.k != g.k:
        raise ValueError("length mismatch")
    return sum(abs(x.coords[j] - g[j + 1]) for j in range(x.k))
