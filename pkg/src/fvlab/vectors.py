"""Exact transforms among f-, h- and g-vectors of simplicial polytopes.

Rank convention used throughout the package: an FVector stores
(f_1, ..., f_d) where f_i counts rank-i faces, i.e. the (i-1)-dimensional
ones, of a rank-(d+1) face lattice.  The empty face gives f_0 = 1 and is
never stored.  The fatness statistic is translated into this convention at
the API boundary (its usual definition indexes faces by dimension).

All arithmetic in this module is exact: Python integers and Fractions,
never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


def _check_ints(entries, what: str) -> tuple[int, ...]:
    out = []
    for e in entries:
        if isinstance(e, bool) or not isinstance(e, int):
            raise ValueError(f"{what} entries must be integers, got {e!r}")
        out.append(e)
    return tuple(out)


@dataclass(frozen=True)
class FVector:
    """Face counts (f_1..f_d); the implicit f_0 = 1 is not stored."""

    d: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"d must be a positive integer, got {self.d!r}")
        object.__setattr__(self, "entries", _check_ints(self.entries, "FVector"))
        if len(self.entries) != self.d:
            raise ValueError(f"expected {self.d} entries, got {len(self.entries)}")
        if any(e < 0 for e in self.entries):
            raise ValueError("face counts must be nonnegative")

    def __getitem__(self, i: int) -> int:
        """f_i, with f_0 = 1 implicit."""
        if i == 0:
            return 1
        if not 1 <= i <= self.d:
            raise IndexError(i)
        return self.entries[i - 1]


@dataclass(frozen=True)
class HVector:
    """Entries (h_0..h_d); h_0 = 1 whenever derived from an FVector."""

    d: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"d must be a positive integer, got {self.d!r}")
        object.__setattr__(self, "entries", _check_ints(self.entries, "HVector"))
        if len(self.entries) != self.d + 1:
            raise ValueError(f"expected {self.d + 1} entries, got {len(self.entries)}")

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def is_palindromic(self) -> bool:
        return self.entries == self.entries[::-1]


@dataclass(frozen=True)
class GVector:
    """Entries (g_1..g_k); the implicit g_0 = 1 is not stored.

    k = floor(d/2) in polytope use; k = 0 is allowed as the degenerate
    d = 1 case, where the vector is empty.
    """

    k: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"k must be a nonnegative integer, got {self.k!r}")
        object.__setattr__(self, "entries", _check_ints(self.entries, "GVector"))
        if len(self.entries) != self.k:
            raise ValueError(f"expected {self.k} entries, got {len(self.entries)}")

    def __getitem__(self, i: int) -> int:
        """g_i, with g_0 = 1 implicit."""
        if i == 0:
            return 1
        if not 1 <= i <= self.k:
            raise IndexError(i)
        return self.entries[i - 1]


def f_to_h(f: FVector) -> HVector:
    """The h-vector with sum h_i x^(d-i) = sum f_i (x-1)^(d-i), f_0 = 1.

    Expanding (x-1)^(d-i) gives h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_i.
    """
    d = f.d
    h = []
    for k in range(d + 1):
        acc = 0
        for i in range(k + 1):
            term = comb(d - i, k - i) * f[i]
            acc += term if (k - i) % 2 == 0 else -term
        h.append(acc)
    return HVector(d, tuple(h))


def h_to_f(h: HVector) -> FVector:
    """Exact inverse of f_to_h; requires h_0 = 1 (the implicit empty face)."""
    if h[0] != 1:
        raise ValueError(f"h_0 must be 1, got {h[0]}")
    d = h.d
    f = []
    for k in range(1, d + 1):
        f.append(sum(comb(d - i, k - i) * h[i] for i in range(k + 1)))
    return FVector(d, tuple(f))


def h_to_g(h: HVector) -> GVector:
    """Successive differences g_i = h_i - h_{i-1} for 1 <= i <= floor(d/2).

    Entries of h beyond the middle are ignored; checking palindromic
    symmetry is the decider's job, not the transform's.
    """
    k = h.d // 2
    return GVector(k, tuple(h[i] - h[i - 1] for i in range(1, k + 1)))


def g_to_h(g: GVector, d: int) -> HVector:
    """Complete g to the palindromic h-vector of rank parameter d."""
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"d must be a positive integer, got {d!r}")
    k = d // 2
    if g.k != k:
        raise ValueError(f"g has length {g.k}, expected floor({d}/2) = {k}")
    h = [1]
    for i in range(1, k + 1):
        h.append(h[-1] + g[i])
    for i in range(k + 1, d + 1):
        h.append(h[d - i])
    return HVector(d, tuple(h))


def fatness(f: FVector) -> Fraction:
    """(f_2 + f_3) / (f_1 + f_4) of a 4-dimensional FVector, exactly.

    In dimension indexing this is the usual (f_0 + f_1-dim ... ) ratio of
    middle to extreme face counts; here it is expressed in the package's
    rank convention.
    """
    if f.d != 4:
        raise ValueError(f"fatness is defined for d = 4 only, got d = {f.d}")
    den = f[1] + f[4]
    if den == 0:
        raise ValueError("fatness denominator f_1 + f_4 is zero")
    return Fraction(f[2] + f[3], den)
