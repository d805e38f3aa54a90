"""Independent oracles used by the tests.

Each oracle deliberately recomputes values along a different route than
the library: Pascal's triangle for binomials, exhaustive enumeration for
Macaulay representations, lex-segment shadow counting for pseudo-powers,
and sympy matrix ranks for Betti numbers.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from fractions import Fraction
from math import comb


def pascal_binomial(n: int, k: int) -> int:
    """C(n, k) by the additive recurrence only."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for _ in range(n):
        row = [1] + [row[j] + row[j + 1] for j in range(len(row) - 1)] + [1]
    return row[k]


def count_macaulay_reps(a: int, i: int) -> int:
    """Number of decreasing representations a = sum C(a_t, t): tops strictly
    decreasing, bottoms i, i-1, ... without gaps, each top >= its bottom.

    Exhaustive branch and bound.  The bound is the hockey-stick identity:
    with tops below c and bottoms t-1, ..., 1 the largest representable
    value is sum_s C(c-t+s, s) over 1 <= s <= t-1, which telescopes to
    C(c, t-1) - 1.  Branches whose remainder exceeds it cannot lead to a
    representation, so skipping them loses nothing.
    """

    def rec(rem: int, t: int, top_bound: int) -> int:
        if rem == 0:
            return 1
        if t == 0:
            return 0
        if t == 1:
            # the value of a bottom-1 term is its top, so the remainder
            # itself is the only candidate
            return 1 if 1 <= rem <= top_bound else 0
        total = 0
        c = t
        while c <= top_bound and comb(c, t) <= rem:
            rest = rem - comb(c, t)
            if rest <= comb(c, t - 1) - 1:
                total += rec(rest, t - 1, c - 1)
            c += 1
        return total

    return rec(a, i, a + i)


def count_macaulay_reps_naive(a: int, i: int) -> int:
    """As count_macaulay_reps but with no value bound at all; small scale
    only, used to validate the branch-and-bound version."""

    def rec(rem: int, t: int, top_bound: int) -> int:
        if rem == 0:
            return 1
        if t == 0:
            return 0
        if t == 1:
            return 1 if 1 <= rem <= top_bound else 0
        return sum(rec(rem - comb(c, t), t - 1, c - 1)
                   for c in range(t, top_bound + 1) if comb(c, t) <= rem)

    return rec(a, i, a + i)


class LexGrowthOracle:
    """Maximal one-step multicomplex growth, from first principles.

    The first a degree-i monomials in descending lex order (x1 > x2 > ...)
    form the extremal level; a^<i> is the number of degree-(i+1) monomials
    all of whose degree-i divisors lie in that segment.  Membership of a
    prefix is a rank comparison, so for each candidate monomial the worst
    divisor rank is precomputed and growth counts come from binary search.
    """

    def __init__(self, i: int, a_max: int):
        self.i = i
        n = 1
        while comb(n + i - 1, i) < a_max:
            n += 1
        # monomials as nondecreasing index tuples; ascending tuple order
        # equals descending lex on exponent vectors
        level = sorted(itertools.combinations_with_replacement(range(n), i))
        rank = {mon: pos for pos, mon in enumerate(level)}
        worst = []
        for mon in itertools.combinations_with_replacement(range(n), i + 1):
            divisor_ranks = []
            ok = True
            for j in range(i + 1):
                div = mon[:j] + mon[j + 1:]
                if div not in rank:
                    ok = False
                    break
                divisor_ranks.append(rank[div])
            if ok:
                worst.append(max(divisor_ranks))
        self.worst = sorted(worst)

    def grow(self, a: int) -> int:
        return bisect_left(self.worst, a)


def betti_sympy(complex_) -> tuple[int, ...]:
    """Reduced Betti numbers via sympy ranks; mirrors nothing internal."""
    from sympy import Matrix

    faces = complex_.faces()
    by_dim: dict[int, list] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = max(by_dim)
    vorder = {v: i for i, v in enumerate(complex_.vertices)}
    for fs in by_dim.values():
        fs.sort(key=lambda f: tuple(sorted(vorder[v] for v in f)))

    def rank(dim: int) -> int:
        if dim < 0 or dim > top or not by_dim.get(dim):
            return 0
        lower = by_dim.get(dim - 1, [])
        pos = {f: i for i, f in enumerate(lower)}
        rows = []
        for f in by_dim[dim]:
            verts = sorted(f, key=lambda v: vorder[v])
            row = [0] * len(lower)
            for j in range(len(verts)):
                row[pos[frozenset(verts[:j] + verts[j + 1:])]] += (-1) ** j
            rows.append(row)
        return Matrix(rows).rank()

    ranks = {dim: rank(dim) for dim in range(0, top + 1)}
    out = []
    for dim in range(-1, top + 1):
        out.append(len(by_dim.get(dim, [])) - ranks.get(dim, 0)
                   - ranks.get(dim + 1, 0))
    return tuple(out)


def msequences_bounded(k: int, bound: int, pseudo_power):
    """All M-sequences of length k with entries <= bound."""
    out = []

    def rec(prefix):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        i = len(prefix)
        if i == 0:
            limit = bound
        else:
            limit = min(bound, pseudo_power(prefix[-1], i))
        for value in range(limit + 1):
            rec(prefix + [value])

    rec([])
    return out
