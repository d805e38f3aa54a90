"""Finite bounded graded posets and their flag f-vectors.

A GradedPoset is given by element labels, a rank function and a covering
relation.  Construction validates boundedness and gradedness: one element
each at the extreme ranks, every cover raising rank by exactly one, no
rank level empty, and every element reachable from below and above.  Under
these conditions the transitive closure of the covers is automatically a
partial order, so nothing else needs checking.

Poset values are immutable after construction; the reachability caches are
filled lazily but idempotently, so sharing across threads is safe.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .errors import CapExceeded, PosetError
from .homology import SimplicialComplexData


def _label_key(label):
    """Deterministic sort key for the label shapes used by the builders."""
    if isinstance(label, bool):
        return (0, int(label))
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, tuple):
        return (2, tuple(_label_key(x) for x in label))
    return (3, repr(label))


class GradedPoset:
    def __init__(self, ranks: dict, covers):
        if not ranks:
            raise PosetError("poset needs at least a minimum and a maximum")
        self._rank = dict(ranks)
        top_rank = max(self._rank.values())
        if min(self._rank.values()) != 0:
            raise PosetError("minimum rank must be 0")
        by_rank = defaultdict(list)
        for x, r in self._rank.items():
            if not isinstance(r, int) or r < 0:
                raise PosetError(f"bad rank {r!r} for element {x!r}")
            by_rank[r].append(x)
        for r in range(top_rank + 1):
            if not by_rank[r]:
                raise PosetError(f"rank level {r} is empty")
        if len(by_rank[0]) != 1:
            raise PosetError("the minimum must be the unique rank-0 element")
        if len(by_rank[top_rank]) != 1:
            raise PosetError("the maximum must be the unique top-rank element")

        up = {x: [] for x in self._rank}
        down = {x: [] for x in self._rank}
        seen = set()
        for lo, hi in covers:
            if lo not in self._rank or hi not in self._rank:
                raise PosetError(f"cover ({lo!r}, {hi!r}) uses unknown elements")
            if self._rank[hi] != self._rank[lo] + 1:
                raise PosetError(
                    f"cover ({lo!r}, {hi!r}) must raise rank by exactly 1")
            if (lo, hi) in seen:
                continue
            seen.add((lo, hi))
            up[lo].append(hi)
            down[hi].append(lo)

        for x, r in self._rank.items():
            if r < top_rank and not up[x]:
                raise PosetError(f"element {x!r} has no upper cover")
            if r > 0 and not down[x]:
                raise PosetError(f"element {x!r} has no lower cover")

        self._levels = tuple(
            tuple(sorted(by_rank[r], key=_label_key)) for r in range(top_rank + 1))
        self._up = {x: tuple(sorted(up[x], key=_label_key)) for x in self._rank}
        self._down = {x: tuple(sorted(down[x], key=_label_key)) for x in self._rank}
        self._reach: dict = {}
        self._above: dict | None = None

    # structure accessors

    @property
    def top_rank(self) -> int:
        """Rank of the maximum; the poset has rank top_rank as a bounded poset."""
        return len(self._levels) - 1

    @property
    def d(self) -> int:
        """Number of proper rank levels (top_rank - 1)."""
        return self.top_rank - 1

    @property
    def bottom(self):
        return self._levels[0][0]

    @property
    def top(self):
        return self._levels[-1][0]

    @property
    def elements(self) -> tuple:
        return tuple(itertools.chain.from_iterable(self._levels))

    def level(self, r: int) -> tuple:
        return self._levels[r]

    def rank_of(self, x) -> int:
        return self._rank[x]

    def up_covers(self, x) -> tuple:
        return self._up[x]

    def down_covers(self, x) -> tuple:
        return self._down[x]

    def n_proper(self) -> int:
        return len(self._rank) - 2

    def cover_pairs(self):
        for x in self.elements:
            for y in self._up[x]:
                yield (x, y)

    def __len__(self) -> int:
        return len(self._rank)

    def __repr__(self) -> str:
        sizes = ",".join(str(len(lv)) for lv in self._levels)
        return f"GradedPoset(levels=[{sizes}])"

    # order relation

    def reach(self, r1: int, r2: int) -> dict:
        """Map x at rank r1 -> elements of rank r2 above x (r1 < r2)."""
        key = (r1, r2)
        cached = self._reach.get(key)
        if cached is not None:
            return cached
        if r2 == r1 + 1:
            result = {x: self._up[x] for x in self._levels[r1]}
        else:
            prev = self.reach(r1, r2 - 1)
            result = {}
            for x, mids in prev.items():
                out = set()
                for z in mids:
                    out.update(self._up[z])
                result[x] = tuple(sorted(out, key=_label_key))
        self._reach[key] = result
        return result

    def above_sets(self) -> dict:
        """Map x -> frozenset of all y >= x (including x)."""
        if self._above is None:
            above = {}
            for r in range(self.top_rank, -1, -1):
                for x in self._levels[r]:
                    s = {x}
                    for y in self._up[x]:
                        s |= above[y]
                    above[x] = frozenset(s)
            self._above = above
        return self._above

    def leq(self, x, y) -> bool:
        return y in self.above_sets()[x]

    # serialization

    def to_json(self) -> dict:
        ids = self.element_ids()
        return {
            "rank": self.top_rank,
            "elements": [{"id": ids[x], "rank": self._rank[x]}
                         for x in self.elements],
            "covers": [[ids[x], ids[y]] for x, y in self.cover_pairs()],
        }

    def element_ids(self) -> dict:
        """Stable string ids e0, e1, ... in level order."""
        return {x: f"e{i}" for i, x in enumerate(self.elements)}

    @classmethod
    def from_json(cls, doc: dict) -> "GradedPoset":
        try:
            ranks = {e["id"]: e["rank"] for e in doc["elements"]}
            covers = [tuple(pair) for pair in doc["covers"]]
        except (KeyError, TypeError) as exc:
            raise PosetError(f"bad poset document: {exc}") from exc
        return cls(ranks, covers)

    # isomorphism at toy scale

    def canonical_key(self, max_perms: int = 100_000):
        """Minimal cover-matrix encoding over all level permutations.

        Exponential in level sizes; guarded by max_perms and meant for the
        small posets handled by the flag search.
        """
        total = 1
        for lv in self._levels:
            for j in range(2, len(lv) + 1):
                total *= j
            if total > max_perms:
                raise CapExceeded("canonical form too expensive")
        best = None
        perm_sets = [list(itertools.permutations(range(len(lv))))
                     for lv in self._levels]
        for assignment in itertools.product(*perm_sets):
            key = []
            for r in range(self.top_rank):
                lo_perm, hi_perm = assignment[r], assignment[r + 1]
                lo, hi = self._levels[r], self._levels[r + 1]
                hi_pos = {y: j for j, y in enumerate(hi)}
                rows = []
                for idx in lo_perm:
                    x = lo[idx]
                    row = [0] * len(hi)
                    for y in self._up[x]:
                        row[hi_perm.index(hi_pos[y])] = 1
                    rows.append(tuple(row))
                key.append(tuple(rows))
            key = tuple(key)
            if best is None or key < best:
                best = key
        return best

    def is_isomorphic_to(self, other: "GradedPoset") -> bool:
        if [len(lv) for lv in self._levels] != [len(lv) for lv in other._levels]:
            return False
        return self.canonical_key() == other.canonical_key()


# builders

def boolean_lattice(n: int) -> GradedPoset:
    """Subsets of {0..n-1} under inclusion; rank = cardinality."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ranks = {}
    covers = []
    universe = range(n)
    for size in range(n + 1):
        for subset in itertools.combinations(universe, size):
            ranks[subset] = size
            for dropped in range(size):
                covers.append((subset[:dropped] + subset[dropped + 1:], subset))
    return GradedPoset(ranks, covers)


def polygon(m: int) -> GradedPoset:
    """The face poset of the m-gon: bottom, m vertices, m edges, top."""
    if m < 3:
        raise ValueError("m must be >= 3")
    ranks = {("min",): 0, ("max",): 3}
    covers = []
    for i in range(m):
        ranks[("v", i)] = 1
        ranks[("e", i)] = 2
        covers.append((("min",), ("v", i)))
        covers.append((("v", i), ("e", i)))
        covers.append((("v", (i + 1) % m), ("e", i)))
        covers.append((("e", i), ("max",)))
    return GradedPoset(ranks, covers)


def dihedral_sphere(d: int) -> GradedPoset:
    """Two cells per proper rank, fully incident between consecutive ranks.

    The minimizer of every chain count among sphere posets of its rank; its
    flag counts are f_S = 2^|S|.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    ranks = {("min",): 0, ("max",): d + 1}
    covers = []
    for r in range(1, d + 1):
        for j in range(2):
            ranks[("c", r, j)] = r
    for j in range(2):
        covers.append((("min",), ("c", 1, j)))
        covers.append((("c", d, j), ("max",)))
    for r in range(1, d):
        for j in range(2):
            for jj in range(2):
                covers.append((("c", r, j), ("c", r + 1, jj)))
    return GradedPoset(ranks, covers)


def join(p: GradedPoset, q: GradedPoset) -> GradedPoset:
    """Poset join: the proper part of q is stacked above that of p.

    p loses its maximum, q loses its minimum, ranks of the q part shift up
    by p.d + 1, and every maximal proper element of p is covered by every
    minimal proper element of q.  Chains then concatenate freely across
    the seam, so chain-count polynomials multiply; that identity is what
    fixes this definition.  Joining with the rank-1 poset (bottom and top
    only) is the identity up to isomorphism.
    """
    ranks = {}
    covers = []
    m = p.top_rank - 1
    for x in p.elements:
        if x == p.top:
            continue
        ranks[("l", x)] = p.rank_of(x)
        for xu in p.up_covers(x):
            if xu != p.top:
                covers.append((("l", x), ("l", xu)))
    for y in q.elements:
        if y == q.bottom:
            continue
        ranks[("r", y)] = q.rank_of(y) + m
        for yu in q.up_covers(y):
            covers.append((("r", y), ("r", yu)))
    for x in p.level(m):
        for y in q.level(1):
            covers.append((("l", x), ("r", y)))
    return GradedPoset(ranks, covers)


# flag vectors

@dataclass(frozen=True)
class FlagVector:
    """Chain counts f_S for S a subset of the proper ranks {1..d}."""

    d: int
    counts: dict

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        clean = {}
        for S, c in self.counts.items():
            S = frozenset(S)
            if any(not 1 <= r <= self.d for r in S):
                raise ValueError(f"rank set {sorted(S)} outside 1..{self.d}")
            clean[S] = int(c)
        if clean.get(frozenset(), 1) != 1:
            raise ValueError("f of the empty rank set must be 1")
        clean[frozenset()] = 1
        object.__setattr__(self, "counts", clean)

    def __getitem__(self, S) -> int:
        return self.counts.get(frozenset(S), 0)

    def subsets(self):
        ranks = range(1, self.d + 1)
        for size in range(self.d + 1):
            yield from (frozenset(c) for c in itertools.combinations(ranks, size))

    def to_json(self) -> dict:
        out = {}
        for S in self.subsets():
            mask = sum(1 << (r - 1) for r in S)
            out[str(mask)] = str(self[S])
        return out

    @classmethod
    def from_json(cls, d: int, doc: dict) -> "FlagVector":
        counts = {}
        for mask_str, count in doc.items():
            mask = int(mask_str)
            S = frozenset(r for r in range(1, d + 1) if mask & (1 << (r - 1)))
            if mask >= 1 << d:
                raise ValueError(f"bitmask {mask} outside subsets of [{d}]")
            counts[S] = int(count)
        return cls(d, counts)


def flag_vector(p: GradedPoset) -> FlagVector:
    """All chain counts f_S, by dynamic programming over rank levels."""
    d = p.d
    counts = {frozenset(): 1}
    for size in range(1, d + 1):
        for S in itertools.combinations(range(1, d + 1), size):
            acc = dict.fromkeys(p.level(S[0]), 1)
            for r_prev, r_next in zip(S, S[1:]):
                reach = p.reach(r_prev, r_next)
                nxt = defaultdict(int)
                for x, c in acc.items():
                    for y in reach[x]:
                        nxt[y] += c
                acc = nxt
            counts[frozenset(S)] = sum(acc.values())
    return FlagVector(d, counts)


def is_eulerian(p: GradedPoset) -> bool:
    """Every interval of rank at least 2 has zero alternating element sum.

    Length-1 intervals are trivially balanced, so only larger ones are
    scanned.
    """
    above = p.above_sets()
    for x in p.elements:
        rx = p.rank_of(x)
        for y in above[x]:
            if p.rank_of(y) - rx < 2:
                continue
            total = 0
            for z in above[x]:
                if y in above[z]:
                    total += 1 if p.rank_of(z) % 2 == 0 else -1
            if total != 0:
                return False
    return True


def order_complex(p: GradedPoset) -> SimplicialComplexData:
    """The complex of chains in the proper part of p.

    Gradedness makes it pure: every maximal chain hits every proper rank.
    A rank-1 poset yields the empty complex (just the empty face).
    """
    d = p.d
    if d == 0:
        return SimplicialComplexData((), (frozenset(),))
    facets = []
    stack = [(x, [x]) for x in p.level(1)]
    while stack:
        x, chain = stack.pop()
        if p.rank_of(x) == d:
            facets.append(frozenset(chain))
            continue
        for y in p.up_covers(x):
            if y != p.top:
                stack.append((y, chain + [y]))
    vertices = tuple(itertools.chain.from_iterable(
        p.level(r) for r in range(1, d + 1)))
    return SimplicialComplexData(vertices, tuple(facets))
