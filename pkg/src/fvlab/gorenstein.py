"""Gorenstein* recognition: link-wise homology spheres and the flag search.

A bounded poset qualifies iff in its reduced order complex every link,
including the link of the empty face, has the dimension and the rational
homology of a sphere of the complementary dimension.  Recognition of the
underlying sphere itself is undecidable in general; this homological
surrogate is decidable and is all the package promises.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import Caps, load_caps
from .errors import CapExceeded
from .homology import SimplicialComplexData, is_sphere_pattern, rational_betti
from .posets import FlagVector, GradedPoset, flag_vector, order_complex


@dataclass(frozen=True)
class GorensteinCheck:
    ok: bool
    witness: frozenset | None = None  # first face whose link fails

    def __bool__(self) -> bool:
        return self.ok


def is_gorenstein_star(p: GradedPoset, caps: Caps | None = None) -> GorensteinCheck:
    """Check every link of the reduced order complex for sphere homology.

    Faces are scanned smallest-first, so the empty face (the complex
    itself) is the first candidate witness.  Raises CapExceeded instead of
    attempting posets beyond the configured homology budget.
    """
    caps = caps or load_caps()
    if p.top_rank > caps.gorenstein_rank:
        raise CapExceeded(
            f"poset rank {p.top_rank} exceeds cap {caps.gorenstein_rank}")
    if p.n_proper() > caps.gorenstein_elements:
        raise CapExceeded(
            f"{p.n_proper()} proper elements exceed cap {caps.gorenstein_elements}")
    complex_ = order_complex(p)
    dim = complex_.dim
    for face in sorted(complex_.faces(), key=lambda f: (len(f), sorted(map(repr, f)))):
        link = complex_.link(face)
        expected_dim = dim - len(face)
        if link.dim != expected_dim:
            return GorensteinCheck(False, face)
        if not is_sphere_pattern(rational_betti(link)):
            return GorensteinCheck(False, face)
    return GorensteinCheck(True)


REALIZABLE = "realizable"
NOT_REALIZABLE = "not-realizable"
CAP_EXCEEDED = "cap-exceeded"


@dataclass(frozen=True)
class FlagDecision:
    status: str
    witness: GradedPoset | None = None


def _bipartite_graphs(n_lo: int, n_hi: int, edges: int, sort_rows: bool):
    """All tuples of nonempty up-sets with the prescribed edge total.

    Every upper vertex must be covered.  With sort_rows the up-set tuples
    are forced nondecreasing, a sound symmetry reduction when nothing else
    distinguishes the lower vertices.
    """
    subsets = []
    for size in range(1, n_hi + 1):
        subsets.extend(frozenset(c)
                       for c in itertools.combinations(range(n_hi), size))
    order = {s: i for i, s in enumerate(subsets)}
    out = []

    def rec(row: int, used: int, acc: list, covered: frozenset):
        remaining = n_lo - row
        if remaining == 0:
            if used == edges and len(covered) == n_hi:
                out.append(tuple(acc))
            return
        if used + remaining > edges or used + remaining * n_hi < edges:
            return
        if len(covered) + remaining * n_hi < n_hi:
            return
        start = order[acc[-1]] if (sort_rows and acc) else 0
        for s in subsets[start:]:
            if used + len(s) > edges:
                continue
            acc.append(s)
            rec(row + 1, used + len(s), acc, covered | s)
            acc.pop()

    rec(0, 0, [], frozenset())
    return out


def _assemble(level_sizes: list[int], graphs: tuple) -> GradedPoset:
    d = len(level_sizes)
    ranks = {("min",): 0, ("max",): d + 1}
    covers = []
    for r, size in enumerate(level_sizes, start=1):
        for j in range(size):
            ranks[(r, j)] = r
    for j in range(level_sizes[0]):
        covers.append((("min",), (1, j)))
    for j in range(level_sizes[-1]):
        covers.append(((d, j), ("max",)))
    for i, graph in enumerate(graphs, start=1):
        for lo_idx, ups in enumerate(graph):
            for hi_idx in ups:
                covers.append(((i, lo_idx), (i + 1, hi_idx)))
    return GradedPoset(ranks, covers)


def decide_flag_gorenstein(v: FlagVector,
                           caps: Caps | None = None) -> FlagDecision:
    """Search for a Gorenstein* poset with exactly the given flag vector.

    Enumerates bounded graded posets level by level: the rank-level sizes
    and the consecutive-rank chain counts of v pin the sizes and edge
    totals of the cover graphs, so only graphs matching those are built.
    The first poset (in the documented enumeration order) whose full flag
    vector equals v and which passes the Gorenstein* check is returned as
    witness.  Completeness does not rely on any pruning: the first-level
    row sorting only removes relabelings of the bottom level.
    """
    caps = caps or load_caps()
    d = v.d
    level_sizes = [v[{i}] for i in range(1, d + 1)]
    if any(n < 1 for n in level_sizes):
        return FlagDecision(NOT_REALIZABLE)
    if sum(level_sizes) > caps.flag_decide_elements:
        return FlagDecision(CAP_EXCEEDED)

    per_level = []
    for i in range(1, d):
        n_lo, n_hi = level_sizes[i - 1], level_sizes[i]
        edges = v[{i, i + 1}]
        if edges < max(n_lo, n_hi) or edges > n_lo * n_hi:
            return FlagDecision(NOT_REALIZABLE)
        graphs = _bipartite_graphs(n_lo, n_hi, edges, sort_rows=(i == 1))
        if not graphs:
            return FlagDecision(NOT_REALIZABLE)
        per_level.append(graphs)

    seen_keys: set = set()
    for graphs in itertools.product(*per_level):
        poset = _assemble(level_sizes, graphs)
        if flag_vector(poset).counts != v.counts:
            continue
        try:
            key = poset.canonical_key()
            if key in seen_keys:
                continue
            seen_keys.add(key)
        except CapExceeded:
            pass  # isomorph dedup is an optimization only
        if is_gorenstein_star(poset, caps):
            return FlagDecision(REALIZABLE, witness=poset)
    return FlagDecision(NOT_REALIZABLE)
