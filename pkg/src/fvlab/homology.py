"""Simplicial complexes and reduced rational homology.

Betti numbers come from boundary-matrix ranks computed by exact Gaussian
elimination over the rationals.  The reduced chain complex includes the
empty face, so the empty complex {emptyset} correctly reports b_{-1} = 1,
i.e. it is the (-1)-sphere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SimplicialComplexData:
    """A complex given by its vertices and inclusion-maximal faces."""

    vertices: tuple
    facets: tuple

    def __post_init__(self):
        facets = tuple(frozenset(f) for f in self.facets)
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "vertices", tuple(self.vertices))
        vset = set(self.vertices)
        for f in facets:
            if not f <= vset:
                raise ValueError(f"facet {sorted(map(repr, f))} uses unknown vertices")
        for a in facets:
            for b in facets:
                if a != b and a <= b:
                    raise ValueError("facets must be inclusion-maximal")

    @property
    def dim(self) -> int:
        """-1 for the empty complex; facets are never absent in this package."""
        return max((len(f) - 1 for f in self.facets), default=-1)

    def faces(self) -> set:
        """All faces, the downward closure of the facets (empty face included)."""
        out = {frozenset()}
        for f in self.facets:
            members = tuple(f)
            for size in range(1, len(members) + 1):
                out.update(frozenset(c) for c in itertools.combinations(members, size))
        return out

    def link(self, face) -> "SimplicialComplexData":
        face = frozenset(face)
        carriers = [f - face for f in self.facets if face <= f]
        maximal = [g for g in carriers
                   if not any(g < h for h in carriers)]
        # dedupe while keeping determinism
        seen, facets = set(), []
        for g in maximal:
            if g not in seen:
                seen.add(g)
                facets.append(g)
        if not facets:
            facets = [frozenset()]
        vertices = sorted(set().union(*facets), key=repr) if any(facets) else ()
        return SimplicialComplexData(tuple(vertices), tuple(facets))


def _rank(rows: list[list[Fraction]]) -> int:
    """Row rank by fraction elimination; destructive on its argument."""
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            factor = rows[r][col] / lead
            if factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def rational_betti(k: SimplicialComplexData) -> tuple[int, ...]:
    """Reduced Betti numbers (b_{-1}, b_0, ..., b_dim) over the rationals."""
    if not k.facets:
        return ()
    faces = k.faces()
    by_dim: dict[int, list] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    top = k.dim
    vindex = {v: i for i, v in enumerate(k.vertices)}
    for dim_faces in by_dim.values():
        dim_faces.sort(key=lambda f: tuple(sorted(vindex[v] for v in f)))

    def boundary_rank(dim: int) -> int:
        # rank of the map C_dim -> C_{dim-1}
        if dim > top or dim < 0 or not by_dim.get(dim):
            return 0
        lower = by_dim.get(dim - 1, [])
        lower_pos = {f: i for i, f in enumerate(lower)}
        rows = []
        for f in by_dim[dim]:
            verts = sorted(f, key=lambda v: vindex[v])
            row = [Fraction(0)] * len(lower)
            for j, v in enumerate(verts):
                sub = frozenset(verts[:j] + verts[j + 1:])
                row[lower_pos[sub]] += Fraction(-1) ** j
            rows.append(row)
        return _rank(rows)

    ranks = {dim: boundary_rank(dim) for dim in range(0, top + 1)}
    betti = []
    for dim in range(-1, top + 1):
        n_faces = len(by_dim.get(dim, []))
        b = n_faces - ranks.get(dim, 0) - ranks.get(dim + 1, 0)
        betti.append(b)
    return tuple(betti)


def is_sphere_pattern(betti: tuple[int, ...]) -> bool:
    """True iff the reduced Betti numbers are those of a homology sphere."""
    return len(betti) >= 1 and all(b == 0 for b in betti[:-1]) and betti[-1] == 1
