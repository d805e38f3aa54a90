"""Deterministic experiment harnesses: density exponents, ray convergence,
and runtime growth of the membership decider.

Values are computed exactly; floats enter only in log-log slope fits and
reported timings.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .cdalgebra import cd_words, stanley_sphere
from .decider import decide_simplicial_f
from .macaulay import OrthantPoint, approximate_point, l1_distance
from .vectors import GVector, g_to_h, h_to_f


@dataclass(frozen=True)
class DensityExperiment:
    k: int
    rows: tuple[tuple[int, int], ...]   # (a, l1 distance), exact
    slope: float | None                 # None in the degenerate k = 1 case
    note: str | None = None


def density_experiment(k: int, grid) -> DensityExperiment:
    """Distances from (0,..,0,a) to its approximating M-sequence over a grid.

    For k = 1 every point of the half-line is already an M-sequence, the
    distance is identically zero and no exponent fit is meaningful.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    grid = [int(a) for a in grid]
    if any(a < 1 for a in grid):
        raise ValueError("grid entries must be positive")
    rows = []
    for a in grid:
        x = OrthantPoint(k, (0,) * (k - 1) + (a,))
        rows.append((a, l1_distance(x, approximate_point(x))))
    if k == 1:
        return DensityExperiment(k, tuple(rows), None,
                                 note="degenerate: distances are zero")
    slope = fit_loglog_slope(rows)
    return DensityExperiment(k, tuple(rows), slope)


def fit_loglog_slope(rows) -> float | None:
    """Least-squares slope of log(dist) against log(a); None if degenerate."""
    pts = [(math.log(a), math.log(dist)) for a, dist in rows if dist > 0]
    if len(pts) < 2:
        return None
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    den = sum((x - mx) ** 2 for x, _ in pts)
    if den == 0:
        return None
    return sum((x - mx) * (y - my) for x, y in pts) / den


def ray_convergence(degree: int = 4, ms=(8, 16, 32, 64)) -> dict:
    """l1 distance of each normalized sphere index to its word's unit vector.

    The full coefficient vector (leading coefficient included) is l1
    normalized; with total mass T and mass t on the word itself the
    distance to the unit vector is exactly 2(T - t)/T, computed as a
    Fraction.
    """
    words = cd_words(degree)
    out: dict[str, list[tuple[int, Fraction]]] = {}
    for pos, word in enumerate(words):
        if pos == 0:
            continue  # the all-c apex is not a convergence target
        rows = []
        for m in ms:
            phi = stanley_sphere(word, m).cd
            vec = phi.coefficient_vector()
            total = sum(vec)
            rows.append((m, Fraction(2 * (total - vec[pos]), total)))
        out[word] = rows
    return out


def decide_runtime_profile(bit_lengths=(64, 128, 256, 512), d: int = 6,
                           reps: int = 32) -> list[dict]:
    """Best-of-reps wall time of the membership decider per entry bit length.

    Inputs are valid f-vectors built from the constant g-vector with
    entries 2^L - 1, so every stage of the decision runs.  Reported, never
    asserted: growth factors are evidence about bit-size scaling only.
    """
    k = d // 2
    rows = []
    prev = None
    for bits in bit_lengths:
        t = (1 << bits) - 1
        v = h_to_f(g_to_h(GVector(k, (t,) * k), d))
        best = math.inf
        for _ in range(3):
            start = time.perf_counter()
            for _ in range(reps):
                decision = decide_simplicial_f(v)
            best = min(best, (time.perf_counter() - start) / reps)
        assert decision.accepted
        row = {"bits": bits, "seconds": best}
        if prev is not None:
            row["factor"] = best / prev
        prev = best
        rows.append(row)
    return rows
