"""Feasibility of the rank-5 cd-coefficient diophantine system.

On the slice with unit leading and middle coefficients, a degree-4
cd-polynomial with [c^2 d] = A, [d c^2] = B, [d^2] = D2 is realizable iff
nonnegative integer triples x, y exist with

    x_1 + x_2 + x_3 = A,   y_1 + y_2 + y_3 = B,
    x_1 y_1 + x_2 y_2 + x_3 y_3 = A*B - D2.

The decider enumerates descending-sorted compositions x of A (sorting is
lossless: permuting indices permutes x and y together) with interval
pruning on the reachable bilinear values, and solves for y in closed form
per x.  Whether the problem admits a decision procedure polynomial in the
bit size is open; the benchmark in experiments gathers evidence only.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .config import Caps, load_caps
from .errors import CapExceeded


@dataclass(frozen=True)
class Rank5Instance:
    """Coefficients ([c^2 d], [d c^2], [d^2]); [c^4] = [cdc] = 1 implied."""

    c2d: int
    dc2: int
    d2: int

    def __post_init__(self):
        for name in ("c2d", "dc2", "d2"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValueError(f"{name} must be a nonnegative integer")

    @property
    def target(self) -> int:
        return self.c2d * self.dc2 - self.d2


@dataclass(frozen=True)
class Rank5Witness:
    x: tuple[int, int, int]
    y: tuple[int, int, int]

    def verifies(self, inst: Rank5Instance) -> bool:
        return (sum(self.x) == inst.c2d
                and sum(self.y) == inst.dc2
                and all(v >= 0 for v in self.x + self.y)
                and sum(a * b for a, b in zip(self.x, self.y)) == inst.target)


@dataclass(frozen=True)
class Rank5Result:
    feasible: bool
    witness: Rank5Witness | None = None
    nodes: int = 0


def _sorted_compositions(total: int):
    """Triples x1 >= x2 >= x3 >= 0 summing to total, in ascending lex order."""
    x1 = -(-total // 3)
    while x1 <= total:
        rest = total - x1
        x2 = -(-rest // 2)
        while x2 <= min(x1, rest):
            yield (x1, x2, rest - x2)
            x2 += 1
        x1 += 1


def _least_y(x: tuple[int, int, int], b: int, target: int):
    """Lex-least y >= 0 with sum b and sum x_i y_i = target, or None.

    With x sorted descending, write p = x1 - x3, q = x2 - x3 and reduce to
    p*y1 + q*y2 = target - x3*b on the simplex y1 + y2 <= b.  y1 + y2 is
    nonincreasing in y1 (p >= q), so the bounds below are exact and the
    least feasible y1 in the right residue class gives the lex-least y.
    """
    x1, x2, x3 = x
    rhs = target - x3 * b
    if rhs < 0:
        return None
    p, q = x1 - x3, x2 - x3
    if p == 0:
        return (0, 0, b) if rhs == 0 else None
    if q == 0:
        y1, r = divmod(rhs, p)
        if r == 0 and y1 <= b:
            return (y1, 0, b - y1)
        return None
    g = gcd(p, q)
    if rhs % g:
        return None
    if p == q:
        s, r = divmod(rhs, p)
        if r == 0 and s <= b:
            return (0, s, b - s)
        return None
    # p > q >= 1: y1 ranges over a residue class mod q/g
    step = q // g
    residue = (rhs // g) * pow(p // g, -1, step) % step
    hi = rhs // p
    lo = max(0, -(-(rhs - q * b) // (p - q)))
    y1 = lo + (residue - lo) % step
    if y1 > hi:
        return None
    y2 = (rhs - p * y1) // q
    return (y1, y2, b - y1 - y2)


def decide_rank5(inst: Rank5Instance) -> Rank5Result:
    """Feasibility with a canonical witness.

    The witness is the lexicographically least (x, y) over descending-
    sorted x-compositions enumerated in ascending lex order, with the
    lex-least y for that x.  A negative bilinear target is rejected
    immediately: the form is nonnegative.
    """
    target = inst.target
    if target < 0:
        return Rank5Result(False)
    a, b = inst.c2d, inst.dc2
    nodes = 0
    for x in _sorted_compositions(a):
        nodes += 1
        if not x[2] * b <= target <= x[0] * b:
            continue
        y = _least_y(x, b, target)
        if y is not None:
            return Rank5Result(True, Rank5Witness(x, y), nodes)
    return Rank5Result(False, nodes=nodes)


def brute_oracle_rank5(inst: Rank5Instance, caps: Caps | None = None) -> bool:
    """Ground truth by full enumeration of both composition spaces."""
    caps = caps or load_caps()
    if inst.c2d > caps.rank5_oracle or inst.dc2 > caps.rank5_oracle:
        raise CapExceeded(
            f"oracle is capped at A, B <= {caps.rank5_oracle}")
    target = inst.target
    xs = [(i, j, inst.c2d - i - j)
          for i in range(inst.c2d + 1) for j in range(inst.c2d - i + 1)]
    ys = [(i, j, inst.dc2 - i - j)
          for i in range(inst.dc2 + 1) for j in range(inst.dc2 - i + 1)]
    for x in xs:
        for y in ys:
            if x[0] * y[0] + x[1] * y[1] + x[2] * y[2] == target:
                return True
    return False


def achievable_targets(a: int, b: int) -> set[int]:
    """All values of the bilinear form over compositions of a and b."""
    xs = [(i, j, a - i - j) for i in range(a + 1) for j in range(a - i + 1)]
    ys = [(i, j, b - i - j) for i in range(b + 1) for j in range(b - i + 1)]
    return {x[0] * y[0] + x[1] * y[1] + x[2] * y[2] for x in xs for y in ys}


def cdc_zero_relation(c2d: int, dc2: int, d2: int) -> bool:
    """The facet where the middle coefficient vanishes forces d2 = c2d*dc2."""
    return d2 == c2d * dc2
