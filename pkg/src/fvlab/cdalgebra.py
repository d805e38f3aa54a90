"""Noncommutative polynomial arithmetic for flag vectors.

Flag counts pack into a homogeneous polynomial over the noncommuting
letters a, b: rank set S maps to the word with b exactly at the positions
of S.  Substituting a -> a - b and rewriting in c = a + b (degree 1) and
d = ab + ba (degree 2) yields the cd-index when it exists, e.g. for every
Eulerian poset.

Canonical cd-word order, frozen because cone coordinates and JSON output
depend on it: ascending number of d letters, then lexicographic with
c < d.  The same order drives the triangular elimination in ab_to_cd: the
indicator ab-word of w (its image under c -> a, d -> ab) has exactly
#d(w) letters b, so words with more d's cannot produce it, and among words
with equal #d it appears only in expansions of lexicographically smaller
ones.  Reading the indicator coefficient of each word in order and
subtracting therefore solves the system exactly.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .errors import CdInexpressibleError
from .macaulay import OrthantPoint
from .posets import FlagVector, GradedPoset, boolean_lattice, join, polygon


def _check_word(word: str, alphabet: str):
    if not isinstance(word, str) or any(ch not in alphabet for ch in word):
        raise ValueError(f"bad word {word!r} over alphabet {{{alphabet}}}")


def word_degree(word: str) -> int:
    """Degree of a cd-word: c counts 1, d counts 2."""
    _check_word(word, "cd")
    return len(word) + word.count("d")


class AbPolynomial:
    """Homogeneous integer polynomial in the noncommuting letters a, b."""

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs=None):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        self.degree = degree
        clean = {}
        for word, c in dict(coeffs or {}).items():
            _check_word(word, "ab")
            if len(word) != degree:
                raise ValueError(f"word {word!r} is not of degree {degree}")
            c = int(c)
            if c:
                clean[word] = c
        self._coeffs = clean

    def coeff(self, word: str) -> int:
        return self._coeffs.get(word, 0)

    def items(self) -> list[tuple[str, int]]:
        return sorted(self._coeffs.items())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AbPolynomial)
                and self.degree == other.degree
                and self._coeffs == other._coeffs)

    def __hash__(self):
        return hash((self.degree, tuple(self.items())))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "AbPolynomial(0)"
        body = " + ".join(f"{c}*{w}" for w, c in self.items())
        return f"AbPolynomial({body})"


class CdPolynomial:
    """Homogeneous integer polynomial in c (degree 1) and d (degree 2)."""

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs=None):
        if degree < 0:
            raise ValueError("degree must be >= 0")
        self.degree = degree
        clean = {}
        for word, c in dict(coeffs or {}).items():
            if word_degree(word) != degree:
                raise ValueError(f"word {word!r} is not of degree {degree}")
            c = int(c)
            if c:
                clean[word] = c
        self._coeffs = clean

    def coeff(self, word: str) -> int:
        return self._coeffs.get(word, 0)

    def items(self) -> list[tuple[str, int]]:
        order = {w: i for i, w in enumerate(cd_words(self.degree))}
        return sorted(self._coeffs.items(), key=lambda kv: order[kv[0]])

    def coefficient_vector(self) -> tuple[int, ...]:
        """Coefficients on all words of the degree, in canonical order."""
        return tuple(self.coeff(w) for w in cd_words(self.degree))

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._coeffs.values())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, CdPolynomial)
                and self.degree == other.degree
                and self._coeffs == other._coeffs)

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self._coeffs.items()))))

    def __add__(self, other: "CdPolynomial") -> "CdPolynomial":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        coeffs = dict(self._coeffs)
        for w, c in other._coeffs.items():
            coeffs[w] = coeffs.get(w, 0) + c
        return CdPolynomial(self.degree, coeffs)

    def __mul__(self, other: "CdPolynomial") -> "CdPolynomial":
        return cd_mul(self, other)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "CdPolynomial(0)"
        body = " + ".join(f"{c}*{w}" for w, c in self.items())
        return f"CdPolynomial({body})"


@lru_cache(maxsize=None)
def cd_words(degree: int) -> tuple[str, ...]:
    """All cd-words of the degree, in the frozen canonical order.

    The counts follow the Fibonacci recurrence: a word starts with c on a
    degree (d-1) tail or with d on a degree (d-2) tail.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if degree == 0:
        return ("",)
    if degree == 1:
        return ("c",)
    words = ["c" + w for w in cd_words(degree - 1)]
    words += ["d" + w for w in cd_words(degree - 2)]
    return tuple(sorted(words, key=lambda w: (w.count("d"), w)))


def _indicator(word: str) -> str:
    return "".join("a" if ch == "c" else "ab" for ch in word)


@lru_cache(maxsize=None)
def _expand_word(word: str) -> tuple[tuple[str, int], ...]:
    terms = {"": 1}
    for ch in word:
        branches = ("a", "b") if ch == "c" else ("ab", "ba")
        terms = {t + br: c for t, c in terms.items() for br in branches}
    return tuple(sorted(terms.items()))


def flag_to_ab(v: FlagVector) -> AbPolynomial:
    """The chain-count generating polynomial: coefficient f_S on the word
    with b at the positions of S."""
    coeffs = {}
    for S in v.subsets():
        word = "".join("b" if r in S else "a" for r in range(1, v.d + 1))
        coeffs[word] = v[S]
    return AbPolynomial(v.d, coeffs)


def _substitute(p: AbPolynomial, a_image) -> AbPolynomial:
    """Letterwise substitution a -> a_image (a signed two-term sum), b -> b."""
    out: dict[str, int] = {}
    for word, c in p.items():
        terms = {"": c}
        for ch in word:
            if ch == "a":
                terms = {t + letter: k * sign
                         for t, k in terms.items() for letter, sign in a_image}
            else:
                terms = {t + "b": k for t, k in terms.items()}
        for w, k in terms.items():
            out[w] = out.get(w, 0) + k
    return AbPolynomial(p.degree, out)


def ab_index(p: AbPolynomial) -> AbPolynomial:
    """Substitute a -> a - b letterwise and expand."""
    return _substitute(p, (("a", 1), ("b", -1)))


def cd_expand(q: CdPolynomial) -> AbPolynomial:
    """Substitute c -> a + b, d -> ab + ba and expand."""
    out: dict[str, int] = {}
    for word, c in q.items():
        for u, k in _expand_word(word):
            out[u] = out.get(u, 0) + c * k
    return AbPolynomial(q.degree, out)


def ab_to_cd(p: AbPolynomial) -> CdPolynomial:
    """Rewrite p in c and d by triangular elimination, or fail with the
    residual if p is not in the span (see the module docstring for why the
    canonical order makes the system triangular)."""
    residual = {w: c for w, c in p.items()}
    coeffs = {}
    for word in cd_words(p.degree):
        c = residual.get(_indicator(word), 0)
        if c:
            coeffs[word] = c
            for u, k in _expand_word(word):
                newc = residual.get(u, 0) - c * k
                if newc:
                    residual[u] = newc
                else:
                    residual.pop(u, None)
    if residual:
        raise CdInexpressibleError(AbPolynomial(p.degree, residual))
    return CdPolynomial(p.degree, coeffs)


def cd_to_flag(q: CdPolynomial, d: int) -> FlagVector:
    """Invert the flag -> cd pipeline: expand, substitute a -> a + b, read
    off chain counts."""
    if q.degree != d:
        raise ValueError(f"polynomial degree {q.degree} != d = {d}")
    gamma = _substitute(cd_expand(q), (("a", 1), ("b", 1)))
    counts = {}
    for word, c in gamma.items():
        S = frozenset(i for i, ch in enumerate(word, start=1) if ch == "b")
        counts[S] = c
    return FlagVector(d, counts)


def cd_mul(p: CdPolynomial, q: CdPolynomial) -> CdPolynomial:
    """Concatenation product; degrees add."""
    coeffs: dict[str, int] = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            w = w1 + w2
            coeffs[w] = coeffs.get(w, 0) + c1 * c2
    return CdPolynomial(p.degree + q.degree, coeffs)


def poset_cd_index(p: GradedPoset) -> CdPolynomial:
    """The cd-index of a poset via the full chain-counting pipeline."""
    from .posets import flag_vector
    return ab_to_cd(ab_index(flag_to_ab(flag_vector(p))))


class StanleySphere(NamedTuple):
    cd: CdPolynomial
    poset: GradedPoset


def stanley_sphere(word: str, m: int) -> StanleySphere:
    """The join of two-atom boolean lattices (for c) and m-gon posets
    (for d) prescribed by the word, with its cd-index.

    The polynomial is the product of the factors' indices, c and
    c^2 + (m-2)d; the chain-counting route over the join poset agrees, as
    the test corpus verifies at moderate m.
    """
    _check_word(word, "cd")
    if not word:
        raise ValueError("word must be nonempty")
    if m < 3:
        raise ValueError("m must be >= 3")
    c_factor = CdPolynomial(1, {"c": 1})
    d_factor = CdPolynomial(2, {"cc": 1, "d": m - 2})
    phi = None
    poset = None
    for ch in word:
        factor_poly = c_factor if ch == "c" else d_factor
        factor_poset = boolean_lattice(2) if ch == "c" else polygon(m)
        phi = factor_poly if phi is None else cd_mul(phi, factor_poly)
        poset = factor_poset if poset is None else join(poset, factor_poset)
    return StanleySphere(phi, poset)


def cone_coordinates(q: CdPolynomial) -> OrthantPoint:
    """Coordinates of q - c^degree in the flag cone, in canonical word order.

    The all-c word is the apex (the minimizing dihedral poset) and must
    carry coefficient 1.
    """
    words = cd_words(q.degree)
    if q.coeff(words[0]) != 1:
        raise ValueError(f"leading coefficient on {words[0]!r} must be 1")
    return OrthantPoint(len(words) - 1, tuple(q.coeff(w) for w in words[1:]))
