"""Shared exception types."""

from __future__ import annotations


class PosetError(ValueError):
    """Raised when data does not describe a bounded graded poset."""


class CapExceeded(RuntimeError):
    """Raised when an enumeration or search would exceed its configured cap."""


class CdInexpressibleError(ValueError):
    """Raised when an ab-polynomial is not in the span of cd-word expansions.

    Carries the nonzero residual left after triangular elimination, which is
    useful for diagnosing non-Eulerian inputs.
    """

    def __init__(self, residual):
        super().__init__(f"polynomial is not expressible in c and d; residual has "
                         f"{len(residual.items())} terms")
        self.residual = residual
