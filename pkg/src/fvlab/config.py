"""Enumeration caps, overridable through the FVLAB_CAPS environment variable.

FVLAB_CAPS holds a JSON object whose keys are field names of Caps, e.g.

    FVLAB_CAPS='{"flag_decide_elements": 14}'
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields

ENV_VAR = "FVLAB_CAPS"


@dataclass(frozen=True)
class Caps:
    gorenstein_rank: int = 5          # max poset rank for homology-based checks
    gorenstein_elements: int = 64     # max proper elements for homology-based checks
    flag_decide_elements: int = 12    # max sum of rank-level sizes in the flag search
    rank5_oracle: int = 30            # max A, B for the unpruned rank-5 oracle
    ray_doublings: int = 64           # max scale doublings in the ray witness search


def load_caps() -> Caps:
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return Caps()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{ENV_VAR} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError(f"{ENV_VAR} must hold a JSON object")
    known = {f.name for f in fields(Caps)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"{ENV_VAR} has unknown keys: {sorted(unknown)}")
    clean = {}
    for key, value in data.items():
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"{ENV_VAR}[{key!r}] must be a nonnegative integer")
        clean[key] = value
    return Caps(**clean)
