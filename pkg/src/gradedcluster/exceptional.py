"""The eleven non-surface mutation-finite quivers and their verified facts.

Preset quivers are given by explicit arrow lists; vertex numbering follows
the reference figures since the recorded mutation paths depend on it.  The
verifiers replay the periodic degree-seed paths and the denominator-vector
closed forms against the exact mutation engine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import ceil, floor
from typing import Dict, List, Optional

from .core import (ExchangeMatrix, GradedSeed, Grading, MutationPath,
                   apply_path, grading_basis)


def quiver_from_arrows(n: int, arrows, m: int = 0) -> ExchangeMatrix:
    """Arrows are (src, dst) or (src, dst, weight), 1-based vertices."""
    rows = [[0] * n for _ in range(n + m)]
    for arrow in arrows:
        src, dst, w = arrow if len(arrow) == 3 else (*arrow, 1)
        if dst <= n:
            rows[src - 1][dst - 1] += w
        if src <= n:
            rows[dst - 1][src - 1] -= w
    return ExchangeMatrix(n, m, tuple(tuple(r) for r in rows))


_ARROWS: Dict[str, list] = {
    "X6": [(1, 2, 2), (2, 3), (3, 1), (3, 4), (4, 5, 2), (5, 3), (6, 3)],
    "X7": [(1, 2, 2), (2, 3), (3, 1),
           (3, 4), (4, 5, 2), (5, 3),
           (3, 6), (6, 7, 2), (7, 3)],
    "E6": [(1, 2), (2, 3), (4, 3), (5, 4), (6, 3)],
    "E7": [(1, 2), (2, 3), (3, 4), (5, 4), (6, 5), (7, 4)],
    "E8": [(1, 2), (2, 3), (4, 3), (5, 4), (6, 5), (7, 6), (8, 3)],
    "E6aff": [(1, 2), (2, 3), (6, 3), (4, 3), (7, 6), (5, 4)],
    "E7aff": [(1, 2), (2, 3), (3, 4), (5, 4), (6, 5), (7, 6), (8, 4)],
    "E8aff": [(1, 2), (2, 3), (4, 3), (5, 4), (6, 5), (7, 6), (8, 7), (9, 3)],
    "E611": [(1, 2), (8, 4), (7, 6), (5, 3, 2), (3, 2), (2, 5),
             (3, 4), (4, 5), (3, 6), (6, 5)],
    "E711": [(1, 2), (8, 7), (7, 6), (5, 3, 2), (3, 2), (2, 5),
             (3, 4), (4, 5), (3, 6), (6, 5), (9, 1)],
    "E811": [(1, 2), (8, 7), (7, 6), (5, 3, 2), (3, 2), (2, 5),
             (3, 4), (4, 5), (3, 6), (6, 5), (9, 8), (10, 9)],
}

_RANKS = {"X6": 6, "X7": 7, "E6": 6, "E7": 7, "E8": 8,
          "E6aff": 7, "E7aff": 8, "E8aff": 9,
          "E611": 8, "E711": 9, "E811": 10}

# initial grading bases from the reference table; None = use kernel basis
_GRADINGS: Dict[str, Optional[list]] = {
    "X6": [[0, 0, 0, 0, 0, 0]],
    "X7": [[1, 1, 2, 1, 1, 1, 1]],
    "E6": None,
    "E7": None,
    "E8": None,
    "E6aff": [[1, 0, 1, 0, 1, 0, 1]],
    "E7aff": [[-1, 0, -1, 0, 1, 0, 1, 0],
              [-1, 0, -1, 0, 0, 0, 0, 1]],
    "E8aff": [[0, 0, 0, -1, 0, -1, 0, -1, 1]],
    "E611": [[0, 0, 0, 0, 0, 0, 0, 0]],
    "E711": [[0, 1, 0, -1, 0, 0, 0, 0, 1],
             [0, 0, 1, 2, 1, 0, 0, 0, 0],
             [0, 0, 0, -1, 0, 1, 0, 1, 0]],
    "E811": [[0, 0, 1, 2, 1, 0, 0, 0, 0, 0],
             [0, 0, 0, -1, 0, 1, 0, 1, 0, 1]],
}

PRESET_NAMES = tuple(_RANKS)

# periodic degree-seed paths (matrix returns exactly, degrees negate)
PERIOD_PATHS = {
    "E6aff": (3, 4, 6, 2, 1, 7, 5),
    "E7aff": (7, 1, 6, 2, 5, 8, 3, 4),
    "E8aff": (3, 4, 2, 6, 9, 1, 6, 5, 6, 7, 8),
}


def preset(name: str) -> GradedSeed:
    if name not in _ARROWS:
        raise KeyError("unknown preset %r (have %s)" % (name, ", ".join(PRESET_NAMES)))
    B = quiver_from_arrows(_RANKS[name], _ARROWS[name])
    grows = _GRADINGS[name]
    if grows is None:
        g = grading_basis(B)
        if g.r == 0:
            g = Grading.zero(B.size)
    else:
        g = Grading.from_rows(grows)
    return GradedSeed.initial(B, g)


# ---------------------------------------------------------------------------
# frozen intermediate data for the periodic paths (reference lists)

_E6AFF_STEP_MATRICES = [
    # after [5]
    ((0, 1, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0), (0, -1, 0, -1, 0, -1, 0),
     (0, 0, 1, 0, 1, 0, 0), (0, 0, 0, -1, 0, 0, 0), (0, 0, 1, 0, 0, 0, -1),
     (0, 0, 0, 0, 0, 1, 0)),
    # after [7,5]
    ((0, 1, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0), (0, -1, 0, -1, 0, -1, 0),
     (0, 0, 1, 0, 1, 0, 0), (0, 0, 0, -1, 0, 0, 0), (0, 0, 1, 0, 0, 0, 1),
     (0, 0, 0, 0, 0, -1, 0)),
    # after [1,7,5]
    ((0, -1, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0, 0), (0, -1, 0, -1, 0, -1, 0),
     (0, 0, 1, 0, 1, 0, 0), (0, 0, 0, -1, 0, 0, 0), (0, 0, 1, 0, 0, 0, 1),
     (0, 0, 0, 0, 0, -1, 0)),
    # after [2,1,7,5]
    ((0, 1, 0, 0, 0, 0, 0), (-1, 0, -1, 0, 0, 0, 0), (0, 1, 0, -1, 0, -1, 0),
     (0, 0, 1, 0, 1, 0, 0), (0, 0, 0, -1, 0, 0, 0), (0, 0, 1, 0, 0, 0, 1),
     (0, 0, 0, 0, 0, -1, 0)),
    # after [6,2,1,7,5]
    ((0, 1, 0, 0, 0, 0, 0), (-1, 0, -1, 0, 0, 0, 0), (0, 1, 0, -1, 0, 1, 0),
     (0, 0, 1, 0, 1, 0, 0), (0, 0, 0, -1, 0, 0, 0), (0, 0, -1, 0, 0, 0, -1),
     (0, 0, 0, 0, 0, 1, 0)),
    # after [4,6,2,1,7,5]
    ((0, 1, 0, 0, 0, 0, 0), (-1, 0, -1, 0, 0, 0, 0), (0, 1, 0, 1, 0, 1, 0),
     (0, 0, -1, 0, -1, 0, 0), (0, 0, 0, 1, 0, 0, 0), (0, 0, -1, 0, 0, 0, -1),
     (0, 0, 0, 0, 0, 1, 0)),
    None,  # after the full path: the initial matrix itself
]

_E6AFF_STEP_DEGREES = [
    (1, 0, 1, 0, -1, 0, 1),
    (1, 0, 1, 0, -1, 0, -1),
    (-1, 0, 1, 0, -1, 0, -1),
    (-1, 0, 1, 0, -1, 0, -1),
    (-1, 0, 1, 0, -1, 0, -1),
    (-1, 0, 1, 0, -1, 0, -1),
    (-1, 0, -1, 0, -1, 0, -1),
]

_E7AFF_STEP_MATRICES = [
    # after [4]
    ((0, 1, 0, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0, 0),
     (0, -1, 0, -1, 0, 0, 0, 0), (0, 0, 1, 0, 1, 0, 0, 1),
     (0, 0, 0, -1, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0, -1, 0),
     (0, 0, 0, 0, 0, 1, 0, 0), (0, 0, 0, -1, 0, 0, 0, 0)),
    # after [3,4]
    ((0, 1, 0, 0, 0, 0, 0, 0), (-1, 0, -1, 0, 0, 0, 0, 0),
     (0, 1, 0, 1, 0, 0, 0, 0), (0, 0, -1, 0, 1, 0, 0, 1),
     (0, 0, 0, -1, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0, -1, 0),
     (0, 0, 0, 0, 0, 1, 0, 0), (0, 0, 0, -1, 0, 0, 0, 0)),
    # after [8,3,4]
    ((0, 1, 0, 0, 0, 0, 0, 0), (-1, 0, -1, 0, 0, 0, 0, 0),
     (0, 1, 0, 1, 0, 0, 0, 0), (0, 0, -1, 0, 1, 0, 0, -1),
     (0, 0, 0, -1, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0, -1, 0),
     (0, 0, 0, 0, 0, 1, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0)),
    # after [5,8,3,4]
    ((0, 1, 0, 0, 0, 0, 0, 0), (-1, 0, -1, 0, 0, 0, 0, 0),
     (0, 1, 0, 1, 0, 0, 0, 0), (0, 0, -1, 0, -1, 0, 0, -1),
     (0, 0, 0, 1, 0, 1, 0, 0), (0, 0, 0, 0, -1, 0, -1, 0),
     (0, 0, 0, 0, 0, 1, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0)),
    # after [2,5,8,3,4]
    ((0, -1, 0, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0, 0, 0),
     (0, -1, 0, 1, 0, 0, 0, 0), (0, 0, -1, 0, -1, 0, 0, -1),
     (0, 0, 0, 1, 0, 1, 0, 0), (0, 0, 0, 0, -1, 0, -1, 0),
     (0, 0, 0, 0, 0, 1, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0)),
    # after [6,2,5,8,3,4]
    ((0, -1, 0, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0, 0, 0),
     (0, -1, 0, 1, 0, 0, 0, 0), (0, 0, -1, 0, -1, 0, 0, -1),
     (0, 0, 0, 1, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0, 1, 0),
     (0, 0, 0, 0, 0, -1, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0)),
    # after [1,6,2,5,8,3,4]
    ((0, 1, 0, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0, 0),
     (0, -1, 0, 1, 0, 0, 0, 0), (0, 0, -1, 0, -1, 0, 0, -1),
     (0, 0, 0, 1, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0, 1, 0),
     (0, 0, 0, 0, 0, -1, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0)),
    # after [7,1,6,2,5,8,3,4] == the initial matrix
    ((0, 1, 0, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0, 0),
     (0, -1, 0, 1, 0, 0, 0, 0), (0, 0, -1, 0, -1, 0, 0, -1),
     (0, 0, 0, 1, 0, -1, 0, 0), (0, 0, 0, 0, 1, 0, -1, 0),
     (0, 0, 0, 0, 0, 1, 0, 0), (0, 0, 0, 1, 0, 0, 0, 0)),
]

_E7AFF_STEP_DEGREES = [
    ((-1, -1), (0, 0), (-1, -1), (0, 0), (1, 0), (0, 0), (1, 0), (0, 1)),
    ((-1, -1), (0, 0), (1, 1), (0, 0), (1, 0), (0, 0), (1, 0), (0, 1)),
    ((-1, -1), (0, 0), (1, 1), (0, 0), (1, 0), (0, 0), (1, 0), (0, -1)),
    ((-1, -1), (0, 0), (1, 1), (0, 0), (-1, 0), (0, 0), (1, 0), (0, -1)),
    ((-1, -1), (0, 0), (1, 1), (0, 0), (-1, 0), (0, 0), (1, 0), (0, -1)),
    ((-1, -1), (0, 0), (1, 1), (0, 0), (-1, 0), (0, 0), (1, 0), (0, -1)),
    ((1, 1), (0, 0), (1, 1), (0, 0), (-1, 0), (0, 0), (1, 0), (0, -1)),
    ((1, 1), (0, 0), (1, 1), (0, 0), (-1, 0), (0, 0), (-1, 0), (0, -1)),
]

_E8AFF_STEP_MATRICES = [
    # after [8]
    ((0, 1, 0, 0, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0, 0, 0),
     (0, -1, 0, -1, 0, 0, 0, 0, -1), (0, 0, 1, 0, -1, 0, 0, 0, 0),
     (0, 0, 0, 1, 0, -1, 0, 0, 0), (0, 0, 0, 0, 1, 0, -1, 0, 0),
     (0, 0, 0, 0, 0, 1, 0, 1, 0), (0, 0, 0, 0, 0, 0, -1, 0, 0),
     (0, 0, 1, 0, 0, 0, 0, 0, 0)),
    # after [7,8]
    ((0, 1, 0, 0, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0, 0, 0),
     (0, -1, 0, -1, 0, 0, 0, 0, -1), (0, 0, 1, 0, -1, 0, 0, 0, 0),
     (0, 0, 0, 1, 0, -1, 0, 0, 0), (0, 0, 0, 0, 1, 0, 1, 0, 0),
     (0, 0, 0, 0, 0, -1, 0, -1, 0), (0, 0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, 1, 0, 0, 0, 0, 0, 0)),
    # after [6,7,8].  The printed copy of this one matrix lost its signs in
    # extraction; the entries below are recomputed by hand from [7,8] via the
    # mutation rule (absolute values agree with the printed copy).
    ((0, 1, 0, 0, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0, 0, 0),
     (0, -1, 0, -1, 0, 0, 0, 0, -1), (0, 0, 1, 0, -1, 0, 0, 0, 0),
     (0, 0, 0, 1, 0, 1, 0, 0, 0), (0, 0, 0, 0, -1, 0, -1, 0, 0),
     (0, 0, 0, 0, 0, 1, 0, -1, 0), (0, 0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, 1, 0, 0, 0, 0, 0, 0)),
    # after [5,6,7,8]
    ((0, 1, 0, 0, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0, 0, 0),
     (0, -1, 0, -1, 0, 0, 0, 0, -1), (0, 0, 1, 0, 1, 0, 0, 0, 0),
     (0, 0, 0, -1, 0, -1, 0, 0, 0), (0, 0, 0, 0, 1, 0, -1, 0, 0),
     (0, 0, 0, 0, 0, 1, 0, -1, 0), (0, 0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, 1, 0, 0, 0, 0, 0, 0)),
    # after [6,5,6,7,8]
    ((0, 1, 0, 0, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0, 0, 0),
     (0, -1, 0, -1, 0, 0, 0, 0, -1), (0, 0, 1, 0, 1, 0, 0, 0, 0),
     (0, 0, 0, -1, 0, 1, -1, 0, 0), (0, 0, 0, 0, -1, 0, 1, 0, 0),
     (0, 0, 0, 0, 1, -1, 0, -1, 0), (0, 0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, 1, 0, 0, 0, 0, 0, 0)),
    # after [1,6,5,6,7,8]
    ((0, -1, 0, 0, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0, 0, 0, 0),
     (0, -1, 0, -1, 0, 0, 0, 0, -1), (0, 0, 1, 0, 1, 0, 0, 0, 0),
     (0, 0, 0, -1, 0, 1, -1, 0, 0), (0, 0, 0, 0, -1, 0, 1, 0, 0),
     (0, 0, 0, 0, 1, -1, 0, -1, 0), (0, 0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, 1, 0, 0, 0, 0, 0, 0)),
    # after [9,1,6,5,6,7,8]
    ((0, -1, 0, 0, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0, 0, 0, 0),
     (0, -1, 0, -1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0, 0, 0, 0),
     (0, 0, 0, -1, 0, 1, -1, 0, 0), (0, 0, 0, 0, -1, 0, 1, 0, 0),
     (0, 0, 0, 0, 1, -1, 0, -1, 0), (0, 0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, -1, 0, 0, 0, 0, 0, 0)),
    # after [6,9,1,6,5,6,7,8]
    ((0, -1, 0, 0, 0, 0, 0, 0, 0), (1, 0, 1, 0, 0, 0, 0, 0, 0),
     (0, -1, 0, -1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0, 0, 0, 0),
     (0, 0, 0, -1, 0, -1, 0, 0, 0), (0, 0, 0, 0, 1, 0, -1, 0, 0),
     (0, 0, 0, 0, 0, 1, 0, -1, 0), (0, 0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, -1, 0, 0, 0, 0, 0, 0)),
    # after [2,6,9,1,6,5,6,7,8]
    ((0, 1, 0, 0, 0, 0, 0, 0, 0), (-1, 0, -1, 0, 0, 0, 0, 0, 0),
     (0, 1, 0, -1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0, 0, 0, 0),
     (0, 0, 0, -1, 0, -1, 0, 0, 0), (0, 0, 0, 0, 1, 0, -1, 0, 0),
     (0, 0, 0, 0, 0, 1, 0, -1, 0), (0, 0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, -1, 0, 0, 0, 0, 0, 0)),
    # after [4,2,6,9,1,6,5,6,7,8]
    ((0, 1, 0, 0, 0, 0, 0, 0, 0), (-1, 0, -1, 0, 0, 0, 0, 0, 0),
     (0, 1, 0, 1, 0, 0, 0, 0, 1), (0, 0, -1, 0, -1, 0, 0, 0, 0),
     (0, 0, 0, 1, 0, -1, 0, 0, 0), (0, 0, 0, 0, 1, 0, -1, 0, 0),
     (0, 0, 0, 0, 0, 1, 0, -1, 0), (0, 0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, -1, 0, 0, 0, 0, 0, 0)),
    # after [3,4,2,6,9,1,6,5,6,7,8] == the initial matrix
    ((0, 1, 0, 0, 0, 0, 0, 0, 0), (-1, 0, 1, 0, 0, 0, 0, 0, 0),
     (0, -1, 0, -1, 0, 0, 0, 0, -1), (0, 0, 1, 0, -1, 0, 0, 0, 0),
     (0, 0, 0, 1, 0, -1, 0, 0, 0), (0, 0, 0, 0, 1, 0, -1, 0, 0),
     (0, 0, 0, 0, 0, 1, 0, -1, 0), (0, 0, 0, 0, 0, 0, 1, 0, 0),
     (0, 0, 1, 0, 0, 0, 0, 0, 0)),
]

_E8AFF_STEP_DEGREES = [
    (0, 0, 0, -1, 0, -1, 0, 1, 1),
    (0, 0, 0, -1, 0, -1, 0, 1, 1),
    (0, 0, 0, -1, 0, 1, 0, 1, 1),
    (0, 0, 0, -1, 0, 1, 0, 1, 1),
    (0, 0, 0, -1, 0, -1, 0, 1, 1),
    (0, 0, 0, -1, 0, -1, 0, 1, 1),
    (0, 0, 0, -1, 0, -1, 0, 1, -1),
    (0, 0, 0, -1, 0, 1, 0, 1, -1),
    (0, 0, 0, -1, 0, 1, 0, 1, -1),
    (0, 0, 0, 1, 0, 1, 0, 1, -1),
    (0, 0, 0, 1, 0, 1, 0, 1, -1),
]

_STEP_DATA = {
    "E6aff": (_E6AFF_STEP_MATRICES, _E6AFF_STEP_DEGREES),
    "E7aff": (_E7AFF_STEP_MATRICES, _E7AFF_STEP_DEGREES),
    "E8aff": (_E8AFF_STEP_MATRICES, _E8AFF_STEP_DEGREES),
}


@dataclass
class VerifyReport:
    name: str
    ok: bool
    checks: int
    mismatches: List[str] = field(default_factory=list)

    def add(self, msg: str):
        self.ok = False
        self.mismatches.append(msg)


def _as_degree_tuple(seed: GradedSeed, j: int):
    d = seed.degree(j)
    return d[0] if seed.grading.r == 1 else d


def verify_period(name: str, n_max: int = 2) -> VerifyReport:
    """Check the periodic path: matrix returns, degrees negate each round.

    For n = 1 the intermediate matrices and degree clusters are compared
    entry-for-entry against the reference lists.
    """
    if name not in PERIOD_PATHS:
        raise KeyError("no periodic path recorded for %r" % name)
    seed = preset(name)
    path = MutationPath.from_list(PERIOD_PATHS[name])
    report = VerifyReport(name, True, 0)

    ref_mats, ref_degs = _STEP_DATA[name]
    cur = seed
    for step, k in enumerate(path.applications()):
        cur = cur.mutate(k)
        report.checks += 1
        want_mat = ref_mats[step]
        if want_mat is None:
            want_mat = seed.matrix.rows
        if cur.matrix.rows != tuple(want_mat):
            report.add("step %d (%s): matrix differs from reference" % (step + 1, k))
        want_deg = ref_degs[step]
        got_deg = tuple(_as_degree_tuple(cur, j + 1) for j in range(cur.n))
        if got_deg != tuple(want_deg):
            report.add("step %d (%s): degrees %s != %s" % (step + 1, k, got_deg, want_deg))

    cur = seed
    for rep in range(1, n_max + 1):
        cur = apply_path(cur, path)
        report.checks += 1
        if cur.matrix.rows != seed.matrix.rows:
            report.add("round %d: matrix did not return" % rep)
        want = seed.grading.rows if rep % 2 == 0 else seed.grading.neg().rows
        if cur.grading.rows != want:
            report.add("round %d: degree cluster is not (-1)^n * initial" % rep)
    return report


# ---------------------------------------------------------------------------
# denominator closed forms


def x7_denominator_21(n: int) -> tuple:
    return (n, n - 1, 0, 0, 0, 0, 0)


def x7_denominator_543_21(n: int) -> tuple:
    return (2 * n, 2 * (n - 1), 1, 1, 1, 0, 0)


def e6aff_slice3(n: int) -> tuple:
    lo = (n - 1) // 2
    return (lo, n - 1, -(-3 * n // 2) - 1, n - 1, lo, n - 1, lo)


def e7aff_slice4(n: int) -> tuple:
    c = lambda x: -(-x // 3)
    return (c(n), c(2 * n), n, c(4 * n) - 1, n, c(2 * n), c(n), c(2 * n - 1))


def e8aff_slice3(n: int) -> tuple:
    c = -(-n // 5)  # ceil(n/5)
    i = n % 5
    e1 = 2 * c - (2 if i in (1, 2) else 1)
    e2 = 4 * c - {1: 4, 2: 3, 3: 2, 4: 2, 0: 1}[i]
    e3 = 6 * c - {1: 5, 2: 4, 3: 3, 4: 2, 0: 1}[i]
    e4 = n - 1
    e5 = 4 * c - {1: 4, 2: 4, 3: 3, 4: 2, 0: 1}[i]
    e6 = 3 * c - {1: 3, 2: 3, 3: 3, 4: 2, 0: 1}[i]
    e7 = 2 * c - (1 if i == 0 else 2)
    e8 = c - 1
    e9 = 3 * c - {1: 3, 2: 2, 3: 2, 4: 1, 0: 1}[i]
    return (e1, e2, e3, e4, e5, e6, e7, e8, e9)


def _dcl_slice(dcl: tuple, j: int) -> tuple:
    return tuple(dv[j - 1] for dv in dcl)


def verify_denominator_forms(name: str, n_max: int = 50) -> VerifyReport:
    """Compare the recorded closed forms against the exact recurrence."""
    report = VerifyReport(name, True, 0)
    seed = preset(name)
    if name == "X7":
        cur = seed
        base = MutationPath.of(2, 1)
        for n in range(1, n_max + 1):
            cur = apply_path(seed, base.truncated(n))
            report.checks += 1
            k = base.truncated(n).steps[0]
            if cur.denominators[k - 1] != x7_denominator_21(n):
                report.add("dv[(2,1)_%d] mismatch" % n)
            tail = apply_path(cur, [5, 4, 3])
            report.checks += 1
            if tail.denominators[4] != x7_denominator_543_21(n):
                report.add("dv[5,4,3,(2,1)_%d] mismatch" % n)
        return report

    path = MutationPath.from_list(PERIOD_PATHS[name])
    slice_index = {"E6aff": 3, "E7aff": 4, "E8aff": 3}[name]
    closed = {"E6aff": e6aff_slice3, "E7aff": e7aff_slice4, "E8aff": e8aff_slice3}[name]
    cur = seed
    for n in range(1, n_max + 1):
        cur = apply_path(cur, path)
        report.checks += 1
        got = _dcl_slice(cur.denominators, slice_index)
        if got != closed(n):
            report.add("slice %d after %d repeats: %s != %s"
                       % (slice_index, n, got, closed(n)))
    return report


# ---------------------------------------------------------------------------
# floor/ceiling identities used by the closed-form proofs


def ceil_floor_identities(n: int, m: int) -> bool:
    if m < 1 or n < 1:
        raise ValueError("need positive n, m")
    if ceil(n / m) != floor((n - 1) / m) + 1:
        return False
    if floor(n / m) != ceil((n + 1) / m) - 1:
        return False
    if n != sum(ceil((n - i) / m) for i in range(m)):
        return False
    return True
