"""Type B_n / C_n graded data: bipartite matrices, gradings, root counts.

Roots are generated directly from their closed forms over the simple-root
basis rather than through reflection groups; degrees come from
deg(x[root]) = -sum_i lambda_i g_i, with the negative simple roots mapping
to the initial variables.
"""

from __future__ import annotations

from typing import Dict, List

from .core import ExchangeMatrix, Grading


class EmptyGradingError(ValueError):
    """Even n: the bipartite matrix has full rank, no nontrivial grading."""


def _check(family: str, n: int):
    if family not in ("B", "C"):
        raise ValueError("family must be 'B' or 'C'")
    if n < 2:
        raise ValueError("need n >= 2")


def bipartite_matrix(family: str, n: int) -> ExchangeMatrix:
    """Tridiagonal bipartite matrix with alternating signs.

    The final off-diagonal pair carries the 2 that makes the matrix
    skew-symmetrizable of type B (2 below the diagonal) or C (2 above).
    """
    _check(family, n)
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n - 1):  # 1-based positions 1..n-2
        s = (-1) ** (i + 1)
        rows[i - 1][i] = s
        rows[i][i - 1] = -s
    s = (-1) ** n
    if family == "B":
        rows[n - 2][n - 1] = s
        rows[n - 1][n - 2] = -2 * s
    else:
        rows[n - 2][n - 1] = 2 * s
        rows[n - 1][n - 2] = -s
    return ExchangeMatrix(n, 0, tuple(tuple(r) for r in rows))


def grading_vector(family: str, n: int) -> Grading:
    """The chapter's grading vector for odd n; EmptyGradingError for even n."""
    _check(family, n)
    if n % 2 == 0:
        raise EmptyGradingError("type %s_%d has full rank, no nontrivial grading" % (family, n))
    base = 2 if family == "B" else 1
    g = [0] * n
    for j in range(1, (n - 1) // 2 + 1):  # odd positions below n
        g[2 * j - 2] = base * (-1) ** (j + 1)
    g[n - 1] = (-1) ** ((n + 1) // 2 + 1)
    return Grading.from_rows([g])


def almost_positive_roots(family: str, n: int) -> List[tuple]:
    """Positive roots plus negated simple roots, as coefficient vectors."""
    _check(family, n)

    def vec(pairs):
        out = [0] * n
        for lo, hi, w in pairs:  # w * (alpha_lo + ... + alpha_hi), 1-based
            for t in range(lo, hi + 1):
                out[t - 1] += w
        return tuple(out)

    roots = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(vec([(i, j - 1, 1)]))  # beta_i - beta_j
    if family == "B":
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append(vec([(i, j - 1, 1), (j, n, 2)]))  # beta_i + beta_j
        for i in range(1, n + 1):
            roots.append(vec([(i, n, 1)]))  # beta_i
    else:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append(vec([(i, j - 1, 1), (j, n - 1, 2), (n, n, 1)]))
        for i in range(1, n + 1):
            roots.append(vec([(i, n - 1, 2), (n, n, 1)]))  # 2 beta_i
    for i in range(1, n + 1):
        roots.append(tuple(-1 if t == i - 1 else 0 for t in range(n)))
    assert len(roots) == n * n + n
    return roots


def degree_distribution(family: str, n: int) -> Dict[int, int]:
    g = grading_vector(family, n).rows[0]
    dist: Dict[int, int] = {}
    for root in almost_positive_roots(family, n):
        d = -sum(l * gi for l, gi in zip(root, g))
        dist[d] = dist.get(d, 0) + 1
    return dist


def closed_form_distribution(family: str, n: int) -> Dict[int, int]:
    """The chapter's per-degree totals (odd n)."""
    _check(family, n)
    if n % 2 == 0:
        raise EmptyGradingError("no grading for even n")
    if family == "B":
        return {
            -2: (n + 1) * (n - 1) // 4,
            -1: (n + 1) // 2,
            0: (n + 1) * (n - 1) // 2,
            1: (n + 1) // 2,
            2: (n + 1) * (n - 1) // 4,
        }
    return {
        -1: (n + 1) ** 2 // 4,
        0: (n + 1) * (n - 1) // 2,
        1: (n + 1) ** 2 // 4,
    }


def cartan_counterpart(B: ExchangeMatrix) -> tuple:
    """A(B): 2 on the diagonal, -|b_ij| off it (principal part only)."""
    n = B.n
    return tuple(
        tuple(2 if i == j else -abs(B.rows[i][j]) for j in range(n))
        for i in range(n))
