"""Exact mutation engine for exchange matrices, gradings and denominator vectors.

All integer arithmetic is plain Python int (arbitrary precision), so fork
mutation can grow entries without overflow concerns.  Matrices are stored as
tuples of row tuples: an extended exchange matrix has n+m rows and n columns
(rows n..n+m-1 belong to frozen vertices).  Mutation directions are 1-based
at the API surface.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence


class DirectionError(ValueError):
    """Mutation direction outside 1..n."""


class InvalidGradingError(ValueError):
    """Grading condition g * B = 0 is violated."""


class NotSkewSymmetrizableError(ValueError):
    pass


Rows = tuple  # tuple of row tuples of ints


def _as_rows(mat: Iterable[Iterable[int]]) -> Rows:
    return tuple(tuple(int(x) for x in row) for row in mat)


def pos(x: int) -> int:
    """[x]_+ = max(x, 0)."""
    return x if x > 0 else 0


# ---------------------------------------------------------------------------
# raw tuple-level operations (hot paths: census, BFS)

def mutate_rows(rows: Rows, n: int, k0: int) -> Rows:
    """Mutate an (n+m) x n matrix at 0-based column/row index k0."""
    colk = tuple(row[k0] for row in rows)
    out = []
    for i, row in enumerate(rows):
        bik = colk[i]
        if i == k0:
            out.append(tuple(-x for x in row))
            continue
        new = list(row)
        for j in range(n):
            if j == k0:
                new[j] = -row[j]
            else:
                bkj = rows[k0][j]
                new[j] = row[j] + pos(bik) * bkj + bik * pos(-bkj)
        out.append(tuple(new))
    return tuple(out)


def mutate_grading_rows(grows: Rows, rows: Rows, k0: int) -> Rows:
    """Mutate the degree columns of an r x (n+m) grading at index k0.

    The two exchange monomials must have equal degree (this is the grading
    condition at column k0), otherwise InvalidGradingError is raised.
    """
    r = len(grows)
    plus = [0] * r
    minus = [0] * r
    for i, row in enumerate(rows):
        bik = row[k0]
        if bik > 0:
            for t in range(r):
                plus[t] += bik * grows[t][i]
        elif bik < 0:
            for t in range(r):
                minus[t] -= bik * grows[t][i]
    if plus != minus:
        raise InvalidGradingError(
            "exchange monomials at direction %d have degrees %s != %s"
            % (k0 + 1, tuple(plus), tuple(minus)))
    return tuple(
        grow[:k0] + (plus[t] - grow[k0],) + grow[k0 + 1:]
        for t, grow in enumerate(grows))


def mutate_denominator_tuple(dcl: tuple, rows: Rows, k0: int) -> tuple:
    """Denominator-cluster mutation: replace entry k0, leave the rest.

    dv' = -dv_k + max( sum_i [b_ik]_+ dv_i , sum_i [-b_ik]_+ dv_i ),
    the max taken component-wise.  dcl is an n-tuple of length-n int tuples.
    """
    nvars = len(dcl[0])
    up = [0] * nvars
    down = [0] * nvars
    for i, dv in enumerate(dcl):
        bik = rows[i][k0]
        if bik > 0:
            for t in range(nvars):
                up[t] += bik * dv[t]
        elif bik < 0:
            for t in range(nvars):
                down[t] -= bik * dv[t]
    old = dcl[k0]
    new = tuple(max(u, d) - o for u, d, o in zip(up, down, old))
    return dcl[:k0] + (new,) + dcl[k0 + 1:]


def is_skew_symmetric(rows: Rows, n: int) -> bool:
    return all(rows[i][j] == -rows[j][i] for i in range(n) for j in range(n))


def skew_symmetrizer(rows: Rows, n: int) -> Optional[tuple]:
    """Positive integer diagonal d with d_i b_ij = -d_j b_ji, or None.

    Found by propagating ratios along nonzero entries of the principal part,
    one connected component at a time.
    """
    for i in range(n):
        if rows[i][i] != 0:
            return None
        for j in range(n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                return None
            if rows[i][j] * rows[j][i] > 0:
                return None
    d = [None] * n
    for root in range(n):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if rows[i][j] == 0 or i == j:
                    continue
                want = d[i] * Fraction(abs(rows[i][j]), abs(rows[j][i]))
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return None
    denom = 1
    for x in d:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExchangeMatrix:
    """(n+m) x n integer matrix whose principal part is skew-symmetrizable."""

    n: int
    m: int
    rows: Rows

    def __post_init__(self):
        if len(self.rows) != self.n + self.m:
            raise ValueError("expected %d rows, got %d" % (self.n + self.m, len(self.rows)))
        if any(len(row) != self.n for row in self.rows):
            raise ValueError("all rows must have length n=%d" % self.n)
        if skew_symmetrizer(self.rows, self.n) is None:
            raise NotSkewSymmetrizableError("principal part is not skew-symmetrizable")

    @classmethod
    def from_rows(cls, mat, m: int = 0) -> "ExchangeMatrix":
        rows = _as_rows(mat)
        return cls(n=len(rows[0]), m=len(rows) - len(rows[0]), rows=rows) if m == 0 \
            else cls(n=len(rows) - m, m=m, rows=rows)

    @property
    def size(self) -> int:
        return self.n + self.m

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def principal(self) -> Rows:
        return tuple(row for row in self.rows[:self.n])

    def is_skew_symmetric(self) -> bool:
        return is_skew_symmetric(self.rows, self.n)

    def check_direction(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise DirectionError("direction %r out of range 1..%d" % (k, self.n))
        return k - 1

    def mutate(self, k: int) -> "ExchangeMatrix":
        k0 = self.check_direction(k)
        return ExchangeMatrix(self.n, self.m, mutate_rows(self.rows, self.n, k0))

    def neg(self) -> "ExchangeMatrix":
        return ExchangeMatrix(self.n, self.m, tuple(tuple(-x for x in row) for row in self.rows))

    def max_abs(self) -> int:
        return max((abs(x) for row in self.rows for x in row), default=0)


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    return B.mutate(k)


@dataclass(frozen=True)
class Grading:
    """r x (n+m) integer grading; column j is the degree of variable j+1."""

    rows: Rows

    @classmethod
    def from_rows(cls, mat) -> "Grading":
        return cls(_as_rows(mat))

    @classmethod
    def zero(cls, size: int, r: int = 1) -> "Grading":
        return cls(tuple((0,) * size for _ in range(r)))

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def degree(self, j: int) -> tuple:
        """Degree of variable j (1-based) as an r-tuple."""
        return tuple(row[j - 1] for row in self.rows)

    def degrees(self) -> tuple:
        return tuple(self.degree(j + 1) for j in range(self.size))

    def neg(self) -> "Grading":
        return Grading(tuple(tuple(-x for x in row) for row in self.rows))


def is_valid_grading(g: Grading, B: ExchangeMatrix) -> bool:
    """g * B = 0 with g read as r x (n+m) and B as (n+m) x n."""
    if g.r == 0:
        return True
    if g.size != B.size:
        return False
    for grow in g.rows:
        for j in range(B.n):
            if sum(grow[i] * B.rows[i][j] for i in range(B.size)) != 0:
                return False
    return True


def mutate_degrees(g: Grading, B: ExchangeMatrix, k: int) -> Grading:
    k0 = B.check_direction(k)
    return Grading(mutate_grading_rows(g.rows, B.rows, k0))


def initial_denominators(n: int) -> tuple:
    """Initial denominator cluster: dv(x_i) = -e_i."""
    return tuple(tuple(-1 if t == i else 0 for t in range(n)) for i in range(n))


def mutate_denominators(dcl: tuple, B: ExchangeMatrix, k: int) -> tuple:
    k0 = B.check_direction(k)
    return mutate_denominator_tuple(dcl, B.rows, k0)


# ---------------------------------------------------------------------------
# mutation paths: [p_t, ..., p_1] applied right to left


@dataclass(frozen=True)
class MutationPath:
    """A mutation path written right-to-left, as in [p_t, ..., p_1]."""

    steps: tuple

    @classmethod
    def of(cls, *steps: int) -> "MutationPath":
        return cls(tuple(int(s) for s in steps))

    @classmethod
    def from_list(cls, steps: Sequence[int]) -> "MutationPath":
        return cls(tuple(int(s) for s in steps))

    def __len__(self) -> int:
        return len(self.steps)

    def applications(self) -> tuple:
        """Directions in the order they are applied (rightmost first)."""
        return tuple(reversed(self.steps))

    def then(self, other: "MutationPath") -> "MutationPath":
        """Concatenation [other, self]: self is applied first."""
        return MutationPath(other.steps + self.steps)

    def repeated(self, r: int) -> "MutationPath":
        """(p)^r: the whole list repeated r times."""
        return MutationPath(self.steps * r)

    def truncated(self, r: int) -> "MutationPath":
        """(p)_r: the first r terms of the infinite repetition (p)^oo.

        Terms are counted in application order, e.g. (9,8,7)_4 = [7,9,8,7].
        """
        apps = self.applications()
        taken = tuple(apps[i % len(apps)] for i in range(r))
        return MutationPath(tuple(reversed(taken)))

    def reverse(self) -> "MutationPath":
        return MutationPath(self.applications())


def as_path(p) -> MutationPath:
    if isinstance(p, MutationPath):
        return p
    return MutationPath.from_list(p)


@dataclass(frozen=True)
class GradedSeed:
    """Exchange matrix + grading + denominator cluster (+ labels, history)."""

    matrix: ExchangeMatrix
    grading: Grading
    denominators: tuple
    labels: Optional[tuple] = None
    history: tuple = ()

    @classmethod
    def initial(cls, matrix: ExchangeMatrix, grading: Grading,
                labels: Optional[Sequence[str]] = None) -> "GradedSeed":
        if not is_valid_grading(grading, matrix):
            raise InvalidGradingError("grading does not satisfy g * B = 0")
        return cls(matrix=matrix, grading=grading,
                   denominators=initial_denominators(matrix.n),
                   labels=tuple(labels) if labels else None)

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def m(self) -> int:
        return self.matrix.m

    def degree(self, j: int) -> tuple:
        return self.grading.degree(j)

    def mutate(self, k: int) -> "GradedSeed":
        B2 = self.matrix.mutate(k)
        g2 = mutate_degrees(self.grading, self.matrix, k)
        d2 = mutate_denominators(self.denominators, self.matrix, k)
        return replace(self, matrix=B2, grading=g2, denominators=d2,
                       history=self.history + (k,))


def apply_path(seed: GradedSeed, p, trace: bool = False):
    """Left fold of seed mutation along p (applied right to left).

    With trace=True returns (seed, steps) where steps[i] records the state
    after the i-th applied mutation as a dict.
    """
    path = as_path(p)
    steps = []
    cur = seed
    for k in path.applications():
        cur = cur.mutate(k)
        if trace:
            steps.append({
                "direction": k,
                "matrix": cur.matrix.rows,
                "degrees": cur.grading.degrees(),
                "new_degree": cur.degree(k),
                "new_denominator": cur.denominators[k - 1],
            })
    return (cur, steps) if trace else cur


# ---------------------------------------------------------------------------
# grading space


def _kernel_basis(mat_rows, ncols):
    """Primitive integer basis of the rational kernel of the given matrix."""
    rows = [[Fraction(x) for x in row] for row in mat_rows]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        denom = 1
        for x in vec:
            denom = denom * x.denominator // gcd(denom, x.denominator)
        ints = [int(x * denom) for x in vec]
        g = 0
        for x in ints:
            g = gcd(g, x)
        ints = [x // g for x in ints]
        lead = next((x for x in ints if x != 0))
        if lead < 0:
            ints = [-x for x in ints]
        basis.append(tuple(ints))
    basis.sort()
    return tuple(basis)


def grading_basis(B: ExchangeMatrix) -> Grading:
    """Primitive integer basis of ker(B^T), rows sorted lexicographically.

    The result has r = corank(B^T) rows; r = 0 gives an empty grading.
    """
    bt = [[B.rows[i][j] for i in range(B.size)] for j in range(B.n)]
    return Grading(_kernel_basis(bt, B.size))


# ---------------------------------------------------------------------------
# JSON wire formats for seeds and paths


def seed_to_json(seed: GradedSeed) -> dict:
    out = {
        "n": seed.n,
        "m": seed.m,
        "b": [list(row) for row in seed.matrix.rows],
        "grading": [list(row) for row in seed.grading.rows],
    }
    if seed.labels:
        out["labels"] = list(seed.labels)
    return out


def seed_from_json(data) -> GradedSeed:
    if isinstance(data, str):
        data = json.loads(data)
    n, m = int(data["n"]), int(data["m"])
    B = ExchangeMatrix(n, m, _as_rows(data["b"]))
    g = Grading.from_rows(data.get("grading") or [[0] * (n + m)])
    labels = data.get("labels")
    return GradedSeed.initial(B, g, labels=labels)


def path_from_json(data) -> MutationPath:
    if isinstance(data, str):
        data = json.loads(data)
    return MutationPath.from_list(data)
