"""Degree-subquiver growth patterns and degree-quiver sums.

The growth triangle is the full subquiver v1 -(2)-> v2 -(1)-> v3 (no arrow
between v1 and v3) inside a positive degree quiver.  Depending on how the
degrees compare, alternating mutation of v1 and v2 (possibly with a detour
through v3) drives degrees to infinity; the flowing-triangle condition
around a weight-2 arrow gives exact linear degree sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional

from .core import ExchangeMatrix, GradedSeed, Grading, is_valid_grading


@dataclass(frozen=True)
class TriangleMatch:
    v1: int
    v2: int
    v3: int
    degrees: tuple  # (d1, d2, d3)
    strict: bool
    relaxed_a: bool
    relaxed_b: bool
    negative_vertices: tuple  # vertices breaking ambient positivity

    @property
    def proposition(self) -> Optional[str]:
        if self.negative_vertices:
            return None
        if self.strict:
            return "strict"
        if self.relaxed_a:
            return "relaxed_a"
        if self.relaxed_b:
            return "relaxed_b"
        return None

    def certifying_path(self, length: int) -> list:
        """Right-to-left path of the given number of applications."""
        if self.relaxed_a or self.strict:
            apps = [(self.v2, self.v1)[i % 2] for i in range(length)]
        else:  # relaxed_b: [(v1, v2)_n, v3, v1]
            apps = [self.v1, self.v3] + [(self.v2, self.v1)[i % 2] for i in range(length)]
        return list(reversed(apps))


def _degree_scalar(seed_or_grading, j: int):
    if isinstance(seed_or_grading, GradedSeed):
        d = seed_or_grading.degree(j)
    else:
        d = seed_or_grading.degree(j)
    if len(d) != 1:
        raise ValueError("growth detection needs a 1-dimensional grading")
    return d[0]


def find_growth_triangle(seed: GradedSeed) -> List[TriangleMatch]:
    """All embedded growth triangles with their applicable propositions.

    v1 and v2 must be mutable (they are mutated); v3 may be frozen for the
    strict and relaxed_a variants but must be mutable for relaxed_b, where
    the certifying path mutates it.
    """
    B = seed.matrix
    n, size = B.n, B.size
    degs = [_degree_scalar(seed, j + 1) for j in range(size)]
    negative = tuple(j + 1 for j in range(size) if degs[j] < 0)
    out = []
    for v1 in range(n):
        for v2 in range(n):
            if v1 == v2 or B.rows[v1][v2] != 2:
                continue
            for v3 in range(size):
                if v3 in (v1, v2):
                    continue
                w23 = B.rows[v2][v3] if v3 < n else -B.rows[v3][v2]
                w13 = B.rows[v1][v3] if v3 < n else -B.rows[v3][v1]
                if w23 != 1 or w13 != 0:
                    continue
                d1, d2, d3 = degs[v1], degs[v2], degs[v3]
                if min(d1, d2, d3) < 1:
                    continue
                strict = d3 > d1 >= d2 >= 1
                relaxed_a = d1 >= d2
                relaxed_b = d2 > d1 and v3 < n
                if not (strict or relaxed_a or relaxed_b):
                    continue
                out.append(TriangleMatch(
                    v1 + 1, v2 + 1, v3 + 1, (d1, d2, d3),
                    strict, relaxed_a, relaxed_b, negative))
    return out


# ---------------------------------------------------------------------------
# flowing triangles / linear degree sequences


def _flowing_form(B: ExchangeMatrix, v1: int, v2: int, v: int, left: bool) -> bool:
    """Triangle condition at neighbour v of the weight-2 pair (v1, v2).

    With W = weight of v -> v1 and w = weight of v2 -> v, the allowed shapes
    are W = w + 1 (left) or w = W + 1 (right), or W = w = 1; all arrows flow
    v2 -> v -> v1 and no other orientation is permitted.
    """
    # 0-based indices; for frozen vertices only the mutable columns exist
    n = B.n

    def w_of(i, j):
        if i < n and j < n:
            return B.rows[i][j]
        if i < n:
            return -B.rows[j][i]
        return B.rows[i][j]

    W = w_of(v, v1)
    w = w_of(v2, v)
    if W < 0 or w < 0:
        return False
    if W == w == 1:
        return True
    if left:
        return W == w + 1
    return w == W + 1


def is_striL(B: ExchangeMatrix, v1: int, v2: int, include_frozen: bool = True) -> bool:
    return _stri(B, v1, v2, left=True, include_frozen=include_frozen)


def is_striR(B: ExchangeMatrix, v1: int, v2: int, include_frozen: bool = True) -> bool:
    return _stri(B, v1, v2, left=False, include_frozen=include_frozen)


def _stri(B: ExchangeMatrix, v1: int, v2: int, left: bool,
          include_frozen: bool = True) -> bool:
    n, size = B.n, B.size
    a, b = v1 - 1, v2 - 1
    if a >= n or b >= n:
        return False

    def w_of(i, j):
        if i < n and j < n:
            return B.rows[i][j]
        if i < n:
            return -B.rows[j][i]
        return B.rows[i][j]

    if w_of(a, b) != 2:
        return False
    limit = size if include_frozen else n
    for v in range(limit):
        if v in (a, b):
            continue
        if w_of(a, v) == 0 and w_of(b, v) == 0:
            continue
        if not _flowing_form(B, a, b, v, left):
            return False
    return True


@dataclass(frozen=True)
class LinearPattern:
    v1: int
    v2: int
    side: str      # "L" or "R"
    d1: int
    d2: int

    def predicted_degree(self, n: int) -> int:
        """Degree of the n-th new variable along the alternating path."""
        if self.side == "R":
            return (self.d1 - self.d2) * n + self.d1
        return (self.d2 - self.d1) * n + self.d2

    def path(self, n: int) -> list:
        base = (self.v1, self.v2) if self.side == "R" else (self.v2, self.v1)
        apps = [base[1 - i % 2] for i in range(n)]
        return list(reversed(apps))


def find_linear_pattern(seed: GradedSeed) -> List[LinearPattern]:
    B = seed.matrix
    out = []
    for v1 in range(1, B.n + 1):
        for v2 in range(1, B.n + 1):
            if v1 == v2:
                continue
            d1 = _degree_scalar(seed, v1)
            d2 = _degree_scalar(seed, v2)
            if is_striR(B, v1, v2):
                out.append(LinearPattern(v1, v2, "R", d1, d2))
            if is_striL(B, v1, v2):
                out.append(LinearPattern(v1, v2, "L", d1, d2))
    return out


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class GrowthCertificate:
    path: tuple            # right-to-left order, applied to the initial seed
    vertices: tuple        # (v1, v2, v3) or (v1, v2)
    proposition: str

    def to_json(self) -> dict:
        return {"path": list(self.path), "vertices": list(self.vertices),
                "proposition": self.proposition}


def certify_infinite_degrees(seed: GradedSeed, depth: int,
                             paths=None, max_states: int = 4000):
    """Hunt a growth-triangle or linear-pattern match within reach.

    paths, when given, are replayed first (cheap targeted search); then a
    breadth-first scan over mutation-distinct seeds up to the given depth.
    The certificate records how to re-check: apply the path, find the match.
    """
    from .core import apply_path, as_path

    def scan(s: GradedSeed, path_steps) -> Optional[GrowthCertificate]:
        for match in find_growth_triangle(s):
            prop = match.proposition
            if prop is not None:
                verts = (match.v1, match.v2, match.v3)
                return GrowthCertificate(tuple(path_steps), verts, prop)
        for pat in find_linear_pattern(s):
            if pat.d1 != pat.d2 and min(pat.d1, pat.d2) >= 0:
                return GrowthCertificate(
                    tuple(path_steps), (pat.v1, pat.v2), "linear_stri" + pat.side)
        return None

    if paths:
        for p in paths:
            p = as_path(p)
            cert = scan(apply_path(seed, p), p.steps)
            if cert is not None:
                return cert

    seen = {seed.matrix.rows + seed.grading.rows}
    frontier = [(seed, ())]
    for _ in range(depth):
        nxt = []
        for s, steps in frontier:
            for k in range(1, seed.n + 1):
                s2 = s.mutate(k)
                tag = s2.matrix.rows + s2.grading.rows
                if tag in seen:
                    continue
                seen.add(tag)
                if len(seen) > max_states:
                    return None
                path_steps = (k,) + steps
                cert = scan(s2, path_steps)
                if cert is not None:
                    return cert
                nxt.append((s2, path_steps))
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# sums of degree quivers


class DegreeMismatchError(ValueError):
    pass


class DuplicateMatchError(ValueError):
    pass


def sum_degree_quivers(Q: GradedSeed, R: GradedSeed, matches) -> GradedSeed:
    """Glue two degree quivers along a partial matching of equal-degree
    vertices; matched pairs add their arrow weights, unmatched vertices of
    different summands get no connecting arrows.

    matches: iterable of (q_vertex, r_vertex), 1-based.  Vertex order of the
    result: merged pairs (in match order), unmatched Q vertices, unmatched R
    vertices.
    """
    if Q.m or R.m:
        raise ValueError("sums are defined for quivers without frozen vertices")
    matches = list(matches)
    seen_q, seen_r = set(), set()
    for qv, rv in matches:
        if qv in seen_q or rv in seen_r:
            raise DuplicateMatchError("vertex matched twice: (%d, %d)" % (qv, rv))
        seen_q.add(qv)
        seen_r.add(rv)
        if Q.degree(qv) != R.degree(rv):
            raise DegreeMismatchError(
                "degrees differ at match (%d, %d): %s vs %s"
                % (qv, rv, Q.degree(qv), R.degree(rv)))
    un_q = [v for v in range(1, Q.n + 1) if v not in seen_q]
    un_r = [v for v in range(1, R.n + 1) if v not in seen_r]
    total = len(matches) + len(un_q) + len(un_r)

    def weight(v, w):
        def part(seed, a, b):
            return seed.matrix.rows[a - 1][b - 1]
        sources = []
        # positions: 0..len(matches)-1 merged, then unmatched Q, unmatched R
        def origin(pos):
            if pos < len(matches):
                return matches[pos]
            pos -= len(matches)
            if pos < len(un_q):
                return (un_q[pos], None)
            return (None, un_r[pos - len(un_q)])
        qa, ra = origin(v)
        qb, rb = origin(w)
        total_w = 0
        if qa is not None and qb is not None:
            total_w += part(Q, qa, qb)
        if ra is not None and rb is not None:
            total_w += part(R, ra, rb)
        return total_w

    rows = tuple(tuple(weight(i, j) for j in range(total)) for i in range(total))
    B = ExchangeMatrix(total, 0, rows)
    r_dim = Q.grading.r
    grows = []
    for t in range(r_dim):
        row = []
        for pos in range(total):
            if pos < len(matches):
                row.append(Q.grading.rows[t][matches[pos][0] - 1])
            elif pos < len(matches) + len(un_q):
                row.append(Q.grading.rows[t][un_q[pos - len(matches)] - 1])
            else:
                row.append(R.grading.rows[t][un_r[pos - len(matches) - len(un_q)] - 1])
        grows.append(tuple(row))
    g = Grading(tuple(grows))
    if not is_valid_grading(g, B):
        raise AssertionError("sum of degree quivers is not balanced")
    return GradedSeed.initial(B, g)


def is_irreducible(S: GradedSeed, budget: int = 100000):
    """True / False / None (budget exhausted).

    S is reducible when its vertices split as U_Q | merged | U_R with no
    arrows between U_Q and U_R and an integer weight split on the merged
    block that balances both summands.
    """
    n = S.n
    rows = S.matrix.rows
    degs = [S.degree(j + 1) for j in range(n)]
    checked = 0
    for assignment in product((0, 1, 2), repeat=n):  # 0: U_Q, 1: merged, 2: U_R
        checked += 1
        if checked > budget:
            return None
        uq = [v for v in range(n) if assignment[v] == 0]
        ur = [v for v in range(n) if assignment[v] == 2]
        merged = [v for v in range(n) if assignment[v] == 1]
        if not uq or not ur:
            continue
        if any(rows[a][b] != 0 for a in uq for b in ur):
            continue
        if _merged_split_exists(rows, degs, uq, merged):
            return False
    return True


def _merged_split_exists(rows, degs, uq, merged) -> bool:
    """Integer weights w_Q on the merged block balancing the Q side.

    Unknowns live on ordered pairs of merged vertices (skew); each merged
    vertex gives one linear balance equation per grading dimension.
    """
    if not merged:
        # Q = U_Q alone: balanced iff U_Q vertices have no merged neighbours,
        # which holds only when U_Q is a union of components; then R = rest.
        return all(all(rows[a][v] == 0 for v in range(len(rows[0]))
                       if v not in uq) for a in uq)
    r = len(degs[0])
    pairs = [(merged[i], merged[j]) for i in range(len(merged))
             for j in range(i + 1, len(merged))]
    # equations: for m in merged, for t in 0..r-1:
    #   sum_{(i,j)} w_ij * coef + const(m, t) = 0
    rows_mat = []
    consts = []
    for mv in merged:
        for t in range(r):
            coef = []
            for (i, j) in pairs:
                if i == mv:
                    coef.append(degs[j][t])
                elif j == mv:
                    coef.append(-degs[i][t])
                else:
                    coef.append(0)
            const = sum(rows[u][mv] * degs[u][t] for u in uq)
            rows_mat.append(coef)
            consts.append(const)
    return _integer_solution_exists(rows_mat, consts)


def _integer_solution_exists(mat, rhs) -> bool:
    """Solvability of mat * x = rhs over the integers.

    Diagonalise with unimodular row and column operations (column operations
    only reparametrise x); then each diagonal entry must divide its right
    hand side and zero rows must have zero right hand side.
    """
    A = [row[:] for row in mat]
    b = rhs[:]
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    t = 0
    while t < min(nrows, ncols):
        # find the smallest nonzero entry in the remaining block
        piv = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if A[i][j] != 0 and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        A[t], A[pi] = A[pi], A[t]
        b[t], b[pi] = b[pi], b[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        dirty = False
        for i in range(t + 1, nrows):
            if A[i][t] != 0:
                q = A[i][t] // A[t][t]
                A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                b[i] -= q * b[t]
                dirty = dirty or A[i][t] != 0
        for j in range(t + 1, ncols):
            if A[t][j] != 0:
                q = A[t][j] // A[t][t]
                for row in A:
                    row[j] -= q * row[t]
                dirty = dirty or A[t][j] != 0
        if dirty:
            continue  # remainders left; repeat with a smaller pivot
        t += 1
    for i in range(nrows):
        if i < t:
            if b[i] % A[i][i] != 0:
                return False
        elif b[i] != 0:
            return False
    return True
