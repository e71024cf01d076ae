"""Rank-3 toolkit: standard form, cyclicity algorithm, classification.

The cyclic family is parametrised as m3(a, b, c) = [[0, a, -c], [-a, 0, b],
[c, -b, 0]] whose quiver (for positive entries) is the 3-cycle
1 -a-> 2 -b-> 3 -c-> 1; its one-dimensional grading is (b, c, a).  The
acyclic family acyclic3(a, b, c) has all arrows pointing into vertex 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import (ExchangeMatrix, Grading, GradedSeed, as_path,
                   mutate_grading_rows, mutate_rows)
from .equivalence import canonical_key, canonical_key_raw


class BudgetError(RuntimeError):
    """A bounded enumeration hit its class/size cap."""


def m3(a: int, b: int, c: int) -> ExchangeMatrix:
    return ExchangeMatrix(3, 0, ((0, a, -c), (-a, 0, b), (c, -b, 0)))


def acyclic3(a: int, b: int, c: int) -> ExchangeMatrix:
    """All-arrows-into-vertex-1 form; nonnegative a, b, c give an acyclic quiver."""
    return ExchangeMatrix(3, 0, ((0, -a, -c), (a, 0, -b), (c, b, 0)))


def m3_params(B: ExchangeMatrix):
    """Signed parameters (a, b, c) reading B as m3(a, b, c)."""
    return B.rows[0][1], B.rows[1][2], B.rows[2][0]


def standard_grading(B: ExchangeMatrix) -> Grading:
    """(b, c, a) for m3(a, b, c); valid for the cyclic parametrisation."""
    a, b, c = m3_params(B)
    return Grading.from_rows([[b, c, a]])


# ---------------------------------------------------------------------------
# standard form


_PERMS3 = tuple(itertools.permutations(range(3)))


def _shape_index(rows) -> Optional[int]:
    """Which of the four listed shapes rows matches (0..3), or None.

    Shapes, with a >= b >= c >= 0:
      0: m3(a,b,c)                  [u,v,w] = [-a,-b,c]
      1: [[0,a,-c],[-a,0,-b],[c,b,0]]        [-a, b, c]
      2: [[0,-a,-c],[a,0,b],[c,-b,0]]        [ a,-b, c]
      3: acyclic3(a,b,c)                     [ a, b, c]
    where u = rows[1][0], v = rows[2][1], w = rows[2][0].
    """
    u, v, w = rows[1][0], rows[2][1], rows[2][0]
    if u <= 0 and v <= 0 and w >= 0 and -u >= -v >= w:
        return 0
    if u <= 0 and v >= 0 and w >= 0 and -u >= v >= w:
        return 1
    if u >= 0 and v <= 0 and w >= 0 and u >= -v >= w:
        return 2
    if u >= 0 and v >= 0 and w >= 0 and u >= v >= w:
        return 3
    return None


def _permuted(rows, sigma):
    return tuple(tuple(rows[sigma[i]][sigma[j]] for j in range(3)) for i in range(3))


def standard_form(A: ExchangeMatrix):
    """(A_sf, sigma, sign): the first listed shape essentially equivalent to A.

    A = sign * N_sigma(A_sf) does not hold literally; rather A_sf =
    sign * N_sigma(A), i.e. sigma carries A onto its standard form.
    """
    if A.n != 3 or A.m != 0 or not A.is_skew_symmetric():
        raise ValueError("standard form requires a 3x3 skew-symmetric matrix")
    best = None
    for sigma in _PERMS3:
        for sign in (1, -1):
            rows = _permuted(A.rows, sigma)
            if sign < 0:
                rows = tuple(tuple(-x for x in row) for row in rows)
            idx = _shape_index(rows)
            if idx is None:
                continue
            cand = (idx, rows, sigma, sign)
            if best is None or cand[:2] < best[:2]:
                best = cand
    if best is None:
        raise AssertionError("no standard form found; input not skew-symmetric?")
    idx, rows, sigma, sign = best
    return ExchangeMatrix(3, 0, rows), sigma, sign


def has_sign_coherent_column(B: ExchangeMatrix) -> bool:
    for j in range(B.n):
        col = [B.rows[i][j] for i in range(B.size)]
        if all(x >= 0 for x in col) or all(x <= 0 for x in col):
            return True
    return False


def is_acyclic(B: ExchangeMatrix) -> bool:
    """No directed cycle among mutable vertices (arrows i->j where b_ij > 0)."""
    n = B.n
    adj = {i: [j for j in range(n) if B.rows[i][j] > 0] for i in range(n)}
    state = [0] * n

    def dfs(v):
        state[v] = 1
        for w in adj[v]:
            if state[w] == 1 or (state[w] == 0 and dfs(w)):
                return True
        state[v] = 2
        return False

    return not any(state[v] == 0 and dfs(v) for v in range(n))


# ---------------------------------------------------------------------------
# Markov constant and the cyclicity algorithm


def markov_constant(a: int, b: int, c: int) -> int:
    return a * a + b * b + c * c - a * b * c


def is_cyclic_markov(a: int, b: int, c: int) -> bool:
    return a >= 2 and b >= 2 and c >= 2 and markov_constant(a, b, c) <= 4


@dataclass(frozen=True)
class MinRepResult:
    matrix: ExchangeMatrix
    passed: bool
    steps: int


def min_mutation_representative(A: ExchangeMatrix, step_cap: int = 10 ** 6) -> MinRepResult:
    """Mutation-cyclicity test returning a minimal class representative.

    Follows the four-step procedure: test the standard form, then repeatedly
    mutate at direction 3 and re-standardise, deciding via the
    cyclic-preserving inequality bc - a >= b (with the c = 2 special cases).
    Passes exactly when A is mutation-cyclic; on failure the acyclic
    fallback loop runs until an acyclic representative appears.
    """
    sf, _, _ = standard_form(A)
    a, b, c = m3_params(sf)
    cur = sf
    steps = 0
    passed: Optional[bool] = None

    if a >= b >= c >= 2 and b * c - a >= b:
        passed = True
    elif has_sign_coherent_column(sf) or c <= 2:
        passed = False

    while passed is None:
        steps += 1
        if steps > step_cap:
            raise RuntimeError("cyclicity loop exceeded %d iterations" % step_cap)
        nxt, _, _ = standard_form(cur.mutate(3))
        d, e, f = m3_params(nxt)
        if not (d >= e >= f >= 2):
            passed = False
            cur = nxt
            break
        cur = nxt
        if f >= 3 and e * f - d >= e:
            passed = True
        elif f == 2:
            passed = d == e

    if passed:
        d, e, f = m3_params(cur)
        if e * f - d >= d:
            return MinRepResult(cur, True, steps)
        out, _, _ = standard_form(cur.mutate(3))
        return MinRepResult(out, True, steps + 1)

    # acyclic fallback: keep mutating at 3 (of the standard form) until acyclic
    guard = 0
    while not has_sign_coherent_column(cur):
        guard += 1
        if guard > step_cap:
            raise RuntimeError("acyclic fallback exceeded %d iterations" % step_cap)
        cur, _, _ = standard_form(cur.mutate(3))
    return MinRepResult(cur, False, steps + guard)


# ---------------------------------------------------------------------------
# classification


class Rank3Class(Enum):
    FINITE_TYPE = "FiniteType"
    MIXED_FINITE_DEGREES = "MixedFiniteDegrees"
    MARKOV_ALL_DEGREE_TWO = "MarkovAllDegreeTwo"
    CYCLIC_FINITE_PER_DEGREE = "CyclicFinitePerDegree"
    ACYCLIC_INFINITE_PER_DEGREE = "AcyclicInfinitePerDegree"
    SINGULAR_CYCLIC_CONJECTURAL = "SingularCyclicConjectural"


@dataclass(frozen=True)
class Classification:
    variant: Rank3Class
    minimal_representative: ExchangeMatrix
    standard_form_params: tuple
    markov: Optional[int] = None


def _bounded_matrix_class(A: ExchangeMatrix, entry_cap: int, class_cap: int):
    """All essential classes of the mutation class, or None if a bound trips."""
    start = canonical_key(A)
    seen = {start: A}
    frontier = [A]
    while frontier:
        nxt = []
        for M in frontier:
            for k in range(1, M.n + 1):
                M2 = M.mutate(k)
                if M2.max_abs() > entry_cap:
                    return None
                key = canonical_key(M2)
                if key not in seen:
                    if len(seen) >= class_cap:
                        return None
                    seen[key] = M2
                    nxt.append(M2)
        frontier = nxt
    return seen


def is_finite_type(A: ExchangeMatrix) -> bool:
    """|b_ij * b_ji| <= 3 across the whole mutation class.

    For skew-symmetric input the bound forces |b_ij| <= 1, so the class is
    tiny and the enumeration below always terminates: any violation is an
    immediate no.
    """
    if A.max_abs() > 1 and A.is_skew_symmetric():
        return False
    start = canonical_key(A)
    seen = {start}
    frontier = [A]
    while frontier:
        nxt = []
        for M in frontier:
            for i in range(M.n):
                for j in range(M.n):
                    if abs(M.rows[i][j] * M.rows[j][i]) > 3:
                        return False
            for k in range(1, M.n + 1):
                M2 = M.mutate(k)
                if abs(M2.max_abs()) > 1 and M2.is_skew_symmetric():
                    return False
                key = canonical_key(M2)
                if key not in seen:
                    seen.add(key)
                    nxt.append(M2)
        frontier = nxt
    return True


def classify(A: ExchangeMatrix, depth_check: Optional[int] = None) -> Classification:
    sf, _, _ = standard_form(A)
    params = m3_params(sf)
    markov = markov_constant(*(abs(x) for x in params))

    if is_finite_type(A):
        return Classification(Rank3Class.FINITE_TYPE, sf, params, markov)

    cls = _bounded_matrix_class(A, entry_cap=2, class_cap=64)
    if cls is not None:
        keys = set(cls)
        if canonical_key(m3(2, 1, 1)) in keys:
            return Classification(Rank3Class.MIXED_FINITE_DEGREES, sf, params, markov)
        if canonical_key(m3(2, 2, 2)) in keys:
            return Classification(Rank3Class.MARKOV_ALL_DEGREE_TWO, sf, params, markov)
        raise AssertionError("unexpected finite mutation class of size %d" % len(cls))

    result = min_mutation_representative(A)
    d, e, f = m3_params(result.matrix)
    if result.passed:
        if f > 2:
            variant = Rank3Class.CYCLIC_FINITE_PER_DEGREE
        else:
            variant = Rank3Class.SINGULAR_CYCLIC_CONJECTURAL
    else:
        variant = Rank3Class.ACYCLIC_INFINITE_PER_DEGREE
    return Classification(variant, result.matrix, (d, e, f), markov)


# ---------------------------------------------------------------------------
# degrees along paths


def degree_along_path(a: int, b: int, c: int, p):
    """Degree of the newest variable after path p on (m3(a,b,c), (b,c,a)).

    Read off the mutated matrix: the new degree is a matrix entry with a
    sign depending on parity of the path length and its last direction.
    The empty path returns the initial degree cluster (b, c, a).
    """
    path = as_path(p)
    if len(path) == 0:
        return (b, c, a)
    B = m3(a, b, c)
    for k in path.applications():
        B = B.mutate(k)
    last = path.steps[0]
    length = len(path)
    odd = (-1) ** (length + 1)
    if last == 1:
        return odd * B.rows[2][1]
    if last == 2:
        return (-1) ** length * B.rows[2][0]
    return odd * B.rows[1][0]


# ---------------------------------------------------------------------------
# finite-degree enumeration (mixed case and other mutation-finite seeds)


def occurring_degrees_finite(seed: GradedSeed, quotient_degree_sign: bool = True,
                             max_classes: int = 20000):
    """All degrees occurring in a mutation-finite graded cluster algebra.

    Breadth-first over degree seeds, closing branches at canonical keys
    already seen; with the degree-sign quotient a branch is also closed
    when the negated degree cluster was seen, in which case the negative
    of every collected degree occurs too.  Returns ints for 1-dimensional
    gradings, r-tuples otherwise.
    """
    n, m = seed.n, seed.m
    r = seed.grading.r

    def keys_of(rows, grows):
        degcols = tuple(tuple(grow[j] for grow in grows) for j in range(n + m))
        plain = canonical_key_raw(rows, n, m, degcols)
        if not quotient_degree_sign:
            return plain, plain
        flip = canonical_key_raw(
            rows, n, m, tuple(tuple(-x for x in dc) for dc in degcols))
        return plain, min(plain, flip)

    degrees = set()
    flip_used = False
    state0 = (seed.matrix.rows, seed.grading.rows)
    plain0, quot0 = keys_of(*state0)
    seen_plain = {plain0}
    seen_quot = {quot0}
    frontier = [state0]

    def collect(grows):
        for j in range(n):
            degrees.add(tuple(grow[j] for grow in grows))

    collect(seed.grading.rows)
    while frontier:
        nxt = []
        for rows, grows in frontier:
            for k0 in range(n):
                grows2 = mutate_grading_rows(grows, rows, k0)
                rows2 = mutate_rows(rows, n, k0)
                plain, quot = keys_of(rows2, grows2)
                if quot in seen_quot:
                    if plain not in seen_plain:
                        flip_used = True
                    continue
                if len(seen_quot) >= max_classes:
                    raise BudgetError("degree-seed class exceeded %d" % max_classes)
                seen_quot.add(quot)
                seen_plain.add(plain)
                collect(grows2)
                nxt.append((rows2, grows2))
        frontier = nxt

    if quotient_degree_sign and flip_used:
        degrees |= {tuple(-x for x in d) for d in degrees}
    if r == 1:
        return {d[0] for d in degrees}
    return degrees


# ---------------------------------------------------------------------------
# forks


def is_fork(Q: ExchangeMatrix):
    """Point of return (1-based) if the principal quiver is a fork, else None.

    A fork is non-acyclic with all pairwise weights at least 2, whose point
    of return r satisfies q_ji > q_ir and q_ji > q_rj for every arrow i -> r
    and r -> j, with the in- and out-neighbourhoods of r acyclic.
    """
    n = Q.n
    rows = Q.rows
    if is_acyclic(Q):
        return None
    for i in range(n):
        for j in range(n):
            if i != j and abs(rows[i][j]) < 2:
                return None

    def subquiver_acyclic(vertices):
        state = {v: 0 for v in vertices}

        def dfs(v):
            state[v] = 1
            for w in vertices:
                if rows[v][w] > 0:
                    if state[w] == 1 or (state[w] == 0 and dfs(w)):
                        return True
            state[v] = 2
            return False

        return not any(state[v] == 0 and dfs(v) for v in vertices)

    for r in range(n):
        incoming = [i for i in range(n) if rows[i][r] > 0]
        outgoing = [j for j in range(n) if rows[r][j] > 0]
        ok = all(
            rows[j][i] > rows[i][r] and rows[j][i] > rows[r][j]
            for i in incoming for j in outgoing)
        if ok and subquiver_acyclic(incoming) and subquiver_acyclic(outgoing):
            return r + 1
    return None


# ---------------------------------------------------------------------------
# singular cyclic closed form


def singular_floor_denominators(a: int, k: int) -> tuple:
    """Denominator cluster of m3(a, a, 2) after the path (3,1)_k.

    The closed form is independent of a (the max in the recurrence is
    always attained by the doubled third entry).
    """
    if k < 1:
        from .core import initial_denominators
        return initial_denominators(3)
    hi = (k, 0, k - 1)
    lo = (k - 1, 0, k - 2)
    mid = (0, -1, 0)
    return (lo, mid, hi) if k % 2 == 0 else (hi, mid, lo)
