"""Essential equivalence of (degree) quivers and canonical keys.

Two extended exchange matrices are essentially equivalent when one is a
simultaneous row/column permutation of the other up to a global sign; the
permutation moves mutable indices only, frozen rows stay in place (their
entries follow the permuted columns).  Degree quivers additionally carry a
degree column per vertex which must match under the permutation; the degree
cluster sign is NOT quotiented unless explicitly requested.

canonical_key computes a byte string that two inputs share iff they are
essentially equivalent: the minimal serialized form over the allowed
symmetries, found by a backtracking search whose candidates are confined to
classes of an iterated vertex-invariant refinement.
"""

from __future__ import annotations

from typing import Optional

from .core import ExchangeMatrix, Grading


class CanonicalizationBudgetError(RuntimeError):
    """Backtracking search exceeded its node budget."""


def _neg_rows(rows):
    return tuple(tuple(-x for x in row) for row in rows)


def _pack_ints(ints) -> bytes:
    """Deterministic varint dump (zigzag, big-endian groups)."""
    out = bytearray()
    for x in ints:
        u = ((-x) << 1) | 1 if x < 0 else x << 1
        chunks = []
        while True:
            chunks.append(u & 0x7F)
            u >>= 7
            if not u:
                break
        for c in reversed(chunks[1:]):
            out.append(0x80 | c)
        out.append(chunks[0])
    return bytes(out)


def _refine_colors(rows, n: int, static_sig):
    """Iterated vertex invariants on the mutable part; returns color ranks.

    static_sig[v] seeds the refinement (frozen-row profile, degree column).
    Colors are permutation-equivariant, so a minimization search may confine
    position t to the vertices of the t-th color in sorted order.
    """
    colors = list(static_sig)
    ranks = _rank(colors)
    for _ in range(n):
        new = []
        for v in range(n):
            neigh = sorted(
                (ranks[u], rows[v][u], rows[u][v])
                for u in range(n)
                if u != v and (rows[v][u] or rows[u][v]))
            new.append((ranks[v], tuple(neigh)))
        new_ranks = _rank(new)
        if new_ranks == ranks:
            break
        ranks = new_ranks
    return ranks


def _rank(values):
    order = {v: i for i, v in enumerate(sorted(set(values)))}
    return [order[v] for v in values]


def _min_arrangement(rows, n: int, frozen_profiles, degcols, budget=None):
    """Minimal (row_part, col_part) step-key sequence over allowed perms.

    Returns the placement s (tuple of original vertices by new position).
    rows: full (n+m) x n matrix; frozen_profiles[v] and degcols[v] are the
    static per-vertex data entering the vertex invariants.
    """
    static = [(frozen_profiles[v], degcols[v] if degcols is not None else ())
              for v in range(n)]
    colors = _refine_colors(rows, n, static)
    order = sorted(range(n), key=lambda v: (colors[v], v))
    target = [colors[v] for v in order]

    by_color = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)

    best_seq = None
    best_perm = None
    used = [False] * n
    placed = []
    nodes = 0

    def step_key(v):
        return (tuple(rows[v][u] for u in placed), tuple(rows[u][v] for u in placed))

    def dfs(t: int, tied: bool):
        nonlocal best_seq, best_perm, nodes
        if t == n:
            if not tied or best_seq is None:
                best_seq = [step_key_at[i] for i in range(n)]
                best_perm = tuple(placed)
            return
        for v in by_color[target[t]]:
            if used[v]:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise CanonicalizationBudgetError("budget %d exceeded" % budget)
            key = step_key(v)
            branch_tied = tied
            if branch_tied and best_seq is not None:
                if key > best_seq[t]:
                    continue
                if key < best_seq[t]:
                    branch_tied = False
            step_key_at[t] = key
            used[v] = True
            placed.append(v)
            dfs(t + 1, branch_tied)
            placed.pop()
            used[v] = False

    step_key_at = [None] * n
    dfs(0, True)
    return best_perm


def _dump(rows, n: int, m: int, perm, degcols) -> bytes:
    ints = []
    for i in range(n):
        si = perm[i]
        ints.extend(rows[si][perm[j]] for j in range(n))
    for f in range(n, n + m):
        ints.extend(rows[f][perm[j]] for j in range(n))
    if degcols is not None:
        for j in range(n):
            dc = degcols[perm[j]]
            ints.append(len(dc))
            ints.extend(dc)
    return _pack_ints([n, m] + ints)


def canonical_key(B: ExchangeMatrix, degrees: Optional[Grading] = None,
                  quotient_degree_sign: bool = False,
                  budget: Optional[int] = None) -> bytes:
    """Canonical byte string of the (degree) quiver class of B.

    Equal keys <=> essentially equivalent inputs.  The global matrix sign is
    always quotiented; the degree-cluster sign only when requested.
    """
    return canonical_key_raw(
        B.rows, B.n, B.m,
        degcols=degrees.degrees() if degrees is not None else None,
        quotient_degree_sign=quotient_degree_sign, budget=budget)


def canonical_key_raw(rows, n: int, m: int, degcols=None,
                      quotient_degree_sign: bool = False,
                      budget: Optional[int] = None) -> bytes:
    frozen_profiles = [tuple(rows[f][v] for f in range(n, n + m)) for v in range(n)]
    deg_variants = [degcols]
    if degcols is not None and quotient_degree_sign:
        deg_variants.append(tuple(tuple(-x for x in dc) for dc in degcols))
    best = None
    for mat in (rows, _neg_rows(rows)):
        fp = [tuple(mat[f][v] for f in range(n, n + m)) for v in range(n)]
        for dc in deg_variants:
            perm = _min_arrangement(mat, n, fp, dc, budget=budget)
            dump = _dump(mat, n, m, perm, dc)
            if best is None or dump < best:
                best = dump
    return best


# ---------------------------------------------------------------------------
# explicit witnesses


def essentially_equivalent(A: ExchangeMatrix, B: ExchangeMatrix,
                           with_degrees=None):
    """Witness (sigma, sign) with A = sign * N_sigma(B), or None.

    sigma is a tuple with A[i][j] == sign * B[sigma[i]][sigma[j]] on the
    principal part, A[f][j] == sign * B[f][sigma[j]] on frozen rows.  When
    with_degrees=(gA, gB) is given, degree columns must also correspond:
    gA.degree(i+1) == gB.degree(sigma[i]+1).
    """
    if (A.n, A.m) != (B.n, B.m):
        raise ValueError("shape mismatch: %s vs %s" % ((A.n, A.m), (B.n, B.m)))
    gA = gB = None
    if with_degrees is not None:
        gA, gB = with_degrees
        if gA.r != gB.r:
            return None
    n, m = A.n, A.m
    for sign in (1, -1):
        rowsB = B.rows if sign == 1 else _neg_rows(B.rows)
        sigma = _find_iso(A.rows, rowsB, n, m, gA, gB)
        if sigma is not None:
            return sigma, sign
    return None


def _find_iso(rowsA, rowsB, n, m, gA, gB):
    """Backtracking search for sigma with A = N_sigma(B) (exact signs)."""
    degA = gA.degrees() if gA is not None else None
    degB = gB.degrees() if gB is not None else None
    fpA = [tuple(rowsA[f][v] for f in range(n, n + m)) for v in range(n)]
    fpB = [tuple(rowsB[f][v] for f in range(n, n + m)) for v in range(n)]

    def sig(rows, fp, deg, v):
        weights = sorted((rows[v][u], rows[u][v]) for u in range(n) if u != v)
        return (tuple(weights), fp[v], deg[v] if deg is not None else ())

    sigsA = [sig(rowsA, fpA, degA, v) for v in range(n)]
    sigsB = [sig(rowsB, fpB, degB, v) for v in range(n)]
    if sorted(sigsA) != sorted(sigsB):
        return None

    sigma = [None] * n
    used = [False] * n

    def ok(i, v):
        if sigsA[i] != sigsB[v]:
            return False
        if fpA[i] != fpB[v]:
            return False
        if degA is not None and degA[i] != degB[v]:
            return False
        for j in range(i):
            w = sigma[j]
            if rowsA[i][j] != rowsB[v][w] or rowsA[j][i] != rowsB[w][v]:
                return False
        return True

    def dfs(i):
        if i == n:
            return True
        for v in range(n):
            if not used[v] and ok(i, v):
                used[v] = True
                sigma[i] = v
                if dfs(i + 1):
                    return True
                used[v] = False
                sigma[i] = None
        return False

    return tuple(sigma) if dfs(0) else None


def state_sigs(rows, n: int, m: int, degcols=None):
    """Refined per-vertex invariants used to guide isomorphism search."""
    base = []
    for v in range(n):
        weights = sorted((rows[v][u], rows[u][v]) for u in range(n) if u != v)
        fp = tuple(rows[f][v] for f in range(n, n + m))
        base.append((tuple(weights), fp, degcols[v] if degcols is not None else ()))
    ranks = _rank(base)
    sigs = []
    for v in range(n):
        neigh = sorted((ranks[u], rows[v][u], rows[u][v])
                       for u in range(n)
                       if u != v and (rows[v][u] or rows[u][v]))
        sigs.append((base[v], tuple(neigh)))
    return sigs


def iso_exists_raw(rowsA, rowsB, n: int, m: int, degA=None, degB=None,
                   sigsA=None, sigsB_pair=None, quotient_sign: bool = True) -> bool:
    """True iff the raw states are essentially equivalent (matrix sign
    quotiented unless quotient_sign is False, degree columns compared
    exactly).  Precomputed signatures may be supplied:
    sigsB_pair = (sigs(B), sigs(-B))."""
    if sigsA is None:
        sigsA = state_sigs(rowsA, n, m, degA)
    variants = (rowsB, _neg_rows(rowsB)) if quotient_sign else (rowsB,)
    for idx, rowsBs in enumerate(variants):
        sigsB = sigsB_pair[idx] if sigsB_pair is not None else None
        if _find_iso_cols(rowsA, rowsBs, n, m, degA, degB,
                          sigsA=sigsA, sigsB=sigsB) is not None:
            return True
    return False


def _find_iso_cols(rowsA, rowsB, n, m, degA, degB, sigsA=None, sigsB=None):
    if sigsA is None:
        sigsA = state_sigs(rowsA, n, m, degA)
    if sigsB is None:
        sigsB = state_sigs(rowsB, n, m, degB)
    if sorted(sigsA) != sorted(sigsB):
        return None

    candidates = [[v for v in range(n) if sigsB[v] == sigsA[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    sigma = [None] * n
    used = [False] * n

    def dfs(t):
        if t == n:
            return True
        i = order[t]
        for v in candidates[i]:
            if used[v]:
                continue
            ok = True
            for s in range(t):
                j = order[s]
                w = sigma[j]
                if rowsA[i][j] != rowsB[v][w] or rowsA[j][i] != rowsB[w][v]:
                    ok = False
                    break
            if ok:
                used[v] = True
                sigma[i] = v
                if dfs(t + 1):
                    return True
                used[v] = False
                sigma[i] = None
        return False

    return tuple(sigma) if dfs(0) else None


def class_fingerprint(rows, n: int, m: int, degcols=None):
    """Cheap equivalence-invariant fingerprint for bucketing census states.

    Invariant under mutable-vertex permutation and global matrix sign;
    degree columns enter as-is (their sign is not quotiented).
    """
    frozen = []
    for v in range(n):
        prof = tuple(rows[f][v] for f in range(n, n + m))
        neg = tuple(-x for x in prof)
        frozen.append(min(prof, neg))
    base = []
    for v in range(n):
        pairs = []
        for u in range(n):
            if u != v and (rows[v][u] or rows[u][v]):
                p = (rows[v][u], rows[u][v])
                q = (-p[0], -p[1])
                pairs.append(min(p, q))
        pairs.sort()
        base.append((degcols[v] if degcols is not None else (),
                     frozen[v], tuple(pairs)))
    ranks = _rank(base)
    refined = []
    for v in range(n):
        neigh = sorted(
            (ranks[u],) + min((rows[v][u], rows[u][v]), (-rows[v][u], -rows[u][v]))
            for u in range(n) if u != v and (rows[v][u] or rows[u][v]))
        refined.append((base[v], tuple(neigh)))
    return (n, m) + tuple(sorted(refined))


def apply_vertex_permutation(B: ExchangeMatrix, sigma) -> ExchangeMatrix:
    """N_sigma(B): entry (i, j) becomes B[sigma(i)][sigma(j)]."""
    n, m = B.n, B.m
    rows = [tuple(B.rows[sigma[i]][sigma[j]] for j in range(n)) for i in range(n)]
    rows += [tuple(B.rows[f][sigma[j]] for j in range(n)) for f in range(n, n + m)]
    return ExchangeMatrix(n, m, tuple(rows))


def permute_grading(g: Grading, sigma, n: int) -> Grading:
    """Grading for N_sigma(B): column i takes the old column sigma(i)."""
    size = g.size
    return Grading(tuple(
        tuple(row[sigma[j]] if j < n else row[j] for j in range(size))
        for row in g.rows))
