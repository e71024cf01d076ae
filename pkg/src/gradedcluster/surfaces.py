"""Combinatorial marked surfaces without punctures: triangulations, flips,
signed adjacency matrices, valuations and the annulus presets.

A triangulation stores oriented triangles as closed walks of directed sides
(edge id, source point, target point); all triangles carry the surface
orientation, so each internal arc is traversed once in each direction and
each boundary segment once, along its boundary component.  This stays valid
for multi-edges and loop segments, which the annulus with one inner marked
point produces.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .core import ExchangeMatrix, GradedSeed, Grading


class NotFlippableError(ValueError):
    pass


Side = Tuple[str, str, str]  # (edge id, source point, target point)


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple
    boundary: bool


@dataclass(frozen=True)
class Triangulation:
    points: tuple
    boundaries: tuple            # cyclic tuples of points per component
    edges: tuple                 # Edge values
    triangles: tuple             # tuples of three Sides, oriented walks
    arc_order: tuple             # internal arc ids in matrix order

    def edge(self, eid: str) -> Edge:
        return self._edge_map()[eid]

    def _edge_map(self) -> Dict[str, Edge]:
        return {e.id: e for e in self.edges}

    def internal_arcs(self) -> tuple:
        return self.arc_order

    def validate(self):
        """Structural invariants: arc/triangle incidences and orientation."""
        traversals: Dict[str, list] = {}
        for tri in self.triangles:
            if len(tri) != 3:
                raise ValueError("triangle with %d sides" % len(tri))
            for idx, (eid, src, dst) in enumerate(tri):
                nxt = tri[(idx + 1) % 3]
                if nxt[1] != dst:
                    raise ValueError("triangle walk does not close")
                traversals.setdefault(eid, []).append((src, dst))
        emap = self._edge_map()
        for e in self.edges:
            trav = traversals.get(e.id, [])
            if e.boundary:
                if len(trav) != 1:
                    raise ValueError("boundary edge %s in %d triangles" % (e.id, len(trav)))
            else:
                if len(trav) != 2:
                    raise ValueError("internal arc %s in %d triangles" % (e.id, len(trav)))
                (s1, d1), (s2, d2) = trav
                if (s1, d1) != (d2, s2):
                    raise ValueError("internal arc %s not traversed both ways" % e.id)
            for src, dst in trav:
                if set((src, dst)) != set(e.ends):
                    raise ValueError("side of %s does not match its endpoints" % e.id)
        if set(self.arc_order) != {e.id for e in self.edges if not e.boundary}:
            raise ValueError("arc_order does not list the internal arcs")
        return True


# ---------------------------------------------------------------------------
# signed adjacency


def signed_adjacency(T: Triangulation) -> ExchangeMatrix:
    """B(T): for every triangle, +1 from each side to the side it precedes
    in the triangle's clockwise reading (both sides internal)."""
    order = {eid: i for i, eid in enumerate(T.arc_order)}
    n = len(T.arc_order)
    rows = [[0] * n for _ in range(n)]
    for tri in T.triangles:
        ids = [side[0] for side in tri]
        for idx in range(3):
            a, b = ids[idx], ids[(idx + 1) % 3]
            if a in order and b in order:
                rows[order[a]][order[b]] += 1
                rows[order[b]][order[a]] -= 1
    return ExchangeMatrix(n, 0, tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# flips


def flip(T: Triangulation, arc: str) -> Triangulation:
    """Replace the diagonal of the quadrilateral around the arc."""
    emap = T._edge_map()
    if arc not in emap:
        raise KeyError("unknown edge %r" % arc)
    if emap[arc].boundary:
        raise NotFlippableError("boundary segment %r cannot be flipped" % arc)
    holders = [tri for tri in T.triangles if any(s[0] == arc for s in tri)]
    if len(holders) != 2:
        raise NotFlippableError("arc %r is not contained in two triangles" % arc)

    def rotate(tri, eid):
        i = next(idx for idx, s in enumerate(tri) if s[0] == eid)
        return tri[i:] + tri[:i]

    t1 = rotate(holders[0], arc)
    t2 = rotate(holders[1], arc)
    # orient t1 as (arc: u->v); then t2 traverses (arc: v->u)
    if t1[0][1] != t2[0][2]:
        t1, t2 = t2, t1
    (_, u, v) = t1[0]
    x, y = t1[1], t1[2]          # v->w, w->u
    z, t = t2[1], t2[2]          # u->s, s->v
    w = x[2]
    s = z[2]
    new_edge = Edge(arc, (w, s), False)
    tri1 = (x, (arc, w, s), t)   # v->w, w->s, s->v
    tri2 = (y, z, (arc, s, w))   # w->u, u->s, s->w
    edges = tuple(new_edge if e.id == arc else e for e in T.edges)
    triangles = tuple(
        tri1 if tri is holders[0] else tri2 if tri is holders[1] else tri
        for tri in T.triangles)
    return replace(T, edges=edges, triangles=triangles)


def arc_index(T: Triangulation, arc: str) -> int:
    """1-based matrix direction of an internal arc."""
    return T.arc_order.index(arc) + 1


# ---------------------------------------------------------------------------
# valuations


@dataclass(frozen=True)
class ValuationFunction:
    values: tuple  # tuple of (point, Fraction) pairs, sorted

    @classmethod
    def of(cls, mapping) -> "ValuationFunction":
        items = tuple(sorted((p, Fraction(v)) for p, v in dict(mapping).items()))
        return cls(items)

    def __call__(self, point):
        for p, v in self.values:
            if p == point:
                return v
        raise KeyError(point)

    def as_dict(self):
        return dict(self.values)


def is_valid_valuation(T: Triangulation, f: ValuationFunction) -> bool:
    """f vanishes on every boundary segment: f(s) + f(t) = 0."""
    vals = f.as_dict()
    for e in T.edges:
        if e.boundary:
            if vals[e.ends[0]] + vals[e.ends[1]] != 0:
                return False
    return True


def arc_degree(T: Triangulation, f: ValuationFunction, arc: str):
    e = T.edge(arc)
    vals = f.as_dict()
    return vals[e.ends[0]] + vals[e.ends[1]]


def theta(T: Triangulation, f) -> tuple:
    """Degree vector (deg_f(arc_1), ..., deg_f(arc_n)); accepts one valuation
    or a tuple of them (multi-grading rows)."""
    fs = f if isinstance(f, (tuple, list)) else (f,)
    rows = []
    for fi in fs:
        if not is_valid_valuation(T, fi):
            raise ValueError("valuation does not vanish on boundary segments")
        row = [arc_degree(T, fi, a) for a in T.arc_order]
        if any(x.denominator != 1 for x in map(Fraction, row)):
            raise ValueError("valuation induces non-integer arc degrees")
        rows.append(tuple(int(x) for x in row))
    return tuple(rows) if isinstance(f, (tuple, list)) else tuple(rows[0])


def valuation_basis(T: Triangulation) -> List[ValuationFunction]:
    """One alternating +-1 function per even boundary component."""
    out = []
    for comp in T.boundaries:
        if len(comp) % 2 != 0:
            continue
        vals = {p: 0 for p in T.points}
        for i, p in enumerate(comp):
            vals[p] = 1 if i % 2 == 0 else -1
        out.append(ValuationFunction.of(vals))
    return out


def graded_seed_from_valuation(T: Triangulation, fs) -> GradedSeed:
    B = signed_adjacency(T)
    rows = theta(T, fs) if isinstance(fs, (tuple, list)) else (theta(T, fs),)
    g = Grading.from_rows(rows)
    return GradedSeed.initial(B, g)


# ---------------------------------------------------------------------------
# presets


def polygon(n: int) -> Triangulation:
    """Disc with n marked points and the fan triangulation from point 0.

    Points are p0..p{n-1} counterclockwise; arcs d2..d{n-2} join p0 to pj.
    """
    if n < 4:
        raise ValueError("need at least 4 marked points to have an arc")
    pts = tuple("p%d" % i for i in range(n))
    edges = [Edge("b%d" % i, (pts[i], pts[(i + 1) % n]), True) for i in range(n)]
    arcs = ["d%d" % j for j in range(2, n - 1)]
    edges += [Edge("d%d" % j, (pts[0], pts[j]), False) for j in range(2, n - 1)]
    tris = []
    for j in range(1, n - 1):
        # walk: p0 -> pj, pj -> p{j+1} (boundary), p{j+1} -> p0
        side_in = ("d%d" % j, pts[0], pts[j]) if j >= 2 else ("b0", pts[0], pts[1])
        side_out = ("d%d" % (j + 1), pts[j + 1], pts[0]) if j + 1 <= n - 2 \
            else ("b%d" % (n - 1), pts[n - 1], pts[0])
        tris.append((side_in, ("b%d" % j, pts[j], pts[j + 1]), side_out))
    T = Triangulation(pts, (pts,), tuple(edges), tuple(tris), tuple(arcs))
    T.validate()
    return T


def hexagon_example() -> Triangulation:
    """The worked six-gon with the inner triangle on alternating vertices.

    Arcs are labelled so that a1 joins p2 and p4, a2 joins p0 and p2, a3
    joins p4 and p0; flipping a1 yields the arc p1--p... (the quadrilateral
    diagonal) reproducing the reference matrices.
    """
    pts = tuple("p%d" % i for i in range(6))
    edges = [Edge("b%d" % i, (pts[i], pts[(i + 1) % 6]), True) for i in range(6)]
    edges += [Edge("a1", (pts[2], pts[4]), False),
              Edge("a2", (pts[0], pts[2]), False),
              Edge("a3", (pts[4], pts[0]), False)]
    tris = (
        (("b0", pts[0], pts[1]), ("b1", pts[1], pts[2]), ("a2", pts[2], pts[0])),
        (("b2", pts[2], pts[3]), ("b3", pts[3], pts[4]), ("a1", pts[4], pts[2])),
        (("b4", pts[4], pts[5]), ("b5", pts[5], pts[0]), ("a3", pts[0], pts[4])),
        (("a2", pts[0], pts[2]), ("a1", pts[2], pts[4]), ("a3", pts[4], pts[0])),
    )
    T = Triangulation(pts, (pts,), tuple(edges), tris, ("a1", "a2", "a3"))
    T.validate()
    return T


def annulus(n: int, m: int, valuation: Optional[str] = None):
    """Annulus with n outer and m inner marked points, fan triangulation.

    Arcs 1..m+1 join the inner points to the bottom outer point (the top
    inner point twice, around each side); arcs m+2..m+n join the top inner
    point to the other outer points counterclockwise.  With a valuation name
    ('g', 'h' or 'l') returns (triangulation, valuations, graded seed).
    """
    if n < 1 or m < 1:
        raise ValueError("need n, m >= 1")
    outer = tuple("o%d" % j for j in range(n))
    inner = tuple("i%d" % j for j in range(m))
    pts = outer + inner
    edges = [Edge("out%d" % j, (outer[j], outer[(j + 1) % n]), True) for j in range(n)]
    edges += [Edge("in%d" % j, (inner[j], inner[(j + 1) % m]), True) for j in range(m)]
    arcs = []
    for j in range(1, m + 2):
        arcs.append(Edge("a%d" % j, (inner[(j - 1) % m], outer[0]), False))
    for j in range(1, n):
        arcs.append(Edge("a%d" % (m + 1 + j), (inner[0], outer[j]), False))
    edges += arcs
    tris = []
    # inner fan: triangle j between a_j and a_{j+1} over inner segment
    # (i_{j-1}, i_j), traversed i_j -> i_{j-1}
    for j in range(1, m + 1):
        prev_pt = inner[j - 1]
        cur_pt = inner[j % m]
        tris.append((
            ("a%d" % (j + 1), outer[0], cur_pt),
            ("in%d" % (j - 1), cur_pt, prev_pt),
            ("a%d" % j, prev_pt, outer[0]),
        ))
    # outer fan between consecutive b arcs
    for j in range(1, n - 1):
        tris.append((
            ("a%d" % (m + 1 + j), inner[0], outer[j]),
            ("out%d" % j, outer[j], outer[j + 1]),
            ("a%d" % (m + 2 + j), outer[j + 1], inner[0]),
        ))
    # closing triangles over the outer segments at o_0
    first_b = "a%d" % (m + 2) if n > 1 else "a%d" % (m + 1)
    last_b = "a%d" % (m + n) if n > 1 else "a1"
    if n > 1:
        tris.append((
            ("a%d" % (m + 1), inner[0], outer[0]),
            ("out0", outer[0], outer[1]),
            (first_b, outer[1], inner[0]),
        ))
        tris.append((
            (last_b, inner[0], outer[n - 1]),
            ("out%d" % (n - 1), outer[n - 1], outer[0]),
            ("a1", outer[0], inner[0]),
        ))
    else:
        tris.append((
            ("a%d" % (m + 1), inner[0], outer[0]),
            ("out0", outer[0], outer[0]),
            ("a1", outer[0], inner[0]),
        ))
    # inner boundary segment direction fix: traverse i_j -> i_{j-1}
    T = Triangulation(
        pts, (outer, inner), tuple(edges), tuple(tris),
        tuple("a%d" % j for j in range(1, m + n + 1)))
    T.validate()
    if valuation is None:
        return T
    fs = annulus_valuation(n, m, valuation)
    seed = graded_seed_from_valuation(T, fs if len(fs) > 1 else fs[0])
    return T, fs, seed


def annulus_valuation(n: int, m: int, name: str) -> tuple:
    outer = ["o%d" % j for j in range(n)]
    inner = ["i%d" % j for j in range(m)]
    if name == "g":
        if n % 2:
            raise ValueError("valuation 'g' needs an even outer boundary")
        f = {outer[j]: (-1) ** j for j in range(n)}
        f.update({p: 0 for p in inner})
        return (ValuationFunction.of(f),)
    if name == "h":
        if n % 2 or m % 2:
            raise ValueError("valuation 'h' needs both boundaries even")
        f1 = {outer[j]: (-1) ** j for j in range(n)}
        f1.update({p: 0 for p in inner})
        f2 = {inner[j]: (-1) ** (j + 1) for j in range(m)}
        f2.update({p: 0 for p in outer})
        return (ValuationFunction.of(f1), ValuationFunction.of(f2))
    if name == "l":
        if n % 2 or m % 2:
            raise ValueError("valuation 'l' needs both boundaries even")
        f = {outer[j]: Fraction((-1) ** j, 2) for j in range(n)}
        f.update({inner[j]: Fraction((-1) ** (j + 1), 2) for j in range(m)})
        return (ValuationFunction.of(f),)
    raise KeyError("unknown valuation %r (have g, h, l)" % name)


# ---------------------------------------------------------------------------
# JSON


def surface_to_json(T: Triangulation, valuations=None) -> dict:
    out = {
        "boundaries": [list(c) for c in T.boundaries],
        "edges": [{"id": e.id, "ends": list(e.ends), "boundary": e.boundary}
                  for e in T.edges],
        "triangles": [[s[0] for s in tri] for tri in T.triangles],
        "walks": [[list(s) for s in tri] for tri in T.triangles],
        "arc_order": list(T.arc_order),
    }
    if valuations:
        out["valuation"] = {p: str(v) for p, v in valuations[0].as_dict().items()}
    return out


def surface_from_json(data) -> Triangulation:
    edges = tuple(Edge(e["id"], tuple(e["ends"]), bool(e["boundary"]))
                  for e in data["edges"])
    pts = tuple(sorted({p for e in edges for p in e.ends}))
    walks = data.get("walks")
    if walks is None:
        raise ValueError("triangle walks required to reconstruct orientation")
    tris = tuple(tuple((s[0], s[1], s[2]) for s in tri) for tri in walks)
    arc_order = tuple(data.get("arc_order")
                      or [e.id for e in edges if not e.boundary])
    T = Triangulation(pts, tuple(tuple(c) for c in data["boundaries"]),
                      edges, tris, arc_order)
    T.validate()
    return T
