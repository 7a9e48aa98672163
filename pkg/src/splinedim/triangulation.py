"""Planar triangulations with exact rational vertices.

A mesh is valid when it triangulates a simply connected polygonal region:
no degenerate or overlapping triangles, no hanging vertices, edges meet
only at shared endpoints, and the boundary is a single simple cycle.
Construction goes through build(), which checks all of that and freezes
the result.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, NamedTuple, Sequence

from .exact import format_rational, parse_rational


class MeshError(Exception):
    """Base class for triangulation construction failures."""


class MeshFormatError(ValueError):
    """Mesh file is structurally malformed (bad JSON, floats, wrong shapes)."""


class DegenerateTriangle(MeshError):
    pass


class DuplicateVertex(MeshError):
    pass


class NonManifoldEdge(MeshError):
    pass


class HangingVertex(MeshError):
    pass


class DisconnectedOrHoley(MeshError):
    pass


class EdgeCrossing(MeshError):
    pass


class SingularMap(MeshError):
    pass


class NotInteriorVertex(MeshError):
    pass


class NoTotallyInteriorEdge(MeshError):
    pass


class MultipleTotallyInteriorEdges(MeshError):
    pass


class Point2(NamedTuple):
    x: Fraction
    y: Fraction


class Slope(NamedTuple):
    """Primitive integer direction with a canonical sign.

    Normalized so dx > 0, or dx == 0 and dy > 0; parallel edges always
    compare equal.
    """

    dx: int
    dy: int


def slope_of(p: Point2, q: Point2) -> Slope:
    dx = q.x - p.x
    dy = q.y - p.y
    if dx == 0 and dy == 0:
        raise ValueError("zero-length segment has no slope")
    scale = math.lcm(dx.denominator, dy.denominator)
    a = dx.numerator * (scale // dx.denominator)
    b = dy.numerator * (scale // dy.denominator)
    g = math.gcd(a, b)
    a //= g
    b //= g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return Slope(a, b)


def _orient(a: Point2, b: Point2, c: Point2) -> Fraction:
    """Twice the signed area of (a, b, c); sign gives the turn direction."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def _strictly_between(a: Point2, b: Point2, w: Point2) -> bool:
    """For w collinear with segment ab: strictly inside it?"""
    dot = (w.x - a.x) * (b.x - a.x) + (w.y - a.y) * (b.y - a.y)
    length2 = (b.x - a.x) ** 2 + (b.y - a.y) ** 2
    return 0 < dot < length2


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    slope: Slope
    triangles: tuple[int, ...]
    totally_interior: bool

    @property
    def kind(self) -> str:
        return "interior" if len(self.triangles) == 2 else "boundary"

    @property
    def classification(self) -> str:
        if self.totally_interior:
            return "totally-interior"
        return self.kind

    @property
    def key(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class OneTieParams:
    """Local data of the unique totally interior edge.

    tau joins v1 and v2; besides tau there are p edges at v1 with s distinct
    slopes and q edges at v2 with t distinct slopes, normalized so s <= t.
    """

    tau: tuple[int, int]
    v1: int
    v2: int
    p: int
    q: int
    s: int
    t: int
    trivial_slope_collision: bool

    def __post_init__(self) -> None:
        if not 2 <= self.s <= self.p:
            raise ValueError(f"need 2 <= s <= p, got s={self.s} p={self.p}")
        if not 2 <= self.t <= self.q:
            raise ValueError(f"need 2 <= t <= q, got t={self.t} q={self.q}")
        if self.s > self.t:
            raise ValueError("params must be normalized with s <= t")

    def trivial_many_slopes(self, r: int) -> bool:
        """Slope count at an endpoint at or above r + 2 forces the lower bound."""
        return self.t + 1 >= r + 3

    def nontrivial(self, r: int) -> bool:
        return not self.trivial_slope_collision and not self.trivial_many_slopes(r)


@dataclass(frozen=True, eq=False)
class Triangulation:
    """Validated triangulation; immutable after build()."""

    vertices: tuple[Point2, ...]
    triangles: tuple[tuple[int, int, int], ...]
    edges: tuple[Edge, ...]
    vertex_kind: tuple[str, ...]
    edges_at: tuple[tuple[int, ...], ...]

    def edge_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        for idx, e in enumerate(self.edges):
            if e.key == key:
                return idx
        raise KeyError(f"no edge {key}")

    @property
    def interior_vertices(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.vertex_kind) if k == "interior")

    @property
    def boundary_vertices(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.vertex_kind) if k == "boundary")

    def interior_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.kind == "interior")

    def boundary_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.kind == "boundary")

    def totally_interior_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.totally_interior)


def build(vertices: Sequence[Sequence], triangles: Sequence[Sequence[int]]) -> Triangulation:
    """Assemble and validate a triangulation from raw vertex and triangle data.

    Vertices are pairs of exact rationals (ints, Fractions, or "num/den"
    strings).  Triangles are index triples; orientation is normalized to
    counterclockwise.  Raises a MeshError subclass describing the first
    problem found.
    """
    pts: list[Point2] = []
    for i, raw in enumerate(vertices):
        xy = tuple(raw)
        if len(xy) != 2:
            raise ValueError(f"vertex {i} is not a coordinate pair")
        pts.append(Point2(parse_rational(xy[0]), parse_rational(xy[1])))
    if len(pts) < 3:
        raise ValueError("need at least 3 vertices")

    seen_pts: dict[Point2, int] = {}
    for i, p in enumerate(pts):
        if p in seen_pts:
            raise DuplicateVertex(f"vertices {seen_pts[p]} and {i} coincide at {p}")
        seen_pts[p] = i

    tris: list[tuple[int, int, int]] = []
    seen_tris: set[frozenset[int]] = set()
    for k, raw in enumerate(triangles):
        tri = tuple(int(i) for i in raw)
        if len(tri) != 3:
            raise ValueError(f"triangle {k} is not an index triple")
        if any(i < 0 or i >= len(pts) for i in tri):
            raise ValueError(f"triangle {k} references a missing vertex")
        if len(set(tri)) != 3:
            raise DegenerateTriangle(f"triangle {k} repeats a vertex")
        area2 = _orient(pts[tri[0]], pts[tri[1]], pts[tri[2]])
        if area2 == 0:
            raise DegenerateTriangle(f"triangle {k} has zero area")
        if area2 < 0:
            tri = (tri[0], tri[2], tri[1])
        key = frozenset(tri)
        if key in seen_tris:
            raise NonManifoldEdge(f"triangle {k} duplicates an earlier triangle")
        seen_tris.add(key)
        tris.append(tri)
    if not tris:
        raise ValueError("need at least 1 triangle")

    edge_map: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for t_idx, tri in enumerate(tris):
        for a, b, opp in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            u, v = tri[a], tri[b]
            key = (u, v) if u < v else (v, u)
            edge_map.setdefault(key, []).append((t_idx, tri[opp]))

    for (u, v), incid in edge_map.items():
        if len(incid) > 2:
            raise NonManifoldEdge(f"edge ({u},{v}) borders {len(incid)} triangles")
        if len(incid) == 2:
            s1 = _orient(pts[u], pts[v], pts[incid[0][1]])
            s2 = _orient(pts[u], pts[v], pts[incid[1][1]])
            if (s1 > 0) == (s2 > 0):
                raise NonManifoldEdge(f"triangles overlap across edge ({u},{v})")

    used = {i for tri in tris for i in tri}
    for i in range(len(pts)):
        if i not in used:
            raise DisconnectedOrHoley(f"vertex {i} belongs to no triangle")

    for (u, v) in edge_map:
        a, b = pts[u], pts[v]
        for w in range(len(pts)):
            if w in (u, v):
                continue
            if _orient(a, b, pts[w]) == 0 and _strictly_between(a, b, pts[w]):
                raise HangingVertex(f"vertex {w} lies inside edge ({u},{v})")

    keys = list(edge_map)
    for i in range(len(keys)):
        a, b = (pts[keys[i][0]], pts[keys[i][1]])
        for j in range(i + 1, len(keys)):
            c, d = (pts[keys[j][0]], pts[keys[j][1]])
            o1, o2 = _orient(a, b, c), _orient(a, b, d)
            o3, o4 = _orient(c, d, a), _orient(c, d, b)
            if ((o1 > 0) != (o2 > 0) and o1 != 0 and o2 != 0
                    and (o3 > 0) != (o4 > 0) and o3 != 0 and o4 != 0):
                raise EdgeCrossing(f"edges {keys[i]} and {keys[j]} cross")

    boundary_keys = [k for k, incid in edge_map.items() if len(incid) == 1]
    if not boundary_keys:
        raise DisconnectedOrHoley("no boundary edges")
    bnbrs: dict[int, list[int]] = {}
    for (u, v) in boundary_keys:
        bnbrs.setdefault(u, []).append(v)
        bnbrs.setdefault(v, []).append(u)
    for v, nbrs in bnbrs.items():
        if len(nbrs) != 2:
            raise DisconnectedOrHoley(f"boundary pinches at vertex {v}")
    start = boundary_keys[0][0]
    visited_edges = set()
    prev, cur = None, start
    while True:
        nxt = [w for w in bnbrs[cur] if w != prev]
        step = nxt[0] if prev is not None else bnbrs[cur][0]
        visited_edges.add((cur, step) if cur < step else (step, cur))
        prev, cur = cur, step
        if cur == start:
            break
    if len(visited_edges) != len(boundary_keys):
        raise DisconnectedOrHoley("boundary is not a single cycle")

    # flood fill across shared edges; a valid disk is edge-connected
    adj: dict[int, list[int]] = {}
    for incid in edge_map.values():
        if len(incid) == 2:
            (t1, _), (t2, _) = incid
            adj.setdefault(t1, []).append(t2)
            adj.setdefault(t2, []).append(t1)
    reached = {0}
    stack = [0]
    while stack:
        for nb in adj.get(stack.pop(), ()):
            if nb not in reached:
                reached.add(nb)
                stack.append(nb)
    if len(reached) != len(tris):
        raise DisconnectedOrHoley("triangles are not edge-connected")

    if len(pts) - len(edge_map) + len(tris) != 1:
        raise DisconnectedOrHoley("Euler characteristic is not that of a disk")

    on_boundary = {v for k in boundary_keys for v in k}
    kinds = tuple("boundary" if i in on_boundary else "interior" for i in range(len(pts)))

    edges = []
    for (u, v) in sorted(edge_map):
        incid = sorted(t for t, _ in edge_map[(u, v)])
        tot = len(incid) == 2 and kinds[u] == "interior" and kinds[v] == "interior"
        edges.append(Edge(u, v, slope_of(pts[u], pts[v]), tuple(incid), tot))

    edges_at: list[list[int]] = [[] for _ in pts]
    for idx, e in enumerate(edges):
        edges_at[e.u].append(idx)
        edges_at[e.v].append(idx)

    return Triangulation(
        vertices=tuple(pts),
        triangles=tuple(tris),
        edges=tuple(edges),
        vertex_kind=kinds,
        edges_at=tuple(tuple(lst) for lst in edges_at),
    )


def slope_count(tri: Triangulation, vertex: int) -> int:
    """Number of distinct slopes among the edges through an interior vertex."""
    if tri.vertex_kind[vertex] != "interior":
        raise NotInteriorVertex(f"vertex {vertex} is not interior")
    return len({tri.edges[e].slope for e in tri.edges_at[vertex]})


def is_quasi_cross_cut(tri: Triangulation, exclude_edges: Iterable[int] = ()) -> bool:
    """Whether every interior edge extends along collinear mesh edges to the boundary.

    Edges of equal slope sharing a vertex are collinear, so each interior edge
    sits in a maximal straight chain; the mesh is quasi-cross-cut when every
    such chain touches a boundary vertex.  exclude_edges (by index) are left
    out of the mesh for this test, which is how the companion mesh with the
    totally interior edge removed is examined without rebuilding.
    """
    excluded = set(exclude_edges)
    idxs = [i for i, e in enumerate(tri.edges) if e.kind == "interior" and i not in excluded]
    parent = {i: i for i in idxs}

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_slope_vertex: dict[tuple[Slope, int], int] = {}
    for i in idxs:
        e = tri.edges[i]
        for v in (e.u, e.v):
            key = (e.slope, v)
            if key in by_slope_vertex:
                ra, rb = find(by_slope_vertex[key]), find(i)
                if ra != rb:
                    parent[ra] = rb
            else:
                by_slope_vertex[key] = i
    touches: dict[int, bool] = {}
    for i in idxs:
        e = tri.edges[i]
        root = find(i)
        hit = tri.vertex_kind[e.u] == "boundary" or tri.vertex_kind[e.v] == "boundary"
        touches[root] = touches.get(root, False) or hit
    return all(touches.values())


def extract_one_tie_params(tri: Triangulation, r: int | None = None) -> OneTieParams:
    """Read off the local parameters of the unique totally interior edge.

    r is accepted for call sites that have a smoothness order in hand; it only
    gets validated, since every field of the result is degree-independent.
    """
    if r is not None and r < 0:
        raise ValueError("r must be nonnegative")
    ties = [(i, e) for i, e in enumerate(tri.edges) if e.totally_interior]
    if not ties:
        raise NoTotallyInteriorEdge("mesh has no totally interior edge")
    if len(ties) > 1:
        keys = [e.key for _, e in ties]
        raise MultipleTotallyInteriorEdges(f"mesh has {len(ties)} totally interior edges: {keys}")
    tie_idx, tie = ties[0]

    def star(v: int) -> tuple[int, int, bool]:
        others = [tri.edges[i] for i in tri.edges_at[v] if i != tie_idx]
        slopes = {e.slope for e in others}
        return len(others), len(slopes), tie.slope in slopes

    p_a, s_a, coll_a = star(tie.u)
    p_b, s_b, coll_b = star(tie.v)
    if s_a <= s_b:
        v1, v2, p, q, s, t = tie.u, tie.v, p_a, p_b, s_a, s_b
    else:
        v1, v2, p, q, s, t = tie.v, tie.u, p_b, p_a, s_b, s_a
    return OneTieParams(
        tau=tie.key, v1=v1, v2=v2, p=p, q=q, s=s, t=t,
        trivial_slope_collision=coll_a or coll_b,
    )


def affine_transform(tri: Triangulation, matrix: Sequence[Sequence], translation: Sequence) -> Triangulation:
    """Apply an invertible affine map to every vertex and rebuild."""
    (a, b), (c, d) = ((parse_rational(x) for x in row) for row in matrix)
    e, f = (parse_rational(x) for x in translation)
    if a * d - b * c == 0:
        raise SingularMap("affine map has zero determinant")
    moved = [(a * p.x + b * p.y + e, c * p.x + d * p.y + f) for p in tri.vertices]
    return build(moved, tri.triangles)


def parse_mesh(text: str) -> Triangulation:
    """Parse the JSON mesh format: {"vertices": [[x, y], ...], "triangles": [[i, j, k], ...]}.

    Coordinates are integers or "num/den" strings.  Floats anywhere in the
    file are rejected.
    """

    def _no_floats(tok: str) -> Fraction:
        raise MeshFormatError(f"float literal {tok!r} in mesh file; use \"num/den\" strings")

    try:
        data = json.loads(text, parse_float=_no_floats)
    except MeshFormatError:
        raise
    except json.JSONDecodeError as exc:
        raise MeshFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise MeshFormatError("top level must be an object")
    for key in ("vertices", "triangles"):
        if key not in data or not isinstance(data[key], list):
            raise MeshFormatError(f"missing or non-list {key!r}")
    verts = []
    for i, item in enumerate(data["vertices"]):
        if not isinstance(item, list) or len(item) != 2:
            raise MeshFormatError(f"vertex {i} must be a [x, y] pair")
        pair = []
        for coord in item:
            if not isinstance(coord, (int, str)) or isinstance(coord, bool):
                raise MeshFormatError(f"vertex {i} has a non-rational coordinate {coord!r}")
            try:
                pair.append(parse_rational(coord))
            except ValueError as exc:
                raise MeshFormatError(str(exc)) from exc
        verts.append(pair)
    tris = []
    for k, item in enumerate(data["triangles"]):
        if (not isinstance(item, list) or len(item) != 3
                or any(not isinstance(i, int) or isinstance(i, bool) for i in item)):
            raise MeshFormatError(f"triangle {k} must be an [i, j, k] index triple")
        if any(i < 0 or i >= len(verts) for i in item):
            raise MeshFormatError(f"triangle {k} references a missing vertex")
        tris.append(item)
    return build(verts, tris)


def load_mesh(path) -> Triangulation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_mesh(fh.read())


def dump_mesh(tri: Triangulation) -> str:
    """Serialize back to the JSON mesh format, exactly."""
    verts = []
    for p in tri.vertices:
        verts.append([
            p.x.numerator if p.x.denominator == 1 else format_rational(p.x),
            p.y.numerator if p.y.denominator == 1 else format_rational(p.y),
        ])
    data = {"vertices": verts, "triangles": [list(t) for t in tri.triangles]}
    return json.dumps(data, indent=2)


def bundled_mesh_names() -> tuple[str, ...]:
    pkg = resources.files("splinedim.meshes")
    return tuple(sorted(p.name for p in pkg.iterdir() if p.name.endswith(".mesh")))


def load_bundled(name: str) -> Triangulation:
    """Load one of the meshes shipped with the package, e.g. "figure2"."""
    if not name.endswith(".mesh"):
        name += ".mesh"
    pkg = resources.files("splinedim.meshes")
    res = pkg.joinpath(name)
    if not res.is_file():
        raise FileNotFoundError(f"no bundled mesh named {name!r}; have {bundled_mesh_names()}")
    return parse_mesh(res.read_text(encoding="utf-8"))
