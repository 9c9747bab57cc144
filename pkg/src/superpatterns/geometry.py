"""Stretched point sets, exact predicates and straight-line drawings.

A permutation sigma of length q is stretched to the points (i, q**sigma_i).
Heights are kept as (base, exponent) pairs and expanded to Python integers
only inside the predicates, so every test is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence, Union

from .perm import Permutation, standardize
from .planegraph import CanonicalOrder, PlaneGraph, cperm, recanonize, triangulate
from .superpat import augment, embed_into_mu, mu


@dataclass(frozen=True)
class ExactPoint:
    x: int
    y_base: int
    y_exp: int

    @cached_property
    def y(self) -> int:
        return self.y_base ** self.y_exp

    def __iter__(self):
        yield self.x
        yield self.y


PointLike = Union[ExactPoint, Sequence[int]]


def _xy(p: PointLike) -> tuple[int, int]:
    if isinstance(p, ExactPoint):
        return p.x, p.y
    x, y = p
    return int(x), int(y)


def stretchperm(sigma: Sequence[int]) -> list[ExactPoint]:
    q = len(sigma)
    if q < 1:
        raise ValueError("cannot stretch the empty permutation")
    return [ExactPoint(i, q, v) for i, v in enumerate(sigma, 1)]


def orientation(a: PointLike, b: PointLike, c: PointLike) -> int:
    """+1 counterclockwise, -1 clockwise, 0 collinear (exact integer determinant)."""
    (ax, ay), (bx, by), (cx, cy) = _xy(a), _xy(b), _xy(c)
    det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (det > 0) - (det < 0)


def segments_cross(a: PointLike, b: PointLike, c: PointLike, d: PointLike) -> bool:
    """True iff segments ab and cd cross at a point interior to both."""
    o1, o2 = orientation(a, b, c), orientation(a, b, d)
    o3, o4 = orientation(c, d, a), orientation(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def on_segment(p: PointLike, a: PointLike, b: PointLike) -> bool:
    """True iff ``p`` lies on segment ab and differs from both endpoints."""
    if orientation(a, b, p) != 0:
        return False
    (px, py), (ax, ay), (bx, by) = _xy(p), _xy(a), _xy(b)
    if (px, py) in ((ax, ay), (bx, by)):
        return False
    return min(ax, bx) <= px <= max(ax, bx) and min(ay, by) <= py <= max(ay, by)


def universal_pointset(n: int) -> list[ExactPoint]:
    """Points on which every n-vertex planar graph has a straight-line drawing."""
    if n < 3:
        raise ValueError("universal_pointset needs n >= 3")
    return stretchperm(augment(mu(n - 3)))


def universal_pointset_size(n: int) -> int:
    m = n - 3
    return (2 * m * m + 8 * m + (-1) ** m - 1) // 8 + 3


@dataclass
class Drawing:
    graph: PlaneGraph
    points: dict
    q: int
    supergraph: PlaneGraph
    order: CanonicalOrder
    certificate: list = field(default_factory=list)

    @property
    def crossing_free(self) -> bool:
        return all(ok for *_, ok in self.certificate)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "vertices": [
                {"id": v, "x": p.x, "y_exp": p.y_exp} for v, p in sorted(self.points.items())
            ],
            "crossing_free": self.crossing_free,
        }


def certify(graph: PlaneGraph, points: dict) -> list[tuple]:
    """Check every pair of disjoint edges and every vertex against every
    non-incident edge.  Entries are ``(kind, a, b, ok)``."""
    edges = graph.edges()
    out = []
    for e, f in combinations(edges, 2):
        if set(e) & set(f):
            continue
        ok = not segments_cross(points[e[0]], points[e[1]], points[f[0]], points[f[1]])
        out.append(("edges", e, f, ok))
    for v in range(graph.n):
        for e in edges:
            if v in e:
                continue
            ok = not on_segment(points[v], points[e[0]], points[e[1]])
            out.append(("vertex", v, e, ok))
    return out


def pattern_positions(pi: Sequence[int]) -> list[int]:
    """Positions of augment(mu(n-3)) forming a copy of ``pi`` = 1 n ... 2."""
    n = len(pi)
    if n < 3 or pi[0] != 1 or pi[1] != n or pi[-1] != 2:
        raise ValueError("pattern must have the form 1 n ... 2")
    middle = standardize(pi[2:-1])
    inner = embed_into_mu(middle, n - 3)
    return [1, 2] + [2 + i for i in inner] + [len(mu(n - 3)) + 3]


def draw(g: PlaneGraph, verify: bool = True) -> Drawing:
    """Straight-line drawing of the connected plane graph ``g`` on universal_pointset(n)."""
    if g.n < 3:
        raise ValueError("draw needs n >= 3")
    sup, co = triangulate(g)
    co = recanonize(sup, co)
    pi = cperm(sup, co)
    host = augment(mu(g.n - 3))
    q = len(host)
    pos = pattern_positions(pi)
    if standardize([host[x - 1] for x in pos]) != Permutation(pi):
        raise AssertionError("pattern embedding into the point set is wrong")
    points = {v: ExactPoint(pos[co.pre[v] - 1], q, host[pos[co.pre[v] - 1] - 1]) for v in co.order}
    drawing = Drawing(g, points, q, sup, co)
    if verify:
        drawing.certificate = certify(g, points)
    return drawing
