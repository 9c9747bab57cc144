"""Embedded planar graphs, canonical orders and the canonical permutation.

Vertices are ``0..n-1``.  ``rotations[v]`` lists the neighbours of ``v`` in
clockwise order.  Faces are traced by ``(u, v) -> (v, succ_v(u))``, which
walks bounded faces counterclockwise; the outer face is stored
counterclockwise, so as a traced dart cycle it appears reversed.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

import networkx as nx

from .perm import Permutation


class EmbeddingError(ValueError):
    pass


@dataclass
class PlaneGraph:
    n: int
    rotations: list[list[int]]
    outer_face: list[int] = field(default_factory=list)

    # -- basic queries ---------------------------------------------------------

    def neighbors(self, v: int) -> list[int]:
        return self.rotations[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotations[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.rotations[u] if u < v]

    def num_edges(self) -> int:
        return sum(map(len, self.rotations)) // 2

    def succ(self, v: int, u: int) -> int:
        """Neighbour of ``v`` following ``u`` clockwise."""
        rot = self.rotations[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def pred(self, v: int, u: int) -> int:
        rot = self.rotations[v]
        return rot[(rot.index(u) - 1) % len(rot)]

    def copy(self) -> "PlaneGraph":
        return PlaneGraph(self.n, [list(r) for r in self.rotations], list(self.outer_face))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    # -- faces -----------------------------------------------------------------

    def faces(self) -> list[list[int]]:
        """Every face as the cyclic list of vertices met along its dart cycle."""
        seen = set()
        out = []
        for u in range(self.n):
            for v in self.rotations[u]:
                if (u, v) in seen:
                    continue
                face = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    face.append(a)
                    a, b = b, self.succ(b, a)
                out.append(face)
        return out

    def face_of_dart(self, u: int, v: int) -> list[int]:
        face, a, b = [], u, v
        while True:
            face.append(a)
            a, b = b, self.succ(b, a)
            if (a, b) == (u, v):
                return face

    def is_maximal(self) -> bool:
        return self.n >= 3 and self.num_edges() == 3 * self.n - 6

    # -- validation ------------------------------------------------------------

    def validate(self) -> None:
        if self.n < 1 or len(self.rotations) != self.n:
            raise EmbeddingError(f"rotations has {len(self.rotations)} entries but n is {self.n}")
        for v, rot in enumerate(self.rotations):
            if len(set(rot)) != len(rot):
                raise EmbeddingError(f"rotations[{v}] lists a neighbour twice")
            for u in rot:
                if not 0 <= u < self.n or u == v:
                    raise EmbeddingError(f"rotations[{v}] has invalid neighbour {u}")
                if v not in self.rotations[u]:
                    raise EmbeddingError(f"edge {v}-{u} is missing its reverse dart in rotations[{u}]")
        if self.n > 1 and not nx.is_connected(self.to_networkx()):
            raise EmbeddingError("graph is not connected")
        f = len(self.faces()) if self.num_edges() else 1
        if self.n - self.num_edges() + f != 2:
            raise EmbeddingError("rotation system is not a plane embedding (Euler check failed)")
        if self.outer_face and not self._is_face(list(reversed(self.outer_face))):
            raise EmbeddingError(f"outer face {self.outer_face} is not a face")

    def _is_face(self, cycle: list[int]) -> bool:
        if len(cycle) < 2 or not self.has_edge(cycle[0], cycle[1]):
            return False
        face = self.face_of_dart(cycle[0], cycle[1])
        return face == cycle

    # -- serialisation ---------------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "rotations": self.rotations, "outer_face": self.outer_face}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "PlaneGraph":
        for key in ("n", "rotations"):
            if key not in data:
                raise EmbeddingError(f"malformed graph description: missing field {key!r}")
        n = _int_field(data["n"], "n")
        if not isinstance(data["rotations"], list):
            raise EmbeddingError("malformed graph description: 'rotations' must be a list")
        rotations = []
        for v, rot in enumerate(data["rotations"]):
            if not isinstance(rot, list):
                raise EmbeddingError(f"malformed graph description: rotations[{v}] must be a list")
            rotations.append([_int_field(u, f"rotations[{v}][{i}]") for i, u in enumerate(rot)])
        outer_raw = data.get("outer_face") or []
        if not isinstance(outer_raw, list):
            raise EmbeddingError("malformed graph description: 'outer_face' must be a list")
        outer = [_int_field(v, f"outer_face[{i}]") for i, v in enumerate(outer_raw)]
        g = cls(n, rotations, outer)
        g.validate()
        return g

    @classmethod
    def from_json(cls, text: str) -> "PlaneGraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise EmbeddingError(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise EmbeddingError("graph JSON must be an object")
        return cls.from_dict(data)


def _int_field(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise EmbeddingError(f"malformed graph description: {where} must be an integer, got {value!r}")
    return value


# -- rotation editing ----------------------------------------------------------

def _insert_after(rot: list[int], anchor: int, v: int) -> None:
    rot.insert(rot.index(anchor) + 1, v)


def _insert_before(rot: list[int], anchor: int, v: int) -> None:
    rot.insert(rot.index(anchor), v)


# -- generators ----------------------------------------------------------------

def triangle() -> PlaneGraph:
    # bounded face 0 -> 1 -> 2 counterclockwise
    return PlaneGraph(3, [[2, 1], [0, 2], [1, 0]], [0, 1, 2])


def _stack_into_face(g: PlaneGraph, a: int, b: int, c: int) -> int:
    """Insert a new vertex into the bounded face traced a -> b -> c."""
    x = g.n
    _insert_after(g.rotations[a], c, x)
    _insert_after(g.rotations[b], a, x)
    _insert_after(g.rotations[c], b, x)
    g.rotations.append([a, c, b])
    g.n += 1
    return x


def _flip(g: PlaneGraph, u: int, v: int) -> bool:
    w, z = g.succ(v, u), g.succ(u, v)
    if w == z or g.has_edge(w, z):
        return False
    g.rotations[u].remove(v)
    g.rotations[v].remove(u)
    _insert_after(g.rotations[w], v, z)
    _insert_after(g.rotations[z], u, w)
    return True


def random_maximal_plane_graph(n: int, rng: Optional[random.Random] = None, flips: Optional[int] = None) -> PlaneGraph:
    """Random stacked triangulation on ``n >= 3`` vertices, shuffled by edge flips."""
    if n < 3:
        raise ValueError("a maximal plane graph needs n >= 3")
    rng = rng or random.Random()
    g = triangle()
    outer = set(g.outer_face)
    while g.n < n:
        faces = [f for f in g.faces() if not _is_outer(g, f)]
        a, b, c = rng.choice(faces)
        _stack_into_face(g, a, b, c)
    for _ in range(flips if flips is not None else 3 * n):
        u, v = rng.choice(g.edges())
        if u in outer and v in outer:
            continue
        _flip(g, u, v)
    return g


def _is_outer(g: PlaneGraph, face: list[int]) -> bool:
    rev = list(reversed(g.outer_face))
    k = len(rev)
    return len(face) == k and any(face == rev[i:] + rev[:i] for i in range(k))


def k4() -> PlaneGraph:
    g = triangle()
    _stack_into_face(g, 0, 1, 2)
    return g


def double_wheel(k: int = 5) -> PlaneGraph:
    """Two apexes joined to every vertex of a k-cycle."""
    if k < 3:
        raise ValueError("rim needs at least 3 vertices")
    rim = list(range(k))
    top, bottom = k, k + 1
    rotations: list[list[int]] = []
    for i in rim:
        prev, nxt = (i - 1) % k, (i + 1) % k
        rotations.append([prev, top, nxt, bottom])
    rotations.append(list(reversed(rim)))
    rotations.append(list(rim))
    g = PlaneGraph(k + 2, rotations)
    g.outer_face = list(reversed(g.face_of_dart(1, 0)))
    return g


def icosahedron() -> PlaneGraph:
    g = nx.icosahedral_graph()
    return from_networkx_planar(g)


def from_networkx_planar(g: nx.Graph) -> PlaneGraph:
    """Embed a planar networkx graph (nodes 0..n-1) using networkx's planarity test."""
    ok, emb = nx.check_planarity(g)
    if not ok:
        raise EmbeddingError("graph is not planar")
    n = g.number_of_nodes()
    # networkx lists neighbours clockwise already
    rotations = [list(emb.neighbors_cw_order(v)) for v in range(n)]
    pg = PlaneGraph(n, rotations)
    if pg.num_edges():
        u = 0
        v = rotations[0][0]
        face = pg.face_of_dart(u, v)
        pg.outer_face = list(reversed(face)) if len(face) == len(set(face)) else []
    return pg


def path_graph(n: int) -> PlaneGraph:
    rotations = [[u for u in (v - 1, v + 1) if 0 <= u < n] for v in range(n)]
    return PlaneGraph(n, rotations)


def tree_graph(parent: Sequence[Optional[int]]) -> PlaneGraph:
    """Plane tree from a parent array; children follow their parent clockwise."""
    n = len(parent)
    rotations: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(parent):
        if p is not None:
            rotations[p].append(v)
    for v, p in enumerate(parent):
        if p is not None:
            rotations[v].insert(0, p)
    return PlaneGraph(n, rotations)


def complete_binary_tree_graph(height: int) -> PlaneGraph:
    n = 2 ** (height + 1) - 1
    return tree_graph([None] + [(v - 1) // 2 for v in range(1, n)])


def random_connected_plane_graph(n: int, rng: Optional[random.Random] = None, keep: float = 0.5) -> PlaneGraph:
    """Random spanning-connected subgraph of a random maximal plane graph."""
    rng = rng or random.Random()
    g = random_maximal_plane_graph(n, rng)
    order = g.edges()
    rng.shuffle(order)
    h = g.to_networkx()
    for u, v in order:
        if rng.random() < keep:
            continue
        h.remove_edge(u, v)
        if nx.is_connected(h):
            g.rotations[u].remove(v)
            g.rotations[v].remove(u)
        else:
            h.add_edge(u, v)
    g.outer_face = []
    return g


def all_maximal_plane_graphs(n: int) -> list[PlaneGraph]:
    """One embedded representative per isomorphism class of maximal planar
    graphs on ``n`` vertices.

    Any two triangulations with the same vertex count are linked by edge
    flips, so a breadth-first walk of the flip graph reaches every class.
    """
    if n < 3:
        raise ValueError("a maximal plane graph needs n >= 3")
    start = triangle()
    while start.n < n:
        inner = [f for f in start.faces() if not _is_outer(start, f)]
        _stack_into_face(start, *inner[-1])
    found = [start]
    graphs = [start.to_networkx()]
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for u, v in g.edges():
                h = g.copy()
                if not _flip(h, u, v):
                    continue
                h.outer_face = []
                hx = h.to_networkx()
                if any(nx.is_isomorphic(hx, other) for other in graphs):
                    continue
                found.append(h)
                graphs.append(hx)
                nxt.append(h)
        frontier = nxt
    return found


def mirror(g: PlaneGraph) -> PlaneGraph:
    return PlaneGraph(g.n, [list(reversed(r)) for r in g.rotations], list(reversed(g.outer_face)))


def rooted_embeddings(g: PlaneGraph) -> Iterator[tuple[PlaneGraph, tuple[int, int, int]]]:
    """Every choice of mirror image, outer face and labelled outer triangle
    ``(v1, v2, vn)`` of a maximal plane graph."""
    for h in (g, mirror(g)):
        for face in h.faces():
            ccw = face[::-1]
            for i in range(3):
                tri = tuple(ccw[i:] + ccw[:i])
                yield PlaneGraph(h.n, h.rotations, list(tri)), tri


# -- canonical orders ----------------------------------------------------------

@dataclass
class CanonicalOrder:
    order: list[int]
    parent: dict = field(default_factory=dict)
    pre: dict = field(default_factory=dict)
    rpost: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.order)

    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.order, 1)}

    def children(self) -> dict:
        out: dict = {v: [] for v in self.order}
        for v, p in self.parent.items():
            if p is not None:
                out[p].append(v)
        return out

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "parent": {str(k): v for k, v in self.parent.items()},
            "pre": {str(k): v for k, v in self.pre.items()},
            "rpost": {str(k): v for k, v in self.rpost.items()},
        }


def _outer_triple(g: PlaneGraph, outer: Optional[Sequence[int]]) -> tuple[int, int, int]:
    outer = list(outer) if outer else list(g.outer_face)
    if not outer:
        outer = list(reversed(g.faces()[0]))
    if len(outer) != 3 or not g._is_face(list(reversed(outer))):
        raise EmbeddingError(f"{outer} is not a triangular face listed counterclockwise")
    return outer[0], outer[1], outer[2]


def canonical_order(g: PlaneGraph, outer: Optional[Sequence[int]] = None) -> CanonicalOrder:
    """Canonical order by reverse shelling.

    ``outer`` is the outer triangle ``(v1, v2, vn)`` listed counterclockwise;
    the graph's own ``outer_face`` is used when omitted.  The vertex peeled
    at each step is the leftmost one on the path ``v1 .. v2`` without a chord.
    """
    if not g.is_maximal():
        raise EmbeddingError("canonical_order needs a maximal plane graph")
    v1, v2, vn = _outer_triple(g, outer)
    removed = {vn}
    path = [v1] + _arc_ccw(g, vn, v1, v2, removed) + [v2]
    peeled = [vn]
    while len(path) > 2:
        where = {v: i for i, v in enumerate(path)}
        for j in range(1, len(path) - 1):
            x = path[j]
            if all(abs(where[u] - j) <= 1 for u in g.rotations[x] if u in where):
                break
        else:
            raise EmbeddingError("no removable vertex on the outer path")
        removed.add(x)
        peeled.append(x)
        path = path[:j] + _arc_ccw(g, x, path[j - 1], path[j + 1], removed) + path[j + 1:]
    order = [v1, v2] + peeled[::-1]
    return build_ctree_labels(g, CanonicalOrder(order))


def _arc_ccw(g: PlaneGraph, x: int, start: int, stop: int, removed: set) -> list[int]:
    # Neighbours of x strictly between start and stop, walking counterclockwise.
    rot = g.rotations[x]
    k = len(rot)
    i = rot.index(start)
    out = []
    while True:
        i = (i - 1) % k
        u = rot[i]
        if u == stop:
            return out
        if u not in removed:
            out.append(u)


def build_ctree_labels(g: PlaneGraph, co: CanonicalOrder) -> CanonicalOrder:
    """Fill parent, pre and rpost for a canonical order."""
    order = co.order
    n = len(order)
    v1, v2 = order[0], order[1]
    parent: dict = {v1: None, v2: v1}
    if n >= 3:
        parent[order[2]] = v1
    path = [v1] + ([order[2]] if n >= 3 else []) + [v2]
    for v in order[3:]:
        where = {u: i for i, u in enumerate(path)}
        hits = sorted(where[u] for u in g.rotations[v] if u in where)
        lo, hi = hits[0], hits[-1]
        parent[v] = path[lo]
        path = path[: lo + 1] + [v] + path[hi:]

    children: dict = {v: [] for v in order}
    for v in order[1:]:
        children[parent[v]].append(v)
    for u, kids in children.items():
        if not kids:
            continue
        anchor = v2 if u == v1 else parent[u]
        rot = g.rotations[u]
        start = rot.index(anchor)
        rank = {w: (rot.index(w) - start - 1) % len(rot) for w in kids}
        kids.sort(key=rank.__getitem__)

    pre, post = {}, []
    stack = [(v1, False)]
    while stack:
        v, done = stack.pop()
        if done:
            post.append(v)
            continue
        pre[v] = len(pre) + 1
        stack.append((v, True))
        stack.extend((c, False) for c in reversed(children[v]))
    rpost = {v: n - i for i, v in enumerate(post)}
    return CanonicalOrder(list(order), parent, pre, rpost)


def recanonize(g: PlaneGraph, co: CanonicalOrder) -> CanonicalOrder:
    """Reorder the vertices by rpost; the result is again canonical."""
    if not co.rpost:
        co = build_ctree_labels(g, co)
    order = sorted(co.order, key=co.rpost.__getitem__)
    return build_ctree_labels(g, CanonicalOrder(order))


def cperm(g: PlaneGraph, co: CanonicalOrder) -> Permutation:
    """Value rpost(v) at position pre(v)."""
    if not co.pre:
        co = build_ctree_labels(g, co)
    out = [0] * co.n
    for v in co.order:
        out[co.pre[v] - 1] = co.rpost[v]
    return Permutation(out)


# -- independent validation ----------------------------------------------------

def _boundary(g: PlaneGraph, members: set, v1: int, v2: int) -> list[int]:
    # Boundary of the induced embedding, read from v1 round to v2.
    rot = {v: [u for u in g.rotations[v] if u in members] for v in members}

    def succ(v, u):
        r = rot[v]
        return r[(r.index(u) + 1) % len(r)]

    walk, a, b = [], v2, v1
    while True:
        walk.append(b)
        a, b = b, succ(b, a)
        if (a, b) == (v2, v1):
            return walk


def canonical_order_violations(g: PlaneGraph, order: Sequence[int]) -> list[str]:
    """Check the three canonical-order conditions directly; empty means valid."""
    problems = []
    n = g.n
    order = list(order)
    if sorted(order) != list(range(n)):
        return ["order is not a permutation of the vertices"]
    v1, v2, vn = order[0], order[1], order[-1]
    if not g._is_face([v1, vn, v2]):
        problems.append("v1 vn v2 is not the outer face in clockwise order")
    nxg = g.to_networkx()
    prev_cycle: list[int] = []
    for k in range(3, n + 1):
        members = set(order[:k])
        sub = nxg.subgraph(members)
        if not nx.is_biconnected(sub):
            problems.append(f"G_{k} is not 2-connected")
            continue
        if not sub.has_edge(v1, v2):
            problems.append(f"G_{k} misses the base edge")
            continue
        cycle = _boundary(g, members, v1, v2)
        if len(cycle) != len(set(cycle)):
            problems.append(f"C_{k} is not a simple cycle")
        if k >= 4:
            vk = order[k - 1]
            if vk not in cycle:
                problems.append(f"v_{k} is not on C_{k}")
            where = {u: i for i, u in enumerate(prev_cycle)}
            earlier = sorted(where[u] for u in g.rotations[vk] if u in members and u != vk and u in where)
            inner = [u for u in g.rotations[vk] if u in members and u != vk and u not in where]
            if inner:
                problems.append(f"v_{k} has an earlier neighbour off C_{k-1}")
            if len(earlier) < 2 or earlier != list(range(earlier[0], earlier[0] + len(earlier))):
                problems.append(f"earlier neighbours of v_{k} are not a path of >= 2 vertices")
        prev_cycle = cycle
    return problems


def is_valid_canonical_order(g: PlaneGraph, order: Sequence[int]) -> bool:
    return not canonical_order_violations(g, order)


def boundary_cycle(g: PlaneGraph, order: Sequence[int], k: int) -> list[int]:
    """Outer cycle C_k of the graph induced by the first ``k`` vertices,
    starting at v1 and ending at v2."""
    return _boundary(g, set(order[:k]), order[0], order[1])


def cycle_sortedness_violations(g: PlaneGraph, co: CanonicalOrder) -> list[int]:
    """Values of k for which C_k is not increasing in pre."""
    bad = []
    for k in range(3, co.n + 1):
        ranks = [co.pre[v] for v in boundary_cycle(g, co.order, k)]
        if ranks != sorted(ranks):
            bad.append(k)
    return bad


def interior_violations(g: PlaneGraph, co: CanonicalOrder) -> list[tuple[int, int, int]]:
    """Triples (h, i, j) of 1-based order positions where pre(v_h) < pre(v_i) <
    pre(v_j), v_h v_j is an edge and max(h, j) > i, yet v_i lies on C_max(h, j)."""
    index = co.index()
    order = co.order
    cycles = {k: set(boundary_cycle(g, order, k)) for k in range(3, co.n + 1)}
    bad = []
    for vh, vj in g.edges():
        if co.pre[vh] > co.pre[vj]:
            vh, vj = vj, vh
        h, j = index[vh], index[vj]
        top = max(h, j)
        if top < 3:
            continue
        for vi in order[: top - 1]:
            i = index[vi]
            if co.pre[vh] < co.pre[vi] < co.pre[vj] and vi in cycles[top]:
                bad.append((h, i, j))
    return bad


# -- triangulation with a good canonical tree ----------------------------------

def triangulate(g: PlaneGraph, max_backtracks: int = 100000) -> tuple[PlaneGraph, CanonicalOrder]:
    """Maximal plane supergraph on the same vertices plus a canonical order
    whose tree uses only edges of ``g`` apart from those at ``v1``.

    The triangulated disk grows one vertex at a time.  Candidates are ranked
    by the rightmost attachment point other than ``v2`` (further right first),
    then by the leftmost attachment point (further right first), then by
    vertex id.  A candidate is usable only if all of its placed neighbours lie
    on the current boundary path and the path vertices it would cover have no
    unplaced neighbours besides itself, and the rest of ``g`` must still embed
    outside the grown disk (checked by a planarity test).  If the search
    still runs dry it backtracks.
    """
    g.validate()
    if g.n < 3:
        raise EmbeddingError("triangulate needs n >= 3")
    if g.is_maximal():
        return g.copy(), canonical_order(g)

    adj = [set(r) for r in g.rotations]
    if g.outer_face and g.has_edge(g.outer_face[0], g.outer_face[1]):
        v1, v2 = g.outer_face[0], g.outer_face[1]
    else:
        v1 = 0
        v2 = min(adj[0])
    n = g.n
    budget = [max_backtracks]

    def candidates(placed: set, path: list[int]) -> list[tuple[int, int, int]]:
        where = {u: i for i, u in enumerate(path)}
        last = len(placed) == n - 1
        found = []
        for u in range(n):
            if u in placed or not adj[u] & placed:
                continue
            nbrs = adj[u] & placed
            if any(w not in where for w in nbrs):
                continue
            pos = sorted(where[w] for w in nbrs)
            if last or nbrs == {v2} and all(not (adj[w] - placed - {u}) for w in path[1:-1]):
                found.append((u, 0, len(path) - 1))
                continue
            if nbrs == {v2}:
                continue
            lo, hi = pos[0], pos[-1]
            if lo == hi:
                hi = lo + 1
            if any(adj[path[j]] - placed - {u} for j in range(lo + 1, hi)):
                continue
            found.append((u, lo, hi))
        plain = [c for c in found if adj[c[0]] & placed != {v2}]
        if plain and not last:
            def key(c):
                u, lo, hi = c
                right = max(where[w] for w in adj[u] & placed if w != v2)
                return (-right, -lo, u)
            return sorted(plain, key=key)
        return sorted(found, key=lambda c: c[0])

    def extendable(placed: set, path: list[int]) -> bool:
        # The unplaced part of g must fit outside the disk: model the disk by
        # a hub joined to its boundary and test planarity.
        h = nx.Graph()
        h.add_edges_from((a, b) for a, b in g.edges() if not (a in placed and b in placed))
        h.add_edges_from(zip(path, path[1:]))
        h.add_edge(path[-1], path[0])
        h.add_edges_from(("hub", w) for w in path)
        return nx.check_planarity(h)[0]

    def grow(rot: dict, placed: set, path: list[int], order: list[int]):
        if len(placed) == n:
            return rot, order
        for u, lo, hi in candidates(placed, path):
            new_path = path[: lo + 1] + [u] + path[hi:]
            if len(placed) + 1 < n and not extendable(placed | {u}, new_path):
                continue
            new_rot = {k: list(v) for k, v in rot.items()}
            ws = path[lo: hi + 1]
            new_rot[u] = [ws[0], ws[-1]] + ws[-2:0:-1]
            _insert_before(new_rot[ws[0]], ws[1], u)
            for j in range(1, len(ws)):
                _insert_after(new_rot[ws[j]], ws[j - 1], u)
            result = grow(new_rot, placed | {u}, new_path, order + [u])
            if result is not None:
                return result
            budget[0] -= 1
            if budget[0] < 0:
                raise EmbeddingError("triangulation search exhausted its backtracking budget")
        return None

    result = grow({v1: [v2], v2: [v1]}, {v1, v2}, [v1, v2], [v1, v2])
    if result is None:
        raise EmbeddingError("no triangulation with the required canonical tree exists from this base edge")
    rot, order = result
    out = PlaneGraph(n, [rot[v] for v in range(n)], [v1, v2, order[-1]])
    return out, build_ctree_labels(out, CanonicalOrder(order))
