"""Plane multigraphs as rotation systems over half-edges.

Half-edge ``h`` belongs to edge ``h >> 1`` and its twin is ``h ^ 1``. Each
vertex carries the clockwise cyclic order of the half-edges leaving it. The
face to the left of ``h`` continues with the rotation-successor of
``twin(h)``, which traces every facial walk.

Edge and vertex ids need not be dense: contraction and deletion keep the
surviving ids, so a coloring of a contracted map can be transferred back to
the original edges without bookkeeping.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from fpec.errors import (
    ContractionError,
    NotBridgelessError,
    NotConnectedError,
    PlaneMapError,
)

__all__ = [
    "PlaneMap",
    "FacialWalk",
    "BundledMultigraph",
    "Block",
    "BlockDecomposition",
    "EdgeCut",
    "parse",
    "dumps",
    "facial_walks",
    "face_adjacent_pairs",
    "common_edges_in_walk_order",
    "dual_restricted",
    "contract_edge",
    "contract_subgraph",
    "delete_edges",
    "induced_submap",
    "blocks",
    "is_nontrivial_edge_cut",
    "split_at_cut_vertex",
    "medial_adjacency_graph",
    "bridges",
    "require_bridgeless",
]


def twin(h: int) -> int:
    return h ^ 1


def edge_of(h: int) -> int:
    return h >> 1


@dataclass(frozen=True)
class FacialWalk:
    """A face as the cyclic sequence of half-edges traversed along it."""

    id: int
    half_edges: tuple[int, ...]

    def __len__(self):
        return len(self.half_edges)

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(h >> 1 for h in self.half_edges)


class PlaneMap:
    """Immutable loopless plane multigraph given by a rotation system.

    Parameters
    ----------
    rotation : mapping
        ``vertex -> sequence of half-edges`` in clockwise order. A vertex
        with an empty sequence is isolated.

    Raises
    ------
    PlaneMapError
        On a duplicated or unpaired half-edge, a loop, or a rotation system
        whose Euler characteristic is not that of a union of spheres.
    """

    __slots__ = ("_rotation", "_vertex_of", "_next", "_prev", "_faces", "_face_of", "_components")

    def __init__(self, rotation: Mapping[int, Sequence[int]]):
        rot = {int(v): tuple(int(h) for h in hs) for v, hs in rotation.items()}
        vertex_of: dict[int, int] = {}
        nxt: dict[int, int] = {}
        prv: dict[int, int] = {}
        for v, hs in rot.items():
            for i, h in enumerate(hs):
                if h < 0:
                    raise PlaneMapError(f"negative half-edge id {h}")
                if h in vertex_of:
                    raise PlaneMapError(f"half-edge {h} appears more than once")
                vertex_of[h] = v
                nxt[h] = hs[(i + 1) % len(hs)]
                prv[h] = hs[i - 1]
        for h, v in vertex_of.items():
            if h ^ 1 not in vertex_of:
                raise PlaneMapError(f"half-edge {h} has no twin {h ^ 1}")
            if vertex_of[h ^ 1] == v:
                raise PlaneMapError(f"edge {h >> 1} is a loop at vertex {v}")
        self._rotation = rot
        self._vertex_of = vertex_of
        self._next = nxt
        self._prev = prv
        self._faces = None
        self._face_of = None
        self._components = None
        self._check_euler()

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_rotation_lists(cls, rotations: Sequence[Sequence[int]]) -> PlaneMap:
        """Build a map whose vertices are ``0..len(rotations)-1``."""
        return cls({v: hs for v, hs in enumerate(rotations)})

    def _check_euler(self):
        comp_of = {}
        for i, comp in enumerate(self.components()):
            for v in comp:
                comp_of[v] = i
        counts = [[len(c), 0, 0] for c in self.components()]
        for e in self.edges:
            counts[comp_of[self._vertex_of[2 * e]]][1] += 1
        for f in self.faces:
            counts[comp_of[self._vertex_of[f.half_edges[0]]]][2] += 1
        for i, (nv, ne, nf) in enumerate(counts):
            if ne == 0:
                nf = 1
            if nv - ne + nf != 2:
                raise PlaneMapError(
                    f"rotation system is not planar: V - E + F = {nv} - {ne} + {nf}"
                    f" = {nv - ne + nf} != 2"
                )

    # -- basic accessors ---------------------------------------------------

    @property
    def rotation(self) -> Mapping[int, tuple[int, ...]]:
        return self._rotation

    @property
    def vertices(self) -> list[int]:
        return sorted(self._rotation)

    @property
    def half_edges(self) -> list[int]:
        return sorted(self._vertex_of)

    @property
    def edges(self) -> list[int]:
        return sorted({h >> 1 for h in self._vertex_of})

    @property
    def num_vertices(self) -> int:
        return len(self._rotation)

    @property
    def num_edges(self) -> int:
        return len(self._vertex_of) // 2

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def vertex_of(self, h: int) -> int:
        return self._vertex_of[h]

    def has_edge(self, e: int) -> bool:
        return 2 * e in self._vertex_of

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._vertex_of[2 * e], self._vertex_of[2 * e + 1]

    def degree(self, v: int) -> int:
        return len(self._rotation[v])

    def rot_next(self, h: int) -> int:
        return self._next[h]

    def rot_prev(self, h: int) -> int:
        return self._prev[h]

    def face_successor(self, h: int) -> int:
        """Half-edge that follows ``h`` on the face to its left."""
        return self._next[h ^ 1]

    def neighbors(self, v: int) -> list[int]:
        return [self._vertex_of[h ^ 1] for h in self._rotation[v]]

    def edge_list(self) -> dict[int, tuple[int, int]]:
        return {e: self.endpoints(e) for e in self.edges}

    # -- faces -----------------------------------------------------------

    @property
    def faces(self) -> list[FacialWalk]:
        if self._faces is None:
            self._compute_faces()
        return self._faces

    def face_of(self, h: int) -> int:
        if self._face_of is None:
            self._compute_faces()
        return self._face_of[h]

    def edge_faces(self, e: int) -> tuple[int, int]:
        return self.face_of(2 * e), self.face_of(2 * e + 1)

    def _compute_faces(self):
        face_of: dict[int, int] = {}
        faces = []
        for start in sorted(self._vertex_of):
            if start in face_of:
                continue
            fid = len(faces)
            walk = []
            h = start
            while h not in face_of:
                face_of[h] = fid
                walk.append(h)
                h = self._next[h ^ 1]
            faces.append(FacialWalk(fid, tuple(walk)))
        self._faces = faces
        self._face_of = face_of

    # -- connectivity -------------------------------------------------------

    def components(self) -> list[frozenset[int]]:
        if self._components is None:
            seen = set()
            comps = []
            for s in sorted(self._rotation):
                if s in seen:
                    continue
                comp = _bfs(s, lambda v: self.neighbors(v))
                seen |= comp
                comps.append(frozenset(comp))
            self._components = comps
        return self._components

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def require_connected(self):
        if not self.is_connected():
            raise NotConnectedError(
                f"map has {len(self.components())} connected components"
            )

    def __eq__(self, other):
        return isinstance(other, PlaneMap) and self._rotation == other._rotation

    def __hash__(self):
        return hash(tuple(sorted(self._rotation.items())))

    def __repr__(self):
        return (
            f"PlaneMap(V={self.num_vertices}, E={self.num_edges}, "
            f"F={self.num_faces})"
        )


def _bfs(start, neighbors) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


# ---------------------------------------------------------------------------
# PMAP text format
# ---------------------------------------------------------------------------


def parse(text: str) -> PlaneMap:
    """Parse PMAP text into a validated :class:`PlaneMap`.

    The format is ``pmap V E`` followed by one ``v <id> : <half-edges>``
    line per vertex. Vertex ids must be ``0..V-1`` and the half-edges must be
    exactly ``0..2E-1``, each once.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise PlaneMapError("empty input")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "pmap":
        raise PlaneMapError(f"line {lineno}: expected 'pmap <V> <E>'")
    try:
        nv, ne = int(parts[1]), int(parts[2])
    except ValueError:
        raise PlaneMapError(f"line {lineno}: V and E must be integers") from None
    if nv < 0 or ne < 0:
        raise PlaneMapError(f"line {lineno}: negative counts")
    if len(lines) - 1 != nv:
        raise PlaneMapError(f"expected {nv} vertex lines, found {len(lines) - 1}")

    rotation: dict[int, tuple[int, ...]] = {}
    for lineno, line in lines[1:]:
        head, sep, tail = line.partition(":")
        hp = head.split()
        if not sep or len(hp) != 2 or hp[0] != "v":
            raise PlaneMapError(f"line {lineno}: expected 'v <id> : <half-edges>'")
        try:
            v = int(hp[1])
            hs = tuple(int(t) for t in tail.split())
        except ValueError:
            raise PlaneMapError(f"line {lineno}: non-integer token") from None
        if not 0 <= v < nv:
            raise PlaneMapError(f"line {lineno}: vertex id {v} out of range")
        if v in rotation:
            raise PlaneMapError(f"line {lineno}: duplicate vertex {v}")
        for h in hs:
            if not 0 <= h < 2 * ne:
                raise PlaneMapError(f"line {lineno}: half-edge {h} out of range")
        rotation[v] = hs
    seen = [h for hs in rotation.values() for h in hs]
    if len(seen) != len(set(seen)):
        dup = sorted(h for h in set(seen) if seen.count(h) > 1)
        raise PlaneMapError(f"duplicate half-edges {dup}")
    missing = sorted(set(range(2 * ne)) - set(seen))
    if missing:
        raise PlaneMapError(f"missing half-edges {missing}")
    return PlaneMap(rotation)


def canonical_relabel(g: PlaneMap) -> PlaneMap:
    """Relabel vertices and edges densely, preserving their relative order."""
    vmap = {v: i for i, v in enumerate(g.vertices)}
    emap = {e: i for i, e in enumerate(g.edges)}
    return PlaneMap(
        {vmap[v]: [2 * emap[h >> 1] + (h & 1) for h in hs] for v, hs in g.rotation.items()}
    )


def dumps(g: PlaneMap) -> str:
    """Serialize to PMAP; sparse ids are densified first."""
    g = canonical_relabel(g)
    out = [f"pmap {g.num_vertices} {g.num_edges}"]
    for v in g.vertices:
        hs = " ".join(str(h) for h in g.rotation[v])
        out.append(f"v {v} : {hs}".rstrip())
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Faces and adjacency
# ---------------------------------------------------------------------------


def facial_walks(g: PlaneMap) -> list[FacialWalk]:
    g.require_connected()
    return list(g.faces)


def face_adjacent_pairs(g: PlaneMap) -> set[tuple[int, int]]:
    """Pairs ``(e, e2)``, ``e < e2``, of distinct edges consecutive on a walk."""
    pairs = set()
    for f in g.faces:
        hs = f.half_edges
        for i, h in enumerate(hs):
            a, b = h >> 1, hs[(i + 1) % len(hs)] >> 1
            if a != b:
                pairs.add((a, b) if a < b else (b, a))
    return pairs


def medial_adjacency_graph(g: PlaneMap) -> dict[int, set[int]]:
    adj = {e: set() for e in g.edges}
    for a, b in face_adjacent_pairs(g):
        adj[a].add(b)
        adj[b].add(a)
    return adj


def common_edges_in_walk_order(g: PlaneMap, f: int, f2: int) -> list[int]:
    """Edges bounding both ``f`` and ``f2``, in the order met along ``f``.

    The cyclic order is rotated so that the lowest edge id comes first.
    """
    if f == f2:
        return []
    out = []
    for h in g.faces[f].half_edges:
        e = h >> 1
        if g.face_of(h ^ 1) == f2 and e not in out:
            out.append(e)
    if not out:
        return out
    i = out.index(min(out))
    return out[i:] + out[:i]


def adjacent_face_pairs(g: PlaneMap) -> dict[tuple[int, int], list[int]]:
    """Map ``(f, f2)`` with ``f < f2`` to the sorted list of shared edges."""
    shared: dict[tuple[int, int], list[int]] = {}
    for e in g.edges:
        a, b = g.edge_faces(e)
        if a == b:
            continue
        shared.setdefault((min(a, b), max(a, b)), []).append(e)
    return shared


def bridges(g: PlaneMap) -> list[int]:
    """Edges with the same face on both sides (exactly the bridges)."""
    return [e for e in g.edges if g.face_of(2 * e) == g.face_of(2 * e + 1)]


def require_bridgeless(g: PlaneMap):
    g.require_connected()
    bad = bridges(g)
    if bad:
        raise NotBridgelessError(f"map has bridges {bad}", bad)


# ---------------------------------------------------------------------------
# Abstract multigraphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BundledMultigraph:
    """Loopless multigraph; parallel edges between a pair form a bundle."""

    vertices: frozenset
    edges: Mapping[int, tuple]
    _adj: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", dict(sorted(self.edges.items())))
        adj = {v: [] for v in self.vertices}
        for e, (u, v) in self.edges.items():
            if u == v:
                raise ValueError(f"edge {e} is a loop at {u}")
            if u not in adj or v not in adj:
                raise ValueError(f"edge {e} has an endpoint outside the vertex set")
            adj[u].append((e, v))
            adj[v].append((e, u))
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def from_edges(cls, edges: Mapping[int, tuple], vertices: Iterable = ()) -> BundledMultigraph:
        vs = set(vertices)
        for u, v in edges.values():
            vs.update((u, v))
        return cls(frozenset(vs), dict(edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def incident(self, v) -> list[tuple[int, object]]:
        """``(edge id, other endpoint)`` for every edge at ``v``."""
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def bundles(self) -> dict[tuple, list[int]]:
        out: dict[tuple, list[int]] = {}
        for e, (u, v) in self.edges.items():
            key = (u, v) if _sort_key(u) <= _sort_key(v) else (v, u)
            out.setdefault(key, []).append(e)
        return out

    def subgraph(self, edge_ids: Iterable[int], vertices: Iterable = ()) -> BundledMultigraph:
        return BundledMultigraph.from_edges({e: self.edges[e] for e in edge_ids}, vertices)

    def without_isolated(self) -> BundledMultigraph:
        return BundledMultigraph.from_edges(self.edges)

    def components(self) -> list[BundledMultigraph]:
        seen = set()
        out = []
        for s in sorted(self.vertices, key=_sort_key):
            if s in seen:
                continue
            comp = _bfs(s, lambda v: [w for _, w in self._adj[v]])
            seen |= comp
            es = {e: uv for e, uv in self.edges.items() if uv[0] in comp}
            out.append(BundledMultigraph(frozenset(comp), es))
        return out

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        s = min(self.vertices, key=_sort_key)
        return len(_bfs(s, lambda v: [w for _, w in self._adj[v]])) == len(self.vertices)


def _sort_key(v):
    return (0, v) if isinstance(v, int) else (1, repr(v))


def dual_restricted(g: PlaneMap, coloring: Mapping[int, int], c) -> BundledMultigraph:
    """Faces of ``g`` joined by one dual edge per ``c``-colored primal edge.

    Dual edges keep the id of their associated primal edge.
    """
    require_bridgeless(g)
    edges = {e: g.edge_faces(e) for e in g.edges if coloring[e] == c}
    return BundledMultigraph(frozenset(range(g.num_faces)), edges)


# ---------------------------------------------------------------------------
# Embedded edits
# ---------------------------------------------------------------------------


def delete_edges(g: PlaneMap, edge_ids: Iterable[int]) -> PlaneMap:
    drop = set()
    for e in edge_ids:
        drop.update((2 * e, 2 * e + 1))
    return PlaneMap({v: [h for h in hs if h not in drop] for v, hs in g.rotation.items()})


def induced_submap(g: PlaneMap, vs: Iterable[int]) -> PlaneMap:
    """``g[vs]`` with rotations inherited from ``g``."""
    keep = set(vs)
    return PlaneMap(
        {
            v: [h for h in g.rotation[v] if g.vertex_of(h ^ 1) in keep]
            for v in g.vertices
            if v in keep
        }
    )


def _contract_unchecked(rot: dict[int, tuple[int, ...]], vertex_of: dict[int, int], e: int):
    h = 2 * e
    u, v = vertex_of[h], vertex_of[h + 1]
    ru, rv = rot[u], rot[v]
    i, j = ru.index(h), rv.index(h + 1)
    merged = ru[i + 1 :] + ru[:i] + rv[j + 1 :] + rv[:j]
    keep, gone = min(u, v), max(u, v)
    del rot[gone]
    rot[keep] = merged
    for x in merged:
        vertex_of[x] = keep
    del vertex_of[h], vertex_of[h + 1]


def contract_edge(g: PlaneMap, e: int) -> PlaneMap:
    """Merge the endpoints of ``e``, splicing their rotations where ``e`` was.

    The merged vertex keeps the smaller of the two vertex ids.

    Raises
    ------
    ContractionError
        If another edge joins the same two vertices (it would become a loop).
    """
    u, v = g.endpoints(e)
    parallel = sorted(
        h >> 1 for h in g.rotation[u] if (h >> 1) != e and g.vertex_of(h ^ 1) == v
    )
    if parallel:
        raise ContractionError(
            f"contracting edge {e} turns parallel edges {parallel} into loops",
            parallel,
        )
    rot = dict(g.rotation)
    vertex_of = {h: g.vertex_of(h) for h in g.half_edges}
    _contract_unchecked(rot, vertex_of, e)
    return PlaneMap(rot)


def contract_subgraph(g: PlaneMap, vs: Iterable[int]) -> PlaneMap:
    """Contract the connected vertex set ``vs`` to a single vertex.

    Edges inside ``vs`` that are not on a BFS spanning tree of ``g[vs]`` are
    deleted first (they would become loops), then the tree is contracted.
    """
    vs = set(vs)
    if not vs:
        raise ValueError("empty vertex set")
    start = min(vs)
    tree = []
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for h in g.rotation[x]:
            y = g.vertex_of(h ^ 1)
            if y in vs and y not in seen:
                seen.add(y)
                tree.append(h >> 1)
                queue.append(y)
    if seen != vs:
        raise ValueError(f"vertex set {sorted(vs)} does not induce a connected subgraph")
    tree_set = set(tree)
    internal = {
        h >> 1
        for x in vs
        for h in g.rotation[x]
        if g.vertex_of(h ^ 1) in vs and (h >> 1) not in tree_set
    }
    g2 = delete_edges(g, internal) if internal else g
    rot = dict(g2.rotation)
    vertex_of = {h: g2.vertex_of(h) for h in g2.half_edges}
    for e in tree:
        _contract_unchecked(rot, vertex_of, e)
    return PlaneMap(rot)


# ---------------------------------------------------------------------------
# Blocks and cuts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    edges: frozenset[int]
    vertices: frozenset[int]
    is_c5: bool


class BlockDecomposition(NamedTuple):
    blocks: list[Block]
    cut_vertices: frozenset[int]


def _block_is_c5(g: PlaneMap, edges: frozenset[int], vertices: frozenset[int]) -> bool:
    if len(edges) != 5 or len(vertices) != 5:
        return False
    deg = dict.fromkeys(vertices, 0)
    for e in edges:
        for x in g.endpoints(e):
            deg[x] += 1
    return all(d == 2 for d in deg.values())


def blocks(g: PlaneMap) -> BlockDecomposition:
    """Biconnected components (by edge) and cut vertices of ``g``.

    Parallel edges count as distinct, so a bundle of two or more parallel
    edges is 2-connected on its own.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    found: list[frozenset[int]] = []
    cuts: set[int] = set()
    for root in g.vertices:
        if root in disc or g.degree(root) == 0:
            continue
        disc[root] = low[root] = 0
        counter = 1
        root_children = 0
        edge_stack: list[int] = []
        # frame: (vertex, edge used to enter, iterator over rotation)
        stack = [(root, -1, iter(g.rotation[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for h in it:
                e = h >> 1
                if e == via:
                    continue
                w = g.vertex_of(h ^ 1)
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append(e)
                    stack.append((w, e, iter(g.rotation[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                break
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = []
                while True:
                    x = edge_stack.pop()
                    comp.append(x)
                    if x == via:
                        break
                found.append(frozenset(comp))
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    out = []
    for es in sorted(found, key=min):
        vs = frozenset(x for e in es for x in g.endpoints(e))
        out.append(Block(es, vs, _block_is_c5(g, es, vs)))
    return BlockDecomposition(out, frozenset(cuts))


class EdgeCut(NamedTuple):
    is_cut: bool
    sides: tuple[frozenset[int], frozenset[int]] | None
    nontrivial: bool


def is_nontrivial_edge_cut(g: PlaneMap, e1: int, e2: int) -> EdgeCut:
    """Whether removing ``e1`` and ``e2`` splits ``g`` into two sides of size >= 2.

    The first side is the component containing the lowest vertex id.
    """
    if e1 == e2:
        raise ValueError("the two edges must differ")
    skip = {e1, e2}
    start = g.vertices[0]
    side = _bfs(
        start,
        lambda v: [g.vertex_of(h ^ 1) for h in g.rotation[v] if (h >> 1) not in skip],
    )
    if len(side) == g.num_vertices:
        return EdgeCut(False, None, False)
    rest = set(g.vertices) - side
    probe = min(rest)
    other = _bfs(
        probe,
        lambda v: [g.vertex_of(h ^ 1) for h in g.rotation[v] if (h >> 1) not in skip],
    )
    if len(side) + len(other) != g.num_vertices:
        # three or more pieces: not a 2-edge cut of a connected map
        return EdgeCut(False, None, False)
    d1, d2 = frozenset(side), frozenset(other)
    return EdgeCut(True, (d1, d2), len(d1) >= 2 and len(d2) >= 2)


def split_at_cut_vertex(g: PlaneMap, v: int):
    """Split ``g`` at cut vertex ``v`` into ``C1'`` and ``C2'``.

    ``C1'`` is spanned by ``v`` and a component of ``g - v`` whose edge-ends
    form a contiguous arc of the rotation at ``v``; ``C2'`` holds the rest.
    Also returns the two face-adjacent cross pairs ``((e1, e1'), (e2, e2'))``
    at the ends of the arc, with ``e1, e2`` in ``C1'``.
    """
    rot = g.rotation[v]
    comp_of: dict[int, int] = {}
    comps: list[set[int]] = []
    for w in sorted(set(g.neighbors(v))):
        if w in comp_of:
            continue
        comp = _bfs(w, lambda x: [y for y in g.neighbors(x) if y != v])
        for x in comp:
            comp_of[x] = len(comps)
        comps.append(comp)
    labels = [comp_of[g.vertex_of(h ^ 1)] for h in rot]
    if len(comps) < 2:
        raise ValueError(f"vertex {v} is not a cut vertex")
    n = len(rot)
    for c in range(len(comps)):
        starts = [i for i in range(n) if labels[i] == c and labels[i - 1] != c]
        if len(starts) != 1:
            continue
        i = starts[0]
        j = i
        while labels[(j + 1) % n] == c:
            j = (j + 1) % n
        c1 = induced_submap(g, comps[c] | {v})
        c2 = induced_submap(g, set(g.vertices) - comps[c])
        pair1 = (rot[i] >> 1, rot[i - 1] >> 1)
        pair2 = (rot[j] >> 1, rot[(j + 1) % n] >> 1)
        return c1, c2, (pair1, pair2)
    raise PlaneMapError(f"no component is contiguous at vertex {v}; rotation is not planar")
