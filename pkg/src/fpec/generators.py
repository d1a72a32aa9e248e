"""Fixture families and a seeded random generator of 2-edge-connected maps.

The random family starts from a cycle and applies embedding-preserving
moves, each of which keeps the map connected, loopless and bridgeless:

* chord: join two non-adjacent vertices on one face, splitting it;
* subdivide: put a new degree-2 vertex on an edge;
* parallel: add an edge parallel to an existing one, forming a digon face;
* pendant: glue a new cycle at a corner (creates a cut vertex; length-5
  pendants give C5-blocks).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from fpec.planemap import PlaneMap

FAMILIES = ("cycle", "wheel", "theta", "two-pentagons", "c5-chain", "random")

DEFAULT_MOVE_WEIGHTS = {"chord": 0.4, "subdivide": 0.25, "parallel": 0.15, "pendant": 0.2}


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int | None = None
    seed: int = 0
    weights: dict = field(default_factory=lambda: dict(DEFAULT_MOVE_WEIGHTS))


class _Builder:
    def __init__(self):
        self.rot: list[list[int]] = []
        self.ne = 0

    def vertex(self) -> int:
        self.rot.append([])
        return len(self.rot) - 1

    def edge(self, u: int, v: int) -> int:
        e = self.ne
        self.ne += 1
        self.rot[u].append(2 * e)
        self.rot[v].append(2 * e + 1)
        return e

    def build(self) -> PlaneMap:
        return PlaneMap.from_rotation_lists(self.rot)


def cycle(n: int) -> PlaneMap:
    """``C_n``; ``n = 2`` is the digon. Edge ``i`` joins vertex ``i`` to ``i+1``."""
    if n < 2:
        raise ValueError("cycle needs n >= 2")
    b = _Builder()
    for _ in range(n):
        b.vertex()
    for i in range(n):
        b.edge(i, (i + 1) % n)
    return b.build()


def wheel(n: int) -> PlaneMap:
    """Hub 0, rim 1..n; spokes are edges ``0..n-1``, rim edges ``n..2n-1``."""
    if n < 3:
        raise ValueError("wheel needs n >= 3")
    rot = [[2 * i for i in range(n)]]
    for i in range(n):
        spoke_end = 2 * i + 1
        from_prev = 2 * (n + (i - 1) % n) + 1
        to_next = 2 * (n + i)
        rot.append([spoke_end, from_prev, to_next])
    return PlaneMap.from_rotation_lists(rot)


def theta(n: int = 3) -> PlaneMap:
    """Two vertices joined by ``n`` parallel edges."""
    if n < 2:
        raise ValueError("theta needs n >= 2")
    return PlaneMap.from_rotation_lists([[2 * i for i in range(n)], [2 * i + 1 for i in reversed(range(n))]])


def cycle_chain(lengths) -> PlaneMap:
    """Cycles glued in a chain, consecutive ones sharing one vertex.

    Each new cycle is glued into the longest face, so the cycles sit side by
    side rather than nested.
    """
    lengths = list(lengths)
    if not lengths or min(lengths) < 2:
        raise ValueError("cycle lengths must be >= 2")
    m = _MutableMap(cycle(lengths[0]))
    attach = lengths[0] // 2
    for length in lengths[1:]:
        g = m.freeze()
        outer = max(g.faces, key=lambda f: len(f))
        t = next(h ^ 1 for h in outer.half_edges if g.vertex_of(h ^ 1) == attach)
        ring = m.pendant_cycle(t, length)
        attach = m.vertex_of[2 * ring[length // 2]]
    return m.freeze()


def two_pentagons() -> PlaneMap:
    return cycle_chain([5, 5])


def c5_chain(n: int) -> PlaneMap:
    if n < 1:
        raise ValueError("c5-chain needs n >= 1")
    return cycle_chain([5] * n)


# ---------------------------------------------------------------------------
# random maps
# ---------------------------------------------------------------------------


class _MutableMap:
    """Rotation lists under construction; every move keeps planarity."""

    def __init__(self, g: PlaneMap):
        self.rot = {v: list(hs) for v, hs in g.rotation.items()}
        self.vertex_of = {h: g.vertex_of(h) for h in g.half_edges}
        self.ne = g.num_edges

    def freeze(self) -> PlaneMap:
        return PlaneMap(self.rot)

    def _insert_after(self, v, anchor, h):
        hs = self.rot[v]
        hs.insert(hs.index(anchor) + 1, h)
        self.vertex_of[h] = v

    def new_vertex(self) -> int:
        v = max(self.rot) + 1
        self.rot[v] = []
        return v

    def chord(self, t1: int, t2: int) -> int:
        """Edge from the corner after ``t1`` to the corner after ``t2``.

        ``t1`` and ``t2`` must be half-edges whose twins lie on one face, so
        the corners ``(t1, next(t1))`` and ``(t2, next(t2))`` share that face.
        """
        e = self.ne
        self.ne += 1
        self._insert_after(self.vertex_of[t1], t1, 2 * e)
        self._insert_after(self.vertex_of[t2], t2, 2 * e + 1)
        return e

    def subdivide(self, e: int) -> int:
        h = 2 * e + 1
        v = self.vertex_of[h]
        w = self.new_vertex()
        e2 = self.ne
        self.ne += 1
        hs = self.rot[v]
        hs[hs.index(h)] = 2 * e2 + 1
        self.vertex_of[2 * e2 + 1] = v
        self.rot[w] = [h, 2 * e2]
        self.vertex_of[h] = w
        self.vertex_of[2 * e2] = w
        return e2

    def pendant_cycle(self, t: int, length: int) -> list[int]:
        v = self.vertex_of[t]
        ring = [v] + [self.new_vertex() for _ in range(length - 1)]
        new = []
        anchor = t
        for i in range(length):
            a, b = ring[i], ring[(i + 1) % length]
            e = self.ne
            self.ne += 1
            new.append(e)
            if a == v:
                self._insert_after(v, anchor, 2 * e)
                anchor = 2 * e
            else:
                self.rot[a].append(2 * e)
                self.vertex_of[2 * e] = a
            if b == v:
                self._insert_after(v, anchor, 2 * e + 1)
            else:
                self.rot[b].append(2 * e + 1)
                self.vertex_of[2 * e + 1] = b
        return new


def random_map(n_edges: int, seed: int = 0, weights: dict | None = None) -> PlaneMap:
    """Random connected, loopless, bridgeless plane multigraph with ``n_edges`` edges."""
    if n_edges < 2:
        raise ValueError("random map needs n >= 2")
    rng = random.Random(seed)
    weights = dict(DEFAULT_MOVE_WEIGHTS if weights is None else weights)
    start = min(n_edges, rng.randint(3, 6)) if n_edges >= 3 else 2
    m = _MutableMap(cycle(start))
    moves = sorted(weights)
    while m.ne < n_edges:
        room = n_edges - m.ne
        g = m.freeze()
        move = rng.choices(moves, weights=[weights[k] for k in moves])[0]
        if move == "pendant" and room >= 3:
            length = rng.choice([l for l in (3, 4, 5, 5, 6) if l <= room])
            t = rng.choice(g.half_edges)
            m.pendant_cycle(t, length)
        elif move == "chord":
            faces = [f for f in g.faces if len({g.vertex_of(h) for h in f.half_edges}) >= 2]
            f = rng.choice(faces)
            # corners of f: the walk arrives along h and leaves along rot_next(twin(h))
            corners = [h ^ 1 for h in f.half_edges]
            t1, t2 = rng.sample(corners, 2)
            u, v = m.vertex_of[t1], m.vertex_of[t2]
            if u == v or v in g.neighbors(u):
                # parallel edges come only from the parallel move
                m.subdivide(rng.choice(g.edges))
            else:
                m.chord(t1, t2)
        elif move == "parallel":
            h = rng.choice(g.half_edges)
            # corner before h at its tail, corner after h at its head: a digon with edge h>>1
            m.chord(m.rot[m.vertex_of[h]][m.rot[m.vertex_of[h]].index(h) - 1], h ^ 1)
        else:
            m.subdivide(rng.choice(g.edges))
    return m.freeze()


def generate(spec: GenSpec) -> PlaneMap:
    fam, n = spec.family, spec.n
    if fam == "cycle":
        return cycle(5 if n is None else n)
    if fam == "wheel":
        return wheel(4 if n is None else n)
    if fam == "theta":
        return theta(3 if n is None else n)
    if fam == "two-pentagons":
        return two_pentagons()
    if fam == "c5-chain":
        return c5_chain(4 if n is None else n)
    if fam == "random":
        return random_map(30 if n is None else n, spec.seed, spec.weights)
    raise ValueError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")
