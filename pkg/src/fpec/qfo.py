"""Quasi-facially-odd edge coloring with at most four colors.

A coloring is quasi-facially-odd when it is facially proper, every pair of
adjacent faces shares an odd number (or none) of edges of each color, and
the only exceptions are C5-blocks, which use four colors with the repeated
color on two edges that are not face-adjacent.

The recursion works on connected bridgeless maps:

1. the digon, C5 and C9 are colored directly;
2. at a cut vertex, both sides are colored and one palette is permuted so
   the two face-adjacent pairs across the vertex differ;
3. if no two faces share two edges, any facially proper coloring will do;
4. otherwise take faces ``f, f'`` sharing ``k >= 2`` edges. If two
   consecutive shared edges form a cut with at least two vertices per side,
   contract each side in turn, color both, and align their palettes on the
   cut edges (with a special extension when one side contracts to C5).
   Else the shared edges form a path of degree-2 vertices; contract part of
   it, color, and extend by the rule for ``k``.

Every extension is checked on the faces it touches; when the direct rule
fails, all colorings of the (at most four) new edges are tried.
"""

from __future__ import annotations

import itertools
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from fpec.errors import InternalCheckError, SearchBudgetExceeded
from fpec.planemap import (
    PlaneMap,
    adjacent_face_pairs,
    blocks,
    common_edges_in_walk_order,
    contract_edge,
    contract_subgraph,
    is_nontrivial_edge_cut,
    medial_adjacency_graph,
    require_bridgeless,
    split_at_cut_vertex,
)
from fpec.verify import check_quasi_facially_odd

PALETTE = (1, 2, 3, 4)

_BASE_CYCLES = {
    2: (1, 2),
    5: (1, 2, 1, 3, 4),
    9: (1, 2, 3, 1, 2, 3, 1, 2, 3),
}


@dataclass(frozen=True)
class QfoColoring:
    colors: dict[int, int]
    c5_blocks: tuple[frozenset[int], ...]

    @property
    def palette(self) -> set[int]:
        return set(self.colors.values())


def permute_palette(coloring: Mapping[int, int], perm) -> dict[int, int]:
    """Relabel colors; ``perm`` is a mapping or the images of ``1..4`` in order."""
    if not isinstance(perm, Mapping):
        perm = dict(zip(PALETTE, perm))
    return {e: perm.get(c, c) for e, c in coloring.items()}


def _palette_perms() -> Iterator[dict[int, int]]:
    for images in itertools.permutations(PALETTE):
        yield dict(zip(PALETTE, images))


@contextmanager
def _recursion_headroom(limit: int):
    old = sys.getrecursionlimit()
    if limit > old:
        sys.setrecursionlimit(limit)
    try:
        yield
    finally:
        sys.setrecursionlimit(old)


# ---------------------------------------------------------------------------
# facially proper coloring (vertex coloring of the medial graph)
# ---------------------------------------------------------------------------


def facially_proper_four_color(g: PlaneMap, *, node_budget: int = 500_000) -> dict[int, int]:
    """Proper 4-coloring of the medial adjacency graph, lifted to edges.

    Backtracking in saturation-degree order; colors are introduced in
    increasing order to skip symmetric branches.
    """
    adj = medial_adjacency_graph(g)
    order_key = {v: (len(adj[v]), -v) for v in adj}
    color: dict[int, int] = {}
    uncolored = set(adj)
    nodes = 0

    def pick():
        best, best_key = None, None
        for v in uncolored:
            sat = len({color[w] for w in adj[v] if w in color})
            key = (sat, order_key[v])
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def rec(top: int) -> bool:
        nonlocal nodes
        if not uncolored:
            return True
        v = pick()
        used = {color[w] for w in adj[v] if w in color}
        uncolored.discard(v)
        for c in range(1, min(top + 1, len(PALETTE)) + 1):
            if c in used:
                continue
            nodes += 1
            if nodes > node_budget:
                raise SearchBudgetExceeded(f"facial 4-coloring exceeded {node_budget} nodes")
            color[v] = c
            if rec(max(top, c)):
                return True
            del color[v]
        uncolored.add(v)
        return False

    with _recursion_headroom(len(adj) + 1000):
        if not rec(0):
            raise InternalCheckError("medial graph has no 4-coloring")
    return dict(sorted(color.items()))


# ---------------------------------------------------------------------------
# the recursion
# ---------------------------------------------------------------------------


def qfo_color(g: PlaneMap, *, node_budget: int = 500_000) -> QfoColoring:
    """Quasi-facially-odd coloring of a connected bridgeless map with colors 1..4.

    Raises
    ------
    NotBridgelessError
        If ``g`` has a bridge.
    InternalCheckError
        If the result fails the checker (never expected).
    """
    require_bridgeless(g)
    with _recursion_headroom(8 * g.num_edges + 2000):
        colors = _Recursion(node_budget).color(g)
    colors = dict(sorted(colors.items()))
    c5 = tuple(b.edges for b in blocks(g).blocks if b.is_c5)
    report = check_quasi_facially_odd(g, colors, c5)
    if not report.passed:
        raise InternalCheckError(f"quasi-facially-odd check failed: {report.violations[:3]}")
    return QfoColoring(colors, c5)


def _cycle_order(g: PlaneMap) -> list[int] | None:
    if g.num_edges < 2 or any(g.degree(v) != 2 for v in g.vertices) or not g.is_connected():
        return None
    return [h >> 1 for h in g.faces[0].half_edges]


class _Recursion:
    def __init__(self, node_budget: int):
        self.node_budget = node_budget

    def color(self, g: PlaneMap) -> dict[int, int]:
        if g.num_edges == 0:
            return {}
        cyc = _cycle_order(g)
        if cyc is not None and len(cyc) in _BASE_CYCLES:
            return dict(zip(cyc, _BASE_CYCLES[len(cyc)]))
        dec = blocks(g)
        if dec.cut_vertices:
            return self._cut_vertex(g, min(dec.cut_vertices))
        multi = sorted(p for p, es in adjacent_face_pairs(g).items() if len(es) >= 2)
        if not multi:
            return facially_proper_four_color(g, node_budget=self.node_budget)
        f, f2 = multi[0]
        common = common_edges_in_walk_order(g, f, f2)
        for a, b in zip(common, common[1:]):
            cut = is_nontrivial_edge_cut(g, a, b)
            if cut.nontrivial:
                return self._edge_cut(g, a, b, cut.sides)
        return self._thread(g, common)

    def _sub(self, g: PlaneMap, h: PlaneMap) -> dict[int, int]:
        if h.num_edges >= g.num_edges:
            raise InternalCheckError("recursion did not shrink the map")
        return self.color(h)

    # -- cut vertex ----------------------------------------------------------

    def _cut_vertex(self, g: PlaneMap, v: int) -> dict[int, int]:
        c1, c2, ((e1, e1p), (e2, e2p)) = split_at_cut_vertex(g, v)
        r1 = self._sub(g, c1)
        r2 = self._sub(g, c2)
        around = {g.face_of(h) for h in g.rotation[v]} | {g.face_of(h ^ 1) for h in g.rotation[v]}
        for p in _palette_perms():
            if r1[e1] == p[r2[e1p]] or r1[e2] == p[r2[e2p]]:
                continue
            merged = {**permute_palette(r2, p), **r1}
            if _locally_ok(g, merged, around):
                return merged
        raise InternalCheckError(f"no palette permutation merges the sides at vertex {v}")

    # -- nontrivial 2-edge cut ---------------------------------------------

    def _edge_cut(self, g: PlaneMap, a: int, b: int, sides) -> dict[int, int]:
        d1, d2 = sides
        h1 = contract_subgraph(g, d2)
        h2 = contract_subgraph(g, d1)
        c5_1 = _is_c5(h1)
        if c5_1 or _is_c5(h2):
            thread_side, rest = (d1, h2) if c5_1 else (d2, h1)
            return self._c5_side(g, a, b, thread_side, rest)
        r1 = self._sub(g, h1)
        r2 = self._sub(g, h2)
        touched = _faces_of(g, (a, b))
        for p in _palette_perms():
            if p[r2[a]] != r1[a] or p[r2[b]] != r1[b]:
                continue
            merged = {**permute_palette(r2, p), **r1}
            if _locally_ok(g, merged, touched):
                return merged
        raise InternalCheckError(f"sides of the cut {{{a}, {b}}} cannot be merged")

    def _c5_side(self, g: PlaneMap, a: int, b: int, thread_side, rest: PlaneMap) -> dict[int, int]:
        # ``thread_side`` is a path of four degree-2 vertices between a and b
        reduced = contract_edge(rest, b)
        rho = self._sub(g, reduced)
        start = next(x for x in g.endpoints(a) if x in thread_side)
        thread = _walk_thread(g, a, start, b)
        c1, c2, c3 = thread
        base = rho[a]
        others = [c for c in PALETTE if c != base]
        candidates = []
        for x, y in itertools.permutations(others, 2):
            candidates.append({b: base, c2: base, c1: x, c3: y})
        for x in others:
            candidates.append({b: base, c2: base, c1: x, c3: x})
        return _extend(g, rho, [b, c1, c2, c3], candidates)

    # -- shared edges form a path of degree-2 vertices -------------------------

    def _thread(self, g: PlaneMap, e: Sequence[int]) -> dict[int, int]:
        k = len(e)
        for x, y in zip(e, e[1:]):
            shared = set(g.endpoints(x)) & set(g.endpoints(y))
            if not any(g.degree(w) == 2 for w in shared):
                raise InternalCheckError(f"shared edges {x}, {y} do not meet at a degree-2 vertex")
        if k <= 3:
            contract = [e[1]]
        elif k == 4:
            contract = [e[1], e[2]]
        else:
            contract = list(e[1:5])
        h = g
        for x in contract:
            h = contract_edge(h, x)
        rho = self._sub(g, h)
        if k <= 3:
            forbidden = {rho[x] for x in _face_neighbors(g, e[1]) if x in rho}
            candidates = [{e[1]: c} for c in PALETTE if c not in forbidden]
        elif k == 4:
            free = [c for c in PALETTE if c not in (rho[e[0]], rho[e[3]])]
            candidates = [{e[1]: x, e[2]: y} for x, y in itertools.permutations(free, 2)]
        elif k == 5:
            base = rho[e[0]]
            others = [c for c in PALETTE if c != base]
            candidates = [
                {e[2]: base, e[4]: base, e[1]: x, e[3]: y}
                for x, y in itertools.permutations(others, 2)
            ]
        else:
            x, y = rho[e[0]], rho[e[5]]
            candidates = [{e[2]: x, e[4]: x, e[1]: y, e[3]: y}]
        return _extend(g, rho, contract, candidates)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _is_c5(g: PlaneMap) -> bool:
    cyc = _cycle_order(g)
    return cyc is not None and len(cyc) == 5


def _faces_of(g: PlaneMap, edges: Iterable[int]) -> set[int]:
    out = set()
    for e in edges:
        out.update(g.edge_faces(e))
    return out


def _face_neighbors(g: PlaneMap, e: int) -> set[int]:
    out = set()
    for h in (2 * e, 2 * e + 1):
        out.add(g.face_successor(h) >> 1)
        out.add(g.rot_prev(h) >> 1)  # edge arriving just before h on its face
    out.discard(e)
    return out


def _walk_thread(g: PlaneMap, a: int, start: int, b: int) -> list[int]:
    """Edges of the degree-2 path that leaves ``a`` at ``start`` and ends at ``b``."""
    out = []
    prev, x = a, start
    while True:
        (nxt,) = [h >> 1 for h in g.rotation[x] if (h >> 1) != prev]
        if nxt == b:
            return out
        out.append(nxt)
        u, v = g.endpoints(nxt)
        prev, x = nxt, (v if u == x else u)


def _locally_ok(g: PlaneMap, colors: Mapping[int, int], faces: Iterable[int]) -> bool:
    return check_quasi_facially_odd(g, colors, faces=faces, max_colors=None).passed


def _extend(g: PlaneMap, rho: Mapping[int, int], new: Sequence[int], candidates) -> dict[int, int]:
    """First assignment of the ``new`` edges that passes the local check."""
    touched = _faces_of(g, new)
    base = {e: c for e, c in rho.items() if g.has_edge(e)}
    for cand in candidates:
        colors = {**base, **cand}
        if _locally_ok(g, colors, touched):
            return colors
    for combo in itertools.product(PALETTE, repeat=len(new)):
        colors = {**base, **dict(zip(new, combo))}
        if _locally_ok(g, colors, touched):
            return colors
    raise InternalCheckError(f"no coloring of edges {list(new)} extends the recursive coloring")
