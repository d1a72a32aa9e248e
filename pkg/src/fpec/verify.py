"""Checkers for every coloring notion, plus the exact facial parity index.

All parity counts go by walk occurrences: an edge met twice on one facial
walk counts twice. On bridgeless maps this is the same as counting edges.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from fpec.errors import InstanceTooLargeError, PartialColoringError
from fpec.partitions import restricted_growth_search
from fpec.planemap import (
    BundledMultigraph,
    PlaneMap,
    adjacent_face_pairs,
    blocks,
    face_adjacent_pairs,
)

MAX_CHI_FP_EDGES = 12


@dataclass
class CheckReport:
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "violations": self.violations}

    def __bool__(self):
        return self.passed


def _require_total(edges: Iterable[int], coloring: Mapping[int, object]):
    missing = [e for e in edges if e not in coloring]
    if missing:
        raise PartialColoringError(f"coloring misses edges {missing}")


def _proper_violations(g: PlaneMap, coloring, faces=None) -> list[dict]:
    out = []
    seen = set()
    for f in g.faces if faces is None else (g.faces[i] for i in faces):
        hs = f.half_edges
        for i, h in enumerate(hs):
            a, b = h >> 1, hs[(i + 1) % len(hs)] >> 1
            if a == b or coloring[a] != coloring[b]:
                continue
            key = (f.id, min(a, b), max(a, b))
            if key not in seen:
                seen.add(key)
                out.append(
                    {"kind": "face-adjacent", "face": f.id, "edges": [key[1], key[2]], "color": coloring[a]}
                )
    return out


def check_facially_proper(g: PlaneMap, coloring: Mapping[int, object]) -> CheckReport:
    _require_total(g.edges, coloring)
    return CheckReport(_proper_violations(g, coloring))


def check_fpe(g: PlaneMap, coloring: Mapping[int, object]) -> CheckReport:
    """Facially proper, and every color occurs an odd number of times or never on each face."""
    _require_total(g.edges, coloring)
    out = _proper_violations(g, coloring)
    for f in g.faces:
        counts = Counter(coloring[h >> 1] for h in f.half_edges)
        for color, k in sorted(counts.items(), key=lambda kv: str(kv[0])):
            if k % 2 == 0:
                out.append({"kind": "face-parity", "face": f.id, "color": color, "count": k})
    return CheckReport(out)


def check_quasi_facially_odd(
    g: PlaneMap,
    coloring: Mapping[int, int],
    c5_blocks: Iterable[Iterable[int]] | None = None,
    *,
    faces: Iterable[int] | None = None,
    max_colors: int | None = 4,
) -> CheckReport:
    """Check the quasi-facially-odd conditions.

    ``coloring`` may be a plain edge map or anything with ``colors`` and
    ``c5_blocks`` attributes. When ``c5_blocks`` is omitted every C5-block
    of ``g`` is granted the relaxed condition. ``faces`` restricts the
    properness and pair-parity checks to pairs touching those faces.
    """
    if hasattr(coloring, "colors"):
        if c5_blocks is None:
            c5_blocks = coloring.c5_blocks
        coloring = coloring.colors
    _require_total(g.edges, coloring)
    actual = {b.edges for b in blocks(g).blocks if b.is_c5}
    if c5_blocks is None:
        c5 = sorted(actual, key=min)
    else:
        c5 = [frozenset(b) for b in c5_blocks]
        for b in c5:
            if b not in actual:
                raise ValueError(f"edge set {sorted(b)} is not a C5-block")
    waived = set().union(*c5) if c5 else set()
    fset = None if faces is None else set(faces)

    out = _proper_violations(g, coloring, None if fset is None else sorted(fset))
    for (f1, f2), shared in sorted(adjacent_face_pairs(g).items()):
        if fset is not None and f1 not in fset and f2 not in fset:
            continue
        counts = Counter(coloring[e] for e in shared if e not in waived)
        for color, k in sorted(counts.items()):
            if k % 2 == 0:
                out.append(
                    {"kind": "pair-parity", "faces": [f1, f2], "color": color, "count": k}
                )
    if fset is None:
        adjacent = None
        for b in c5:
            cols = Counter(coloring[e] for e in b)
            if len(cols) != 4:
                out.append({"kind": "c5-block", "edges": sorted(b), "colors": len(cols)})
                continue
            (twice,) = [c for c, k in cols.items() if k == 2]
            x, y = sorted(e for e in b if coloring[e] == twice)
            if adjacent is None:
                adjacent = face_adjacent_pairs(g)
            if (x, y) in adjacent:
                out.append({"kind": "c5-block", "edges": sorted(b), "repeated": [x, y]})
        if max_colors is not None:
            palette = set(coloring[e] for e in g.edges)
            if len(palette) > max_colors:
                out.append({"kind": "palette", "size": len(palette), "limit": max_colors})
    return CheckReport(out)


def check_odd(m: BundledMultigraph, coloring: Mapping[int, object]) -> CheckReport:
    """Every color class has odd or zero degree at every vertex."""
    _require_total(m.edges, coloring)
    deg: Counter = Counter()
    for e, (u, v) in m.edges.items():
        c = coloring[e]
        deg[(u, c)] += 1
        deg[(v, c)] += 1
    out = [
        {"kind": "vertex-parity", "vertex": v, "color": c, "degree": k}
        for (v, c), k in sorted(deg.items(), key=lambda kv: repr(kv[0]))
        if k % 2 == 0
    ]
    return CheckReport(out)


def exact_chi_fp(g: PlaneMap, max_blocks: int | None = None) -> int | None:
    """Minimum number of colors in an FPE-coloring of ``g``.

    Exhaustive over set partitions of the edges (at most 12). A block is
    abandoned as soon as it holds two face-adjacent edges; the parity of a
    face is tested once all of its edges are placed. Returns ``None`` if no
    coloring with at most ``max_blocks`` colors exists.
    """
    if g.num_edges > MAX_CHI_FP_EDGES:
        raise InstanceTooLargeError(
            f"exact_chi_fp is limited to {MAX_CHI_FP_EDGES} edges, got {g.num_edges}"
        )
    order = []
    for f in g.faces:
        for h in f.half_edges:
            if (h >> 1) not in order:
                order.append(h >> 1)
    pos = {e: i for i, e in enumerate(order)}
    n = len(order)
    if n == 0:
        return 0
    earlier = [[] for _ in range(n)]
    for a, b in face_adjacent_pairs(g):
        i, j = sorted((pos[a], pos[b]))
        earlier[j].append(i)
    checks_at = [[] for _ in range(n)]
    for f in g.faces:
        idx = [pos[h >> 1] for h in f.half_edges]

        def parity_ok(assign, idx=idx):
            return all(k % 2 for k in Counter(assign[i] for i in idx).values())

        checks_at[max(idx)].append(parity_ok)

    def allowed(i, b, assign):
        return all(assign[j] != b for j in earlier[i])

    limit = n if max_blocks is None else min(max_blocks, n)
    for k in range(1, limit + 1):
        if restricted_growth_search(n, k, allowed, checks_at) is not None:
            return k
    return None
