"""FPE-coloring with at most 16 colors for 2-edge-connected plane maps.

The pipeline takes a quasi-facially-odd 4-coloring ``phi``. For each color
``c`` the faces are joined by the duals of the ``c``-colored edges; every
component of that graph gets an odd coloring ``omega`` with at most four
colors, and edge ``e`` finally carries the pair ``(phi(e), omega(e*))``.
The degree of a face in an ``omega`` class is the number of edges of that
pair on the face, so odd degrees give odd face counts.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

from fpec.errors import BoundViolation, InternalCheckError
from fpec.oddcolor import OddColoring, odd_color_component
from fpec.planemap import BundledMultigraph, PlaneMap, dual_restricted, require_bridgeless
from fpec.qfo import PALETTE, QfoColoring, qfo_color
from fpec.verify import check_fpe

log = logging.getLogger(__name__)

MAX_PALETTE = 16
ODD_COLORS_PER_COMPONENT = 4


@dataclass(frozen=True)
class DualComponent:
    color: int
    graph: BundledMultigraph
    coloring: OddColoring


@dataclass(frozen=True)
class FpeResult:
    colors: dict[int, int]
    qfo: QfoColoring
    components: tuple[DualComponent, ...]
    compaction: dict[tuple[int, int], int]
    structural_violations: list[dict] = field(default_factory=list)

    @property
    def palette_size(self) -> int:
        return len(self.compaction)

    K = palette_size


def compact_palette(pairs: Iterable[tuple[int, int]]) -> dict[tuple[int, int], int]:
    """Label the distinct pairs ``1..K`` in lexicographic order."""
    return {p: i for i, p in enumerate(sorted(set(pairs)), start=1)}


def bundle_violations(g: PlaneMap, q: QfoColoring, c: int, m: BundledMultigraph) -> list[dict]:
    """Even bundles of a dual restriction, other than 2-bundles inside one C5-block."""
    out = []
    for (f1, f2), es in sorted(m.bundles().items()):
        if len(es) % 2:
            continue
        if len(es) == 2 and any(set(es) <= b for b in q.c5_blocks):
            continue
        out.append({"color": c, "faces": [f1, f2], "edges": sorted(es)})
    return out


def fpe_color(g: PlaneMap, *, search_budget: int | None = 2_000_000) -> FpeResult:
    """FPE-coloring of a connected bridgeless map with at most 16 colors.

    Raises
    ------
    NotBridgelessError, NotConnectedError
        If ``g`` is not 2-edge-connected.
    BoundViolation
        If a dual restriction breaks the bundle condition or one of its
        components needs more than four odd colors.
    """
    g.require_connected()
    require_bridgeless(g)
    q = qfo_color(g)
    pairs: dict[int, tuple[int, int]] = {}
    comps: list[DualComponent] = []
    violations: list[dict] = []
    for c in PALETTE:
        m = dual_restricted(g, q.colors, c).without_isolated()
        if not m.edges:
            continue
        violations += bundle_violations(g, q, c, m)
        for comp in m.components():
            omega = odd_color_component(comp, search_budget=search_budget)
            comps.append(DualComponent(c, comp, omega))
            if omega.palette_size > ODD_COLORS_PER_COMPONENT:
                raise BoundViolation(
                    f"dual component of color {c} on faces {sorted(comp.vertices)} "
                    f"needs {omega.palette_size} odd colors"
                )
            for e, i in omega.colors.items():
                pairs[e] = (c, i)
    if violations:
        raise BoundViolation(f"even bundles in dual restrictions: {violations}")
    compaction = compact_palette(pairs.values())
    colors = {e: compaction[pairs[e]] for e in sorted(pairs)}
    report = check_fpe(g, colors)
    if not report.passed:
        raise InternalCheckError(f"FPE check failed: {report.violations[:3]}")
    if len(compaction) > MAX_PALETTE:
        raise BoundViolation(f"{len(compaction)} colors exceed {MAX_PALETTE}")
    return FpeResult(colors, q, tuple(comps), compaction, violations)
