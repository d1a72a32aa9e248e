"""``fpec`` command line: generate maps, color them, check and inspect colorings.

Exit codes: 0 ok, 1 check failed, 2 parse error, 3 precondition failed,
4 proven bound violated.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from fpec.errors import (
    BoundViolation,
    FpecError,
    InternalCheckError,
    PartialColoringError,
    PlaneMapError,
)
from fpec.fpe import FpeResult, fpe_color
from fpec.generators import DEFAULT_MOVE_WEIGHTS, FAMILIES, GenSpec, generate, random_map
from fpec.oddcolor import exact_odd_chromatic_index
from fpec.planemap import BundledMultigraph, PlaneMap, blocks, bridges, dumps, parse
from fpec.verify import check_fpe, check_odd, check_quasi_facially_odd, exact_chi_fp

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BOUND = 0, 1, 2, 3, 4


class UsageError(Exception):
    """Bad inputs that are not a parse failure of the map itself."""


# ---------------------------------------------------------------------------
# I/O helpers
# ---------------------------------------------------------------------------


def _read_map(path: str) -> PlaneMap:
    try:
        text = Path(path).read_text()
    except OSError as ex:
        raise PlaneMapError(f"cannot read {path}: {ex.strerror}") from None
    return parse(text)


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _colored_pairs(colors: dict) -> list[dict]:
    return [{"edge": e, "color": c} for e, c in sorted(colors.items())]


def load_coloring(path: str) -> tuple[dict[int, int], list[list[int]] | None]:
    """Edge colors, plus C5-blocks if the file records them.

    Accepts a ``color`` result file, ``{"colors": {"<edge>": c}}`` or
    ``{"colors": [{"edge": e, "color": c}, ...]}``.
    """
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as ex:
        raise PlaneMapError(f"cannot read coloring {path}: {ex}") from None
    if not isinstance(data, dict):
        raise PlaneMapError("coloring file must hold a JSON object")
    blocks_ = data.get("c5_blocks", data.get("trace", {}).get("c5_blocks"))
    if "edges" in data:
        return {int(d["id"]): int(d["color"]) for d in data["edges"]}, blocks_
    colors = data.get("colors")
    if isinstance(colors, dict):
        return {int(e): int(c) for e, c in colors.items()}, blocks_
    if isinstance(colors, list):
        return {int(d["edge"]): int(d["color"]) for d in colors}, blocks_
    raise PlaneMapError("coloring file has neither 'edges' nor 'colors'")


def abstract_multigraph(g: PlaneMap) -> BundledMultigraph:
    return BundledMultigraph.from_edges(g.edge_list(), g.vertices)


def result_to_dict(g: PlaneMap, r: FpeResult, trace: bool = False) -> dict:
    out = {
        "palette_size": r.palette_size,
        "edges": [
            {"id": e, "endpoints": list(g.endpoints(e)), "color": r.colors[e]} for e in g.edges
        ],
        "faces": [{"id": f.id, "walk": list(f.edges)} for f in g.faces],
    }
    if trace:
        per_color: dict[int, int] = {}
        duals = []
        for d in r.components:
            idx = per_color.get(d.color, 0)
            per_color[d.color] = idx + 1
            duals.append(
                {
                    "color": d.color,
                    "component": idx,
                    "faces": sorted(d.graph.vertices),
                    "route": d.coloring.route,
                    "odd_palette_size": d.coloring.palette_size,
                    "odd_colors": _colored_pairs(d.coloring.colors),
                }
            )
        out["trace"] = {
            "qfo": _colored_pairs(r.qfo.colors),
            "c5_blocks": [sorted(b) for b in r.qfo.c5_blocks],
            "duals": duals,
            "compaction": [{"pair": list(p), "label": k} for p, k in sorted(r.compaction.items())],
            "structural_violations": r.structural_violations,
        }
    return out


def stats_dict(g: PlaneMap) -> dict:
    dec = blocks(g)
    return {
        "vertices": g.num_vertices,
        "edges": g.num_edges,
        "faces": g.num_faces,
        "connected": g.is_connected(),
        "bridges": bridges(g),
        "blocks": len(dec.blocks),
        "cut_vertices": sorted(dec.cut_vertices),
        "c5_blocks": [sorted(b.edges) for b in dec.blocks if b.is_c5],
        "face_lengths": [len(f) for f in g.faces],
        "max_degree": max((g.degree(v) for v in g.vertices), default=0),
        "parallel_edges": _parallel_count(g),
    }


def _parallel_count(g: PlaneMap) -> int:
    return sum(len(es) - 1 for es in abstract_multigraph(g).bundles().values())


def to_dot(g: PlaneMap, colors: dict[int, int] | None = None) -> str:
    lines = ["graph fpec {", "  node [shape=circle];"]
    for v in g.vertices:
        lines.append(f"  {v};")
    for e in g.edges:
        u, v = g.endpoints(e)
        f1, f2 = g.edge_faces(e)
        attrs = [f'label="e{e}"', f'faces="{f1},{f2}"']
        if colors is not None:
            attrs.append(f'color="/set312/{(colors[e] - 1) % 12 + 1}"')
            attrs.append(f'xlabel="{colors[e]}"')
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    for f in g.faces:
        walk = " ".join(str(e) for e in f.edges)
        lines.append(f"  // face {f.id}: {walk}")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    weights = {k: getattr(args, k) for k in DEFAULT_MOVE_WEIGHTS}
    g = generate(GenSpec(args.family, args.n, args.seed, weights))
    _write(dumps(g), args.out)
    return EXIT_OK


def cmd_color(args) -> int:
    g = _read_map(args.inp)
    r = fpe_color(g)
    _write(_to_json(result_to_dict(g, r, args.trace)), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _read_map(args.inp)
    colors, c5 = load_coloring(args.coloring)
    if args.mode == "fpe":
        report = check_fpe(g, colors)
    elif args.mode == "qfo":
        report = check_quasi_facially_odd(g, colors, c5)
    else:
        report = check_odd(abstract_multigraph(g), colors)
    _write(_to_json(report.to_dict()), None)
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_chi(args) -> int:
    g = _read_map(args.inp)
    if args.mode == "fpe":
        g.require_connected()
        value = exact_chi_fp(g)
    else:
        value = exact_odd_chromatic_index(abstract_multigraph(g))
    print(value)
    return EXIT_OK


def cmd_stats(args) -> int:
    _write(_to_json(stats_dict(_read_map(args.inp))), None)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = _read_map(args.inp)
    colors = None
    if args.coloring:
        colors, _ = load_coloring(args.coloring)
        missing = [e for e in g.edges if e not in colors]
        if missing:
            raise PartialColoringError(f"coloring misses edges {missing}")
    _write(to_dot(g, colors), args.out)
    return EXIT_OK


def run_trial(index: int, seed: int, min_edges: int, max_edges: int) -> dict:
    n = min_edges + (seed + index) % (max_edges - min_edges + 1)
    g = random_map(n, seed + index)
    r = fpe_color(g)
    ok = check_fpe(g, r.colors).passed
    return {"trial": index, "seed": seed + index, "edges": n, "palette_size": r.palette_size, "check": ok}


def cmd_suite(args) -> int:
    if args.min_edges < 2 or args.max_edges < args.min_edges:
        raise UsageError("need 2 <= --min-edges <= --max-edges")
    worst = EXIT_OK
    for i in range(args.trials):
        try:
            row = run_trial(i, args.seed, args.min_edges, args.max_edges)
            if not row["check"] or row["palette_size"] > 16:
                worst = max(worst, EXIT_CHECK)
        except FpecError as ex:
            row = {"trial": i, "seed": args.seed + i, "error": type(ex).__name__, "message": str(ex)}
            worst = max(worst, _exit_code(ex))
        print(json.dumps(row))
    return worst


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _exit_code(ex: BaseException) -> int:
    if isinstance(ex, BoundViolation):
        return EXIT_BOUND
    if isinstance(ex, InternalCheckError):
        return EXIT_CHECK
    if isinstance(ex, PlaneMapError):
        return EXIT_PARSE
    return EXIT_PRECONDITION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fpec", description="Facial parity edge coloring of plane maps.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="write a fixture or random map in PMAP format")
    s.add_argument("--family", required=True, choices=FAMILIES)
    s.add_argument("--n", type=int, default=None, help="size parameter (edges for random)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", default=None)
    for move, w in DEFAULT_MOVE_WEIGHTS.items():
        s.add_argument(f"--{move}", type=float, default=w, help=f"weight of the {move} move (random)")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("color", help="FPE-color a map and write the JSON result")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--out", default=None)
    s.add_argument("--trace", action="store_true", help="include QFO and dual colorings")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("check", help="check a coloring")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--coloring", required=True)
    s.add_argument("--mode", choices=("fpe", "qfo", "odd"), default="fpe")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("chi", help="exact facial parity or odd chromatic index")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--mode", choices=("fpe", "odd"), default="fpe")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("stats", help="counts, blocks and face lengths")
    s.add_argument("--in", dest="inp", required=True)
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("export-dot", help="Graphviz DOT with face annotations")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--coloring", default=None)
    s.add_argument("--out", default=None)
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("suite", help="color a batch of seeded random maps")
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--min-edges", type=int, default=10)
    s.add_argument("--max-edges", type=int, default=60)
    s.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (FpecError, UsageError, ValueError) as ex:
        code = _exit_code(ex)
        print(f"fpec: {type(ex).__name__}: {ex}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
