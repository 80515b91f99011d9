"""Command line: ``wmge {solve,baseline,check,oracle,graph,render}``.

Exit codes: 0 success / valid, 1 invalid embedding or infeasible, 2 input
error, 3 oracle search space exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .constraint_graph import build_constraint_graph, export_dot
from .embedder import brass_baseline, solve_min_perimeter
from .geometry import (
    GridEmbedding,
    check_unit_length,
    check_wmge,
    embedding_to_json,
    metrics,
    parse_embedding,
)
from .oracle import (
    DEFAULT_CEILING,
    Objective,
    SearchSpaceExceeded,
    min_objective_bruteforce,
    min_perimeter_by_placement,
    unit_length_feasible,
)
from .pathpair import InstanceError, PathPair, derive, parse_instance
from .render import RenderStyle, render_svg

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3

_OBJECTIVES = {
    "perimeter": Objective.PERIMETER,
    "max-edge": Objective.MAX_EDGE,
    "total-length": Objective.TOTAL_LENGTH,
    "unit": Objective.UNIT_FEASIBLE,
}


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    output: str | None = None
    embedding: str | None = None
    strict_planarity: bool = False
    forbid_cross_path_crossings: bool = False
    max_side: int | None = None
    ceiling: int = DEFAULT_CEILING
    objective: str = "perimeter"
    cell: int = 40
    baseline: bool = False

    def __post_init__(self) -> None:
        if self.max_side is not None and self.max_side < 1:
            raise InstanceError("--max-side must be positive")
        if self.ceiling < 1 or self.cell < 1:
            raise InstanceError("--ceiling and --cell must be positive")


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InstanceError(f"cannot read {path}: {exc.strerror}") from None


def _write(cfg: RunConfig, text: str) -> None:
    if cfg.output is None or cfg.output == "-":
        sys.stdout.write(text)
    else:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(doc: dict) -> str:
    return json.dumps(doc) + "\n"


def _instance(cfg: RunConfig) -> PathPair:
    return parse_instance(_read(cfg.input))


def cmd_solve(cfg: RunConfig) -> int:
    p = _instance(cfg)
    res = solve_min_perimeter(p)
    extra = {
        "extents": {"d_x": list(res.extents.d_x), "d_y": list(res.extents.d_y)},
        "cover_size": res.cover_size,
        "objectives": {
            "max_sq_edge": res.metrics.max_sq_edge,
            "total_length": res.metrics.total_length,
        },
    }
    _write(cfg, _dump(embedding_to_json(p, res.embedding, extra)))
    return EXIT_OK


def cmd_baseline(cfg: RunConfig) -> int:
    p = _instance(cfg)
    _write(cfg, _dump(embedding_to_json(p, brass_baseline(p))))
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    p = _instance(cfg)
    if cfg.embedding is None:
        raise InstanceError("check needs an embedding document (-e/--embedding)")
    emb = parse_embedding(_read(cfg.embedding))
    if emb.n != p.n:
        raise InstanceError(f"embedding has {emb.n} points, instance has {p.n} vertices")
    report = check_wmge(
        p,
        emb,
        strict_planarity=cfg.strict_planarity,
        forbid_cross_path_crossings=cfg.forbid_cross_path_crossings,
    )
    doc = report.to_json()
    doc["metrics"] = metrics(p, emb).to_json()
    doc["unit_length"] = check_unit_length(p, emb)
    _write(cfg, _dump(doc))
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_oracle(cfg: RunConfig) -> int:
    p = _instance(cfg)
    objective = _OBJECTIVES[cfg.objective]
    if objective is Objective.PERIMETER:
        res = min_perimeter_by_placement(p, cfg.max_side, ceiling=cfg.ceiling)
    elif objective is Objective.UNIT_FEASIBLE:
        res = unit_length_feasible(p, cfg.max_side or 3, ceiling=cfg.ceiling)
    else:
        res = min_objective_bruteforce(p, objective, cfg.max_side or 3, ceiling=cfg.ceiling)
    _write(cfg, _dump(res.to_json()))
    return EXIT_OK if res.optimum not in (None, False) else EXIT_INVALID


def cmd_graph(cfg: RunConfig) -> int:
    p = _instance(cfg)
    _write(cfg, export_dot(build_constraint_graph(p, derive(p))))
    return EXIT_OK


def cmd_render(cfg: RunConfig) -> int:
    p = _instance(cfg)
    emb: GridEmbedding
    if cfg.embedding is not None:
        emb = parse_embedding(_read(cfg.embedding))
        if emb.n != p.n:
            raise InstanceError(f"embedding has {emb.n} points, instance has {p.n} vertices")
    elif cfg.baseline:
        emb = brass_baseline(p)
    else:
        emb = solve_min_perimeter(p).embedding
    _write(cfg, render_svg(p, emb, RenderStyle(cell=cfg.cell)))
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "baseline": cmd_baseline,
    "check": cmd_check,
    "oracle": cmd_oracle,
    "graph": cmd_graph,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wmge",
        description="Minimum-perimeter simultaneous grid embeddings of two monotone paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "solve": "minimum-perimeter embedding (JSON)",
        "baseline": "rank-placement embedding on the n x n grid (JSON)",
        "check": "validate an embedding; exit 0 iff valid",
        "oracle": "brute-force optimum for small instances",
        "graph": "constraint graph as Graphviz DOT",
        "render": "SVG drawing of an embedding",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, help=text)
        sp.add_argument("-i", "--input", help="instance file (default: stdin)")
        sp.add_argument("-o", "--output", help="output file (default: stdout)")
        if name in ("check", "render"):
            sp.add_argument("-e", "--embedding", help="embedding JSON document")
        if name == "check":
            sp.add_argument("--strict-planarity", action="store_true")
            sp.add_argument("--forbid-cross-path-crossings", action="store_true")
        if name == "oracle":
            sp.add_argument("--objective", choices=sorted(_OBJECTIVES), default="perimeter")
            sp.add_argument("--max-side", type=int)
            sp.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
        if name == "render":
            sp.add_argument("--cell", type=int, default=40, help="grid cell size in pixels")
            sp.add_argument("--baseline", action="store_true", help="draw the rank baseline")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
        return COMMANDS[cfg.command](cfg)
    except InstanceError as exc:
        print(f"wmge {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SearchSpaceExceeded as exc:
        print(f"wmge {args.command}: search space exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
