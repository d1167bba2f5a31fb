"""Command-line front end.

Exit codes: 0 solved, 2 parse or precondition failure, 3 result produced
with overridden ``m``/``c`` (sound but possibly incomplete), 4 oracle
budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from .diagnostics import linkage_report
from .digraph import format_graph, parse_graph
from .errors import BudgetExceeded, InvalidInputError, PreconditionError
from .generate import random_dominant_candidate, random_instance, random_tournament
from .oracle import OracleBudget, oracle_key_linkages
from .rails import format_instance, parse_instance
from .solver import SolverParams, key_qualities
from .tracker import build_tracker, dump_tracker

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_HEURISTIC = 3
EXIT_BUDGET = 4

BUNDLE_SEPARATOR = "---"

SUBCOMMANDS = ("solve", "decide", "bounded", "oracle", "diagnose", "gen", "dump-tracker")


@dataclass
class RunConfig:
    subcommand: str
    graph: str | None = None
    instance: str | None = None
    m: int | None = None
    c: int | None = None
    bounds: tuple | None = None
    seed: int = 0
    n: int = 6
    k: int = 1
    d: int = 1
    kind: str = "tournament"
    budget_vertices: int = 9
    budget_seconds: float | None = None
    witness: bool = False
    no_check: bool = False
    out: str | None = None

    @property
    def heuristic(self) -> bool:
        return self.m is not None or self.c is not None


def _fmt_vec(x) -> str:
    return " ".join(str(a) for a in x)


def _fmt_linkage(L) -> list[str]:
    return [f"  path {i + 1}: " + " ".join(str(v) for v in P) for i, P in enumerate(L)]


def _load(config: RunConfig):
    if not config.graph:
        raise InvalidInputError("--graph is required")
    if not config.instance:
        raise InvalidInputError("--instance is required")
    G = parse_graph(Path(config.graph).read_text(), source=config.graph)
    return parse_instance(Path(config.instance).read_text(), G, source=config.instance)


def split_bundle(text: str) -> tuple[str, str]:
    """Split ``gen`` stdout into graph text and instance text."""
    lines = text.splitlines(keepends=True)
    for i, line in enumerate(lines):
        if line.strip() == BUNDLE_SEPARATOR:
            return "".join(lines[:i]), "".join(lines[i + 1:])
    raise InvalidInputError("no '---' separator between graph and instance")


def _gen(config: RunConfig) -> tuple[int, str]:
    rng = random.Random(config.seed)
    if config.kind == "tournament":
        G = random_tournament(config.n, rng)
    elif config.kind == "dominant":
        G = random_dominant_candidate(config.n, config.d, rng)
    else:
        raise InvalidInputError(f"unknown --kind {config.kind!r}")
    inst = random_instance(G, config.k, rng, config.d)
    graph_text, inst_text = format_graph(G), format_instance(inst, config.bounds)
    if config.out:
        Path(config.out + ".graph").write_text(graph_text)
        Path(config.out + ".inst").write_text(inst_text)
        return EXIT_OK, f"{config.out}.graph\n{config.out}.inst\n"
    return EXIT_OK, graph_text + BUNDLE_SEPARATOR + "\n" + inst_text


def _solve(config: RunConfig, inst, file_bounds) -> tuple[int, str]:
    params = SolverParams.for_instance(inst, m=config.m, c=config.c,
                                      emit_witness=config.witness,
                                      check_dominance=not config.no_check)
    res = key_qualities(inst, params)
    lines = []
    if res.heuristic:
        lines.append(f"# heuristic m={params.m} c={params.c}")
    elif res.sound_only:
        lines.append("# sound-only: dominance check waived")
    if config.subcommand == "solve":
        lines.extend(_fmt_vec(x) for x in res.key_qualities)
        if config.witness:
            for x, L in res.witnesses.items():
                lines.append(f"witness {_fmt_vec(x)}")
                lines.extend(_fmt_linkage(L))
    elif config.subcommand == "decide":
        lines.append("yes" if res.solvable else "no")
    else:
        bounds = config.bounds or file_bounds
        if bounds is None:
            raise InvalidInputError("bounded needs --bounds or a 'bounds' line in the instance")
        if len(bounds) != inst.k or any(x < 1 for x in bounds):
            raise InvalidInputError(f"need {inst.k} positive bounds, got {list(bounds)}")
        lines.append("yes" if res.key_qualities.covers(bounds) else "no")
    return (EXIT_HEURISTIC if res.heuristic else EXIT_OK), "\n".join(lines) + "\n"


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one subcommand; returns ``(exit code, stdout text)``."""
    if config.subcommand == "gen":
        return _gen(config)
    inst, file_bounds = _load(config)
    budget = OracleBudget(max_vertices=config.budget_vertices, time_limit=config.budget_seconds)
    if config.subcommand in ("solve", "decide", "bounded"):
        return _solve(config, inst, file_bounds)
    if config.subcommand == "oracle":
        evidence = oracle_key_linkages(inst, budget)
        lines = []
        for x in sorted(evidence):
            lines.append(_fmt_vec(x))
        if config.witness:
            for x in sorted(evidence):
                lines.append(f"witness {_fmt_vec(x)}")
                lines.extend(_fmt_linkage(evidence[x][0]))
        return EXIT_OK, "\n".join(lines) + "\n"
    if config.subcommand == "diagnose":
        evidence = oracle_key_linkages(inst, budget)
        blocks = [linkage_report(inst, L, budget) for x in sorted(evidence) for L in evidence[x]]
        return EXIT_OK, "\n\n".join(blocks) + "\n" if blocks else "# no linkage\n"
    if config.subcommand == "dump-tracker":
        params = SolverParams.for_instance(inst, m=config.m, c=config.c)
        text = dump_tracker(build_tracker(inst, params.m, params.c))
        return (EXIT_HEURISTIC if params.heuristic else EXIT_OK), text
    raise InvalidInputError(f"unknown subcommand {config.subcommand!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kvdp", description="k vertex-disjoint paths on path-dominant digraphs")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--out", help="write output here instead of stdout (gen: file prefix)")
        if name == "gen":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--n", type=int, default=6)
            p.add_argument("--k", type=int, default=1)
            p.add_argument("--d", type=int, default=1)
            p.add_argument("--kind", choices=("tournament", "dominant"), default="tournament")
            p.add_argument("--bounds", type=int, nargs="+")
            continue
        p.add_argument("--graph", required=True)
        p.add_argument("--instance", required=True)
        if name in ("solve", "decide", "bounded", "dump-tracker"):
            p.add_argument("--m", type=int)
            p.add_argument("--c", type=int)
        if name in ("solve", "decide", "bounded"):
            p.add_argument("--no-check", action="store_true",
                           help="skip the d-path-dominance check (output is sound only)")
        if name == "bounded":
            p.add_argument("--bounds", type=int, nargs="+")
        if name in ("solve", "oracle"):
            p.add_argument("--witness", action="store_true")
        if name in ("oracle", "diagnose"):
            p.add_argument("--budget-vertices", type=int, default=9)
            p.add_argument("--budget-seconds", type=float)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    fields = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__ and v is not None}
    if "bounds" in fields:
        fields["bounds"] = tuple(fields["bounds"])
    config = RunConfig(**fields)
    try:
        code, text = run(config)
    except (InvalidInputError, PreconditionError) as exc:
        print(f"kvdp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"kvdp: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"kvdp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if config.out and config.subcommand != "gen":
        Path(config.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
