"""Batch command-line front-end.

Every verification in the library is exposed as a subcommand emitting a JSON
(or CSV) report on stdout. Exit codes: 0 success, 1 verification failure
(the report carries the witness), 2 invalid input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover - version dependent
    import tomli as tomllib

from . import acceptance
from .braid import BraidWord, braid_eq, normal_form, strand_delete
from .braided import DEFAULT_CELL_BUDGET, PartialBraid, closure_complex, truncated_fiber
from .cm import cm_check, poset_cm_check, quillen_fiber_check
from .delta import DeltaComplex
from .errors import BudgetExceededError, DomainError
from .graphs import (
    FAMILY_NAMES,
    MultiGraph,
    builtin_family,
    complete_bipartite,
    complete_graph,
    connectivity_bound,
    graph_complex,
)
from .homology import reduced_homology
from .morse import HeightFunction, bb_verify
from .pi1 import DEFAULT_TIETZE_BUDGET
from .poset import Poset

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class RunConfig:
    """Resolved run options: flags override the optional TOML config file."""

    budget: int = DEFAULT_CELL_BUDGET
    enum_bound: int = 2
    tietze_budget: int = DEFAULT_TIETZE_BUDGET
    fmt: str = "json"
    jobs: int = 1

    def __post_init__(self):
        if self.budget < 1 or self.tietze_budget < 1 or self.jobs < 1:
            raise DomainError("budgets and parallelism degree must be positive")
        if self.enum_bound < 0:
            raise DomainError("enumeration bound must be non-negative")
        if self.fmt not in ("json", "csv"):
            raise DomainError(f"unknown output format {self.fmt!r}")

    @classmethod
    def resolve(cls, args: argparse.Namespace) -> "RunConfig":
        values = {
            "budget": DEFAULT_CELL_BUDGET,
            "enum_bound": 2,
            "tietze_budget": DEFAULT_TIETZE_BUDGET,
            "fmt": "json",
            "jobs": 1,
        }
        if getattr(args, "config", None):
            with open(args.config, "rb") as fh:
                try:
                    data = tomllib.load(fh)
                except tomllib.TOMLDecodeError as exc:
                    raise DomainError(f"bad config file: {exc}") from exc
            renames = {"L": "enum_bound", "format": "fmt"}
            for key, value in data.items():
                field = renames.get(key, key)
                if field not in values:
                    raise DomainError(f"unknown config key {key!r}")
                values[field] = value
        for flag, field in (
            ("budget", "budget"),
            ("L", "enum_bound"),
            ("tietze_budget", "tietze_budget"),
            ("format", "fmt"),
            ("jobs", "jobs"),
        ):
            given = getattr(args, flag, None)
            if given is not None:
                values[field] = given
        return cls(**values)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")


def _homology_csv(betti: dict, torsion: dict) -> str:
    lines = ["degree,betti,torsion"]
    for i in sorted(betti):
        tors = ";".join(str(t) for t in torsion.get(i, ()))
        lines.append(f"{i},{betti[i]},{tors}")
    return "\n".join(lines) + "\n"


def _parse_ground(text: str) -> MultiGraph:
    m = re.fullmatch(r"K(\d+),(\d+)", text)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"K(\d+)", text)
    if m:
        return complete_graph(int(m.group(1)))
    return MultiGraph.from_json(_read_text(text))


# -- subcommand handlers -------------------------------------------------------


def _cmd_complex_build(args, cfg: RunConfig) -> int:
    family = builtin_family(_parse_ground(args.ground), args.family)
    X = graph_complex(family)
    if args.skeleton is not None:
        X = X.skeleton(args.skeleton)
    sys.stdout.write(X.to_json() + "\n")
    return EXIT_OK


def _cmd_complex_homology(args, cfg: RunConfig) -> int:
    X = DeltaComplex.from_json(_read_text(args.complex))
    rep = reduced_homology(X)
    if cfg.fmt == "csv":
        sys.stdout.write(_homology_csv(rep.betti, rep.torsion))
    else:
        _emit(rep.to_json_dict())
    return EXIT_OK


def _cmd_complex_cm(args, cfg: RunConfig) -> int:
    X = DeltaComplex.from_json(_read_text(args.complex))
    rep = cm_check(X, jobs=cfg.jobs)
    if cfg.fmt == "csv":
        sys.stdout.write(_homology_csv(rep.homology.betti, rep.homology.torsion))
    else:
        _emit(rep.to_json_dict())
    return EXIT_OK if rep.passed else EXIT_VERIFICATION_FAILED


def _cmd_poset_cm(args, cfg: RunConfig) -> int:
    P = Poset.from_json(_read_text(args.poset))
    rep = poset_cm_check(P)
    _emit(rep.to_json_dict())
    return EXIT_OK if rep.passed else EXIT_VERIFICATION_FAILED


def _cmd_chessboard_nu(args, cfg: RunConfig) -> int:
    bound = connectivity_bound(args.m, args.n)
    _emit({"nu": bound.nu, "cm_condition": bound.cm_condition})
    return EXIT_OK


def _cmd_braid_nf(args, cfg: RunConfig) -> int:
    nf = normal_form(BraidWord.parse(args.word, args.strands))
    _emit(
        {
            "strands": nf.strand_count,
            "infimum": nf.infimum,
            "canonical_length": nf.canonical_length,
            "factors": [list(f) for f in nf.factors],
            "printed": str(nf),
        }
    )
    return EXIT_OK


def _cmd_braid_eq(args, cfg: RunConfig) -> int:
    a = BraidWord.parse(args.left, args.strands)
    b = BraidWord.parse(args.right, args.strands)
    _emit(braid_eq(a, b))
    return EXIT_OK


def _cmd_braid_delete(args, cfg: RunConfig) -> int:
    w = strand_delete(BraidWord.parse(args.word, args.strands), args.strand)
    _emit({"strands": w.strand_count, "word": str(w)})
    return EXIT_OK


def _cmd_braided_closure(args, cfg: RunConfig) -> int:
    try:
        items = json.loads(_read_text(args.seeds))
        if not isinstance(items, list):
            raise DomainError("seed file must hold a JSON array of partial braids")
    except json.JSONDecodeError as exc:
        raise DomainError(f"bad seed file: {exc}") from exc
    seeds = [PartialBraid.from_json(json.dumps(item)) for item in items]
    X = closure_complex(seeds, budget=cfg.budget)
    sys.stdout.write(X.to_json() + "\n")
    return EXIT_OK


def _cmd_braided_fiber(args, cfg: RunConfig) -> int:
    m = re.fullmatch(r"(\d+)x(\d+)", args.board)
    if not m:
        raise DomainError(f"bad board {args.board!r}; expected like 2x4")
    try:
        tau = [(int(i), int(j)) for i, j in json.loads(args.tau)]
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise DomainError(f"bad matching {args.tau!r}; expected like [[1,1],[2,2]]") from exc
    L = args.fiber_L if args.fiber_L is not None else cfg.enum_bound
    result = truncated_fiber(int(m.group(1)), int(m.group(2)), tau, L, budget=cfg.budget)
    _emit({"L": result.L, "complex": json.loads(result.complex.to_json())})
    return EXIT_OK


def _cmd_quillen_check(args, cfg: RunConfig) -> int:
    try:
        data = json.loads(_read_text(args.map))
        P = Poset.from_json(json.dumps(data["domain"]))
        Q = Poset.from_json(json.dumps(data["codomain"]))
        mapping = {str(k): str(v) for k, v in data["map"].items()}
    except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
        raise DomainError(f"bad map file: {exc}") from exc
    rep = quillen_fiber_check(P, Q, mapping)
    _emit(rep.to_json_dict())
    return EXIT_OK if rep.verdict == "pass" else EXIT_VERIFICATION_FAILED


def _cmd_morse_verify(args, cfg: RunConfig) -> int:
    X = DeltaComplex.from_json(_read_text(args.complex))
    h = HeightFunction.from_json(_read_text(args.heights))
    rep = bb_verify(X, h, args.t, args.d)
    _emit(rep.to_json_dict())
    return EXIT_VERIFICATION_FAILED if rep.verdict == "fail" else EXIT_OK


def _cmd_suite_acceptance(args, cfg: RunConfig) -> int:
    numbers = None
    if args.only:
        numbers = sorted({int(x) for x in args.only.split(",")})
    results = acceptance.run_criteria(numbers)
    if cfg.fmt == "json":
        _emit(
            {
                "passed": all(r.passed for r in results),
                "criteria": [
                    {
                        "number": r.number,
                        "title": r.title,
                        "passed": r.passed,
                        "detail": r.detail,
                        "elapsed": round(r.elapsed, 2),
                    }
                    for r in results
                ],
            }
        )
    else:
        for r in results:
            sys.stdout.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFICATION_FAILED


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidboard",
        description="Chessboard, matching, and braided chessboard complexes: exact homology and Cohen-Macaulay verification.",
    )
    parser.add_argument("--config", help="TOML file with defaults (budget, L, tietze_budget, format, jobs)")
    parser.add_argument("--budget", type=int, help="cell/enumeration budget")
    parser.add_argument("--L", type=int, help="braid truncation bound")
    parser.add_argument("--tietze-budget", dest="tietze_budget", type=int, help="rewriting budget for presentation simplification")
    parser.add_argument("--format", choices=("json", "csv"), help="output format")
    parser.add_argument("--jobs", type=int, help="parallelism degree (results are identical for any value)")
    groups = parser.add_subparsers(dest="group", required=True)

    g_complex = groups.add_parser("complex", help="build and inspect complexes")
    sub = g_complex.add_subparsers(dest="command", required=True)
    p = sub.add_parser("build", help="graph-family complex as JSON")
    p.add_argument("--family", required=True, choices=sorted(FAMILY_NAMES))
    p.add_argument("--ground", required=True, help="Kn, Km,n, or a graph JSON file")
    p.add_argument("--skeleton", type=int, default=None)
    p.set_defaults(func=_cmd_complex_build)
    p = sub.add_parser("homology", help="reduced homology report")
    p.add_argument("complex", help="complex JSON file, or - for stdin")
    p.set_defaults(func=_cmd_complex_homology)
    p = sub.add_parser("cm-check", help="homological Cohen-Macaulay check")
    p.add_argument("complex", help="complex JSON file, or - for stdin")
    p.set_defaults(func=_cmd_complex_cm)

    g_poset = groups.add_parser("poset", help="poset checks")
    sub = g_poset.add_subparsers(dest="command", required=True)
    p = sub.add_parser("cm-check", help="Cohen-Macaulay check of a poset")
    p.add_argument("poset", help="poset JSON file, or - for stdin")
    p.set_defaults(func=_cmd_poset_cm)

    g_chess = groups.add_parser("chessboard", help="chessboard complex facts")
    sub = g_chess.add_subparsers(dest="command", required=True)
    p = sub.add_parser("nu", help="connectivity bound and CM condition")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_chessboard_nu)

    g_braid = groups.add_parser("braid", help="braid word operations")
    sub = g_braid.add_subparsers(dest="command", required=True)
    p = sub.add_parser("nf", help="left Garside normal form")
    p.add_argument("word", help="like \"s1 s2'\"")
    p.add_argument("--strands", type=int, required=True)
    p.set_defaults(func=_cmd_braid_nf)
    p = sub.add_parser("eq", help="decide equality of two words")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--strands", type=int, required=True)
    p.set_defaults(func=_cmd_braid_eq)
    p = sub.add_parser("delete-strand", help="delete one strand from a word")
    p.add_argument("word")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--strand", type=int, required=True, help="bottom position to remove")
    p.set_defaults(func=_cmd_braid_delete)

    g_braided = groups.add_parser("braided", help="partial-braid complexes")
    sub = g_braided.add_subparsers(dest="command", required=True)
    p = sub.add_parser("closure", help="face closure of seed partial braids")
    p.add_argument("--seeds", required=True, help="JSON array of partial braids, or - for stdin")
    p.set_defaults(func=_cmd_braided_closure)
    p = sub.add_parser("fiber", help="truncated fiber over a matching")
    p.add_argument("--tau", required=True, help="matching as JSON, like [[1,1],[2,2]]")
    p.add_argument(
        "--L", dest="fiber_L", type=int, default=None,
        help="truncation bound (defaults to the run config)",
    )
    p.add_argument("--board", required=True, help="board size like 2x4")
    p.set_defaults(func=_cmd_braided_fiber)

    g_quillen = groups.add_parser("quillen", help="poset fiber criterion")
    sub = g_quillen.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", help="run the fiber criterion on a poset map")
    p.add_argument("--map", required=True, help="JSON with domain, codomain, map")
    p.set_defaults(func=_cmd_quillen_check)

    g_morse = groups.add_parser("morse", help="height-function checks")
    sub = g_morse.add_subparsers(dest="command", required=True)
    p = sub.add_parser("verify", help="descending-link criterion at a threshold")
    p.add_argument("--complex", required=True)
    p.add_argument("--heights", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_morse_verify)

    g_suite = groups.add_parser("suite", help="bundled verification runs")
    sub = g_suite.add_subparsers(dest="command", required=True)
    p = sub.add_parser("acceptance", help="run the acceptance criteria")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.set_defaults(func=_cmd_suite_acceptance)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.resolve(args)
        return args.func(args, cfg)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DomainError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (OSError, json.JSONDecodeError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
