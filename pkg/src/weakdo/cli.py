"""Command-line front end: argument parsing, dispatch, exit codes.

Exit codes: 0 success, 1 a declared check or verdict failed, 2 usage, parse
or I/O problems. All randomness flows from --seed (default 0, echoed in the
report header); no computation starts before arguments validate.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from importlib import resources

from .errors import ScenarioFormatError, WeakdoError
from .experiments import (
    FULL_PARENT_BOUNDS,
    Report,
    scenario_do_switch,
    scenario_raincoat,
    verify_premises_sweep,
    write_report,
)
from .induction import POLICY_KINDS
from .task import TaskBounds

DEMOS = ("raincoat", "do-switch")


@dataclass
class InvocationConfig:
    command: str
    out_dir: str
    fmt: str
    quiet: bool
    seed: int = 0
    threads: int = 1
    states: int = 3
    vocab: int = 3
    child_bounds: TaskBounds | None = None
    parent_bounds: TaskBounds | str | None = None
    policies: tuple[str, ...] = ()
    samples: int | None = None
    target: str = ""


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _bounds(text: str) -> TaskBounds:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return TaskBounds(_positive(parts[0]), _positive(parts[1]))


def _parent_bounds(text: str):
    if text == FULL_PARENT_BOUNDS:
        return FULL_PARENT_BOUNDS
    return _bounds(text)


def _policies(text: str) -> tuple[str, ...]:
    kinds = tuple(p.strip() for p in text.split(",") if p.strip())
    for kind in kinds:
        if kind not in POLICY_KINDS:
            raise argparse.ArgumentTypeError(
                f"unknown policy {kind!r}; choose from {', '.join(POLICY_KINDS)}"
            )
    if not kinds:
        raise argparse.ArgumentTypeError("at least one policy is required")
    return kinds


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weakdo",
        description="Weakness-maximising induction with emergent-intervention demos.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default="reports", help="output directory for report files")
        p.add_argument("--format", choices=("csv", "json"), default="csv",
                       help="row file format beside the text report")
        p.add_argument("--seed", type=int, default=0, help="seed for all randomness")
        p.add_argument("--quiet", action="store_true", help="suppress progress output")

    vp = sub.add_parser("verify-premises",
                        help="check weakest-policy dominance over all small worlds")
    vp.add_argument("--states", type=_positive, default=3, help="max states per world")
    vp.add_argument("--vocab", type=_positive, default=3, help="max vocabulary size")
    vp.add_argument("--child-bounds", type=_bounds, default=TaskBounds(1, 1),
                    metavar="A,B", help="child task bounds (default 1,1)")
    vp.add_argument("--parent-bounds", type=_parent_bounds, default=TaskBounds(2, 2),
                    metavar="C,D", help="parent task bounds (default 2,2; 'full' covers "
                    "the whole task space of each world)")
    vp.add_argument("--policies", type=_policies,
                    default=("weakest", "strongest", "lexicographic", "random"),
                    help="comma-separated policy list")
    vp.add_argument("--samples", type=_positive, default=None,
                    help="sample this many parents per task instead of enumerating")
    vp.add_argument("--threads", type=_positive, default=os.cpu_count() or 1,
                    help="worker processes for the world sweep")
    common(vp)

    demo = sub.add_parser("demo", help="run a canned scenario")
    demo.add_argument("target", choices=DEMOS)
    common(demo)

    run = sub.add_parser("run", help="run a scenario file")
    run.add_argument("scenario", help="path to a scenario JSON file, or the name "
                     "of a bundled one (e.g. w1_induction)")
    common(run)
    return parser


def parse_args(argv) -> InvocationConfig:
    """Validate arguments into a config; argparse exits with code 2 on errors."""
    args = _build_parser().parse_args(argv)
    config = InvocationConfig(
        command=args.command, out_dir=args.out, fmt=args.format,
        quiet=args.quiet, seed=args.seed,
    )
    if args.command == "verify-premises":
        config.states = args.states
        config.vocab = args.vocab
        config.child_bounds = args.child_bounds
        config.parent_bounds = args.parent_bounds
        config.policies = tuple(args.policies)
        config.samples = args.samples
        config.threads = args.threads
    elif args.command == "demo":
        config.target = args.target
    else:
        config.target = args.scenario
    return config


def _resolve_scenario(target: str) -> str:
    if os.path.exists(target):
        return target
    bundled = resources.files("weakdo").joinpath("scenarios", f"{target}.json")
    if bundled.is_file():
        return str(bundled)
    raise ScenarioFormatError(f"scenario {target!r} not found (no such file or bundled name)")


def _emit(report: Report, config: InvocationConfig, basename: str) -> int:
    paths = write_report(report, config.out_dir, basename, config.fmt)
    if not config.quiet:
        for path in paths:
            print(path)
        print(f"verdict: {'PASS' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def dispatch(config: InvocationConfig) -> int:
    """Run the configured command and map its outcome to an exit code."""
    try:
        if config.command == "verify-premises":
            premise = verify_premises_sweep(
                config.states, config.vocab, config.child_bounds, config.parent_bounds,
                config.policies, samples=config.samples, seed=config.seed,
                threads=config.threads,
            )
            return _emit(premise.to_report(config.seed), config, "verify_premises")
        if config.command == "demo":
            if config.target == "raincoat":
                return _emit(scenario_raincoat(), config, "raincoat")
            return _emit(scenario_do_switch(seed=config.seed), config, "do_switch")
        from .scenario import run_scenario

        report = run_scenario(_resolve_scenario(config.target))
        basename = os.path.splitext(os.path.basename(config.target))[0]
        return _emit(report, config, f"scenario_{basename}")
    except ScenarioFormatError as exc:
        print(f"weakdo: scenario error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"weakdo: i/o error: {exc}", file=sys.stderr)
        return 2
    except WeakdoError as exc:
        print(f"weakdo: error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> None:
    sys.exit(dispatch(parse_args(sys.argv[1:] if argv is None else argv)))
