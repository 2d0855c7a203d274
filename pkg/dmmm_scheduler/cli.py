"""Command-line entry point: ``schedule``, ``compare``, ``monitor`` and ``pipeline``.

Exit codes: 0 success, 1 unreadable or malformed input, 2 validation failure,
3 scheduling failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from dmmm_scheduler.engine import SchedulingEngine
from dmmm_scheduler.errors import ScenarioParseError, SchedulingError, ValidationError
from dmmm_scheduler.monitoring.classify import load_rule
from dmmm_scheduler.monitoring.synthesis import PROFILES
from dmmm_scheduler.monitoring.usage_io import read_usage_csv
from dmmm_scheduler.scenario.serialization import load_scenario, read_document
from dmmm_scheduler.types.model import ALGORITHMS, RunManifest, SchedulerConfig
from dmmm_scheduler.types.options import EngineConfig, MonitorParams

logger = logging.getLogger(__name__)

DEMO_SCENARIO = Path(__file__).resolve().parent / "demo" / "scenario.json"
DEMO_LABEL = "bundled:demo/scenario.json"
DEFAULT_OUT_DIR = "out"
SEED_FROM_FLAG = object()

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_SCHEDULING = 3


def _algorithms(value: Optional[str]) -> Optional[Tuple[str, ...]]:
    if value is None:
        return None
    names = tuple(name.strip() for name in value.split(",") if name.strip())
    if not names:
        raise ValidationError("CONFIG ERROR: --algorithm needs at least one name")
    for name in names:
        SchedulerConfig(algorithm=name)
    return names


def _engine(args: argparse.Namespace) -> SchedulingEngine:
    config: EngineConfig = {"out_dir": args.out, "workers": args.workers, "seed": _seed(args)}
    optional = {
        "priority_first": args.priority_first or None,
        "peak_threshold": args.peak_threshold,
        "dormant_threshold": args.dormant_threshold,
        "customers": args.customers,
        "resources": args.resources,
        "horizon": args.horizon,
        "profile": args.profile,
    }
    config.update({key: value for key, value in optional.items() if value is not None})  # type: ignore[typeddict-item]
    if args.rule:
        config["rule"] = load_rule(args.rule)
    return SchedulingEngine(**config)


def _seed(args: argparse.Namespace) -> int:
    return args.synthesize if isinstance(args.synthesize, int) else args.seed


def _monitor_params(args: argparse.Namespace) -> MonitorParams:
    if args.usage:
        return {"records": read_usage_csv(args.usage)}
    return {}


def _manifest(command: str, args: argparse.Namespace, scenario_path: Optional[str],
              algorithms: Sequence[str], seed: Optional[int]) -> RunManifest:
    return RunManifest(
        command=command,
        scenario_path=scenario_path,
        algorithms=tuple(algorithms),
        seed=seed,
        out_dir=args.out,
        argv=tuple(args.argv),
    )


def _require_scenario(args: argparse.Namespace) -> str:
    if not args.scenario:
        raise ScenarioParseError(f"PARSE ERROR: {args.command} needs --scenario PATH")
    return args.scenario


def cmd_schedule(args: argparse.Namespace) -> int:
    scenario_path = _require_scenario(args)
    algorithms = _algorithms(args.algorithm)
    if algorithms is not None and len(algorithms) > 1:
        raise ValidationError("CONFIG ERROR: schedule runs a single algorithm; use compare for several")
    scenario = load_scenario(scenario_path)
    engine = _engine(args)
    params: Dict[str, Any] = {"scenario": scenario}
    if algorithms:
        params["algorithm"] = algorithms[0]
    if args.priority_first:
        params["priority_first"] = True
    result = engine.schedule(**params)
    engine.support.emit_manifest(_manifest("schedule", args, scenario_path, (result.algorithm,), None))
    print(f"{result.algorithm}: makespan {result.makespan} over {len(result.assignments)} task(s)")
    return EXIT_OK


def cmd_compare(args: argparse.Namespace) -> int:
    scenario_path = _require_scenario(args)
    algorithms = _algorithms(args.algorithm) or ALGORITHMS
    scenario = load_scenario(scenario_path)
    engine = _engine(args)
    rows = engine.compare(scenario=scenario, algorithms=algorithms, priority_first=args.priority_first)
    engine.support.emit_manifest(_manifest("compare", args, scenario_path, [row.algorithm for row in rows], None))
    for row in rows:
        print(f"{row.algorithm}: makespan {row.makespan}")
    return EXIT_OK


def cmd_monitor(args: argparse.Namespace) -> int:
    engine = _engine(args)
    result = engine.monitor(**_monitor_params(args))
    seed = engine.seed if result.synthesized else None
    engine.support.emit_manifest(_manifest("monitor", args, None, (), seed))
    priorities = sorted({user.priority for user in result.users}, reverse=True)
    print(f"classified {len(result.users)} customer(s) into priorities {priorities}")
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    scenario_path = args.scenario or str(DEMO_SCENARIO)
    document = read_document(scenario_path)
    engine = _engine(args)
    params: Dict[str, Any] = dict(_monitor_params(args), document=document)
    if args.priority_first:
        params["priority_first"] = True
    result = engine.pipeline(**params)
    seed = engine.seed if result.monitor.synthesized else None
    engine.support.emit_manifest(
        _manifest("pipeline", args, args.scenario or DEMO_LABEL, (result.schedule.algorithm,), seed))
    print(f"{result.schedule.algorithm}: makespan {result.schedule.makespan} "
          f"over {len(result.schedule.assignments)} task(s) for {len(result.monitor.users)} classified customer(s)")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "schedule": cmd_schedule,
    "compare": cmd_compare,
    "monitor": cmd_monitor,
    "pipeline": cmd_pipeline,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scenario", help="scenario document (JSON)")
    common.add_argument("--algorithm", help=f"comma-separated names from: {', '.join(ALGORITHMS)}")
    common.add_argument("--priority-first", action="store_true", help="serve higher-priority owners first")
    common.add_argument("--seed", type=int, default=1, help="seed for usage synthesis (default: 1)")
    common.add_argument("--out", default=DEFAULT_OUT_DIR, help=f"output directory (default: {DEFAULT_OUT_DIR})")
    common.add_argument("--peak-threshold", type=int, help="per-bucket usage at or above which a bucket peaks")
    common.add_argument("--dormant-threshold", type=int, help="per-bucket usage at or below which a bucket is dormant")
    common.add_argument("--customers", type=int, help="customers to synthesize")
    common.add_argument("--resources", type=int, help="resources to synthesize")
    common.add_argument("--horizon", type=int, help="buckets to synthesize")
    common.add_argument("--profile", choices=PROFILES, help="synthetic usage profile")
    common.add_argument("--rule", help="classification rule file (YAML or JSON)")
    common.add_argument("--workers", type=int, default=1, help="threads used by compare (default: 1)")
    common.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    source = common.add_mutually_exclusive_group()
    source.add_argument("--usage", help="usage CSV (customer_id,resource_id,bucket_start,amount)")
    source.add_argument("--synthesize", nargs="?", type=int, const=SEED_FROM_FLAG, metavar="SEED",
                        help="synthesize usage, optionally with an inline seed")

    parser = argparse.ArgumentParser(
        prog="dmmm-scheduler",
        description="Decision-matrix based max-min scheduling and usage monitoring.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("schedule", parents=[common], help="schedule a scenario with one algorithm")
    subparsers.add_parser("compare", parents=[common], help="compare algorithms on one scenario")
    subparsers.add_parser("monitor", parents=[common], help="report usage and classify customers")
    subparsers.add_parser("pipeline", parents=[common], help="monitor, classify, then schedule with DMMM")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return COMMANDS[args.command](args)
    except ScenarioParseError as exc:
        logger.error("%s", exc)
        return EXIT_PARSE
    except ValidationError as exc:
        logger.error("%s", exc)
        return EXIT_VALIDATION
    except SchedulingError as exc:
        logger.error("%s", exc)
        return EXIT_SCHEDULING
