"""Command line entry point.

    motus list
    motus show NAME
    motus run SCENARIO [--out PATH] [--plot PATH] [--precision N]
    motus galileo fall -p t=3
    motus collide scan -p lo=1/2 -p hi=3/2 -p step=1/200 --plot scan.svg

``SCENARIO`` is a file path or the name of a built-in scenario.  Exit
status: 0 on success, 2 on a configuration or plotting error, 3 when a
model operation rejects its input.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import List, Optional

from . import catalog, plotting, runner
from .errors import ConfigError, ModelError, PlotError
from .scenario import MODULE_ALIASES, MODULES, Scenario, load_scenario, parse_sweep

log = logging.getLogger("motus")

EXIT_CONFIG = 2
EXIT_MODEL = 3


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def execute(scenario: Scenario, out: Optional[str], plot_path: Optional[str], kind: Optional[str]) -> int:
    table = runner.run(scenario)
    csv_text = table.to_csv()
    out = out or scenario.output
    if out:
        _write(out, csv_text)
        log.info("wrote %d rows to %s", len(table.rows), out)
    else:
        sys.stdout.write(csv_text)
    plot_path = plot_path or scenario.plot
    if plot_path:
        _write(plot_path, plotting.plot(table, kind))
        log.info("wrote figure to %s", plot_path)
    return 0


def _resolve(source: str) -> Scenario:
    if os.path.exists(source):
        return load_scenario(source)
    return catalog.get_scenario(source).scenario()


def _output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="CSV output path (default: stdout)")
    p.add_argument("--plot", help="SVG output path")
    p.add_argument("--kind", choices=plotting.KINDS, help="override the plot kind")
    p.add_argument("--precision", type=int, help="fractional digits for decimal cells")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="motus", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list built-in scenarios")
    show = sub.add_parser("show", help="print a built-in scenario")
    show.add_argument("name")
    run = sub.add_parser("run", help="run a scenario file or built-in scenario")
    run.add_argument("scenario")
    _output_args(run)

    for module in MODULES + tuple(MODULE_ALIASES):
        target = MODULE_ALIASES.get(module, module)
        ops = sorted(name for mod, name in runner.OPERATIONS if mod == target)
        mp = sub.add_parser(module, help=f"run one {target} operation")
        mp.add_argument("operation", choices=ops)
        mp.add_argument("-p", "--param", action="append", default=[], metavar="KEY=VALUE")
        mp.add_argument("--sweep", nargs=4, metavar=("KEY", "LO", "HI", "STEP"))
        _output_args(mp)
    return parser


def _direct_scenario(args: argparse.Namespace) -> Scenario:
    params = {}
    for item in args.param:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"expected KEY=VALUE, got {item!r}")
        params[key.strip()] = value.strip()
    return Scenario(
        module=args.command,
        operation=args.operation,
        parameters=params,
        sweep=parse_sweep(" ".join(args.sweep)) if args.sweep else None,
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.command == "list":
            for entry in catalog.list_scenarios():
                tag = f" [{entry.tag}]" if entry.tag else ""
                print(f"{entry.name}\t{entry.description}{tag}")
            return 0
        if args.command == "show":
            sys.stdout.write(catalog.get_scenario(args.name).text)
            return 0
        scenario = _resolve(args.scenario) if args.command == "run" else _direct_scenario(args)
        if args.precision is not None:
            if args.precision < 1:
                raise ConfigError("precision must be a positive integer")
            scenario.precision = args.precision
        return execute(scenario, args.out, args.plot, args.kind)
    except (ConfigError, PlotError) as exc:
        print(f"motus: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ModelError as exc:
        print(f"motus: {exc}", file=sys.stderr)
        return EXIT_MODEL


if __name__ == "__main__":
    sys.exit(main())
