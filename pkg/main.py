import argparse
import sys

from dotenv import load_dotenv

load_dotenv()

from app.cli import add_run_arguments, build_spec, list_presets, metrics_table, outage_report
from app.cli import run as run_experiment
from app.config.config import AppConfig
from app.config.logging_config import configure_logging
from app.errors import SimulatorError


def cmd_run(args: argparse.Namespace) -> int:
	spec = build_spec(args, args.parser.error)
	configure_logging(spec.verbosity)
	return run_experiment(spec)


def cmd_list_presets(args: argparse.Namespace) -> int:
	print(list_presets())
	return 0


def cmd_metrics(args: argparse.Namespace) -> int:
	try:
		lines = metrics_table(args.pairs)
	except SimulatorError as exc:
		args.parser.error(str(exc))
	print("\n".join(lines))
	return 0


def cmd_outage(args: argparse.Namespace) -> int:
	seed = args.seed if args.seed is not None else AppConfig().default_seed
	try:
		print(outage_report(args.p1, args.p2, args.pr, args.trials, seed))
	except SimulatorError as exc:
		args.parser.error(str(exc))
	return 0


def build_arg_parser() -> argparse.ArgumentParser:
	parser = argparse.ArgumentParser(description="Monte Carlo SER simulator for RS-coded network coding over M-PSK relays")
	sub = parser.add_subparsers(dest="command", required=True)

	p_run = sub.add_parser("run", help="Sweep SER over SNR and write CSV/JSON results")
	add_run_arguments(p_run)
	p_run.set_defaults(func=cmd_run, parser=p_run)

	p_ls = sub.add_parser("list-presets", help="List figure presets and the throughput/diversity table")
	p_ls.set_defaults(func=cmd_list_presets, parser=p_ls)

	p_met = sub.add_parser("metrics", help="Throughput gain and diversity order per topology")
	p_met.add_argument("--pairs", type=int, help="Pairs N for the extended topologies (default 4)")
	p_met.set_defaults(func=cmd_metrics, parser=p_met)

	p_out = sub.add_parser("outage", help="Two-of-three link outage probability and its Monte Carlo check")
	p_out.add_argument("--p1", type=float, required=True, help="S1 uplink error rate")
	p_out.add_argument("--p2", type=float, required=True, help="S2 uplink error rate")
	p_out.add_argument("--pr", type=float, required=True, help="Relay link error rate")
	p_out.add_argument("--trials", type=int, default=100_000)
	p_out.add_argument("--seed", type=int)
	p_out.set_defaults(func=cmd_outage, parser=p_out)
	return parser


def main(argv: list[str] | None = None) -> int:
	configure_logging()
	parser = build_arg_parser()
	args = parser.parse_args(argv)
	return args.func(args)


if __name__ == "__main__":
	sys.exit(main())
