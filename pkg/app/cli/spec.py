import argparse
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Literal, NoReturn, Optional

import numpy as np
from pydantic import BaseModel, ValidationError, model_validator

from ..config.config import AppConfig
from ..phy.channel import EqualizerMode
from ..phy.psk import SUPPORTED_ORDERS, Labeling
from ..simulation.models import ScenarioConfig, field_order_for
from ..topologies.models import ScenarioKind, TopologyKind
from .presets import DESK_ITERATIONS, FULL_ITERATIONS, PRESET_RS, PRESETS, get_preset

Cell = tuple[int, Optional[tuple[int, int]]]


class ExperimentSpec(BaseModel):
	topology: TopologyKind
	scenarios: list[ScenarioKind]
	cells: list[Cell]
	frame_len: int = 1000
	iterations: int = 1000
	snr_grid: list[float]
	seed: int
	equalizer: EqualizerMode = EqualizerMode.ZERO_FORCING
	labeling: Labeling = Labeling.NATURAL
	preset: Optional[str] = None
	out: Optional[str] = None
	fmt: Literal["csv", "json"] = "csv"
	verbosity: int = 0
	threads: Optional[int] = None

	@model_validator(mode="after")
	def _check_configs(self) -> "ExperimentSpec":
		if not self.scenarios:
			raise ValueError("at least one scenario is required")
		if not self.cells:
			raise ValueError("at least one (M, RS) cell is required")
		for m, rs in self.cells:
			if rs is None:
				continue
			n, k = rs
			if field_order_for(n) != m:
				raise ValueError(f"RS({n},{k}) lives in GF({field_order_for(n)}) but M={m}: field order mismatch")
		self.configs()
		return self

	def configs(self) -> list[ScenarioConfig]:
		"""One ScenarioConfig per (cell, scenario), cells outermost."""
		out = []
		for m, rs in self.cells:
			for scenario in self.scenarios:
				out.append(
					ScenarioConfig(
						topology=self.topology,
						scenario=scenario,
						m=m,
						rs=rs if scenario.uses_rs else None,
						frame_len=self.frame_len,
						iterations=self.iterations,
						snr_grid=self.snr_grid,
						seed=self.seed,
						equalizer=self.equalizer,
						labeling=self.labeling,
					)
				)
		return out

	def output_path(self, output_dir: str = "results") -> Path:
		if self.out:
			return Path(self.out)
		stem = self.preset or f"{self.topology.value}-m{'-'.join(str(m) for m, _ in self.cells)}"
		return Path(output_dir) / f"{stem}.{self.fmt}"


def _rs_pair(text: str) -> tuple[int, int]:
	try:
		n, k = (int(part) for part in text.split(","))
	except ValueError:
		raise argparse.ArgumentTypeError(f"expected n,k (for example 15,5), got {text!r}") from None
	return n, k


def _snr_list(text: str) -> list[float]:
	try:
		return [float(part) for part in text.split(",") if part.strip()]
	except ValueError:
		raise argparse.ArgumentTypeError(f"expected comma-separated dB values, got {text!r}") from None


def add_run_arguments(parser: argparse.ArgumentParser) -> None:
	parser.add_argument("--preset", choices=sorted(PRESETS), help="Figure configuration to start from")
	parser.add_argument("--topology", choices=[t.value for t in TopologyKind], help="Network shape (default: x)")
	parser.add_argument("--scenario", action="append", choices=[s.value for s in ScenarioKind], help="Scenario to run (repeatable)")
	parser.add_argument("--scheme", action="append", type=int, choices=(1, 2), help="Shorthand for --scenario scheme1/scheme2")
	parser.add_argument("--m", type=int, choices=SUPPORTED_ORDERS, help="PSK order, equal to the RS field order")
	parser.add_argument("--rs", type=_rs_pair, help="RS code as n,k")
	parser.add_argument("--snr-start", type=float, default=0.0)
	parser.add_argument("--snr-stop", type=float, default=26.0)
	parser.add_argument("--snr-step", type=float, default=2.0)
	parser.add_argument("--snr", type=_snr_list, help="Explicit comma-separated SNR list in dB")
	parser.add_argument("--frame-len", type=int, default=1000, help="Message symbols per source per frame")
	parser.add_argument("--iters", type=int, help="Frames averaged per SNR point")
	parser.add_argument("--full", action="store_true", help="Use the 1000-iteration profile for presets")
	parser.add_argument("--seed", type=int, help="Master seed (default: NCC_SIM_SEED or the built-in constant)")
	parser.add_argument("--equalizer", choices=[e.value for e in EqualizerMode], default=EqualizerMode.ZERO_FORCING.value)
	parser.add_argument("--labeling", choices=[lab.value for lab in Labeling], default=Labeling.NATURAL.value)
	parser.add_argument("--out", help="Output file (default: NCC_SIM_OUTPUT_DIR/<preset or topology>.<format>)")
	parser.add_argument("--format", dest="fmt", choices=("csv", "json"), help="Output format (default: NCC_SIM_FORMAT or csv)")
	parser.add_argument("--threads", type=int, help="Sweep workers, capped by NCC_SIM_THREADS")
	parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")


def _snr_grid(args: argparse.Namespace, error: Callable[[str], NoReturn]) -> list[float]:
	if args.snr is not None:
		return args.snr
	if args.snr_step <= 0:
		error("--snr-step must be positive")
	if args.snr_stop < args.snr_start:
		error("--snr-stop must not be below --snr-start")
	grid = np.arange(args.snr_start, args.snr_stop + args.snr_step / 2, args.snr_step)
	return [round(float(v), 10) for v in grid]


def _scenarios(args: argparse.Namespace, default: Sequence[ScenarioKind]) -> list[ScenarioKind]:
	chosen = [ScenarioKind(s) for s in args.scenario or []]
	chosen += [ScenarioKind(f"scheme{s}") for s in args.scheme or []]
	if not chosen:
		return list(default)
	return list(dict.fromkeys(chosen))


def build_spec(args: argparse.Namespace, error: Callable[[str], NoReturn]) -> ExperimentSpec:
	"""Expand the preset, apply explicit flags on top, then validate."""
	cfg = AppConfig()
	preset = get_preset(args.preset) if args.preset else None
	topology = TopologyKind(args.topology) if args.topology else (preset.topology if preset else TopologyKind.X)
	scenarios = _scenarios(args, preset.scenarios if preset else tuple(ScenarioKind))
	if args.m is not None or args.rs is not None:
		m = args.m if args.m is not None else (1 << args.rs[0].bit_length())
		cells: list[Cell] = [(m, args.rs or PRESET_RS.get(m))]
	elif preset:
		cells = list(preset.cells)
	else:
		cells = [(16, PRESET_RS[16])]
	if args.iters is not None:
		iterations = args.iters
	elif preset and not args.full:
		iterations = DESK_ITERATIONS
	else:
		iterations = FULL_ITERATIONS
	if iterations < 1:
		error("--iters must be at least 1")
	if args.frame_len < 1:
		error("--frame-len must be at least 1")
	try:
		return ExperimentSpec(
			topology=topology,
			scenarios=scenarios,
			cells=cells,
			frame_len=args.frame_len,
			iterations=iterations,
			snr_grid=_snr_grid(args, error),
			seed=args.seed if args.seed is not None else cfg.default_seed,
			equalizer=EqualizerMode(args.equalizer),
			labeling=Labeling(args.labeling),
			preset=args.preset,
			out=args.out,
			fmt=args.fmt or cfg.output_format,
			verbosity=args.verbose,
			threads=args.threads,
		)
	except ValidationError as exc:
		first = exc.errors()[0]
		error(f"invalid --m/--rs/--snr combination: {first['msg']}")


def parse_args(argv: Sequence[str] | None = None) -> ExperimentSpec:
	parser = argparse.ArgumentParser(prog="main.py run", description="Run an SER-vs-SNR experiment")
	add_run_arguments(parser)
	args = parser.parse_args(argv)
	return build_spec(args, parser.error)
