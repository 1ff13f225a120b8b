import logging
from collections.abc import Callable, Mapping
from concurrent.futures import ThreadPoolExecutor

from ..config.config import AppConfig
from ..errors import ParameterError
from ..topologies import get_pipeline
from ..topologies.models import FrameContext, FrameDiagnostics, FrameResult, ScenarioKind, Tamper
from .models import SchemeComparison, ScenarioConfig, SerCurve, SerPoint
from .oracle import wilson_half_width, wilson_interval
from .rng import FrameStreams

_LOGGER = logging.getLogger(__name__)

Runner = Callable[[ScenarioKind, ScenarioConfig, FrameContext], FrameResult]

# Allowed rise of SER between consecutive points, in Wilson half-widths.
MONOTONIC_TOLERANCE = 3.0


def _default_runner(config: ScenarioConfig) -> Runner:
	return get_pipeline(config.topology).run_frame


def estimate_ser(
	config: ScenarioConfig,
	snr_db: float,
	point_index: int = 0,
	*,
	runner: Runner | None = None,
	tamper: Mapping[str, Tamper] | None = None,
	fading: complex | None = None,
) -> SerPoint:
	"""Pool message-symbol errors of ``config.iterations`` frames at one SNR.

	Frame f of point p draws from streams keyed by (config.seed, p, f), so the
	result depends only on the configuration and ``point_index``.
	"""
	run = runner or _default_runner(config)
	diagnostics = FrameDiagnostics()
	per_destination: list[int] = []
	symbols = 0
	for frame in range(config.iterations):
		ctx = FrameContext(
			snr_db=snr_db,
			streams=FrameStreams(config.seed, point_index, frame),
			tamper=tamper or {},
			fading=fading,
		)
		result = run(config.scenario, config, ctx)
		errors = result.destination_errors()
		if not per_destination:
			per_destination = [0] * len(errors)
		per_destination = [total + e for total, e in zip(per_destination, errors)]
		symbols += sum(int(src.size) for src in result.sources)
		diagnostics.merge(result.diagnostics)

	total_errors = sum(per_destination)
	point = SerPoint(
		snr_db=snr_db,
		errors=total_errors,
		symbols=symbols,
		ser=total_errors / symbols if symbols else 0.0,
		ci95=wilson_half_width(total_errors, symbols) if symbols else 0.0,
		destination_errors=per_destination,
		rs_failures=diagnostics.rs_failures,
		fading_nulls=diagnostics.fading_nulls,
		link_error_rates=diagnostics.link_error_rates(),
	)
	_LOGGER.debug(
		"SER point done",
		extra={"scenario": config.scenario.value, "snr_db": snr_db, "errors": total_errors, "symbols": symbols},
	)
	if point.under_resolved:
		_LOGGER.warning(
			"Under-resolved SER point",
			extra={"scenario": config.scenario.value, "snr_db": snr_db, "errors": total_errors},
		)
	return point


def monotonic_violations(points: list[SerPoint], tolerance: float = MONOTONIC_TOLERANCE) -> list[float]:
	"""SNR values whose SER rises above the previous point's by more than ``tolerance`` intervals."""
	flagged = []
	for prev, cur in zip(points, points[1:]):
		if not prev.symbols or not cur.symbols:
			continue
		prev_low, prev_high = wilson_interval(prev.errors, prev.symbols)
		cur_low, cur_high = wilson_interval(cur.errors, cur.symbols)
		slack = tolerance * max(prev_high - prev_low, cur_high - cur_low) / 2.0
		if cur.ser - prev.ser > slack:
			flagged.append(cur.snr_db)
	return flagged


def snr_sweep(config: ScenarioConfig, threads: int | None = None, *, runner: Runner | None = None) -> SerCurve:
	workers = AppConfig().worker_count(threads)
	_LOGGER.info(
		"Sweep started",
		extra={
			"topology": config.topology.value,
			"scenario": config.scenario.value,
			"points": len(config.snr_grid),
			"workers": workers,
		},
	)
	if workers == 1:
		points = [estimate_ser(config, snr, idx, runner=runner) for idx, snr in enumerate(config.snr_grid)]
	else:
		with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="sweep-worker") as pool:
			futures = [pool.submit(estimate_ser, config, snr, idx, runner=runner) for idx, snr in enumerate(config.snr_grid)]
			points = [f.result() for f in futures]
	flagged = monotonic_violations(points)
	if flagged:
		_LOGGER.warning("SER rises with SNR beyond tolerance", extra={"scenario": config.scenario.value, "snr_db": flagged})
	_LOGGER.info("Sweep finished", extra={"scenario": config.scenario.value})
	return SerCurve(config=config, points=points, monotonic_violations=flagged)


def compare_schemes(config: ScenarioConfig, threads: int | None = None) -> SchemeComparison:
	"""Sweep scheme 1 and scheme 2 under common random numbers."""
	if config.rs is None:
		raise ParameterError("comparing schemes needs RS parameters")
	scheme1 = snr_sweep(config.with_scenario(ScenarioKind.NCC_RS_SCHEME1), threads)
	scheme2 = snr_sweep(config.with_scenario(ScenarioKind.NCC_RS_SCHEME2), threads)
	ratios = [
		p2.ser / p1.ser if p1.ser > 0 else None
		for p1, p2 in zip(scheme1.points, scheme2.points)
	]
	return SchemeComparison(scheme1=scheme1, scheme2=scheme2, ratios=ratios)
