import logging
import sys
from typing import TextIO

from ..config.config import AppConfig
from ..errors import SimulatorError
from ..simulation.harness import snr_sweep
from ..simulation.models import SerCurve, SerPoint
from ..storage.results_store import curve_rows, write_results
from ..topologies.metrics import outage_probability, simulate_outage, slot_counts, theoretical_metrics
from ..topologies.models import TopologyKind
from .presets import PRESETS
from .spec import ExperimentSpec

_LOGGER = logging.getLogger(__name__)


def _relay_links(topology: TopologyKind) -> tuple[str, str]:
	"""(uplink relay, broadcasting relay) names used by the link diagnostics."""
	if topology in (TopologyKind.BUTTERFLY, TopologyKind.EXTENDED_BUTTERFLY):
		return "R1", "R2"
	return "R", "R"


def empirical_outage(point: SerPoint, topology: TopologyKind) -> float | None:
	"""Outage probability at the measured S1/S2 uplink and relay broadcast error rates."""
	uplink, broadcaster = _relay_links(topology)
	rates = point.link_error_rates
	p1 = rates.get(f"S1->{uplink}")
	p2 = rates.get(f"S2->{uplink}")
	relay = [rate for name, rate in rates.items() if name.startswith(f"{broadcaster}->D")]
	if p1 is None or p2 is None or not relay:
		return None
	return outage_probability(p1, p2, sum(relay) / len(relay))


def metrics_table(pairs: int | None = None) -> list[str]:
	lines = ["topology           pairs  gain   diversity  slots(nc/no-nc)"]
	for kind in TopologyKind:
		n = pairs if pairs is not None and kind in (TopologyKind.EXTENDED_X, TopologyKind.EXTENDED_BUTTERFLY) else None
		gain, diversity = theoretical_metrics(kind, n)
		with_nc, without_nc = slot_counts(kind, n)
		shown = n if n is not None else kind.pairs
		lines.append(f"{kind.value:<18} {shown:<6} {str(gain):<6} {diversity:<10} {with_nc}/{without_nc}")
	return lines


def render_summary(spec: ExperimentSpec, curves: list[SerCurve]) -> str:
	gain, diversity = theoretical_metrics(spec.topology)
	with_nc, without_nc = slot_counts(spec.topology)
	lines = [
		f"topology={spec.topology.value} pairs={spec.topology.pairs} throughput_gain={gain} diversity_order={diversity} "
		f"slots={with_nc} with NC / {without_nc} without",
	]
	for curve in curves:
		cfg = curve.config
		code = cfg.rs_code()
		label = f"{cfg.scenario.value} M={cfg.m}" + (f" RS({code.n},{code.k})" if code is not None else "")
		lines.append(label)
		if cfg.scenario.uses_network_coding:
			nc_symbols = cfg.frame_len * code.n // code.k if code is not None else cfg.frame_len
			lines.append(f"  relay broadcasts {nc_symbols} NC symbols per frame")
		for point in curve.points:
			row = f"  snr={point.snr_db:6.2f} dB  ser={point.ser:.3e}  ±{point.ci95:.1e}  errors={point.errors}"
			if point.under_resolved:
				row += "  (under-resolved)"
			if cfg.scenario.uses_network_coding:
				outage = empirical_outage(point, cfg.topology)
				if outage is not None:
					row += f"  outage={outage:.3e}"
			lines.append(row)
		if curve.monotonic_violations:
			lines.append(f"  SER rises beyond tolerance at {curve.monotonic_violations} dB")
	return "\n".join(lines)


def run(spec: ExperimentSpec, out: TextIO | None = None) -> int:
	out = out or sys.stdout
	cfg = AppConfig()
	curves: list[SerCurve] = []
	try:
		for config in spec.configs():
			curves.append(snr_sweep(config, spec.threads))
	except SimulatorError as exc:
		print(f"error: {exc}", file=sys.stderr)
		return 1
	path = spec.output_path(cfg.output_dir)
	try:
		write_results(curves, path, spec.fmt)
	except (OSError, TimeoutError) as exc:
		print(f"error: cannot write {path}: {exc}", file=sys.stderr)
		return 1
	print(f"Wrote {len(curve_rows(curves))} rows to {path}", file=out)
	print(render_summary(spec, curves), file=out)
	return 0


def list_presets() -> str:
	lines = ["Presets:"]
	for name in sorted(PRESETS):
		preset = PRESETS[name]
		lines.append(f"  {name:<18} {preset.description}")
		lines.append(f"  {'':<18} {preset.describe()}")
	lines.append("")
	lines.append("Throughput gain and diversity order:")
	lines.extend(f"  {line}" for line in metrics_table())
	return "\n".join(lines)


def outage_report(p1: float, p2: float, p_relay: float, trials: int, seed: int) -> str:
	exact = outage_probability(p1, p2, p_relay)
	estimate, stderr = simulate_outage(p1, p2, p_relay, trials, seed)
	return f"outage={exact:.6g} monte_carlo={estimate:.6g} ±{stderr:.2g} ({trials} trials)"
