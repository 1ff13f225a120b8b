"""Closed-form reference values for M-PSK over AWGN and Rayleigh fading."""

import math

from scipy import integrate, stats

from ..errors import UsageError


def _check_order(order: int) -> None:
	if order < 2 or order & (order - 1):
		raise UsageError(f"PSK order must be a power of two >= 2, got {order}")


def psk_ser_awgn(order: int, snr_db: float) -> float:
	"""Ps = (1/pi) * integral_0^{(M-1)pi/M} exp(-g sin^2(pi/M) / sin^2 t) dt."""
	_check_order(order)
	if math.isinf(snr_db) and snr_db > 0:
		return 0.0
	gamma = 10.0 ** (snr_db / 10.0)
	s2 = math.sin(math.pi / order) ** 2
	upper = (order - 1) * math.pi / order
	value, _ = integrate.quad(lambda t: math.exp(-gamma * s2 / math.sin(t) ** 2) if math.sin(t) else 0.0, 0.0, upper)
	return value / math.pi


def psk_ser_rayleigh(order: int, snr_db: float) -> float:
	"""Average of the AWGN SER over an exponentially distributed SNR with mean 10^(snr_db/10)."""
	_check_order(order)
	if math.isinf(snr_db) and snr_db > 0:
		return 0.0
	gamma = 10.0 ** (snr_db / 10.0)
	s2 = math.sin(math.pi / order) ** 2
	upper = (order - 1) * math.pi / order
	value, _ = integrate.quad(lambda t: 1.0 / (1.0 + gamma * s2 / math.sin(t) ** 2) if math.sin(t) else 0.0, 0.0, upper)
	return value / math.pi


def wilson_interval(errors: int, trials: int, confidence: float = 0.95) -> tuple[float, float]:
	if trials <= 0:
		raise UsageError(f"trials must be positive, got {trials}")
	if not 0 <= errors <= trials:
		raise UsageError(f"errors must lie in [0, {trials}], got {errors}")
	ci = stats.binomtest(int(errors), int(trials)).proportion_ci(confidence_level=confidence, method="wilson")
	return float(ci.low), float(ci.high)


def wilson_half_width(errors: int, trials: int, confidence: float = 0.95) -> float:
	low, high = wilson_interval(errors, trials, confidence)
	return (high - low) / 2.0
