"""Closed-form network metrics and the two-of-three outage model."""

import math
from fractions import Fraction

import numpy as np

from ..errors import UsageError
from .models import TopologyKind


def _pairs_for(kind: TopologyKind, pairs: int | None) -> int:
	if kind in (TopologyKind.X, TopologyKind.BUTTERFLY):
		n = 2 if pairs is None else pairs
	else:
		n = kind.pairs if pairs is None else pairs
	if n < 2:
		raise UsageError(f"network metrics need at least 2 pairs, got {n}")
	return n


def slot_counts(kind: TopologyKind | str, pairs: int | None = None) -> tuple[int, int]:
	"""(slots with network coding, slots without) for one round of every pair."""
	kind = TopologyKind(kind)
	n = _pairs_for(kind, pairs)
	if kind in (TopologyKind.X, TopologyKind.EXTENDED_X):
		return n + 1, 2 * n
	return n + 2, 3 * n


def theoretical_metrics(kind: TopologyKind | str, pairs: int | None = None) -> tuple[Fraction, int]:
	"""(coding gain, diversity order).

	The basic X and butterfly structures always involve two pairs, so their
	gains do not depend on ``pairs`` beyond the N >= 2 check.
	"""
	kind = TopologyKind(kind)
	n = _pairs_for(kind, pairs)
	if kind is TopologyKind.X:
		return Fraction(4, 3), 2
	if kind is TopologyKind.BUTTERFLY:
		return Fraction(3, 2), 2
	with_nc, without_nc = slot_counts(kind, n)
	return Fraction(without_nc, with_nc), n


def _check_probability(name: str, value: float) -> float:
	if math.isnan(value) or not 0.0 <= value <= 1.0:
		raise UsageError(f"{name} must be a probability in [0, 1], got {value}")
	return float(value)


def outage_probability(p1: float, p2: float, p_relay: float) -> float:
	"""P(at least two of the three links fail) = p1 p2 + p1 pR + p2 pR - 2 p1 p2 pR."""
	p1 = _check_probability("p1", p1)
	p2 = _check_probability("p2", p2)
	pr = _check_probability("pR", p_relay)
	return p1 * p2 + p1 * pr + p2 * pr - 2 * p1 * p2 * pr


def simulate_outage(p1: float, p2: float, p_relay: float, trials: int, seed: int | None = None) -> tuple[float, float]:
	"""Monte Carlo estimate of the outage probability and its standard error."""
	probs = np.array([_check_probability("p1", p1), _check_probability("p2", p2), _check_probability("pR", p_relay)])
	if trials < 1:
		raise UsageError(f"trials must be positive, got {trials}")
	rng = np.random.default_rng(seed)
	failures = rng.random((trials, 3)) < probs
	outage = np.count_nonzero(failures, axis=1) >= 2
	estimate = float(outage.mean())
	return estimate, math.sqrt(estimate * (1.0 - estimate) / trials)
