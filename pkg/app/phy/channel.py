"""Fast Rayleigh + complex AWGN links, equalization and amplify-and-forward gain.

Every function works on a single complex sample or elementwise on numpy
arrays; one array element is one transmitted symbol with its own fading draw.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..errors import UsageError

# |h| below this is treated as a fading null: equalization leaves y untouched.
FADING_NULL_THRESHOLD = float(np.finfo(np.float64).eps)


class EqualizerMode(str, Enum):
	ZERO_FORCING = "zf"
	CONJUGATE = "conj"


@dataclass(frozen=True)
class ChannelRealization:
	h: complex | np.ndarray
	sigma2: float
	sigma_h2: float = 1.0


@dataclass(frozen=True)
class LinkBudget:
	power: float
	snr_db: float

	def __post_init__(self) -> None:
		if not self.power > 0:
			raise UsageError(f"transmit power must be positive, got {self.power}")

	@property
	def sigma2(self) -> float:
		return snr_to_sigma2(self.snr_db, self.power)


def snr_to_sigma2(snr_db: float, power: float) -> float:
	if not power > 0:
		raise UsageError(f"power must be positive, got {power}")
	return power * 10.0 ** (-snr_db / 10.0)


def _complex_gaussian(rng: np.random.Generator, variance: float, shape: tuple[int, ...]) -> np.ndarray:
	draw = rng.standard_normal((2, *shape))
	return math.sqrt(variance / 2.0) * (draw[0] + 1j * draw[1])


def transmit(
	x: complex | np.ndarray,
	budget: LinkBudget,
	rng: np.random.Generator,
	*,
	sigma_h2: float = 1.0,
	h: complex | np.ndarray | None = None,
) -> tuple[complex | np.ndarray, ChannelRealization]:
	"""y = sqrt(P) * x * h + n, with a fresh h ~ CN(0, sigma_h2) per sample unless ``h`` is forced."""
	samples = np.asarray(x, dtype=np.complex128)
	shape = samples.shape
	fading = _complex_gaussian(rng, sigma_h2, shape)
	if h is not None:
		fading = np.broadcast_to(np.asarray(h, dtype=np.complex128), shape).copy()
	sigma2 = budget.sigma2
	noise = _complex_gaussian(rng, sigma2, shape) if sigma2 > 0 else np.zeros(shape, dtype=np.complex128)
	y = math.sqrt(budget.power) * samples * fading + noise
	if not shape:
		return complex(y), ChannelRealization(complex(fading), sigma2, sigma_h2)
	return y, ChannelRealization(fading, sigma2, sigma_h2)


def fading_nulls(h: complex | np.ndarray) -> np.ndarray:
	return np.abs(np.asarray(h)) < FADING_NULL_THRESHOLD


def equalize(
	y: complex | np.ndarray,
	h: complex | np.ndarray,
	mode: EqualizerMode = EqualizerMode.ZERO_FORCING,
) -> complex | np.ndarray:
	"""Remove the fading phase: y * conj(h), divided by |h|^2 in zero-forcing mode."""
	y_arr = np.asarray(y, dtype=np.complex128)
	h_arr = np.asarray(h, dtype=np.complex128)
	nulls = fading_nulls(h_arr)
	safe_h = np.where(nulls, 1.0, h_arr)
	out = y_arr * np.conj(safe_h)
	if EqualizerMode(mode) is EqualizerMode.ZERO_FORCING:
		out = out / (np.abs(safe_h) ** 2)
	out = np.where(nulls, y_arr, out)
	return complex(out) if out.ndim == 0 else out


def amp_factor(p_src: float, p_relay: float, h: complex | np.ndarray, sigma2: float) -> float | np.ndarray:
	"""beta = sqrt(P_relay / (P_src |h|^2 + sigma2))."""
	if not (p_src > 0 and p_relay > 0):
		raise UsageError(f"powers must be positive, got p_src={p_src}, p_relay={p_relay}")
	if sigma2 < 0:
		raise UsageError(f"noise variance must be non-negative, got {sigma2}")
	denom = p_src * np.abs(np.asarray(h, dtype=np.complex128)) ** 2 + sigma2
	if np.any(denom <= 0):
		raise UsageError("amplification factor undefined: P_src |h|^2 + sigma2 must be positive")
	beta = np.sqrt(p_relay / denom)
	return float(beta) if beta.ndim == 0 else beta


def af_forward(
	y_in: complex | np.ndarray,
	h_in: complex | np.ndarray,
	beta: float | np.ndarray,
	budget_out: LinkBudget,
	rng: np.random.Generator,
	*,
	mode: EqualizerMode = EqualizerMode.ZERO_FORCING,
	sigma_h2: float = 1.0,
	h: complex | np.ndarray | None = None,
) -> tuple[complex | np.ndarray, ChannelRealization]:
	"""y_out = sqrt(P_out) * beta * equalize(y_in, h_in) * h_out + n_out."""
	relayed = np.asarray(beta) * np.asarray(equalize(y_in, h_in, mode))
	return transmit(relayed, budget_out, rng, sigma_h2=sigma_h2, h=h)
