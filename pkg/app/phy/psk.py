import logging
import threading
from dataclasses import dataclass
from dataclasses import field as dc_field
from enum import Enum
from functools import lru_cache

import numpy as np

from ..errors import UsageError

_LOGGER = logging.getLogger(__name__)
_zero_sample_lock = threading.Lock()
_zero_sample_reported = False

SUPPORTED_ORDERS = (8, 16, 32)


class Labeling(str, Enum):
	NATURAL = "natural"
	GRAY = "gray"


@dataclass(frozen=True, eq=False)
class PskConstellation:
	"""Unit-energy M-PSK: point i sits at phase 2*pi*i/M.

	``point_of[s]`` is the constellation index carrying symbol s and
	``symbol_at[i]`` its inverse. Natural labeling is the identity; Gray
	labeling puts symbol i ^ (i >> 1) on point i.
	"""

	order: int
	labeling: Labeling = Labeling.NATURAL
	points: np.ndarray = dc_field(init=False, repr=False)
	point_of: np.ndarray = dc_field(init=False, repr=False)
	symbol_at: np.ndarray = dc_field(init=False, repr=False)

	def __post_init__(self) -> None:
		if self.order < 2 or self.order & (self.order - 1):
			raise UsageError(f"PSK order must be a power of two >= 2, got {self.order}")
		index = np.arange(self.order)
		points = np.exp(2j * np.pi * index / self.order)
		if self.labeling is Labeling.GRAY:
			symbol_at = index ^ (index >> 1)
		else:
			symbol_at = index.copy()
		point_of = np.empty_like(symbol_at)
		point_of[symbol_at] = index
		for name, table in (("points", points), ("point_of", point_of), ("symbol_at", symbol_at)):
			table.setflags(write=False)
			object.__setattr__(self, name, table)

	@property
	def average_energy(self) -> float:
		return float(np.mean(np.abs(self.points) ** 2))


@lru_cache(maxsize=None)
def get_constellation(order: int, labeling: Labeling = Labeling.NATURAL) -> PskConstellation:
	return PskConstellation(order, Labeling(labeling))


def modulate(c: PskConstellation, symbols: int | np.ndarray) -> complex | np.ndarray:
	arr = np.asarray(symbols, dtype=np.int64)
	if arr.size and (arr.min() < 0 or arr.max() >= c.order):
		raise UsageError(f"symbol outside [0, {c.order}) cannot be modulated")
	out = c.points[c.point_of[arr]]
	return complex(out) if out.ndim == 0 else out


def demodulate(c: PskConstellation, samples: complex | np.ndarray) -> int | np.ndarray:
	"""Nearest-phase hard decision; a sample exactly on a sector edge goes to the lower index."""
	z = np.asarray(samples, dtype=np.complex128)
	zero = z == 0
	if zero.any():
		_report_zero_sample(int(np.count_nonzero(zero)))
	sector = np.mod(np.angle(z), 2 * np.pi) * c.order / (2 * np.pi)
	index = np.ceil(sector - 0.5).astype(np.int64) % c.order
	# The edge between point M-1 and point 0 resolves to 0.
	index = np.where(sector == c.order - 0.5, 0, index)
	index = np.where(zero, c.point_of[0], index)
	out = c.symbol_at[index]
	return int(out) if out.ndim == 0 else out


def _report_zero_sample(count: int) -> None:
	global _zero_sample_reported
	with _zero_sample_lock:
		if _zero_sample_reported:
			return
		_zero_sample_reported = True
	_LOGGER.warning("Zero-magnitude sample demodulated to symbol 0", extra={"count": count})
