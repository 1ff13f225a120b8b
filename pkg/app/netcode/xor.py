"""Bit-level XOR network coding; the operator is its own inverse."""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import reduce

import numpy as np

from ..coding.gf_arith import GfField, GfSymbol, gf_add
from ..errors import UsageError


@dataclass(frozen=True)
class NcCombination:
	arity: int
	field: GfField

	def __post_init__(self) -> None:
		if self.arity < 1:
			raise UsageError(f"network coding arity must be >= 1, got {self.arity}")

	def combine(self, frames: Sequence[np.ndarray]) -> np.ndarray:
		if len(frames) != self.arity:
			raise UsageError(f"expected {self.arity} flows, got {len(frames)}")
		return self.field.check_frame(nc_combine_frames(frames))


def nc_combine(symbols: Sequence[GfSymbol]) -> GfSymbol:
	if not symbols:
		raise UsageError("cannot network-code an empty list of symbols")
	return reduce(gf_add, symbols)


def nc_extract(nc_symbol: GfSymbol, others: Sequence[GfSymbol]) -> GfSymbol:
	return reduce(gf_add, others, nc_symbol)


def nc_combine_frames(frames: Sequence[np.ndarray]) -> np.ndarray:
	if not frames:
		raise UsageError("cannot network-code an empty list of frames")
	arrays = [np.asarray(f, dtype=np.int64) for f in frames]
	lengths = {a.shape for a in arrays}
	if len(lengths) != 1:
		raise UsageError(f"frames must have equal lengths, got {sorted(a.size for a in arrays)}")
	return np.bitwise_xor.reduce(np.stack(arrays), axis=0)


def nc_extract_frames(nc_frame: np.ndarray, others: Sequence[np.ndarray]) -> np.ndarray:
	return nc_combine_frames([nc_frame, *others])
