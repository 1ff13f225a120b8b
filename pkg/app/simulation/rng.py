"""Counter-based RNG streams.

Every random draw in a sweep comes from a Philox generator keyed by
(master seed, SNR point, frame, purpose), so adding a link or reordering
frames never shifts another stream.
"""

import zlib

import numpy as np

_LINK_DOMAIN = 0
_SOURCE_DOMAIN = 1


def link_key(name: str) -> int:
	# crc32 is stable across processes, unlike hash().
	return zlib.crc32(name.encode("utf-8")) & 0xFFFFFFFF


def derive_stream(seed: int, *key: int) -> np.random.Generator:
	sequence = np.random.SeedSequence(entropy=int(seed) & (2**64 - 1), spawn_key=tuple(int(k) for k in key))
	return np.random.Generator(np.random.Philox(sequence))


class FrameStreams:
	def __init__(self, seed: int, point_index: int, frame_index: int) -> None:
		self.seed = seed
		self.point_index = point_index
		self.frame_index = frame_index

	def __repr__(self) -> str:
		return f"FrameStreams(seed={self.seed}, point={self.point_index}, frame={self.frame_index})"

	def link(self, name: str) -> np.random.Generator:
		return derive_stream(self.seed, self.point_index, self.frame_index, _LINK_DOMAIN, link_key(name))

	def source(self, index: int) -> np.random.Generator:
		return derive_stream(self.seed, self.point_index, self.frame_index, _SOURCE_DOMAIN, index)
