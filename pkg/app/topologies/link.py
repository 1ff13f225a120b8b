import logging
from collections.abc import Mapping

import numpy as np

from ..coding.rs_codec import RsCode, rs_decode_batch
from ..phy.channel import EqualizerMode, LinkBudget, af_forward, equalize, fading_nulls, transmit
from ..phy.psk import PskConstellation, demodulate, modulate
from .models import FrameDiagnostics, StreamSource, Tamper

_LOGGER = logging.getLogger(__name__)


class LinkLayer:
	"""Named links of one frame: each name owns its own RNG stream."""

	def __init__(
		self,
		constellation: PskConstellation,
		snr_db: float,
		streams: StreamSource,
		diagnostics: FrameDiagnostics,
		mode: EqualizerMode = EqualizerMode.ZERO_FORCING,
		tamper: Mapping[str, Tamper] | None = None,
		fading: complex | None = None,
	) -> None:
		self.constellation = constellation
		self.snr_db = snr_db
		self.streams = streams
		self.diagnostics = diagnostics
		self.mode = mode
		self.tamper = tamper or {}
		self.fading = fading
		self.tampered: set[str] = set()

	def budget(self, power: float) -> LinkBudget:
		return LinkBudget(power=power, snr_db=self.snr_db)

	def sigma2(self, power: float) -> float:
		return self.budget(power).sigma2

	def send(self, name: str, samples: np.ndarray, power: float) -> tuple[np.ndarray, np.ndarray]:
		y, realization = transmit(samples, self.budget(power), self.streams.link(name), h=self.fading)
		return y, realization.h

	def forward(self, name: str, y_in: np.ndarray, h_in: np.ndarray, beta: np.ndarray, power: float) -> tuple[np.ndarray, np.ndarray]:
		y, realization = af_forward(y_in, h_in, beta, self.budget(power), self.streams.link(name), mode=self.mode, h=self.fading)
		return y, realization.h

	def decide(self, name: str, y: np.ndarray, h: np.ndarray, sent: np.ndarray | None = None) -> np.ndarray:
		nulls = int(np.count_nonzero(fading_nulls(h)))
		if nulls:
			self.diagnostics.fading_nulls += nulls
			_LOGGER.debug("Fading null left unequalized", extra={"link": name, "count": nulls})
		symbols = np.asarray(demodulate(self.constellation, equalize(y, h, self.mode)), dtype=np.int64)
		tamper = self.tamper.get(name)
		if tamper is not None:
			symbols = np.asarray(tamper(symbols.copy()), dtype=np.int64)
			self.tampered.add(name)
		if sent is not None:
			self.diagnostics.record_link(name, int(np.count_nonzero(symbols != sent)), int(symbols.size))
		return symbols

	def hard_hop(self, name: str, symbols: np.ndarray, power: float) -> np.ndarray:
		y, h = self.send(name, modulate(self.constellation, symbols), power)
		return self.decide(name, y, h, sent=symbols)

	def unused_tamper(self) -> list[str]:
		"""Tamper keys that named no decision link of this frame."""
		return sorted(set(self.tamper) - self.tampered)

	def decode(self, code: RsCode, word: np.ndarray) -> np.ndarray:
		msgs, counts = rs_decode_batch(code, word.reshape(-1, code.n))
		self.diagnostics.rs_failures += int(np.count_nonzero(counts < 0))
		return msgs.ravel()
