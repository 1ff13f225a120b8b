"""Shared frame pipeline for the relay topologies.

A pipeline draws the source frames, optionally RS-encodes them, runs the
scenario's transmissions over named links and returns what every destination
recovered. Subclasses only describe how symbols travel through their relays.
"""

import logging
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

import numpy as np

from ..coding.rs_codec import RsCode, rs_encode_frame
from ..errors import ParameterError, UsageError
from ..netcode.xor import nc_combine_frames, nc_extract_frames
from .link import LinkLayer
from .models import FrameContext, FrameDiagnostics, FrameResult, ScenarioKind, TopologyKind

if TYPE_CHECKING:
	from ..simulation.models import ScenarioConfig

_LOGGER = logging.getLogger(__name__)


class FramePipeline(ABC):
	kind: TopologyKind | None = None
	uplink_relay: str = "R"
	supports_network_coding: bool = True

	def __init__(self, pairs: int) -> None:
		if pairs < 1:
			raise ParameterError(f"a topology needs at least one source-destination pair, got {pairs}")
		self.pairs = pairs

	def __repr__(self) -> str:
		return f"{type(self).__name__}(pairs={self.pairs})"

	@abstractmethod
	def slots(self, network_coded: bool) -> int:
		"""Time slots one frame occupies."""

	@abstractmethod
	def _direct_chain(self, index: int, coded: np.ndarray, link: LinkLayer, config: "ScenarioConfig") -> np.ndarray:
		"""Hard decisions of destination ``index`` for its own source without network coding."""

	def _broadcast(self, nc_frame: np.ndarray, link: LinkLayer, config: "ScenarioConfig") -> list[np.ndarray]:
		"""Hard decisions of every destination for the relay's network-coded frame."""
		raise ParameterError(f"{type(self).__name__} has no relay to broadcast from")

	def run_frame(self, scenario: ScenarioKind | str, config: "ScenarioConfig", ctx: FrameContext) -> FrameResult:
		scenario = ScenarioKind(scenario)
		if scenario.uses_network_coding and not self.supports_network_coding:
			raise ParameterError(f"{type(self).__name__} has no relay to network-code at")
		code = config.rs_code() if scenario.uses_rs else None
		diagnostics = FrameDiagnostics()
		link = LinkLayer(
			config.constellation(),
			ctx.snr_db,
			ctx.streams,
			diagnostics,
			mode=config.equalizer,
			tamper=ctx.tamper,
			fading=ctx.fading,
		)
		sources = [ctx.streams.source(i).integers(0, config.m, config.frame_len, dtype=np.int64) for i in range(self.pairs)]
		coded = [rs_encode_frame(code, src) if code is not None else src for src in sources]
		trace: dict[str, np.ndarray] = {}
		if scenario.uses_network_coding:
			recovered = self._network_coded(scenario, code, coded, link, config, trace)
		else:
			recovered = []
			for i in range(self.pairs):
				decided = self._direct_chain(i, coded[i], link, config)
				recovered.append(link.decode(code, decided) if code is not None else decided)
		unused = link.unused_tamper()
		if unused:
			raise UsageError(f"tamper keys {unused} name no hard-decision link of {scenario.value} on {type(self).__name__}")
		return FrameResult(
			sources=sources,
			recovered=recovered,
			slots=self.slots(scenario.uses_network_coding),
			diagnostics=diagnostics,
			trace=trace,
		)

	def _network_coded(
		self,
		scenario: ScenarioKind,
		code: RsCode | None,
		coded: list[np.ndarray],
		link: LinkLayer,
		config: "ScenarioConfig",
		trace: dict[str, np.ndarray],
	) -> list[np.ndarray]:
		# MAC phase: source i's slot reaches the relay and every other destination.
		at_relay = [
			link.hard_hop(f"S{i + 1}->{self.uplink_relay}", coded[i], config.source_power(i))
			for i in range(self.pairs)
		]
		overheard = {
			(i, j): link.hard_hop(f"S{i + 1}->D{j + 1}", coded[i], config.source_power(i))
			for i in range(self.pairs)
			for j in range(self.pairs)
			if i != j
		}

		if scenario is ScenarioKind.NCC_RS_SCHEME2:
			nc_frame = rs_encode_frame(code, nc_combine_frames([link.decode(code, obs) for obs in at_relay]))
		else:
			nc_frame = nc_combine_frames(at_relay)
		trace[self.uplink_relay] = nc_frame

		at_destination = self._broadcast(nc_frame, link, config)
		recovered = []
		for j in range(self.pairs):
			others = [overheard[(i, j)] for i in range(self.pairs) if i != j]
			if scenario is ScenarioKind.NCC_RS_SCHEME2:
				own = nc_extract_frames(link.decode(code, at_destination[j]), [link.decode(code, o) for o in others])
			else:
				own = nc_extract_frames(at_destination[j], others)
				if scenario is ScenarioKind.NCC_RS_SCHEME1:
					trace[f"D{j + 1}"] = own
					own = link.decode(code, own)
			recovered.append(own)
		return recovered
