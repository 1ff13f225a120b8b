from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import Protocol

import numpy as np

from ..errors import UsageError


class TopologyKind(str, Enum):
	X = "x"
	EXTENDED_X = "ext-x"
	BUTTERFLY = "butterfly"
	EXTENDED_BUTTERFLY = "ext-butterfly"

	@property
	def pairs(self) -> int:
		return 4 if self in (TopologyKind.EXTENDED_X, TopologyKind.EXTENDED_BUTTERFLY) else 2

	@property
	def relays(self) -> int:
		return 2 if self in (TopologyKind.BUTTERFLY, TopologyKind.EXTENDED_BUTTERFLY) else 1


class ScenarioKind(str, Enum):
	DIRECT_AF = "direct"
	DIRECT_AF_RS = "direct-rs"
	NCC_UNCODED = "ncc"
	NCC_RS_SCHEME1 = "scheme1"
	NCC_RS_SCHEME2 = "scheme2"

	@property
	def uses_rs(self) -> bool:
		return self in (ScenarioKind.DIRECT_AF_RS, ScenarioKind.NCC_RS_SCHEME1, ScenarioKind.NCC_RS_SCHEME2)

	@property
	def uses_network_coding(self) -> bool:
		return self in (ScenarioKind.NCC_UNCODED, ScenarioKind.NCC_RS_SCHEME1, ScenarioKind.NCC_RS_SCHEME2)


@dataclass(frozen=True)
class Topology:
	kind: TopologyKind
	pairs: int
	relays: int

	@classmethod
	def for_kind(cls, kind: TopologyKind | str) -> "Topology":
		kind = TopologyKind(kind)
		return cls(kind=kind, pairs=kind.pairs, relays=kind.relays)


class StreamSource(Protocol):
	def link(self, name: str) -> np.random.Generator: ...

	def source(self, index: int) -> np.random.Generator: ...


Tamper = Callable[[np.ndarray], np.ndarray]


@dataclass
class FrameContext:
	"""Per-frame inputs besides the configuration.

	``tamper`` maps a link name to a function applied to the hard decisions
	taken at the receiving end of that link; ``fading`` forces every fading
	coefficient to a fixed value. Both exist to drive controlled experiments.
	"""

	snr_db: float
	streams: StreamSource
	tamper: Mapping[str, Tamper] = field(default_factory=dict)
	fading: complex | None = None


@dataclass
class FrameDiagnostics:
	rs_failures: int = 0
	fading_nulls: int = 0
	link_errors: dict[str, int] = field(default_factory=dict)
	link_symbols: dict[str, int] = field(default_factory=dict)

	def record_link(self, name: str, errors: int, symbols: int) -> None:
		self.link_errors[name] = self.link_errors.get(name, 0) + errors
		self.link_symbols[name] = self.link_symbols.get(name, 0) + symbols

	def merge(self, other: "FrameDiagnostics") -> None:
		self.rs_failures += other.rs_failures
		self.fading_nulls += other.fading_nulls
		for name, errors in other.link_errors.items():
			self.record_link(name, errors, other.link_symbols.get(name, 0))

	def link_error_rates(self) -> dict[str, float]:
		return {
			name: self.link_errors[name] / total
			for name, total in sorted(self.link_symbols.items())
			if total
		}


@dataclass
class FrameResult:
	sources: list[np.ndarray]
	recovered: list[np.ndarray]
	slots: int
	diagnostics: FrameDiagnostics = field(default_factory=FrameDiagnostics)
	trace: dict[str, np.ndarray] = field(default_factory=dict)

	def __post_init__(self) -> None:
		if len(self.sources) != len(self.recovered):
			raise UsageError("every source needs a recovered frame")
		for src, rec in zip(self.sources, self.recovered):
			if src.shape != rec.shape:
				raise UsageError(f"recovered frame length {rec.size} differs from source length {src.size}")

	@property
	def destinations(self) -> int:
		return len(self.sources)

	def destination_errors(self) -> list[int]:
		return [int(np.count_nonzero(src != rec)) for src, rec in zip(self.sources, self.recovered)]
