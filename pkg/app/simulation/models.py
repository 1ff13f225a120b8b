import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..coding.rs_codec import RsCode, validate_params
from ..config.config import DEFAULT_SEED
from ..phy.channel import EqualizerMode
from ..phy.psk import SUPPORTED_ORDERS, Labeling, PskConstellation, get_constellation
from ..topologies.models import ScenarioKind, TopologyKind

# Points with fewer error events than this are reported as under-resolved.
MIN_RESOLVED_ERRORS = 10


def default_snr_grid() -> list[float]:
	return [float(snr) for snr in range(0, 27, 2)]


def field_order_for(n: int) -> int:
	"""Smallest GF(2^q) holding a length-n code: 2^q > n."""
	return 1 << n.bit_length()


class ScenarioConfig(BaseModel):
	model_config = ConfigDict(frozen=True)

	topology: TopologyKind
	scenario: ScenarioKind
	m: int
	rs: Optional[tuple[int, int]] = None
	frame_len: int = Field(default=1000, ge=1)
	iterations: int = Field(default=1000, ge=1)
	snr_grid: list[float] = Field(default_factory=default_snr_grid)
	source_powers: Optional[list[float]] = None
	relay_power: float = Field(default=1.0, gt=0)
	relay2_power: float = Field(default=1.0, gt=0)
	seed: int = DEFAULT_SEED
	equalizer: EqualizerMode = EqualizerMode.ZERO_FORCING
	labeling: Labeling = Labeling.NATURAL

	@field_validator("m")
	@classmethod
	def _check_order(cls, value: int) -> int:
		if value not in SUPPORTED_ORDERS:
			raise ValueError(f"M must be one of {SUPPORTED_ORDERS}, got {value}")
		return value

	@field_validator("snr_grid")
	@classmethod
	def _check_grid(cls, value: list[float]) -> list[float]:
		if not value:
			raise ValueError("snr_grid must not be empty")
		if any(math.isnan(v) for v in value):
			raise ValueError("snr_grid must not contain NaN")
		if any(b <= a for a, b in zip(value, value[1:])):
			raise ValueError("snr_grid must be strictly increasing")
		return value

	@field_validator("source_powers")
	@classmethod
	def _check_powers(cls, value: Optional[list[float]]) -> Optional[list[float]]:
		if value is not None and any(not p > 0 for p in value):
			raise ValueError("source powers must be positive")
		return value

	@model_validator(mode="after")
	def _check_coding(self) -> "ScenarioConfig":
		if self.scenario.uses_rs and self.rs is None:
			raise ValueError(f"scenario {self.scenario.value} needs RS parameters")
		if self.rs is not None:
			n, _ = self.rs
			order = field_order_for(n)
			if order != self.m:
				raise ValueError(f"RS({n},{self.rs[1]}) lives in GF({order}) but M={self.m}: field order mismatch")
			self.rs_code()
		if self.source_powers is not None and len(self.source_powers) < self.pairs:
			raise ValueError(f"{self.topology.value} needs {self.pairs} source powers, got {len(self.source_powers)}")
		return self

	@property
	def pairs(self) -> int:
		return self.topology.pairs

	def rs_code(self) -> RsCode | None:
		if self.rs is None:
			return None
		n, k = self.rs
		return validate_params(field_order_for(n).bit_length() - 1, n, k, self.frame_len)

	def constellation(self) -> PskConstellation:
		return get_constellation(self.m, self.labeling)

	def source_power(self, index: int) -> float:
		if self.source_powers is None:
			return 1.0
		return self.source_powers[index]

	def with_scenario(self, scenario: ScenarioKind | str) -> "ScenarioConfig":
		return ScenarioConfig.model_validate({**self.model_dump(), "scenario": ScenarioKind(scenario)})


class SerPoint(BaseModel):
	snr_db: float
	errors: int
	symbols: int
	ser: float
	ci95: float
	destination_errors: list[int] = []
	rs_failures: int = 0
	fading_nulls: int = 0
	link_error_rates: dict[str, float] = {}

	@property
	def under_resolved(self) -> bool:
		return self.errors < MIN_RESOLVED_ERRORS


class SerCurve(BaseModel):
	config: ScenarioConfig
	points: list[SerPoint]
	monotonic_violations: list[float] = []


class SchemeComparison(BaseModel):
	scheme1: SerCurve
	scheme2: SerCurve
	ratios: list[Optional[float]]
