from dataclasses import dataclass

from ..topologies.models import ScenarioKind, TopologyKind

# Iterations used by presets unless --full asks for the long profile.
DESK_ITERATIONS = 200
FULL_ITERATIONS = 1000

# One RS code per constellation: n = M - 1, k chosen so k divides 1000 and n-k is large.
PRESET_RS: dict[int, tuple[int, int]] = {8: (7, 2), 16: (15, 5), 32: (31, 10)}

ALL_SCENARIOS = tuple(ScenarioKind)
SCHEMES = (ScenarioKind.NCC_RS_SCHEME1, ScenarioKind.NCC_RS_SCHEME2)


@dataclass(frozen=True)
class Preset:
	name: str
	description: str
	topology: TopologyKind
	scenarios: tuple[ScenarioKind, ...]
	cells: tuple[tuple[int, tuple[int, int]], ...]

	def describe(self) -> str:
		cells = ", ".join(f"{m}-PSK RS({n},{k})" for m, (n, k) in self.cells)
		scenarios = ",".join(s.value for s in self.scenarios)
		return f"topology={self.topology.value} scenarios={scenarios} cells=[{cells}]"


def _all_cells() -> tuple[tuple[int, tuple[int, int]], ...]:
	return tuple(sorted(PRESET_RS.items()))


PRESETS: dict[str, Preset] = {
	p.name: p
	for p in (
		Preset("fig2", "X-structure, 16-PSK, RS(15,5), all five scenarios", TopologyKind.X, ALL_SCENARIOS, ((16, PRESET_RS[16]),)),
		Preset("fig3-x", "X-structure, scheme 1 vs scheme 2", TopologyKind.X, SCHEMES, _all_cells()),
		Preset("fig3-extx", "Extended X-structure, scheme 1 vs scheme 2", TopologyKind.EXTENDED_X, SCHEMES, _all_cells()),
		Preset("fig4-butterfly", "Butterfly network, scheme 1 vs scheme 2", TopologyKind.BUTTERFLY, SCHEMES, _all_cells()),
		Preset(
			"fig4-extbutterfly",
			"Extended butterfly network, scheme 1 vs scheme 2",
			TopologyKind.EXTENDED_BUTTERFLY,
			SCHEMES,
			_all_cells(),
		),
	)
}


def get_preset(name: str) -> Preset:
	try:
		return PRESETS[name]
	except KeyError:
		raise KeyError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
