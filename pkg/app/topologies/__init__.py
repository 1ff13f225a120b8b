from .base import FramePipeline
from .butterfly import ButterflyPipeline
from .metrics import outage_probability, simulate_outage, slot_counts, theoretical_metrics
from .models import (
	FrameContext,
	FrameDiagnostics,
	FrameResult,
	ScenarioKind,
	Topology,
	TopologyKind,
)
from .single_link import SingleLinkPipeline
from .x_structure import XStructurePipeline

_PIPELINES: dict[TopologyKind, FramePipeline] = {
	TopologyKind.X: XStructurePipeline(TopologyKind.X.pairs),
	TopologyKind.EXTENDED_X: XStructurePipeline(TopologyKind.EXTENDED_X.pairs),
	TopologyKind.BUTTERFLY: ButterflyPipeline(TopologyKind.BUTTERFLY.pairs),
	TopologyKind.EXTENDED_BUTTERFLY: ButterflyPipeline(TopologyKind.EXTENDED_BUTTERFLY.pairs),
}
_SINGLE_LINK = SingleLinkPipeline()


def get_pipeline(kind: TopologyKind | str) -> FramePipeline:
	return _PIPELINES[TopologyKind(kind)]


def run_frame_x(scenario, config, ctx: FrameContext) -> FrameResult:
	return _PIPELINES[TopologyKind.X].run_frame(scenario, config, ctx)


def run_frame_extended_x(scenario, config, ctx: FrameContext) -> FrameResult:
	return _PIPELINES[TopologyKind.EXTENDED_X].run_frame(scenario, config, ctx)


def run_frame_butterfly(scenario, config, ctx: FrameContext) -> FrameResult:
	return _PIPELINES[TopologyKind.BUTTERFLY].run_frame(scenario, config, ctx)


def run_frame_extended_butterfly(scenario, config, ctx: FrameContext) -> FrameResult:
	return _PIPELINES[TopologyKind.EXTENDED_BUTTERFLY].run_frame(scenario, config, ctx)


def run_frame_single_link(scenario, config, ctx: FrameContext) -> FrameResult:
	return _SINGLE_LINK.run_frame(scenario, config, ctx)


__all__ = [
	"ButterflyPipeline",
	"FrameContext",
	"FrameDiagnostics",
	"FramePipeline",
	"FrameResult",
	"ScenarioKind",
	"SingleLinkPipeline",
	"Topology",
	"TopologyKind",
	"XStructurePipeline",
	"get_pipeline",
	"outage_probability",
	"run_frame_butterfly",
	"run_frame_extended_butterfly",
	"run_frame_extended_x",
	"run_frame_single_link",
	"run_frame_x",
	"simulate_outage",
	"slot_counts",
	"theoretical_metrics",
]
