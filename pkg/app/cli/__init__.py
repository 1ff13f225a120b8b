from .commands import list_presets, metrics_table, outage_report, render_summary, run
from .presets import PRESETS, Preset, get_preset
from .spec import ExperimentSpec, add_run_arguments, build_spec, parse_args

__all__ = [
	"ExperimentSpec",
	"PRESETS",
	"Preset",
	"add_run_arguments",
	"build_spec",
	"get_preset",
	"list_presets",
	"metrics_table",
	"outage_report",
	"parse_args",
	"render_summary",
	"run",
]
