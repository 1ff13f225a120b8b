from .harness import compare_schemes, estimate_ser, monotonic_violations, snr_sweep
from .models import SchemeComparison, ScenarioConfig, SerCurve, SerPoint, default_snr_grid
from .oracle import psk_ser_awgn, psk_ser_rayleigh, wilson_half_width, wilson_interval
from .rng import FrameStreams, derive_stream

__all__ = [
	"FrameStreams",
	"SchemeComparison",
	"ScenarioConfig",
	"SerCurve",
	"SerPoint",
	"compare_schemes",
	"default_snr_grid",
	"derive_stream",
	"estimate_ser",
	"monotonic_violations",
	"psk_ser_awgn",
	"psk_ser_rayleigh",
	"snr_sweep",
	"wilson_half_width",
	"wilson_interval",
]
