from .channel import (
	ChannelRealization,
	EqualizerMode,
	LinkBudget,
	af_forward,
	amp_factor,
	equalize,
	fading_nulls,
	snr_to_sigma2,
	transmit,
)
from .psk import Labeling, PskConstellation, demodulate, get_constellation, modulate

__all__ = [
	"ChannelRealization",
	"EqualizerMode",
	"Labeling",
	"LinkBudget",
	"PskConstellation",
	"af_forward",
	"amp_factor",
	"demodulate",
	"equalize",
	"fading_nulls",
	"get_constellation",
	"modulate",
	"snr_to_sigma2",
	"transmit",
]
