import numpy as np

from .base import FramePipeline
from .link import LinkLayer


class SingleLinkPipeline(FramePipeline):
	"""One S1 -> D1 hop, used to calibrate against the closed-form SER."""

	uplink_relay = "D1"
	supports_network_coding = False

	def __init__(self) -> None:
		super().__init__(1)

	def slots(self, network_coded: bool) -> int:
		return 1

	def _direct_chain(self, index, coded, link: LinkLayer, config) -> np.ndarray:
		return link.hard_hop("S1->D1", coded, config.source_power(0))
