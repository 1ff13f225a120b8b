import numpy as np

from ..phy.channel import amp_factor
from ..phy.psk import modulate
from .base import FramePipeline
from .link import LinkLayer
from .models import TopologyKind


class XStructurePipeline(FramePipeline):
	"""N pairs sharing a single relay R; direct S_i->D_j links for i != j."""

	uplink_relay = "R"

	def __init__(self, pairs: int = 2) -> None:
		super().__init__(pairs)
		self.kind = TopologyKind.X if pairs == 2 else TopologyKind.EXTENDED_X

	def slots(self, network_coded: bool) -> int:
		return self.pairs + 1 if network_coded else 2 * self.pairs

	def _direct_chain(self, index, coded, link: LinkLayer, config) -> np.ndarray:
		p_src = config.source_power(index)
		y_relay, h_relay = link.send(f"S{index + 1}->R", modulate(link.constellation, coded), p_src)
		beta = amp_factor(p_src, config.relay_power, h_relay, link.sigma2(p_src))
		name = f"R->D{index + 1}"
		y, h = link.forward(name, y_relay, h_relay, beta, config.relay_power)
		return link.decide(name, y, h, sent=coded)

	def _broadcast(self, nc_frame, link: LinkLayer, config) -> list[np.ndarray]:
		return [link.hard_hop(f"R->D{j + 1}", nc_frame, config.relay_power) for j in range(self.pairs)]
