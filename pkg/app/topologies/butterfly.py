import numpy as np

from ..phy.channel import amp_factor
from ..phy.psk import modulate
from .base import FramePipeline
from .link import LinkLayer
from .models import TopologyKind


class ButterflyPipeline(FramePipeline):
	"""Two relays in series: R1 network-codes, R2 amplifies and forwards.

	Without network coding every pair's frame crosses S_i -> R1 -> R2 -> D_i
	with both relays in amplify-and-forward mode, one slot per hop.
	"""

	uplink_relay = "R1"

	def __init__(self, pairs: int = 2) -> None:
		super().__init__(pairs)
		self.kind = TopologyKind.BUTTERFLY if pairs == 2 else TopologyKind.EXTENDED_BUTTERFLY

	def slots(self, network_coded: bool) -> int:
		return self.pairs + 2 if network_coded else 3 * self.pairs

	def _direct_chain(self, index, coded, link: LinkLayer, config) -> np.ndarray:
		p_src = config.source_power(index)
		y1, h1 = link.send(f"S{index + 1}->R1", modulate(link.constellation, coded), p_src)
		beta1 = amp_factor(p_src, config.relay_power, h1, link.sigma2(p_src))
		# Each pair occupies its own R1->R2 slot.
		y2, h2 = link.forward(f"R1->R2:{index + 1}", y1, h1, beta1, config.relay_power)
		beta2 = amp_factor(config.relay_power, config.relay2_power, h2, link.sigma2(config.relay_power))
		name = f"R2->D{index + 1}"
		y3, h3 = link.forward(name, y2, h2, beta2, config.relay2_power)
		return link.decide(name, y3, h3, sent=coded)

	def _broadcast(self, nc_frame, link: LinkLayer, config) -> list[np.ndarray]:
		y, h = link.send("R1->R2", modulate(link.constellation, nc_frame), config.relay_power)
		beta = amp_factor(config.relay_power, config.relay2_power, h, link.sigma2(config.relay_power))
		decided = []
		for j in range(self.pairs):
			name = f"R2->D{j + 1}"
			y_out, h_out = link.forward(name, y, h, beta, config.relay2_power)
			decided.append(link.decide(name, y_out, h_out, sent=nc_frame))
		return decided
