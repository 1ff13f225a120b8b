import numpy as np
import pytest

from app.coding import rs_encode_frame, rs_syndromes
from app.errors import UsageError
from app.netcode import NcCombination, nc_combine, nc_combine_frames, nc_extract, nc_extract_frames


def test_combine_and_extract_symbols(gf16):
	nc = nc_combine([gf16.symbol(5), gf16.symbol(12)])
	assert nc.value == 9
	assert nc_extract(gf16.symbol(9), [gf16.symbol(12)]).value == 5
	assert nc_combine([gf16.symbol(7)]).value == 7
	assert nc_extract(gf16.symbol(7), []).value == 7


def test_xor_is_its_own_inverse(gf16):
	for a in range(16):
		for b in range(16):
			combined = nc_combine([gf16.symbol(a), gf16.symbol(b)])
			assert nc_combine([combined, gf16.symbol(b)]).value == a


def test_four_flow_cancellation(rng):
	frames = [rng.integers(0, 32, size=500) for _ in range(4)]
	nc = nc_combine_frames(frames)
	assert np.array_equal(nc_extract_frames(nc, frames[1:]), frames[0])
	assert np.array_equal(nc_extract_frames(nc, [frames[0], frames[2], frames[3]]), frames[1])


def test_xor_of_codewords_is_a_codeword(rs72, rng):
	a = rs_encode_frame(rs72, rng.integers(0, 8, size=200))
	b = rs_encode_frame(rs72, rng.integers(0, 8, size=200))
	combined = nc_combine_frames([a, b]).reshape(-1, rs72.n)
	assert not rs_syndromes(rs72, combined).any()


def test_empty_and_ragged_inputs_rejected(gf8):
	with pytest.raises(UsageError):
		nc_combine([])
	with pytest.raises(UsageError):
		nc_combine_frames([])
	with pytest.raises(UsageError):
		nc_combine_frames([np.zeros(3, dtype=np.int64), np.zeros(4, dtype=np.int64)])


def test_combination_checks_arity_and_field(gf8):
	combo = NcCombination(arity=2, field=gf8)
	assert combo.combine([np.array([1, 2]), np.array([3, 3])]).tolist() == [2, 1]
	with pytest.raises(UsageError):
		combo.combine([np.array([1])])
	with pytest.raises(UsageError):
		combo.combine([np.array([8]), np.array([0])])
	with pytest.raises(UsageError):
		NcCombination(arity=0, field=gf8)
