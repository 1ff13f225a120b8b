import itertools

import numpy as np
import pytest

from app.coding import (
	DecodeStatus,
	rs_decode,
	rs_decode_batch,
	rs_decode_frame,
	rs_encode,
	rs_encode_frame,
	rs_syndromes,
	validate_params,
)
from app.errors import ParameterError, UsageError


@pytest.mark.parametrize(
	"q,n,k,t",
	[(3, 7, 2, 2), (4, 15, 5, 5), (5, 31, 10, 10)],
)
def test_preset_codes_are_valid(q, n, k, t):
	code = validate_params(q, n, k, 1000)
	assert (code.n, code.k, code.t) == (n, k, t)
	assert code.field.order == 1 << q


@pytest.mark.parametrize(
	"q,n,k,frame_len,needle",
	[
		(3, 7, 3, 1000, "divide"),
		(3, 7, 7, 1000, "0 < k < n"),
		(3, 7, 0, 1000, "0 < k < n"),
		(3, 11, 2, 1000, "0 < k < n"),
		(3, 8, 2, 1000, "extended"),
		(2, 3, 1, 1000, "symbol width"),
	],
)
def test_invalid_parameters_name_the_constraint(q, n, k, frame_len, needle):
	with pytest.raises(ParameterError, match=needle):
		validate_params(q, n, k, frame_len)


def test_generator_polynomial_rs72(rs72):
	assert rs72.generator_poly == (1, 4, 3, 5, 6, 2)


def test_known_codeword_rs72(rs72):
	assert rs_encode(rs72, [1, 0]).tolist() == [1, 0, 5, 2, 4, 7, 3]


def test_zero_message_encodes_to_zero(preset_code):
	assert not rs_encode(preset_code, [0] * preset_code.k).any()


def test_codewords_have_zero_syndromes(preset_code, rng):
	msgs = rng.integers(0, preset_code.field.order, size=(200, preset_code.k))
	words = rs_encode_frame(preset_code, msgs.ravel()).reshape(-1, preset_code.n)
	assert not rs_syndromes(preset_code, words).any()


def test_frame_encoder_matches_long_division(preset_code, rng):
	msgs = rng.integers(0, preset_code.field.order, size=(20, preset_code.k))
	frame = rs_encode_frame(preset_code, msgs.ravel()).reshape(-1, preset_code.n)
	for msg, word in zip(msgs, frame):
		assert np.array_equal(rs_encode(preset_code, msg), word)


def test_xor_linearity_exhaustive_rs72(rs72):
	msgs = list(itertools.product(range(8), repeat=2))
	words = {m: rs_encode(rs72, list(m)) for m in msgs}
	for a, b in itertools.product(msgs, msgs):
		combined = (a[0] ^ b[0], a[1] ^ b[1])
		assert np.array_equal(words[a] ^ words[b], words[combined])


def test_xor_of_codewords_is_the_codeword_of_xored_messages(preset_code, rng):
	a = rng.integers(0, preset_code.field.order, size=(300, preset_code.k))
	b = rng.integers(0, preset_code.field.order, size=(300, preset_code.k))
	wa = rs_encode_frame(preset_code, a.ravel()).reshape(-1, preset_code.n)
	wb = rs_encode_frame(preset_code, b.ravel()).reshape(-1, preset_code.n)
	combined = wa ^ wb
	assert not rs_syndromes(preset_code, combined).any()
	assert np.array_equal(combined, rs_encode_frame(preset_code, (a ^ b).ravel()).reshape(-1, preset_code.n))


def test_minimum_distance_exhaustive_rs72(rs72):
	weights = [
		int(np.count_nonzero(rs_encode(rs72, list(msg))))
		for msg in itertools.product(range(8), repeat=2)
		if any(msg)
	]
	assert len(weights) == 63
	assert min(weights) == rs72.n - rs72.k + 1


def _inject(code, words, count, rng):
	noisy = words.copy()
	for row in noisy:
		positions = rng.choice(code.n, size=count, replace=False)
		row[positions] ^= rng.integers(1, code.field.order, size=count)
	return noisy


def test_clean_codeword_decodes_with_zero_corrections(preset_code, rng):
	msg = rng.integers(0, preset_code.field.order, size=preset_code.k)
	decoded, status = rs_decode(preset_code, rs_encode(preset_code, msg))
	assert np.array_equal(decoded, msg)
	assert status == DecodeStatus.corrected(0)
	assert str(status) == "corrected(0)"


def test_corrects_exactly_t_errors(preset_code, rng):
	trials = 10_000
	msgs = rng.integers(0, preset_code.field.order, size=(trials, preset_code.k))
	words = rs_encode_frame(preset_code, msgs.ravel()).reshape(trials, preset_code.n)
	decoded, corrections = rs_decode_batch(preset_code, _inject(preset_code, words, preset_code.t, rng))
	assert np.array_equal(decoded, msgs)
	assert (corrections == preset_code.t).all()


def test_fewer_than_t_errors(preset_code, rng):
	msgs = rng.integers(0, preset_code.field.order, size=(500, preset_code.k))
	words = rs_encode_frame(preset_code, msgs.ravel()).reshape(-1, preset_code.n)
	for count in range(1, preset_code.t):
		decoded, corrections = rs_decode_batch(preset_code, _inject(preset_code, words, count, rng))
		assert np.array_equal(decoded, msgs)
		assert (corrections == count).all()


def test_t_plus_one_errors_never_return_the_original(preset_code, rng):
	trials = 2000
	msgs = rng.integers(0, preset_code.field.order, size=(trials, preset_code.k))
	words = rs_encode_frame(preset_code, msgs.ravel()).reshape(trials, preset_code.n)
	noisy = _inject(preset_code, words, preset_code.t + 1, rng)
	decoded, corrections = rs_decode_batch(preset_code, noisy)
	failed = corrections < 0
	# A failed block hands back its received systematic symbols.
	assert np.array_equal(decoded[failed], noisy[failed, : preset_code.k])
	wrong = ~np.all(decoded == msgs, axis=1)
	assert np.all(failed | wrong)


def test_decode_status_from_count():
	assert DecodeStatus.from_count(-1) == DecodeStatus.failed()
	assert str(DecodeStatus.from_count(-1)) == "failed"
	assert DecodeStatus.from_count(3) == DecodeStatus(ok=True, corrections=3)
	assert str(DecodeStatus.from_count(3)) == "corrected(3)"


def test_frame_round_trip_and_length():
	code = validate_params(4, 15, 5, 1000)
	frame = np.random.default_rng(3).integers(0, 16, size=1000)
	coded = rs_encode_frame(code, frame)
	assert coded.size == 3000
	decoded, statuses = rs_decode_frame(code, coded)
	assert np.array_equal(decoded, frame)
	assert len(statuses) == 200
	assert all(s.ok and s.corrections == 0 for s in statuses)


def test_empty_frame(rs72):
	assert rs_encode_frame(rs72, np.zeros(0, dtype=np.int64)).size == 0
	decoded, statuses = rs_decode_frame(rs72, np.zeros(0, dtype=np.int64))
	assert decoded.size == 0 and statuses == []


def test_length_mismatch_is_usage_error(rs72):
	with pytest.raises(UsageError):
		rs_encode(rs72, [1, 2, 3])
	with pytest.raises(UsageError):
		rs_decode(rs72, [0] * 6)
	with pytest.raises(UsageError):
		rs_encode_frame(rs72, [1, 2, 3])
	with pytest.raises(UsageError):
		rs_decode_frame(rs72, [0] * 8)
	with pytest.raises(UsageError):
		rs_encode(rs72, [8, 0])


def test_matches_reedsolo(preset_code, rng):
	reedsolo = pytest.importorskip("reedsolo")
	codec = reedsolo.RSCodec(
		nsym=preset_code.nsym,
		nsize=preset_code.n,
		fcr=1,
		prim=preset_code.field.primitive_poly,
		generator=2,
		c_exp=preset_code.field.q,
	)
	for _ in range(20):
		msg = rng.integers(0, preset_code.field.order, size=preset_code.k)
		expected = list(codec.encode(bytearray(msg.tolist())))
		assert rs_encode(preset_code, msg).tolist() == expected
