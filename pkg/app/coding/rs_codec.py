"""Systematic Reed-Solomon codes over GF(2^q).

Polynomials are big-endian: index 0 of a codeword holds the coefficient of
x^(n-1). A codeword is the k message symbols followed by the n-k parity
symbols of msg(x) * x^(n-k) mod g(x), where g has the consecutive roots
alpha^fcr ... alpha^(fcr+n-k-1).

Decoding is bounded-distance: Berlekamp-Massey, Chien search and Forney,
vectorized over blocks with numpy. Blocks that cannot be corrected keep
their received symbols and are reported as failed.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from dataclasses import field as dc_field
from functools import lru_cache

import numpy as np

from ..errors import ParameterError, UsageError
from .gf_arith import GfField, get_field

_LOGGER = logging.getLogger(__name__)
_xor_reduce = np.bitwise_xor.reduce


@dataclass(frozen=True)
class DecodeStatus:
	ok: bool
	corrections: int = 0

	@classmethod
	def corrected(cls, count: int) -> "DecodeStatus":
		return cls(ok=True, corrections=count)

	@classmethod
	def failed(cls) -> "DecodeStatus":
		return cls(ok=False, corrections=0)

	@classmethod
	def from_count(cls, count: int) -> "DecodeStatus":
		return cls.corrected(int(count)) if count >= 0 else cls.failed()

	def __str__(self) -> str:
		return f"corrected({self.corrections})" if self.ok else "failed"


@dataclass(frozen=True, eq=False)
class RsCode:
	field: GfField
	n: int
	k: int
	fcr: int = 1
	generator_poly: tuple[int, ...] = dc_field(init=False)
	parity_matrix: np.ndarray = dc_field(init=False, repr=False)
	check_matrix: np.ndarray = dc_field(init=False, repr=False)
	chien_matrix: np.ndarray = dc_field(init=False, repr=False)
	forney_scale: np.ndarray = dc_field(init=False, repr=False)

	def __post_init__(self) -> None:
		if not 0 < self.k < self.n <= self.field.order - 1:
			raise ParameterError(f"RS({self.n},{self.k}) needs 0 < k < n <= {self.field.order - 1} in GF({self.field.order})")
		gf = self.field
		gen = [1]
		for j in range(self.nsym):
			root = gf.alpha_pow(self.fcr + j)
			nxt = gen + [0]
			for i, coef in enumerate(gen):
				nxt[i + 1] ^= gf.mul(coef, root)
			gen = nxt
		object.__setattr__(self, "generator_poly", tuple(gen))

		parity = np.zeros((self.k, self.nsym), dtype=np.int64)
		for i in range(self.k):
			unit = [0] * self.k
			unit[i] = 1
			parity[i] = self._long_division(unit)
		degrees = self.n - 1 - np.arange(self.n)
		roots = self.fcr + np.arange(self.nsym)
		check = gf.alpha_pow_array(degrees[:, None] * roots[None, :])
		chien = gf.alpha_pow_array(-(np.arange(self.nsym + 1)[:, None] * degrees[None, :]))
		scale = gf.alpha_pow_array((1 - self.fcr) * degrees)
		for name, table in (("parity_matrix", parity), ("check_matrix", check), ("chien_matrix", chien), ("forney_scale", scale)):
			table.setflags(write=False)
			object.__setattr__(self, name, table)

	def __repr__(self) -> str:
		return f"RsCode(GF({self.field.order}), n={self.n}, k={self.k}, t={self.t})"

	@property
	def nsym(self) -> int:
		return self.n - self.k

	@property
	def t(self) -> int:
		return self.nsym // 2

	@property
	def rate(self) -> float:
		return self.k / self.n

	def _long_division(self, msg: Sequence[int]) -> list[int]:
		gf = self.field
		buf = list(msg) + [0] * self.nsym
		gen = self.generator_poly
		for i in range(self.k):
			coef = buf[i]
			if coef:
				for j in range(1, len(gen)):
					buf[i + j] ^= gf.mul(gen[j], coef)
		return buf[self.k:]


@lru_cache(maxsize=None)
def _code_for(q: int, n: int, k: int) -> RsCode:
	return RsCode(get_field(q), n, k)


def validate_params(q: int, n: int, k: int, frame_len: int) -> RsCode:
	if not 2 < q <= 16:
		raise ParameterError(f"symbol width q={q} is outside the supported range 2 < q <= 16")
	if not 0 < k < n < (1 << q) + 2:
		raise ParameterError(f"RS({n},{k}) violates 0 < k < n < 2^q + 2 for q={q}")
	if n >= 1 << q:
		raise ParameterError(f"RS({n},{k}) is an extended code (n >= 2^q); only n <= 2^q - 1 is supported")
	if frame_len < 0 or frame_len % k:
		raise ParameterError(f"k={k} does not divide frame length {frame_len}")
	return _code_for(q, n, k)


def _as_symbols(code: RsCode, values: Sequence[int] | np.ndarray) -> np.ndarray:
	if isinstance(values, np.ndarray):
		return code.field.check_frame(values)
	return code.field.check_frame(np.fromiter((int(v) for v in values), dtype=np.int64, count=len(values)))


def rs_encode(code: RsCode, msg: Sequence[int] | np.ndarray) -> np.ndarray:
	symbols = _as_symbols(code, msg)
	if symbols.shape != (code.k,):
		raise UsageError(f"message must hold exactly k={code.k} symbols, got {symbols.size}")
	parity = code._long_division(symbols.tolist())
	return np.concatenate([symbols, np.asarray(parity, dtype=np.int64)])


def rs_encode_frame(code: RsCode, frame: Sequence[int] | np.ndarray) -> np.ndarray:
	symbols = _as_symbols(code, frame)
	if symbols.ndim != 1 or symbols.size % code.k:
		raise UsageError(f"frame length {symbols.size} is not a multiple of k={code.k}")
	blocks = symbols.reshape(-1, code.k)
	if not blocks.shape[0]:
		return np.zeros(0, dtype=np.int64)
	parity = _xor_reduce(code.field.mul_array(blocks[:, :, None], code.parity_matrix[None]), axis=1)
	return np.hstack([blocks, parity]).ravel()


def rs_syndromes(code: RsCode, words: np.ndarray) -> np.ndarray:
	"""Syndromes r(alpha^(fcr+j)), j < n-k, for every row of ``words`` (shape (B, n))."""
	words = np.asarray(words, dtype=np.int64).reshape(-1, code.n)
	if not words.shape[0]:
		return np.zeros((0, code.nsym), dtype=np.int64)
	return _xor_reduce(code.field.mul_array(words[:, :, None], code.check_matrix[None]), axis=1)


def rs_decode_batch(code: RsCode, words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
	"""Decode a (B, n) array of received words.

	Returns the (B, k) messages and the per-block correction count, -1 marking
	a failed block whose message is the received systematic part.
	"""
	words = code.field.check_frame(words)
	if words.ndim != 2 or words.shape[1] != code.n:
		raise UsageError(f"received words must have shape (B, {code.n}), got {words.shape}")
	corrections = np.zeros(words.shape[0], dtype=np.int64)
	out = words.copy()
	if not words.shape[0]:
		return out[:, : code.k], corrections
	synd = rs_syndromes(code, words)
	dirty = np.flatnonzero(synd.any(axis=1))
	if dirty.size:
		fixed, count = _correct(code, words[dirty], synd[dirty])
		out[dirty] = fixed
		corrections[dirty] = count
	return out[:, : code.k], corrections


def _correct(code: RsCode, words: np.ndarray, synd: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
	gf = code.field
	nsym = code.nsym
	batch = words.shape[0]
	rows = np.arange(batch)[:, None]
	cols = np.arange(nsym + 1)[None, :]

	# Berlekamp-Massey, one row per block.
	lam = np.zeros((batch, nsym + 1), dtype=np.int64)
	lam[:, 0] = 1
	prev = lam.copy()
	length = np.zeros(batch, dtype=np.int64)
	shift = np.ones(batch, dtype=np.int64)
	last = np.ones(batch, dtype=np.int64)
	for r in range(nsym):
		d = synd[:, r].copy()
		if r:
			d ^= _xor_reduce(gf.mul_array(lam[:, 1 : r + 1], synd[:, r - 1 :: -1]), axis=1)
		nz = d != 0
		if not nz.any():
			shift += 1
			continue
		coef = gf.div_array(d, last)
		src = cols - shift[:, None]
		shifted = np.where(src >= 0, prev[rows, np.clip(src, 0, None)], 0)
		cand = lam ^ gf.mul_array(coef[:, None], shifted)
		grow = nz & (2 * length <= r)
		prev = np.where(grow[:, None], lam, prev)
		last = np.where(grow, d, last)
		length = np.where(grow, r + 1 - length, length)
		shift = np.where(grow, 1, shift + 1)
		lam = np.where(nz[:, None], cand, lam)

	degree = np.max(np.where(lam != 0, cols, 0), axis=1)
	ok = (length <= code.t) & (degree == length)

	# Chien search: position i is in error iff lam(alpha^-(n-1-i)) == 0.
	chien = code.chien_matrix
	roots = _xor_reduce(gf.mul_array(lam[:, :, None], chien[None]), axis=1) == 0
	ok &= roots.sum(axis=1) == length

	# Forney: e = X^(1-fcr) * omega(X^-1) / lam'(X^-1), omega = S*lam mod x^(n-k).
	omega = np.zeros((batch, nsym), dtype=np.int64)
	for j in range(nsym):
		omega[:, j] = _xor_reduce(gf.mul_array(synd[:, : j + 1], lam[:, j::-1]), axis=1)
	omega_val = _xor_reduce(gf.mul_array(omega[:, :, None], chien[None, :nsym]), axis=1)
	odd = np.arange(1, nsym + 1, 2)
	dlam_val = _xor_reduce(gf.mul_array(lam[:, odd, None], chien[None, odd - 1]), axis=1)
	ok &= ~np.any(roots & (dlam_val == 0), axis=1)
	magnitude = gf.div_array(omega_val, np.where(dlam_val == 0, 1, dlam_val))
	if code.fcr != 1:
		magnitude = gf.mul_array(magnitude, code.forney_scale[None, :])
	errors = np.where(roots, magnitude, 0)
	fixed = words ^ errors
	ok &= ~rs_syndromes(code, fixed).any(axis=1)

	count = np.where(ok, np.count_nonzero(errors, axis=1), -1)
	_LOGGER.debug("RS batch decoded", extra={"blocks": batch, "failed": int(np.sum(~ok))})
	return np.where(ok[:, None], fixed, words), count


def rs_decode(code: RsCode, word: Sequence[int] | np.ndarray) -> tuple[np.ndarray, DecodeStatus]:
	symbols = _as_symbols(code, word)
	if symbols.shape != (code.n,):
		raise UsageError(f"received word must hold exactly n={code.n} symbols, got {symbols.size}")
	msgs, count = rs_decode_batch(code, symbols.reshape(1, code.n))
	return msgs[0], DecodeStatus.from_count(int(count[0]))


def rs_decode_frame(code: RsCode, coded: Sequence[int] | np.ndarray) -> tuple[np.ndarray, list[DecodeStatus]]:
	symbols = _as_symbols(code, coded)
	if symbols.ndim != 1 or symbols.size % code.n:
		raise UsageError(f"coded frame length {symbols.size} is not a multiple of n={code.n}")
	msgs, counts = rs_decode_batch(code, symbols.reshape(-1, code.n))
	return msgs.ravel(), [DecodeStatus.from_count(int(c)) for c in counts]
