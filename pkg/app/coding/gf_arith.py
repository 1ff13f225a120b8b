"""Arithmetic over GF(2^q).

Elements are integers whose binary digits are the coefficients of a
polynomial over GF(2), reduced modulo a fixed primitive polynomial.
Scalar operations use Python lists for speed on single symbols; the
``*_array`` variants operate on numpy integer arrays for frame-level work.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import FieldDomainError, UsageError

# Conventional minimal-weight primitive polynomials, keyed by q.
PRIMITIVE_POLYS: dict[int, int] = {
	3: 0b1011,
	4: 0b10011,
	5: 0b100101,
	6: 0b1000011,
	7: 0b10001001,
	8: 0b100011101,
	9: 0x211,
	10: 0x409,
	11: 0x805,
	12: 0x1053,
	13: 0x201B,
	14: 0x4443,
	15: 0x8003,
	16: 0x1100B,
}

# Exhaustive multiply cross-check is only run for fields up to this order.
_CROSS_CHECK_MAX_ORDER = 256


class GfField:
	def __init__(self, q: int, primitive_poly: int | None = None) -> None:
		if not 2 < q <= 16:
			raise UsageError(f"GF(2^q) requires 2 < q <= 16, got q={q}")
		poly = primitive_poly if primitive_poly is not None else PRIMITIVE_POLYS[q]
		if poly.bit_length() != q + 1:
			raise UsageError(f"primitive polynomial {poly:#b} does not have degree {q}")
		self.q = q
		self.order = 1 << q
		self.primitive_poly = poly
		n = self.order - 1
		exp = [0] * (2 * n)
		log = [0] * self.order
		seen = set()
		val = 1
		for i in range(n):
			if val in seen:
				raise UsageError(f"polynomial {poly:#b} is not primitive over GF(2)")
			seen.add(val)
			exp[i] = val
			log[val] = i
			val = self._mul_raw(val, 2)
		if len(seen) != n or val != 1:
			raise UsageError(f"polynomial {poly:#b} is not primitive over GF(2)")
		for i in range(n, 2 * n):
			exp[i] = exp[i - n]
		self._exp = exp
		self._log = log
		self.exp_table = np.asarray(exp, dtype=np.int64)
		self.log_table = np.asarray(log, dtype=np.int64)
		self.exp_table.setflags(write=False)
		self.log_table.setflags(write=False)
		if self.order <= _CROSS_CHECK_MAX_ORDER:
			self._cross_check()

	def __repr__(self) -> str:
		return f"GfField(q={self.q}, primitive_poly={self.primitive_poly:#b})"

	def _mul_raw(self, a: int, b: int) -> int:
		"""Shift-and-reduce multiply; the oracle for the table-driven path."""
		p = 0
		top = 1 << self.q
		while b:
			if b & 1:
				p ^= a
			a <<= 1
			if a & top:
				a ^= self.primitive_poly
			b >>= 1
		return p

	def _cross_check(self) -> None:
		for a in range(self.order):
			for b in range(a, self.order):
				if self.mul(a, b) != self._mul_raw(a, b):
					raise UsageError(f"log/exp tables disagree with shift-and-reduce at {a}*{b}")

	def contains(self, value: int) -> bool:
		return 0 <= value < self.order

	def check_frame(self, values: np.ndarray) -> np.ndarray:
		arr = np.asarray(values, dtype=np.int64)
		if arr.size and (arr.min() < 0 or arr.max() >= self.order):
			raise UsageError(f"frame contains values outside GF({self.order})")
		return arr

	def symbol(self, value: int) -> "GfSymbol":
		return GfSymbol(self, int(value))

	# scalar operations

	def add(self, a: int, b: int) -> int:
		return a ^ b

	def mul(self, a: int, b: int) -> int:
		if a == 0 or b == 0:
			return 0
		return self._exp[self._log[a] + self._log[b]]

	def inv(self, a: int) -> int:
		if a == 0:
			raise FieldDomainError(f"zero has no multiplicative inverse in GF({self.order})")
		return self._exp[(self.order - 1) - self._log[a]]

	def div(self, a: int, b: int) -> int:
		return self.mul(a, self.inv(b))

	def alpha_pow(self, power: int) -> int:
		"""alpha**power for any integer power, alpha being the primitive element x."""
		return self._exp[power % (self.order - 1)]

	def log(self, a: int) -> int:
		if a == 0:
			raise FieldDomainError("log of zero is undefined")
		return self._log[a]

	# array operations

	def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
		a = np.asarray(a, dtype=np.int64)
		b = np.asarray(b, dtype=np.int64)
		out = self.exp_table[self.log_table[a] + self.log_table[b]]
		return np.where((a == 0) | (b == 0), 0, out)

	def div_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
		a = np.asarray(a, dtype=np.int64)
		b = np.asarray(b, dtype=np.int64)
		if np.any(b == 0):
			raise FieldDomainError("division by zero in GF array operation")
		out = self.exp_table[(self.log_table[a] - self.log_table[b]) % (self.order - 1)]
		return np.where(a == 0, 0, out)

	def alpha_pow_array(self, powers: np.ndarray) -> np.ndarray:
		return self.exp_table[np.asarray(powers, dtype=np.int64) % (self.order - 1)]


@lru_cache(maxsize=None)
def get_field(q: int) -> GfField:
	return GfField(q)


def field_for_order(order: int) -> GfField:
	q = order.bit_length() - 1
	if order <= 0 or (1 << q) != order:
		raise UsageError(f"field order must be a power of two, got {order}")
	return get_field(q)


@dataclass(frozen=True)
class GfSymbol:
	field: GfField
	value: int

	def __post_init__(self) -> None:
		if not self.field.contains(self.value):
			raise UsageError(f"symbol {self.value} outside GF({self.field.order})")

	def __int__(self) -> int:
		return self.value

	def __xor__(self, other: "GfSymbol") -> "GfSymbol":
		return gf_add(self, other)

	def __mul__(self, other: "GfSymbol") -> "GfSymbol":
		return gf_mul(self, other)


def _same_field(a: GfSymbol, b: GfSymbol) -> GfField:
	if a.field is b.field:
		return a.field
	if a.field.q != b.field.q or a.field.primitive_poly != b.field.primitive_poly:
		raise UsageError(f"field mismatch: GF({a.field.order}) vs GF({b.field.order})")
	return a.field


def gf_add(a: GfSymbol, b: GfSymbol) -> GfSymbol:
	field = _same_field(a, b)
	return GfSymbol(field, a.value ^ b.value)


def gf_mul(a: GfSymbol, b: GfSymbol) -> GfSymbol:
	field = _same_field(a, b)
	return GfSymbol(field, field.mul(a.value, b.value))


def gf_inv(a: GfSymbol) -> GfSymbol:
	return GfSymbol(a.field, a.field.inv(a.value))


def gf_div(a: GfSymbol, b: GfSymbol) -> GfSymbol:
	field = _same_field(a, b)
	return GfSymbol(field, field.div(a.value, b.value))


def gf_pow(a: GfSymbol, exponent: int) -> GfSymbol:
	if a.value == 0:
		if exponent < 0:
			raise FieldDomainError("negative power of zero")
		return GfSymbol(a.field, 1 if exponent == 0 else 0)
	field = a.field
	return GfSymbol(field, field.alpha_pow(field.log(a.value) * exponent))
