import itertools

import numpy as np
import pytest

from app.coding import GfField, GfSymbol, field_for_order, get_field, gf_add, gf_div, gf_inv, gf_mul, gf_pow
from app.errors import FieldDomainError, UsageError


def test_addition_examples(gf16):
	assert gf_add(gf16.symbol(5), gf16.symbol(12)).value == 9
	assert gf_add(gf16.symbol(3), gf16.symbol(5)).value == 6
	for a in range(16):
		assert (gf16.symbol(a) ^ gf16.symbol(a)).value == 0
		assert (gf16.symbol(a) ^ gf16.symbol(0)).value == a


def test_multiplication_examples(gf8):
	assert gf_mul(gf8.symbol(3), gf8.symbol(5)).value == 4
	for a in range(8):
		assert gf8.mul(a, 0) == 0
		assert gf8.mul(a, 1) == a


def test_inverse(gf8):
	assert gf_inv(gf8.symbol(1)).value == 1
	assert gf_inv(gf8.symbol(3)).value == 6
	for a in range(1, 8):
		assert gf8.inv(gf8.inv(a)) == a
		assert gf8.mul(a, gf8.inv(a)) == 1


def test_inverse_of_zero_raises(gf8):
	with pytest.raises(FieldDomainError):
		gf_inv(gf8.symbol(0))
	with pytest.raises(ArithmeticError):
		gf8.div(3, 0)


@pytest.mark.parametrize("q", [3, 4])
def test_field_axioms_exhaustive(q):
	gf = get_field(q)
	elems = range(gf.order)
	for a, b in itertools.product(elems, elems):
		assert gf.mul(a, b) == gf.mul(b, a)
		assert gf.add(a, b) == gf.add(b, a)
	for a, b, c in itertools.product(elems, elems, elems):
		assert gf.mul(gf.mul(a, b), c) == gf.mul(a, gf.mul(b, c))
		assert gf.mul(a, b ^ c) == gf.mul(a, b) ^ gf.mul(a, c)
	for a in range(1, gf.order):
		inverses = [b for b in elems if gf.mul(a, b) == 1]
		assert inverses == [gf.inv(a)]


def test_field_axioms_sampled_gf32(rng):
	gf = get_field(5)
	a, b, c = rng.integers(0, 32, size=(3, 2000))
	assert np.array_equal(gf.mul_array(gf.mul_array(a, b), c), gf.mul_array(a, gf.mul_array(b, c)))
	assert np.array_equal(gf.mul_array(a, b ^ c), gf.mul_array(a, b) ^ gf.mul_array(a, c))
	assert np.array_equal(gf.mul_array(a, b), gf.mul_array(b, a))


def test_tables_match_shift_and_reduce(gf16):
	for a in range(16):
		for b in range(16):
			assert gf16.mul(a, b) == gf16._mul_raw(a, b)


def test_array_ops_match_scalar(gf16):
	a = np.arange(16).repeat(15)
	b = np.tile(np.arange(1, 16), 16)
	prod = gf16.mul_array(a, b)
	quot = gf16.div_array(a, b)
	for x, y, p, d in zip(a, b, prod, quot):
		assert p == gf16.mul(int(x), int(y))
		assert d == gf16.div(int(x), int(y))


def test_div_array_rejects_zero(gf8):
	with pytest.raises(FieldDomainError):
		gf8.div_array(np.array([1, 2]), np.array([1, 0]))


def test_div_and_pow(gf16):
	a, b = gf16.symbol(7), gf16.symbol(11)
	assert gf_mul(gf_div(a, b), b) == a
	assert gf_pow(a, 0).value == 1
	assert gf_pow(a, 15).value == 1
	assert gf_pow(a, 3) == a * a * a
	assert gf_pow(a, -1) == gf_inv(a)
	assert gf_pow(gf16.symbol(0), 4).value == 0
	with pytest.raises(FieldDomainError):
		gf_pow(gf16.symbol(0), -1)


def test_field_mismatch_is_usage_error(gf8, gf16):
	with pytest.raises(UsageError):
		gf_add(gf8.symbol(1), gf16.symbol(1))
	with pytest.raises(UsageError):
		gf_mul(gf8.symbol(1), gf16.symbol(1))


def test_symbol_range_checked(gf8):
	with pytest.raises(UsageError):
		GfSymbol(gf8, 8)
	with pytest.raises(UsageError):
		gf8.symbol(-1)


def test_non_primitive_polynomial_rejected():
	# x^4 + x^3 + x^2 + x + 1 is irreducible but has order 5.
	with pytest.raises(UsageError):
		GfField(4, 0b11111)


def test_field_for_order():
	assert field_for_order(32).q == 5
	assert field_for_order(8) is get_field(3)
	with pytest.raises(UsageError):
		field_for_order(12)
