from .gf_arith import GfField, GfSymbol, field_for_order, get_field, gf_add, gf_div, gf_inv, gf_mul, gf_pow
from .rs_codec import (
	DecodeStatus,
	RsCode,
	rs_decode,
	rs_decode_batch,
	rs_decode_frame,
	rs_encode,
	rs_encode_frame,
	rs_syndromes,
	validate_params,
)

__all__ = [
	"DecodeStatus",
	"GfField",
	"GfSymbol",
	"RsCode",
	"field_for_order",
	"get_field",
	"gf_add",
	"gf_div",
	"gf_inv",
	"gf_mul",
	"gf_pow",
	"rs_decode",
	"rs_decode_batch",
	"rs_decode_frame",
	"rs_encode",
	"rs_encode_frame",
	"rs_syndromes",
	"validate_params",
]
