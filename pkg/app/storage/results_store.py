import csv
import io
import json
import logging
import math
import os
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from ..simulation.models import SerCurve
from .file_lock import FileLock

_LOGGER = logging.getLogger(__name__)

CSV_COLUMNS = (
	"topology",
	"scenario",
	"m",
	"rs_n",
	"rs_k",
	"snr_db",
	"ser",
	"errors",
	"symbols",
	"ci95",
	"iterations",
	"seed",
)
FORMATS = ("csv", "json")

_INT_COLUMNS = {"m", "errors", "symbols", "iterations", "seed"}
_FLOAT_COLUMNS = {"snr_db", "ser", "ci95"}


def curve_rows(curves: Iterable[SerCurve]) -> list[dict[str, Any]]:
	rows = []
	for curve in curves:
		cfg = curve.config
		rs_n, rs_k = cfg.rs if cfg.rs is not None else (None, None)
		for point in curve.points:
			rows.append(
				{
					"topology": cfg.topology.value,
					"scenario": cfg.scenario.value,
					"m": cfg.m,
					"rs_n": rs_n,
					"rs_k": rs_k,
					"snr_db": point.snr_db,
					"ser": point.ser,
					"errors": point.errors,
					"symbols": point.symbols,
					"ci95": point.ci95,
					"iterations": cfg.iterations,
					"seed": cfg.seed,
				}
			)
	return rows


def render_csv(rows: list[dict[str, Any]]) -> str:
	buf = io.StringIO()
	# str(float) is the shortest repr that round-trips exactly.
	writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
	writer.writeheader()
	for row in rows:
		writer.writerow({key: "" if row[key] is None else row[key] for key in CSV_COLUMNS})
	return buf.getvalue()


def _json_safe(value: Any) -> Any:
	"""Non-finite floats become the strings "inf", "-inf" and "nan"."""
	if isinstance(value, float) and not math.isfinite(value):
		return str(value)
	if isinstance(value, dict):
		return {key: _json_safe(item) for key, item in value.items()}
	if isinstance(value, (list, tuple)):
		return [_json_safe(item) for item in value]
	return value


def render_json(curves: Iterable[SerCurve]) -> str:
	payload = {
		"columns": list(CSV_COLUMNS),
		"curves": [
			{
				"config": curve.config.model_dump(mode="json"),
				"rows": curve_rows([curve]),
				"points": [p.model_dump(mode="json") for p in curve.points],
				"monotonic_violations": curve.monotonic_violations,
			}
			for curve in curves
		],
	}
	return json.dumps(_json_safe(payload), ensure_ascii=False, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _atomic_write(path: Path, text: str) -> None:
	path.parent.mkdir(parents=True, exist_ok=True)
	with FileLock(path):
		tmp = path.with_name(f"{path.name}.tmp")
		with open(tmp, "w", encoding="utf-8", newline="") as f:
			f.write(text)
		os.replace(tmp, path)


def write_results(curves: list[SerCurve], path: str | Path, fmt: str = "csv") -> Path:
	if fmt not in FORMATS:
		raise ValueError(f"unknown output format {fmt!r}; expected one of {FORMATS}")
	target = Path(path)
	text = render_csv(curve_rows(curves)) if fmt == "csv" else render_json(curves)
	_atomic_write(target, text)
	_LOGGER.info("Results written", extra={"path": str(target), "format": fmt, "curves": len(curves)})
	return target


def _parse_cell(column: str, raw: str) -> Any:
	if raw == "":
		return None
	if column in _INT_COLUMNS or column in ("rs_n", "rs_k"):
		return int(raw)
	if column in _FLOAT_COLUMNS:
		return float(raw)
	return raw


def read_csv(path: str | Path) -> list[dict[str, Any]]:
	with open(path, encoding="utf-8", newline="") as f:
		reader = csv.DictReader(f)
		if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
			raise ValueError(f"{path} does not carry the expected columns {CSV_COLUMNS}")
		return [{col: _parse_cell(col, row[col]) for col in CSV_COLUMNS} for row in reader]
