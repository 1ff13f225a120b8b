import os

# Master seed used when neither --seed nor NCC_SIM_SEED is given.
DEFAULT_SEED = 20240417


def read_env(name: str, default: str | None = None, required: bool = False) -> str | None:
	value = os.environ.get(name, default)
	if required and (value is None or value == ""):
		raise RuntimeError(f"Missing required environment variable: {name}")
	return value


class AppConfig:
	def __init__(self) -> None:
		self.log_level = (read_env("LOG_LEVEL", "INFO") or "INFO").upper()
		self.threads: int = self._read_threads()
		self.default_seed: int = self._read_seed()
		self.output_dir = read_env("NCC_SIM_OUTPUT_DIR", "results") or "results"
		self.output_format = self._read_format()

	def worker_count(self, requested: int | None = None) -> int:
		"""Workers for a sweep: the request (or CPU count) capped by NCC_SIM_THREADS."""
		wanted = requested if requested and requested > 0 else (os.cpu_count() or 1)
		return max(1, min(wanted, self.threads))

	def _read_threads(self) -> int:
		raw = read_env("NCC_SIM_THREADS", "")
		if not raw:
			return os.cpu_count() or 1
		try:
			val = int(raw)
		except Exception:
			val = os.cpu_count() or 1
		return max(1, val)

	def _read_seed(self) -> int:
		raw = read_env("NCC_SIM_SEED", "")
		try:
			return int(raw) if raw else DEFAULT_SEED
		except Exception:
			return DEFAULT_SEED

	def _read_format(self) -> str:
		raw = (read_env("NCC_SIM_FORMAT", "csv") or "csv").strip().lower()
		return raw if raw in {"csv", "json"} else "csv"
