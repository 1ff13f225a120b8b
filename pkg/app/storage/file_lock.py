import fcntl
import logging
import time
from pathlib import Path

_LOGGER = logging.getLogger(__name__)


class FileLock:
	"""Exclusive advisory lock on ``<target>.lock`` while a result file is replaced.

	The lock file is never removed, so every writer locks the same inode.
	"""

	def __init__(self, target: str | Path, timeout: float = 10.0, delay: float = 0.1) -> None:
		self.lock_path = Path(f"{target}.lock")
		self.timeout = timeout
		self.delay = delay
		self._handle = None

	@property
	def is_locked(self) -> bool:
		return self._handle is not None

	def __enter__(self) -> "FileLock":
		start = time.monotonic()
		while True:
			handle = open(self.lock_path, "a")
			try:
				fcntl.flock(handle, fcntl.LOCK_EX | fcntl.LOCK_NB)
			except BlockingIOError:
				handle.close()
				if time.monotonic() - start >= self.timeout:
					raise TimeoutError(f"Timed out waiting for lock on {self.lock_path}")
				time.sleep(self.delay)
				continue
			self._handle = handle
			return self

	def __exit__(self, exc_type, exc_val, exc_tb) -> None:
		if self._handle is None:
			return
		fcntl.flock(self._handle, fcntl.LOCK_UN)
		self._handle.close()
		self._handle = None
		_LOGGER.debug("Lock released", extra={"path": str(self.lock_path)})
