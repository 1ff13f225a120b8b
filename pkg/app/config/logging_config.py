import logging
import os

_VERBOSITY_LEVELS = {0: None, 1: "INFO", 2: "DEBUG"}


def configure_logging(verbosity: int | None = None) -> logging.Logger:
	level_name = _VERBOSITY_LEVELS.get(min(int(verbosity or 0), 2))
	if level_name is None:
		level_name = os.environ.get("LOG_LEVEL", "INFO").upper()
	logging.basicConfig(level=level_name, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
	root = logging.getLogger()
	if verbosity:
		root.setLevel(level_name)
	return root
