"""
Result file writers and readers.
"""

from .file_lock import FileLock
from .results_store import CSV_COLUMNS, FORMATS, curve_rows, read_csv, render_csv, render_json, write_results

__all__ = ["CSV_COLUMNS", "FORMATS", "FileLock", "curve_rows", "read_csv", "render_csv", "render_json", "write_results"]
