import sys
from pathlib import Path

import numpy as np
import pytest

# Ensure project root is on sys.path so `import app` works under pytest
ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
	sys.path.insert(0, str(ROOT_DIR))

from app.coding import get_field, validate_params  # noqa: E402
from app.simulation.rng import FrameStreams  # noqa: E402

PRESET_CODES = [(3, 7, 2), (4, 15, 5), (5, 31, 10)]


@pytest.fixture
def gf8():
	return get_field(3)


@pytest.fixture
def gf16():
	return get_field(4)


@pytest.fixture
def rs72():
	return validate_params(3, 7, 2, 1000)


@pytest.fixture(params=PRESET_CODES, ids=lambda p: f"RS({p[1]},{p[2]})")
def preset_code(request):
	q, n, k = request.param
	return validate_params(q, n, k, 1000)


@pytest.fixture
def rng():
	return np.random.default_rng(12345)


@pytest.fixture
def streams():
	return FrameStreams(seed=7, point_index=0, frame_index=0)
