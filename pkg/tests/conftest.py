import numpy as np
import pytest

from wavefft import make_filter

BUILTINS = ["haar", "hat", "d4", "stretched-box"]
ORTHOGONAL = ["haar", "d4"]


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


@pytest.fixture(params=BUILTINS)
def builtin(request):
    return make_filter(request.param)


@pytest.fixture(params=ORTHOGONAL)
def orthogonal(request):
    return make_filter(request.param)
