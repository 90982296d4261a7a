import pytest
from hypothesis import settings

from lemniscate import kernels

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

BACKENDS = ["numba", "numpy"] if kernels.HAVE_NUMBA else ["numpy"]


@pytest.fixture(params=BACKENDS)
def kernel_backend(request, monkeypatch):
    """Run the test once per available finite-field kernel backend."""
    monkeypatch.setattr(kernels, "ACTIVE", kernels.backend(request.param))
    return request.param
