import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fermat_adjoint import _kernels  # noqa: E402


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def backend(request):
    """Run the test once per available kernel backend."""
    before = _kernels.backend()
    _kernels.use_backend(request.param)
    yield request.param
    _kernels.use_backend(before)
