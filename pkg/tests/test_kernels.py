import math
import random

import pytest

from fermat_adjoint import _kernels, _pykernels
from fermat_adjoint.errors import OverflowDetected


def test_backend_selection():
    assert _kernels.backend() in _kernels.BACKENDS
    with pytest.raises(ValueError):
        _kernels.use_backend("fortran")


@pytest.mark.skipif("cython" not in _kernels.BACKENDS, reason="extension not built")
def test_compiled_matches_python():
    c = _kernels.BACKENDS["cython"]
    rng = random.Random(7)
    for _ in range(200):
        p = rng.choice([5, 7, 11, 13, 23, 61])
        ws = rng.sample(range(p), rng.randrange(0, min(p, 9)))
        d = rng.randrange(0, 12)
        assert c.residue_counts(ws, p, d) == _pykernels.residue_counts(ws, p, d)
        assert c.reachable_residues(ws, p, d) == _pykernels.reachable_residues(ws, p, d)
        rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(rng.randrange(1, 7))]
        assert c.bareiss_rank(rows, 5) == _pykernels.bareiss_rank(rows, 5)


def test_count_overflow_falls_back(backend):
    ws = list(range(24))
    counts = _kernels.residue_counts(ws, 29, 100)
    assert sum(counts) == math.comb(100 + 23, 23)
    assert min(counts) > 2**64


@pytest.mark.skipif("cython" not in _kernels.BACKENDS, reason="extension not built")
def test_compiled_count_refuses_to_wrap():
    with pytest.raises(OverflowError):
        _kernels.BACKENDS["cython"].residue_counts(list(range(24)), 29, 100)


def test_reachable_large_prime_uses_python():
    assert _kernels.reachable_residues([1], 67, 3) == 1 << 3


def test_bareiss_raises_on_overflow(backend):
    with pytest.raises(OverflowDetected):
        _kernels.bareiss_rank([[2**62, 3], [3, 2**62]], 2)


def test_bareiss_exact_large_minors(backend):
    # entries near 2**20: products stay within 64 bits
    rows = [[2**20 + 1, 2**20], [2**20, 2**20 - 1]]
    assert _kernels.bareiss_rank(rows, 2) == 2
    assert _kernels.bareiss_rank([[2**20, 2**21], [1, 2]], 2) == 1
