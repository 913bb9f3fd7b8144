"""Kernel dispatch: the compiled extension when importable, else pure Python."""
from __future__ import annotations

from typing import Sequence

from fermat_adjoint import _pykernels

try:
    from fermat_adjoint import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_active = _ckernels if _ckernels is not None else _pykernels


def backend() -> str:
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


def use_backend(name: str) -> None:
    """Switch the process-wide kernel backend (``"cython"`` or ``"python"``)."""
    global _active
    try:
        _active = BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; have {sorted(BACKENDS)}") from None


def residue_counts(weights: Sequence[int], p: int, d: int) -> list[int]:
    try:
        return _active.residue_counts(weights, p, d)
    except OverflowError:
        return _pykernels.residue_counts(weights, p, d)


def reachable_residues(weights: Sequence[int], p: int, d: int) -> int:
    if p >= 64:
        return _pykernels.reachable_residues(weights, p, d)
    return _active.reachable_residues(weights, p, d)


def bareiss_rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    return _active.bareiss_rank(rows, ncols)
