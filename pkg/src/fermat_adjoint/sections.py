"""Invariant monomial bases of a linearized system."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from fermat_adjoint import _kernels
from fermat_adjoint.core import LinearizedSystem
from fermat_adjoint.errors import TooLarge

DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class Monomial:
    """Exponent vector aligned with ``indices`` (the system's variable labels)."""

    indices: tuple[int, ...]
    exponents: tuple[int, ...]
    weight: int

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in zip(self.indices, self.exponents) if e)

    def exponent(self, index: int) -> int:
        return self.exponents[self.indices.index(index)]

    def as_dict(self) -> dict[int, int]:
        return {i: e for i, e in zip(self.indices, self.exponents) if e}

    def __str__(self) -> str:
        parts = [f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in zip(self.indices, self.exponents) if e]
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class SectionBasis:
    system: LinearizedSystem
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.monomials)

    @cached_property
    def thin(self) -> tuple[tuple[int, dict[int, int]], ...]:
        """``(row, exponents)`` of the monomials supported on at most three variables."""
        out = []
        for row, m in enumerate(self.monomials):
            exps = m.as_dict()
            if len(exps) <= 3:
                out.append((row, exps))
        return tuple(out)


def raw_count(num_variables: int, degree: int) -> int:
    """All degree-``degree`` monomials in ``num_variables`` variables, ignoring weights."""
    if num_variables == 0:
        return 1 if degree == 0 else 0
    return math.comb(degree + num_variables - 1, num_variables - 1)


def _suffix_reach(weights: tuple[int, ...], p: int, d: int) -> list[list[int]]:
    # reach[v][deg]: residue bitmask attainable with variables v.. at total degree deg
    full = (1 << p) - 1
    nv = len(weights)
    reach = [[0] * (d + 1) for _ in range(nv + 1)]
    reach[nv][0] = 1
    for v in range(nv - 1, -1, -1):
        w = weights[v] % p
        below, here = reach[v + 1], reach[v]
        for deg in range(d + 1):
            acc = below[deg]
            if deg:
                m = here[deg - 1]
                acc |= ((m << w) | (m >> (p - w))) & full if w else m
            here[deg] = acc
    return reach


def enumerate_basis(system: LinearizedSystem, cap: int = DEFAULT_CAP) -> SectionBasis:
    """All invariant monomials, in decreasing lexicographic order of exponent vectors.

    Branches that cannot reach the target residue are pruned with a suffix
    reachability table, so the work is proportional to the output size.
    """
    p, d, c = system.p, system.degree, system.character
    indices, weights = system.indices, system.weights
    nv = len(indices)
    if raw_count(nv, d) > cap:
        raise TooLarge(f"{raw_count(nv, d)} raw monomials exceed cap {cap}")
    if nv == 0:
        monos = (Monomial((), (), 0),) if d == 0 and c == 0 else ()
        return SectionBasis(system, monos)
    reach = _suffix_reach(weights, p, d)
    out: list[Monomial] = []
    exps = [0] * nv

    def rec(v: int, left: int, need: int) -> None:
        if v == nv - 1:
            if (left * weights[v] - need) % p == 0:
                exps[v] = left
                out.append(Monomial(indices, tuple(exps), c))
            return
        w = weights[v]
        for e in range(left, -1, -1):
            r = (need - e * w) % p
            if reach[v + 1][left - e] >> r & 1:
                exps[v] = e
                rec(v + 1, left - e, r)
        exps[v] = 0

    if reach[0][d] >> c & 1:
        rec(0, d, c)
    return SectionBasis(system, tuple(out))


def count_basis(system: LinearizedSystem) -> int:
    return _kernels.residue_counts(system.weights, system.p, system.degree)[system.character]


def count_all_characters(system: LinearizedSystem) -> list[int]:
    """Basis sizes for every character at the system's degree."""
    return _kernels.residue_counts(system.weights, system.p, system.degree)


def reachable_characters(system: LinearizedSystem, support: Iterable[int] | None = None) -> int:
    """Bitmask of characters with a degree-``d`` monomial supported in ``support``."""
    if support is None:
        ws = system.weights
    else:
        keep = set(support)
        ws = tuple(w for i, w in system.variables if i in keep)
    return _kernels.reachable_residues(ws, system.p, system.degree)


def exists_supported(system: LinearizedSystem, support: Iterable[int]) -> bool:
    support = set(support)
    unknown = support - set(system.indices)
    if not support or unknown:
        raise ValueError(f"support must be a nonempty subset of {list(system.indices)}")
    return bool(reachable_characters(system, support) >> system.character & 1)
