"""First-order jets of invariant sections at the points ``x_{a,b}``.

At ``x_{a,b}`` (``xi_a = 1``, ``xi_b = -1``, all else 0) we work in the chart
``xi_a = 1`` with coordinates ``Z_c = xi_c / xi_a``.  The Fermat equation
``1 + sum Z_c^p`` has gradient supported on ``Z_b`` there, so the tangent
space is spanned by the ``Z_c`` with ``c`` outside ``{a, b}``.

A degree-``d`` monomial then has a nonzero value only if its support lies in
``{a, b}``, and a nonzero ``Z_c``-derivative only if it is
``xi_c * xi_a^i * xi_b^(d-1-i)``.  Each row of the jet matrix therefore has
at most one nonzero entry, equal to ``(-1)`` raised to the exponent of the
coordinate set to ``-1``.  Only monomials on at most three variables can
contribute, so the matrix is stored sparsely and ranked on its nonzero rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from fermat_adjoint.baselocus import theorem2_base_check
from fermat_adjoint.core import (
    IntegerMatrix,
    QuotientConfig,
    adjoint_class,
    rank_fraction_free,
    to_system,
)
from fermat_adjoint.errors import InvalidPoint
from fermat_adjoint.sections import Monomial, SectionBasis, enumerate_basis

VALUE = "value"


@dataclass(frozen=True)
class CoordinatePoint:
    a: int
    b: int

    @property
    def pair(self) -> tuple[int, int]:
        return (min(self.a, self.b), max(self.a, self.b))

    def coordinates(self, indices) -> dict[int, int]:
        return {i: 1 if i == self.a else -1 if i == self.b else 0 for i in indices}


@dataclass(frozen=True)
class JetMatrix:
    point: CoordinatePoint
    chart: int
    columns: tuple  # VALUE followed by variable indices
    rows: tuple[Monomial, ...]
    entries: tuple[tuple[int, int, int], ...]  # (row, column, value), nonzero only

    @cached_property
    def matrix(self) -> IntegerMatrix:
        dense = [[0] * len(self.columns) for _ in self.rows]
        for r, j, v in self.entries:
            dense[r][j] = v
        return IntegerMatrix.from_rows(dense, len(self.columns))

    def nonzero_rows(self) -> IntegerMatrix:
        rows = {}
        for r, j, v in self.entries:
            rows.setdefault(r, [0] * len(self.columns))[j] = v
        return IntegerMatrix.from_rows([rows[r] for r in sorted(rows)], len(self.columns))

    def nonzero_columns(self) -> set[int]:
        return {j for _, j, _ in self.entries}

    def column(self, label) -> tuple[int, ...]:
        j = self.columns.index(label)
        col = [0] * len(self.rows)
        for r, jj, v in self.entries:
            if jj == j:
                col[r] = v
        return tuple(col)


@dataclass(frozen=True)
class SeparationReport:
    point: CoordinatePoint
    rank: int
    full_rank: int
    zero_columns: tuple[int, ...]
    value_nonzero: bool
    predicted_direction: int | None
    direction_degenerate: bool
    claimed_direction: int | None = None

    @property
    def deficiency(self) -> int:
        return self.full_rank - self.rank

    @property
    def claimed_direction_unseparated(self) -> bool | None:
        if self.claimed_direction is None:
            return None
        return self.claimed_direction in self.zero_columns


def _check_point(basis: SectionBasis, point: CoordinatePoint) -> None:
    indices = basis.system.indices
    if point.a == point.b:
        raise InvalidPoint("a and b must differ")
    if point.a not in indices or point.b not in indices:
        raise InvalidPoint(f"({point.a}, {point.b}) not among variables {list(indices)}")


def _jet_entry(exps: dict[int, int], a: int, b: int, chart: int,
               position: dict[int, int]) -> tuple[int, int] | None:
    # the coordinate opposite the chart sits at -1
    minus = b if chart == a else a
    sign = -1 if exps.get(minus, 0) % 2 else 1
    outside = [(i, e) for i, e in exps.items() if i != a and i != b]
    if not outside:
        return 0, sign
    if len(outside) == 1 and outside[0][1] == 1:
        return position[outside[0][0]], sign
    return None


def jet_matrix(basis: SectionBasis, point: CoordinatePoint, chart: int | None = None) -> JetMatrix:
    """Exact 1-jet evaluation matrix; ``chart`` is the coordinate set to 1 (default ``a``)."""
    _check_point(basis, point)
    a, b = point.a, point.b
    if chart is None:
        chart = a
    if chart not in (a, b):
        raise InvalidPoint("chart must be one of the point's nonzero coordinates")
    directions = tuple(i for i in basis.system.indices if i not in (a, b))
    position = {c: 1 + k for k, c in enumerate(directions)}
    entries = []
    for row, exps in basis.thin:
        hit = _jet_entry(exps, a, b, chart, position)
        if hit is not None:
            entries.append((row, *hit))
    return JetMatrix(point, chart, (VALUE,) + directions, basis.monomials, tuple(entries))


def spanned_at(basis: SectionBasis, point: CoordinatePoint) -> bool:
    """Some section is nonzero at the point."""
    _check_point(basis, point)
    ab = {point.a, point.b}
    return any(exps.keys() <= ab for _, exps in basis.thin)


def predicted_direction(basis: SectionBasis, point: CoordinatePoint) -> int | None:
    """Index ``c`` with ``k_c == char + k_a + k_b``, defined at degree ``p - 1`` only.

    Along ``{a, b}`` the monomials ``xi_c xi_a^i xi_b^(p-2-i)`` reach every
    weight except ``k_c - k_a - k_b``.
    """
    system = basis.system
    if system.degree != system.p - 1:
        return None
    target = (system.character + system.weight_of(point.a) + system.weight_of(point.b)) % system.p
    for i, w in system.variables:
        if w % system.p == target:
            return i
    return None


def separation_report(basis: SectionBasis, point: CoordinatePoint, chart: int | None = None,
                      claimed_direction: int | None = None) -> SeparationReport:
    jm = jet_matrix(basis, point, chart)
    # zero rows do not change the rank
    rank = rank_fraction_free(jm.nonzero_rows())
    hit = jm.nonzero_columns()
    zero = tuple(label for j, label in enumerate(jm.columns) if j and j not in hit)
    value_nonzero = 0 in hit
    pred = predicted_direction(basis, point)
    degenerate = pred is not None and pred in (point.a, point.b)
    return SeparationReport(point, rank, len(jm.columns), zero, value_nonzero,
                            None if degenerate else pred, degenerate, claimed_direction)


def separation_sweep(basis: SectionBasis, pairs=None) -> list[SeparationReport]:
    """Reports at every ``x_{a,b}`` (or the given pairs), ordered by ``(a, b)``."""
    if pairs is None:
        pairs = combinations(sorted(basis.system.indices), 2)
    return [separation_report(basis, CoordinatePoint(a, b)) for a, b in sorted(pairs)]


def theorem2_separation_check(config: QuotientConfig, sign_convention: int,
                              base_pairs=None) -> list[SeparationReport]:
    """Jets of ``|K + (n+1) D_0|`` at the base pairs of ``|K + n D_0|``.

    The claimed unseparated direction is the variable of smallest weight
    (index 0).
    """
    if base_pairs is None:
        base_pairs = theorem2_base_check(config, sign_convention).report.pair_base_points
    system = to_system(config, adjoint_class(config.n + 1), sign_convention)
    basis = enumerate_basis(system)
    return [separation_report(basis, CoordinatePoint(a, b), claimed_direction=0)
            for a, b in sorted(base_pairs)]
