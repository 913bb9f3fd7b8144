"""Sweep normalized weight tuples for the pair congruence and re-verify each hit."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from fermat_adjoint.baselocus import Theorem2BaseReport, theorem2_base_check
from fermat_adjoint.core import QuotientConfig, adjoint_class, to_system, validate_config
from fermat_adjoint.errors import TooLarge
from fermat_adjoint.jets import SeparationReport, separation_sweep, theorem2_separation_check
from fermat_adjoint.sections import enumerate_basis

DEFAULT_TUPLE_CAP = 10**6


def shift_orbit_key(weights, p: int) -> tuple[int, ...]:
    """Smallest normalized presentation among all shifts ``W - w`` with ``w`` in ``W``."""
    return min(tuple(sorted((x - w) % p for x in weights)) for w in weights)


def congruence_pairs(config: QuotientConfig) -> dict[str, tuple[tuple[int, int], ...]]:
    """Index pairs named by both written forms of the condition, literal in ``k_0``."""
    p, ws, k0 = config.p, config.weights, config.weights[0]
    targets = {
        "sum_of_weights": (2 * k0 + sum(ws)) % p,
        "complement_sum": (2 * k0 - config.complement_sum) % p,
    }
    return {name: tuple((i, j) for i, j in combinations(range(len(ws)), 2)
                        if (ws[i] + ws[j] - t) % p == 0)
            for name, t in targets.items()}


@dataclass(frozen=True)
class TupleVerification:
    config: QuotientConfig
    base: Theorem2BaseReport
    separation: tuple[SeparationReport, ...]
    unseparated_elsewhere: tuple[tuple[int, int], ...]

    @property
    def base_point_found(self) -> bool:
        return bool(self.base.report.pair_base_points)

    @property
    def tangent_failure_at_base_point(self) -> bool:
        return any(r.deficiency >= 1 and r.zero_columns for r in self.separation)

    @property
    def verified(self) -> bool:
        return self.base_point_found and self.tangent_failure_at_base_point


def verify_tuple(config: QuotientConfig, sign: int) -> TupleVerification:
    base = theorem2_base_check(config, sign)
    seps = theorem2_separation_check(config, sign, base.report.pair_base_points)
    # every x_{a,b} with a zero jet column, as a witness independent of the base pairs
    basis = enumerate_basis(to_system(config, adjoint_class(config.n + 1), sign))
    elsewhere = tuple(r.point.pair for r in separation_sweep(basis) if r.zero_columns)
    return TupleVerification(config, base, tuple(seps), elsewhere)


@dataclass(frozen=True)
class SearchResult:
    n: int
    p: int
    sign_convention: int
    fundamental: bool
    scanned: int
    tuples: tuple[TupleVerification, ...]

    @property
    def all_verified(self) -> bool:
        return all(t.verified for t in self.tuples)


def search(n: int, p: int, sign: int, cap: int = DEFAULT_TUPLE_CAP) -> SearchResult:
    """All shift-inequivalent tuples with ``k_0 = 0`` satisfying the pair congruence."""
    validate_config(p, n, range(n + 2))
    if p == n + 2:
        # only the full weight set exists: this is the fundamental case
        return SearchResult(n, p, sign, True, 0, ())
    total = math.comb(p - 1, n + 1)
    if total > cap:
        raise TooLarge(f"{total} candidate tuples exceed cap {cap}")
    seen: set[tuple[int, ...]] = set()
    hits = []
    for rest in combinations(range(1, p), n + 1):
        config = validate_config(p, n, (0,) + rest)
        named = congruence_pairs(config)
        if not any(named.values()):
            continue
        key = shift_orbit_key(config.weights, p)
        if key in seen:
            continue
        seen.add(key)
        hits.append(verify_tuple(config, sign))
    return SearchResult(n, p, sign, False, total, tuple(hits))

