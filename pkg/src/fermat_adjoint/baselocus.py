"""Base loci of linearized systems, computed on coordinate support classes.

A monomial is nonzero at a point exactly when its support lies inside the
point's support, so whether a point is a base point depends only on which
coordinates vanish there.  The base locus is therefore the finite list of
supports ``T`` (``|T| >= 2``; one nonzero coordinate cannot satisfy the
Fermat equation) that carry no invariant monomial.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from fermat_adjoint import _kernels
from fermat_adjoint.core import (
    LinearizedSystem,
    QuotientConfig,
    adjoint_class,
    fundamental_config,
    to_system,
)
from fermat_adjoint.errors import ConfigError, TooManyVariables, WrongDegree

MAX_SCAN_VARIABLES = 24

Pair = tuple[int, int]


@dataclass(frozen=True)
class BaseLocusReport:
    system: LinearizedSystem
    base_supports: tuple[tuple[int, ...], ...]
    pair_base_points: tuple[Pair, ...]
    predicted_pairs: tuple[Pair, ...]
    exact_match: bool


def base_supports(system: LinearizedSystem) -> list[tuple[int, ...]]:
    """Supports with no invariant monomial, smallest first, each sorted.

    Level ``s`` only examines supports all of whose ``(s-1)``-subsets were
    base at the previous level; anything containing a non-base support is
    non-base because the witnessing monomial stays nonzero.
    """
    indices = sorted(system.indices)
    nv = len(indices)
    if nv > MAX_SCAN_VARIABLES:
        raise TooManyVariables(f"{nv} variables > {MAX_SCAN_VARIABLES}")
    c = system.character
    weight = dict(system.variables)

    def is_base(support: tuple[int, ...]) -> bool:
        ws = [weight[i] for i in support]
        return not (_kernels.reachable_residues(ws, system.p, system.degree) >> c & 1)

    found: list[tuple[int, ...]] = []
    level = [t for t in combinations(indices, 2) if is_base(t)]
    size = 2
    while level:
        found.extend(level)
        if size == nv:
            break
        prev = set(level)
        nxt = set()
        for t in level:
            for i in indices:
                if i <= t[-1]:
                    continue
                cand = t + (i,)
                if all(cand[:k] + cand[k + 1:] in prev for k in range(size + 1)):
                    nxt.add(cand)
        level = sorted(t for t in nxt if is_base(t))
        size += 1
    return found


def predicted_pairs(system: LinearizedSystem) -> list[Pair]:
    """Pairs ``{u, v}`` with ``k_u + k_v == -c``: the only base pairs at degree ``p - 2``.

    Along ``{u, v}`` the weights ``e k_u + (p-2-e) k_v`` for ``e = 0..p-2``
    cover every residue except ``-(k_u + k_v)``.
    """
    p = system.p
    if system.degree != p - 2:
        raise WrongDegree(f"predicted pairs need degree p-2={p - 2}, got {system.degree}")
    target = -system.character % p
    return [(u, v) for (u, wu), (v, wv) in combinations(sorted(system.variables), 2)
            if (wu + wv) % p == target]


def base_locus_report(system: LinearizedSystem) -> BaseLocusReport:
    supports = tuple(base_supports(system))
    pairs = tuple(t for t in supports if len(t) == 2)
    predicted = tuple(predicted_pairs(system)) if system.degree == system.p - 2 else ()
    exact = system.degree == system.p - 2 and set(supports) == set(predicted)
    return BaseLocusReport(system, supports, pairs, predicted, exact)


def theorem1_check(p: int, j: int) -> BaseLocusReport:
    """Base locus of ``|K + (p-2)D + jN|`` on the fundamental quotient."""
    if p < 5:
        raise ConfigError(f"the fundamental check needs a prime p >= 5, got {p}")
    config = fundamental_config(p)
    system = to_system(config, adjoint_class(p - 2, j), 1)
    return base_locus_report(system)


@dataclass(frozen=True)
class CongruenceVariant:
    """Pairs named by one written form of the pair condition, compared to the computed locus."""

    name: str
    target: int
    pairs: tuple[Pair, ...]
    exact: bool
    sound: bool


@dataclass(frozen=True)
class Theorem2BaseReport:
    config: QuotientConfig
    sign_convention: int
    report: BaseLocusReport
    complement: tuple[int, ...]
    complement_size: int
    variants: tuple[CongruenceVariant, ...] = field(default=())

    @property
    def condition_satisfied(self) -> bool:
        return any(v.pairs for v in self.variants)

    @property
    def variants_agree(self) -> bool:
        return len({v.pairs for v in self.variants}) <= 1


def _pairs_with_sum(config: QuotientConfig, target: int) -> tuple[Pair, ...]:
    p = config.p
    return tuple((i, j) for i, j in combinations(range(config.num_variables), 2)
                 if (config.weights[i] + config.weights[j] - target) % p == 0)


def congruence_variants(config: QuotientConfig, computed: set[Pair]) -> tuple[CongruenceVariant, ...]:
    """Both written pair conditions, evaluated literally with the given (unnormalized) weights."""
    p, k0 = config.p, config.weights[0]
    targets = [
        ("sum_of_weights", (2 * k0 + sum(config.weights)) % p),
        ("complement_sum", (2 * k0 - config.complement_sum) % p),
    ]
    out = []
    for name, target in targets:
        pairs = _pairs_with_sum(config, target)
        out.append(CongruenceVariant(name, target, pairs, set(pairs) == computed, set(pairs) <= computed))
    return tuple(out)


def theorem2_base_check(config: QuotientConfig, sign_convention: int) -> Theorem2BaseReport:
    """Base locus of ``|K + n D_0|`` directly in the ``n + 2`` variables of ``config``."""
    system = to_system(config, adjoint_class(config.n), sign_convention)
    report = base_locus_report(system)
    variants = congruence_variants(config, set(report.pair_base_points))
    comp = config.complement
    return Theorem2BaseReport(config, sign_convention, report, comp, len(comp), variants)
