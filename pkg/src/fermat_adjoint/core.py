"""Quotient configurations, divisor classes and their (degree, character) systems.

A cyclic group of prime order ``p`` acts on ``P^{n+1}`` by
``xi_t -> rho^{k_t} xi_t``.  Every divisor class we care about on the quotient
is recorded by the degree of the corresponding bundle on the Fermat
hypersurface together with the character by which the group acts on it.
Sections are then the monomials of that degree whose weight
``sum e_t k_t`` is congruent to the character.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from fermat_adjoint import _kernels
from fermat_adjoint.errors import (
    DimensionTooSmall,
    NotFundamentalCase,
    NotPrime,
    OverflowDetected,
    PTooSmall,
    WeightOutOfRange,
    WeightsNotStrictlyIncreasing,
    WrongWeightCount,
)

INT64_MAX = 2**63 - 1


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    return all(m % f for f in range(3, math.isqrt(m) + 1, 2))


def primes_up_to(bound: int) -> list[int]:
    return [q for q in range(2, bound + 1) if is_prime(q)]


@dataclass(frozen=True)
class QuotientConfig:
    """A validated prime, dimension and strictly increasing weight tuple."""

    p: int
    n: int
    weights: tuple[int, ...]

    @property
    def num_variables(self) -> int:
        return self.n + 2

    @property
    def is_fundamental(self) -> bool:
        return self.n == self.p - 2 and self.weights == tuple(range(self.p))

    @property
    def weight_sum(self) -> int:
        return sum(self.weights) % self.p

    @property
    def complement(self) -> tuple[int, ...]:
        """Residues not used as weights; the coordinate hyperplanes cut out in the fundamental model."""
        used = set(self.weights)
        return tuple(r for r in range(self.p) if r not in used)

    @property
    def complement_sum(self) -> int:
        return sum(self.complement)

    def variables(self) -> tuple[tuple[int, int], ...]:
        return tuple(enumerate(self.weights))

    def normalized(self) -> QuotientConfig:
        """The same action presented with smallest weight 0."""
        k0 = self.weights[0]
        return QuotientConfig(self.p, self.n, tuple(w - k0 for w in self.weights))

    def as_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "weights": list(self.weights)}


def validate_config(p: int, n: int, weights: Sequence[int]) -> QuotientConfig:
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if n < 2:
        raise DimensionTooSmall(f"n={n} < 2")
    if p < n + 2:
        raise PTooSmall(f"p={p} < n+2={n + 2}")
    weights = tuple(int(w) for w in weights)
    if len(weights) != n + 2:
        raise WrongWeightCount(f"expected {n + 2} weights, got {len(weights)}")
    for w in weights:
        if not 0 <= w <= p - 1:
            raise WeightOutOfRange(f"weight {w} outside [0, {p - 1}]")
    if any(a >= b for a, b in zip(weights, weights[1:])):
        raise WeightsNotStrictlyIncreasing(f"weights {list(weights)} are not strictly increasing")
    return QuotientConfig(p, n, weights)


def fundamental_config(p: int) -> QuotientConfig:
    return validate_config(p, p - 2, range(p))


@dataclass(frozen=True)
class LinearizedSystem:
    """Degree-``degree`` monomials in ``variables`` of weight ``character`` mod ``p``.

    ``variables`` holds ``(index, weight)`` pairs; indices are labels only and
    need not be contiguous (restrictions of the fundamental model use the
    weights themselves as labels).
    """

    p: int
    degree: int
    character: int
    variables: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        if not 0 <= self.character < self.p:
            raise ValueError(f"character {self.character} not reduced mod {self.p}")
        ws = [w % self.p for _, w in self.variables]
        if len(set(ws)) != len(ws):
            raise ValueError("variable weights must be pairwise distinct mod p")
        idx = [i for i, _ in self.variables]
        if len(set(idx)) != len(idx):
            raise ValueError("duplicate variable index")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.variables)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.variables)

    def weight_of(self, index: int) -> int:
        for i, w in self.variables:
            if i == index:
                return w
        raise KeyError(index)

    def restricted(self, indices: Iterable[int]) -> LinearizedSystem:
        keep = set(indices)
        return LinearizedSystem(self.p, self.degree, self.character,
                                tuple(v for v in self.variables if v[0] in keep))

    def with_character(self, character: int) -> LinearizedSystem:
        return LinearizedSystem(self.p, self.degree, character % self.p, self.variables)

    def as_dict(self) -> dict:
        return {"p": self.p, "degree": self.degree, "character": self.character,
                "variables": [list(v) for v in self.variables]}


def make_system(config: QuotientConfig, degree: int, character: int) -> LinearizedSystem:
    return LinearizedSystem(config.p, degree, character % config.p, config.variables())


@dataclass(frozen=True)
class DivisorClass:
    """``canonical * K + sum a_i D_i + twist * N`` on the quotient."""

    coefficients: Mapping[int, int] = field(default_factory=dict)
    twist: int = 0
    canonical: int = 0

    def __post_init__(self):
        coeffs = {int(i): int(a) for i, a in dict(self.coefficients).items() if a}
        if any(a < 0 for a in coeffs.values()):
            raise ValueError("coefficients must be nonnegative")
        if self.canonical not in (0, 1):
            raise ValueError("canonical multiplicity must be 0 or 1")
        object.__setattr__(self, "coefficients", dict(sorted(coeffs.items())))

    @property
    def total_degree(self) -> int:
        return sum(self.coefficients.values())

    def __add__(self, other: DivisorClass) -> DivisorClass:
        coeffs = dict(self.coefficients)
        for i, a in other.coefficients.items():
            coeffs[i] = coeffs.get(i, 0) + a
        return DivisorClass(coeffs, self.twist + other.twist, self.canonical + other.canonical)

    def __hash__(self):
        return hash((tuple(self.coefficients.items()), self.twist, self.canonical))


def adjoint_class(t: int, twist: int = 0, index: int = 0) -> DivisorClass:
    """``K + t D_index + twist N``."""
    return DivisorClass({index: t}, twist, 1)


def canonical_character(config: QuotientConfig, sign_convention: int) -> int:
    if sign_convention not in (1, -1):
        raise ValueError("sign_convention must be +1 or -1")
    return (sign_convention * sum(config.weights)) % config.p


def to_system(config: QuotientConfig, cls: DivisorClass, sign_convention: int) -> LinearizedSystem:
    """Translate a divisor class into its (degree, character) system.

    The torsion class ``N`` carries character ``k_1 - k_0`` and degree 0; the
    canonical class carries degree ``p - n - 2`` and character
    ``sign_convention * sum(k_t)``.
    """
    p = config.p
    for i in cls.coefficients:
        if not 0 <= i < config.num_variables:
            raise KeyError(f"no coordinate divisor D_{i} for {config.num_variables} variables")
    degree = cls.total_degree + cls.canonical * (p - config.n - 2)
    character = sum(a * config.weights[i] for i, a in cls.coefficients.items())
    character += cls.twist * (config.weights[1] - config.weights[0])
    if cls.canonical:
        character += canonical_character(config, sign_convention)
    return make_system(config, degree, character % p)


def normalize_class(config: QuotientConfig, cls: DivisorClass) -> DivisorClass:
    """Rewrite a fundamental-case class as ``t D_0 + k N`` with ``0 <= k < p``."""
    if not config.is_fundamental:
        raise NotFundamentalCase("normalize_class needs the fundamental configuration")
    k = cls.twist + sum(a * i for i, a in cls.coefficients.items())
    return DivisorClass({0: cls.total_degree}, k % config.p, cls.canonical)


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(len(entries), cols, entries)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def hadamard_bound(self) -> int:
        """Upper bound for the absolute value of every minor."""
        bound = 1
        for r in self.entries:
            sq = sum(x * x for x in r)
            if sq > 1:
                bound *= math.isqrt(sq - 1) + 1
        return bound


def rank_fraction_free(m: IntegerMatrix) -> int:
    """Exact rank by Bareiss elimination in 64-bit arithmetic.

    Every intermediate is a minor times a minor, so a Hadamard bound below
    ``sqrt(2**63)`` certifies the run cannot overflow; larger matrices are
    still attempted and abort with :class:`OverflowDetected` if they do.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    if any(abs(x) > INT64_MAX for r in m.entries for x in r):
        raise OverflowDetected("matrix entry does not fit in 64 bits")
    return _kernels.bareiss_rank(m.entries, m.cols)
