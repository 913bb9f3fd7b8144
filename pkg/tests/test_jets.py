from itertools import combinations

import pytest
from fractions import Fraction

from fermat_adjoint.baselocus import base_supports, theorem2_base_check
from fermat_adjoint.core import fundamental_config, make_system, validate_config
from fermat_adjoint.errors import InvalidPoint
from fermat_adjoint.jets import (
    VALUE,
    CoordinatePoint,
    jet_matrix,
    separation_report,
    separation_sweep,
    spanned_at,
    theorem2_separation_check,
)
from fermat_adjoint.sections import LinearizedSystem, Monomial, SectionBasis, enumerate_basis
from oracles import rank_mod_prime, symbolic_jet_row


def fund_basis(p, d, c):
    return enumerate_basis(make_system(fundamental_config(p), d, c))


def single_row_basis(p, exps):
    system = LinearizedSystem(p, sum(exps), 0, tuple((i, i) for i in range(p)))
    return SectionBasis(system, (Monomial(tuple(range(p)), tuple(exps), 0),))


def test_pure_power_row():
    jm = jet_matrix(single_row_basis(5, (4, 0, 0, 0, 0)), CoordinatePoint(0, 3))
    assert jm.matrix.entries == ((1, 0, 0, 0),)
    assert jm.columns == (VALUE, 1, 2, 4)


def _poly_at(exps, t, c, a=1, b=2):
    """Dehomogenized monomial in the chart x_a = 1 on the line Z_b = -1, Z_c = t."""
    val = Fraction(1)
    for i, e in enumerate(exps):
        if i == a:
            continue
        x = Fraction(-1) if i == b else (t if i == c else Fraction(0))
        val *= x ** e
    return val


def test_first_order_row_finite_difference():
    # xi_c xi_a^i xi_b^(d-1-i) with d = 4, i = 1: entry (-1)^2 in column c
    exps = (1, 1, 2, 0, 0)  # c = 0, a = 1, b = 2
    jm = jet_matrix(single_row_basis(5, exps), CoordinatePoint(1, 2))
    assert jm.matrix.entries == ((0, 1, 0, 0),)
    h = Fraction(1, 10**6)
    # linear in Z_c, so the symmetric difference quotient is exact
    fd = (_poly_at(exps, h, 0) - _poly_at(exps, -h, 0)) / (2 * h)
    assert fd == 1


def test_second_order_row_is_zero():
    jm = jet_matrix(single_row_basis(5, (1, 1, 0, 1, 1)), CoordinatePoint(1, 4))
    assert jm.matrix.entries == ((0, 0, 0, 0),)


def test_invalid_points():
    basis = fund_basis(5, 3, 0)
    with pytest.raises(InvalidPoint):
        jet_matrix(basis, CoordinatePoint(1, 1))
    with pytest.raises(InvalidPoint):
        jet_matrix(basis, CoordinatePoint(1, 9))


def test_spanned_at_examples():
    assert not spanned_at(fund_basis(5, 3, 0), CoordinatePoint(1, 4))
    assert spanned_at(fund_basis(5, 3, 0), CoordinatePoint(1, 2))
    b4 = fund_basis(5, 4, 0)
    assert all(spanned_at(b4, CoordinatePoint(a, b)) for a, b in combinations(range(5), 2))


def test_separation_examples():
    b4 = fund_basis(5, 4, 0)
    r = separation_report(b4, CoordinatePoint(1, 4))
    assert r.zero_columns == (0,) and r.deficiency == 1 and r.predicted_direction == 0
    r = separation_report(b4, CoordinatePoint(1, 2))
    assert r.zero_columns == (3,) and r.deficiency == 1 and r.predicted_direction == 3
    for rep in separation_sweep(fund_basis(7, 6, 0)):
        c = sum(rep.point.pair) % 7
        if c in rep.point.pair:
            assert rep.direction_degenerate and rep.zero_columns == () and rep.deficiency == 0
        else:
            assert rep.zero_columns == (c,) and rep.deficiency == 1
    assert len(separation_sweep(fund_basis(7, 6, 0))) == 21


@pytest.mark.parametrize("p", [5, 7, 11])
def test_chart_independence(p):
    for j in range(p):
        basis = fund_basis(p, p - 1, j)
        for a, b in combinations(range(p), 2):
            ra = separation_report(basis, CoordinatePoint(a, b), chart=a)
            rb = separation_report(basis, CoordinatePoint(a, b), chart=b)
            assert (ra.rank, ra.zero_columns) == (rb.rank, rb.zero_columns)


@pytest.mark.parametrize("p", [5, 7])
def test_entries_match_symbolic_derivatives(p):
    for d in (p - 2, p - 1):
        for j in range(p):
            basis = fund_basis(p, d, j)
            for a, b in [(0, 1), (1, p - 1), (2, 3)]:
                for chart in (a, b):
                    jm = jet_matrix(basis, CoordinatePoint(a, b), chart)
                    dirs = jm.columns[1:]
                    for mono, row in zip(basis, jm.matrix.entries):
                        assert list(row) == symbolic_jet_row(mono.indices, mono.exponents, a, b, chart, dirs)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_spanned_agrees_with_base_supports(p):
    for d in (p - 2, p - 1):
        for c in range(p):
            system = make_system(fundamental_config(p), d, c)
            pairs = {t for t in base_supports(system) if len(t) == 2}
            basis = enumerate_basis(system) if p < 13 or d == p - 2 else None
            if basis is None:
                continue
            for a, b in combinations(range(p), 2):
                assert spanned_at(basis, CoordinatePoint(a, b)) == ((a, b) not in pairs)


@pytest.mark.parametrize("p", [5, 7, 11])
def test_not_very_ample_direction(p):
    for j in range(p):
        basis = fund_basis(p, p - 1, j)
        for rep in separation_sweep(basis):
            assert rep.value_nonzero
            c = (j + sum(rep.point.pair)) % p
            if c not in rep.point.pair:
                assert c in rep.zero_columns
                assert rep.rank < rep.full_rank


def test_rank_matches_prime_field_on_jets():
    basis = fund_basis(7, 6, 3)
    for a, b in combinations(range(7), 2):
        jm = jet_matrix(basis, CoordinatePoint(a, b))
        assert separation_report(basis, CoordinatePoint(a, b)).rank == rank_mod_prime(jm.matrix.entries)


def test_theorem2_separation_fundamental():
    reps = theorem2_separation_check(fundamental_config(5), -1)
    assert [r.point.pair for r in reps] == [(1, 4), (2, 3)]
    assert all(r.claimed_direction == 0 and r.claimed_direction_unseparated for r in reps)


def test_theorem2_separation_small_config():
    cfg = validate_config(5, 2, [0, 1, 3, 4])
    base = theorem2_base_check(cfg, -1)
    reps = theorem2_separation_check(cfg, -1)
    assert [r.point.pair for r in reps] == list(base.report.pair_base_points)
    for r in reps:
        assert r.deficiency == len(r.zero_columns)


def test_theorem2_separation_empty_without_base_pairs():
    cfg = validate_config(7, 2, [0, 1, 3, 5])
    assert theorem2_base_check(cfg, -1).report.pair_base_points == ()
    assert theorem2_separation_check(cfg, -1) == []
