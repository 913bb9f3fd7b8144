import random
from itertools import combinations

import pytest

from fermat_adjoint.baselocus import (
    base_locus_report,
    base_supports,
    predicted_pairs,
    theorem1_check,
    theorem2_base_check,
)
from fermat_adjoint.core import LinearizedSystem, fundamental_config, make_system, validate_config
from fermat_adjoint.errors import TooManyVariables, WrongDegree
from fermat_adjoint.sections import exists_supported
from oracles import brute_base_supports


def fund(p, d, c):
    return make_system(fundamental_config(p), d, c)


@pytest.mark.parametrize("c, expected", [(0, [(1, 4), (2, 3)]), (1, [(0, 4), (1, 3)]), (2, [(0, 3), (1, 2)])])
def test_base_supports_p5(backend, c, expected):
    assert brute_base_supports(list(range(5)), 5, 3, c) == expected
    assert base_supports(fund(5, 3, c)) == expected


def test_constant_section_has_no_base_points():
    assert base_supports(fund(7, 0, 0)) == []


def test_too_many_variables():
    system = LinearizedSystem(29, 2, 0, tuple((i, i) for i in range(25)))
    with pytest.raises(TooManyVariables):
        base_supports(system)


@pytest.mark.parametrize("p, c, expected", [
    (5, 0, [(1, 4), (2, 3)]),
    (7, 0, [(1, 6), (2, 5), (3, 4)]),
    (5, 2, [(0, 3), (1, 2)]),
])
def test_predicted_pairs(p, c, expected):
    assert predicted_pairs(fund(p, p - 2, c)) == expected


def test_predicted_pairs_wrong_degree():
    with pytest.raises(WrongDegree):
        predicted_pairs(fund(5, 4, 0))


def test_theorem1_examples():
    r = theorem1_check(5, 0)
    assert r.exact_match and r.pair_base_points == ((1, 4), (2, 3))
    for j in range(7):
        r = theorem1_check(7, j)
        assert r.exact_match and len(r.pair_base_points) == 3
    assert len(theorem1_check(11, 0).pair_base_points) == 5


@pytest.mark.parametrize("p", [5, 7, 11])
def test_base_supports_match_exhaustive_oracle(p):
    for c in range(p):
        system = fund(p, p - 2, c)
        oracle = brute_base_supports(list(range(p)), p, p - 2, c)
        assert base_supports(system) == oracle == predicted_pairs(system)
        assert len(oracle) == (p - 1) // 2


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_degree_p_minus_1_has_no_base_points(p):
    for c in range(p):
        assert base_supports(fund(p, p - 1, c)) == []


def test_non_adjoint_degrees_against_oracle():
    rng = random.Random(3)
    for _ in range(25):
        p = rng.choice([5, 7, 11])
        nv = rng.randrange(3, min(p, 8) + 1)
        weights = sorted(rng.sample(range(p), nv))
        d = rng.randrange(1, p + 2)
        c = rng.randrange(p)
        system = LinearizedSystem(p, d, c, tuple(enumerate(weights)))
        assert base_supports(system) == brute_base_supports(weights, p, d, c)


def test_superset_pruning_sound():
    rng = random.Random(11)
    system = LinearizedSystem(11, 4, 6, tuple(enumerate([0, 1, 2, 4, 7, 9])))
    base = set(base_supports(system))
    for t in combinations(range(6), 3):
        if t not in base:
            extra = rng.choice([i for i in range(6) if i not in t])
            assert tuple(sorted(t + (extra,))) not in base
    for t in base:
        assert not exists_supported(system, t)


def test_theorem2_fundamental_reduces_to_theorem1():
    r = theorem2_base_check(fundamental_config(5), -1)
    assert r.report.base_supports == theorem1_check(5, 0).base_supports
    assert r.complement == () and r.complement_size == 0


def test_theorem2_small_config_both_variants():
    cfg = validate_config(5, 2, [0, 1, 3, 4])
    r = theorem2_base_check(cfg, -1)
    # degree 3, character -(0+1+3+4) = 2; oracle over the 20 cubic monomials
    assert (r.report.system.degree, r.report.system.character) == (3, 2)
    assert list(r.report.base_supports) == brute_base_supports([0, 1, 3, 4], 5, 3, 2)
    assert r.complement == (2,) and r.complement_size == 1
    assert r.variants_agree
    names = [v.name for v in r.variants]
    assert names == ["sum_of_weights", "complement_sum"]


def test_theorem2_unnormalized_weights_flag_congruence_mismatch():
    # (1, 2, 3, 4) is (0, 1, 2, 3) shifted by 1; the base pair follows the action,
    # the written condition (with k_0 = 1 taken literally) does not
    r = theorem2_base_check(validate_config(5, 2, [1, 2, 3, 4]), -1)
    assert r.report.pair_base_points == ((0, 1),)
    assert [(v.target, v.pairs, v.exact) for v in r.variants] == [
        (2, ((2, 3),), False), (2, ((2, 3),), False)]
    normalized = theorem2_base_check(validate_config(5, 2, [0, 1, 2, 3]), -1)
    assert normalized.report.pair_base_points == ((0, 1),)
    assert all(v.exact for v in normalized.variants)


def test_report_invariants():
    for c in range(7):
        rep = base_locus_report(fund(7, 5, c))
        assert set(rep.pair_base_points) <= set(rep.base_supports)
        assert rep.exact_match == (set(rep.base_supports) == set(rep.predicted_pairs))
