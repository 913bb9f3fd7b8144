import pytest

from fermat_adjoint.core import validate_config
from fermat_adjoint.errors import NotPrime, TooLarge
from fermat_adjoint.search import congruence_pairs, search, shift_orbit_key, verify_tuple


def test_shift_orbit_key():
    assert shift_orbit_key((1, 2, 3, 4), 5) == (0, 1, 2, 3)
    assert shift_orbit_key((0, 1, 3, 4), 5) == shift_orbit_key((0, 2, 3, 4), 5)


def test_congruence_pairs_example():
    # 2k0 + sum = 6 = 1 (mod 5); k0 + k1 = 1
    assert congruence_pairs(validate_config(5, 2, [0, 1, 2, 3]))["sum_of_weights"] == ((0, 1),)


def test_search_2_5():
    r = search(2, 5, -1)
    assert not r.fundamental and r.scanned == 4
    assert [t.config.weights for t in r.tuples] == [(0, 1, 2, 3)]
    t = r.tuples[0]
    assert t.base_point_found
    assert t.base.report.pair_base_points == ((0, 1),)


def test_search_2_7_shape():
    r = search(2, 7, -1)
    assert r.scanned == 20 and len(r.tuples) == 5
    keys = [shift_orbit_key(t.config.weights, 7) for t in r.tuples]
    assert len(set(keys)) == len(keys)
    assert all(t.base_point_found for t in r.tuples)


def test_search_3_7_verified():
    r = search(3, 7, -1)
    assert r.tuples and r.all_verified


def test_search_hits_satisfy_congruence():
    for n, p in [(2, 11), (3, 11)]:
        for t in search(n, p, -1).tuples:
            assert t.config.weights[0] == 0
            assert any(congruence_pairs(t.config).values())


def test_search_covers_all_congruence_orbits():
    from itertools import combinations
    r = search(2, 11, -1)
    found = {shift_orbit_key(t.config.weights, 11) for t in r.tuples}
    for rest in combinations(range(1, 11), 3):
        cfg = validate_config(11, 2, (0,) + rest)
        if any(congruence_pairs(cfg).values()):
            assert shift_orbit_key(cfg.weights, 11) in found


def test_base_pair_matches_congruence_when_normalized():
    for t in search(3, 11, -1).tuples:
        named = congruence_pairs(t.config)["sum_of_weights"]
        assert set(named) <= set(t.base.report.pair_base_points)


def test_fundamental_notice():
    r = search(3, 5, -1)
    assert r.fundamental and r.scanned == 0 and r.tuples == ()


def test_search_cap_and_validation():
    with pytest.raises(TooLarge):
        search(3, 11, -1, cap=10)
    with pytest.raises(NotPrime):
        search(2, 9, -1)


def test_unseparated_pairs_exist_for_every_hit():
    for n, p in [(2, 5), (2, 7), (3, 7)]:
        for t in search(n, p, -1).tuples:
            assert t.unseparated_elsewhere


def test_verify_tuple_base_pair_with_index_zero():
    # the base pair meets the weight-0 variable; the direction it names is degenerate there
    t = verify_tuple(validate_config(5, 2, [0, 1, 2, 3]), -1)
    (rep,) = t.separation
    assert rep.point.pair == (0, 1)
    assert rep.direction_degenerate and rep.zero_columns == ()
    assert not t.verified
