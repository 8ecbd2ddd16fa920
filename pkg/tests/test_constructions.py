import pytest

from wlpci.constructions import (
    PreconditionError,
    frobenius_lift_general,
    frobenius_lift_n4_part1,
    frobenius_lift_n4_part2,
    high_n_witness,
    largest_power_split,
    low_power_relation,
    power_relation,
    relation_2k_minus_1,
    verify_non_koszul,
    verify_syzygy,
)
from wlpci.lefschetz import E, mgd_kos, mgd_syz
from wlpci.polyring import PolyFp
from wlpci.syzygy import SyzygyElement, koszul_generator

from oracles import is_relation_sympy


def _poly(p, text_terms):
    return PolyFp(p, 3, text_terms)


def test_degree_2k_minus_1_relation_example():
    eta = relation_2k_minus_1(5, 2)
    g = _poly(5, {(0, 1, 0): 1, (0, 0, 1): -1})
    h = _poly(5, {(1, 0, 0): 2, (0, 1, 0): 1, (0, 0, 1): 1})
    assert list(eta.entries) == [g, h, -h, -g]
    assert eta.total_degree == 3
    assert eta.format() == "[x2 - x3, 2*x1 + x2 + x3, 3*x1 - x2 - x3, -x2 + x3]"


def test_degree_2k_minus_1_relation_for_k_one():
    for p in (3, 5, 7):
        eta = relation_2k_minus_1(p, 1)
        one = PolyFp.constant(p, 3)
        assert list(eta.entries) == [one, one, one, -one]


def test_degree_2k_minus_1_relation_is_a_non_koszul_relation():
    for p in (3, 5, 7, 11):
        for k in range(1, (p + 1) // 2 + 1):
            eta = relation_2k_minus_1(p, k)
            assert eta.total_degree == 2 * k - 1 == E(4, (k,) * 4)
            assert verify_syzygy(eta) and verify_non_koszul(eta)
            assert is_relation_sympy(eta.entries, eta.a, p)


def test_degree_2k_minus_1_relation_preconditions():
    with pytest.raises(PreconditionError):
        relation_2k_minus_1(5, 4)
    with pytest.raises(PreconditionError):
        relation_2k_minus_1(2, 1)


def test_first_frobenius_lift():
    base = relation_2k_minus_1(3, 1)
    eta = frobenius_lift_n4_part1(3, 1, base, 1)
    assert eta.a == (4,) * 4 and eta.total_degree == 7 == E(4, (4,) * 4)
    assert verify_syzygy(eta) and is_relation_sympy(eta.entries, eta.a, 3)
    plain = frobenius_lift_n4_part1(3, 1, base, 0)
    assert plain.total_degree == 3 and all(e.degree == 0 for e in plain.entries)


def test_second_frobenius_lift():
    base = relation_2k_minus_1(3, 1)
    eta = frobenius_lift_n4_part2(3, 1, base, 2)
    assert eta.a == (2,) * 4 and eta.total_degree == 3
    assert verify_syzygy(eta) and verify_non_koszul(eta)
    for r in range(3):
        assert frobenius_lift_n4_part2(3, 1, relation_2k_minus_1(3, 2), r).total_degree == 9


def test_lifts_bound_the_lowest_relation_degree():
    for p in (3, 5):
        for d in range(p, 3 * p):
            k, e, q, r = largest_power_split(p, d)
            degs = []
            if k <= (p + 1) // 2:
                degs.append(frobenius_lift_n4_part1(p, e, mgd_syz(p, 4, (k,) * 4).witness, r))
            degs.append(frobenius_lift_n4_part2(p, e, mgd_syz(p, 4, (k + 1,) * 4).witness, r))
            low = mgd_syz(p, 4, (d,) * 4).value
            for eta in degs:
                assert verify_syzygy(eta)
                assert low <= eta.total_degree
            if k <= (p - 1) // 2 and k + 1 <= (p + 1) // 2:
                assert min(x.total_degree for x in degs) == min(q * (2 * k - 1) + 4 * r, q * (2 * k + 1))


def test_necessity_step_for_four_variables():
    for p in (3, 5):
        for d in range(1, 11):
            k = d // p
            if E(4, (d,) * 4) <= mgd_syz(p, 4, (d,) * 4).value and k + 1 < p:
                assert E(4, (k + 1,) * 4) - 1 <= mgd_syz(p, 4, (k + 1,) * 4).value


def test_general_lift_example():
    eta = frobenius_lift_general(3, 5, 4, 0)
    assert eta.total_degree == 8 < E(5, (4,) * 5) == 9
    assert verify_syzygy(eta) and verify_non_koszul(eta)
    assert is_relation_sympy(eta.entries, eta.a, 3)


def test_general_lift_over_ell_range():
    for p, n, d in [(5, 5, 6), (5, 6, 6), (5, 5, 12), (3, 6, 5), (7, 5, 9)]:
        k, e, q, r = largest_power_split(p, d)
        for ell in range(n):
            eta = frobenius_lift_general(p, n, d, ell)
            assert verify_syzygy(eta) and verify_non_koszul(eta, budget=0)
            bound = (n * (k - 1) + ell + 3) // 2 * q + r * (n - ell)
            assert eta.total_degree <= bound


def test_general_lift_with_zero_remainder():
    eta = frobenius_lift_general(5, 5, 10, 0)
    assert verify_syzygy(eta) and verify_non_koszul(eta)
    with pytest.raises(PreconditionError):
        frobenius_lift_general(5, 5, 10, 2)


def test_power_relations():
    eta = power_relation(3, 4, 3, 1)
    assert eta.format() == "[1, 1, 1, -1]" and eta.total_degree == 3
    eta = low_power_relation(3, 5, 4, 2)
    assert eta.total_degree == 9 and all(e.degree == 5 for e in eta.entries)
    assert verify_non_koszul(eta) and verify_non_koszul(eta, budget=0)
    for e, d in [(1, 2), (2, 5), (2, 9)]:
        eta = power_relation(3, 5, d, e)
        assert verify_syzygy(eta) and verify_non_koszul(eta)
    with pytest.raises(PreconditionError):
        power_relation(3, 5, 4, 2)
    with pytest.raises(PreconditionError):
        low_power_relation(7, 3, 2, 1)  # (x1+x2)^5 lies in (x1^2, x2^2)


def test_non_koszul_check():
    for a in [(3, 3, 3, 3), (2, 3, 4)]:
        eta = koszul_generator(5, a, 0, 1)
        assert verify_syzygy(eta)
        assert not verify_non_koszul(eta)
        assert not verify_non_koszul(eta, budget=0)
    eta = mgd_syz(7, 4, (2, 3, 4, 5)).witness
    assert not verify_non_koszul(eta)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_high_n_witnesses_cover_every_no_wlp_point(n):
    for p in (2, 3, 5, 7):
        for d in range(1, 9):
            if p >= E(n, (d,) * n):
                with pytest.raises(PreconditionError):
                    high_n_witness(p, n, d)
                continue
            choice = high_n_witness(p, n, d)
            eta = choice.relation
            assert eta.a == (d,) * n
            assert verify_syzygy(eta) and verify_non_koszul(eta)
            assert eta.total_degree < E(n, (d,) * n)


def test_high_n_case_labels():
    assert high_n_witness(3, 5, 9).case == 1
    assert high_n_witness(2, 5, 6).case == 2
    assert high_n_witness(7, 5, 5).case == 3
    assert high_n_witness(3, 5, 4).method == "frobenius-general"
    assert high_n_witness(3, 6, 4).method == "low-power"
    assert high_n_witness(5, 5, 7).params == {"l": 0, "e": 1}
    for d in (13, 17, 23):
        choice = high_n_witness(5, 5, d)
        assert choice.method == "power" and choice.params == {"e": 2}
    assert high_n_witness(5, 6, 6).params == {"l": 2, "e": 1}
    assert high_n_witness(5, 8, 6).case == 9
