import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_general, random_standard
from projcox import cartan, charts
from projcox.cartan import (GENERATING_CYCLES, ReflectionSystem, cartan_of,
                            check_vinberg, cycle_value, cyclic_invariants,
                            derived_invariant_identities,
                            projectively_equivalent, relation_space_trivial)
from projcox.errors import InvariantViolation, UnsupportedShape
from projcox.orbifold import QuadPrismOrders

O3333 = QuadPrismOrders(3, 3, 3, 3)


def concurrent_all_minus_one(orders=O3333):
    return charts.build_concurrent(
        charts.ConcurrentChartParams(orders, -1.0, -1.0, -1.0, -1.0))


def test_reflection_system_shape_checks():
    with pytest.raises(ValueError):
        ReflectionSystem(np.eye(4), np.eye(3))


def test_cartan_of_concurrent_base_point():
    m = cartan_of(concurrent_all_minus_one())
    # alpha_4 = e1* - e2* + e3* applied to the base-point vectors
    assert np.allclose(np.diag(m), 2.0)
    assert m[0, 2] == pytest.approx(-4.0)   # v23 + mu34/v34 - 2 = -1 - 1 - 2
    assert m[2, 0] == pytest.approx(-4.0)
    assert m[1, 3] == pytest.approx(-4.0)   # v14 + v34 - 2
    assert m[3, 1] == pytest.approx(-4.0)
    assert m[0, 2] * m[2, 0] == pytest.approx(16.0)
    assert m[1, 3] * m[3, 1] == pytest.approx(16.0)


def test_cartan_of_rejects_positive_off_diagonal():
    vmat = 2.0 * np.eye(3)
    vmat[0, 1] = 0.5
    vmat[1, 0] = -1.0
    vmat[0, 2] = vmat[2, 0] = vmat[1, 2] = vmat[2, 1] = -1.0
    with pytest.raises(InvariantViolation):
        cartan_of(ReflectionSystem(np.eye(3), vmat.T))


def test_cartan_of_rejects_broken_zero_symmetry():
    vmat = 2.0 * np.eye(3)
    vmat[0, 1] = 0.0
    vmat[1, 0] = -1.0
    vmat[0, 2] = vmat[2, 0] = vmat[1, 2] = vmat[2, 1] = -1.0
    with pytest.raises(InvariantViolation):
        cartan_of(ReflectionSystem(np.eye(3), vmat.T))


def test_check_vinberg_general_chart_passes():
    orders = QuadPrismOrders(3, 4, 5, 6)
    params = charts.GeneralChartParams(orders, 9.0, 5.0, -2.0, -0.5, -3.0)
    report = check_vinberg(charts.build_general(params), orders.to_edge_orders())
    assert report.passed
    for name in ("C1", "C2", "C3", "C4"):
        assert report.conditions[name].residual <= 1e-9


def test_check_vinberg_concurrent_chart_passes():
    report = check_vinberg(concurrent_all_minus_one(), O3333.to_edge_orders())
    assert report.passed


def test_check_vinberg_detects_wrong_order():
    # products tuned for orders (3,3,3,3) fail C4 against (4,3,3,3)
    wrong = QuadPrismOrders(4, 3, 3, 3)
    report = check_vinberg(concurrent_all_minus_one(), wrong.to_edge_orders())
    assert not report.passed
    assert report.failed_conditions() == ["C4"]
    assert (1, 2) in report.conditions["C4"].failures


def test_check_vinberg_detects_sign_flip():
    rng = np.random.default_rng(7)
    params = random_general(rng)
    sys = charts.build_general(params)
    vmat = sys.vectors.T.copy()
    vmat[1, 2] = -vmat[1, 2]
    report = check_vinberg(ReflectionSystem(np.eye(4), vmat.T),
                           params.orders.to_edge_orders())
    assert not report.passed
    assert "C2" in report.failed_conditions()


def test_relation_space_trivial_independent():
    assert relation_space_trivial(np.eye(4), 2.0 * np.eye(4))


def test_relation_space_mixed_signs_pass():
    # alpha_4 = e1* - e2* + e3*: relation (1, -1, 1, -1) has both signs
    alphas = np.array([[1.0, 0, 0, 0], [0, 1.0, 0, 0], [0, 0, 1.0, 0],
                       [1.0, -1.0, 1.0, 0]])
    assert relation_space_trivial(alphas, np.zeros((4, 4)))


def test_relation_space_one_signed_fails():
    # alpha_4 = -(e1* + e2* + e3*): the relation is single-signed
    alphas = np.array([[1.0, 0, 0, 0], [0, 1.0, 0, 0], [0, 0, 1.0, 0],
                       [-1.0, -1.0, -1.0, 0]])
    assert not relation_space_trivial(alphas, np.zeros((4, 4)))


def test_relation_space_high_dimension_unsupported():
    alphas = np.array([[1.0, 0, 0, 0], [1.0, 0, 0, 0], [2.0, 0, 0, 0]])
    with pytest.raises(UnsupportedShape):
        relation_space_trivial(alphas, np.zeros((3, 3)))


def test_cycle_value_by_hand():
    m = np.arange(1.0, 17.0).reshape(4, 4)
    assert cycle_value(m, (1, 3)) == pytest.approx(m[0, 2] * m[2, 0])
    assert cycle_value(m, (1, 2, 3)) == pytest.approx(m[0, 1] * m[1, 2] * m[2, 0])


def test_cyclic_invariants_count_and_orientation():
    m = np.arange(1.0, 17.0).reshape(4, 4)
    inv = cyclic_invariants(m)
    assert len(inv.values) == 6 + 8 + 6
    assert inv[(1, 2, 3)] != inv[(1, 3, 2)]
    # rotation of the cycle is the same invariant
    assert inv.value(2, 3, 1) == inv.value(1, 2, 3)


def test_invariants_base_point_values():
    m = cartan_of(concurrent_all_minus_one())
    inv = cyclic_invariants(m)
    assert inv[(1, 3)] == pytest.approx(16.0)
    assert inv[(2, 4)] == pytest.approx(16.0)
    # M12 M23 M31 = (-1)(-1)(-4) = -4
    assert inv[(1, 2, 3)] == pytest.approx(-4.0)


def test_identities_on_base_point():
    m = cartan_of(concurrent_all_minus_one())
    report = derived_invariant_identities(cyclic_invariants(m), O3333)
    assert report.passed
    assert max(report.residuals.values()) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 100_000))
def test_identities_on_random_standard_points(seed):
    rng = np.random.default_rng(seed)
    pt = random_standard(rng)
    m = charts.cartan_of_standard(pt)
    report = derived_invariant_identities(cyclic_invariants(m), pt.orders)
    assert report.passed, report.failures()


def test_identities_detect_perturbation():
    m = cartan_of(concurrent_all_minus_one()).copy()
    m[1, 2] *= 1.0 + 1e-3
    report = derived_invariant_identities(cyclic_invariants(m), O3333)
    assert not report.passed


def test_projectively_equivalent_reflexive():
    m = cartan_of(concurrent_all_minus_one())
    assert projectively_equivalent(m, m)


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 100_000))
def test_diagonal_conjugation_is_equivalence(seed):
    rng = np.random.default_rng(seed)
    pt = random_standard(rng)
    m = charts.cartan_of_standard(pt)
    d = np.exp(rng.uniform(-1.0, 1.0, 4))
    conj = m * np.outer(d, 1.0 / d)
    assert projectively_equivalent(m, conj)


def test_distinct_points_not_equivalent():
    orders = QuadPrismOrders(3, 3, 3, 3)
    a = charts.build_standard(orders, 6.0, 6.0, -1.0, -1.0, -1.0)
    b = charts.build_standard(orders, 6.0, 6.0, -1.5, -1.0, -1.0)
    assert not projectively_equivalent(charts.cartan_of_standard(a),
                                       charts.cartan_of_standard(b))


def test_generating_cycles_cover_the_two_infinite_edges():
    assert (1, 3) in GENERATING_CYCLES
    assert (2, 4) in GENERATING_CYCLES
    assert len(GENERATING_CYCLES) == 5
