import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_concurrent, random_general, random_standard
from projcox import cartan, certify, charts
from projcox.errors import WrongDiagram
from projcox.orbifold import INFINITY, EdgeOrders, QuadPrismOrders

O3333 = QuadPrismOrders(3, 3, 3, 3)


def test_relations_concurrent_base_point():
    sys = charts.build_concurrent(
        charts.ConcurrentChartParams(O3333, -1.0, -1.0, -1.0, -1.0))
    report = certify.verify_relations(sys, O3333)
    assert report.passed
    assert max(report.involution_residuals.values()) <= 1e-12
    assert max(report.finite_pair_residuals.values()) <= 1e-10
    assert report.infinite_pair_products[(1, 3)] == pytest.approx(16.0)
    assert report.infinite_pair_products[(2, 4)] == pytest.approx(16.0)


def test_relations_detect_wrong_order():
    sys = charts.build_concurrent(
        charts.ConcurrentChartParams(O3333, -1.0, -1.0, -1.0, -1.0))
    wrong = QuadPrismOrders(4, 3, 3, 3)
    report = certify.verify_relations(sys, wrong)
    assert not report.passed
    assert ("finite", (1, 2)) in report.failures


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 100_000))
def test_relations_random_general_points(seed):
    rng = np.random.default_rng(seed)
    params = random_general(rng)
    report = certify.verify_relations(charts.build_general(params), params.orders)
    assert report.passed


def test_cocompact_strict_inequality():
    at_boundary = charts.build_general(
        charts.GeneralChartParams(O3333, 4.0, 6.0, -1.0, -1.0, -1.0))
    interior = charts.build_general(
        charts.GeneralChartParams(O3333, 4.5, 4.5, -1.0, -1.0, -1.0))
    assert not certify.is_convex_cocompact(at_boundary.raw_cartan(), O3333)
    assert certify.is_convex_cocompact(interior.raw_cartan(), O3333)


def test_cocompact_rejects_wrong_diagram():
    table = EdgeOrders(4, {(1, 2): INFINITY, (2, 3): 3, (3, 4): 3,
                           (1, 4): 3, (1, 3): 3, (2, 4): 3})
    with pytest.raises(WrongDiagram):
        certify.is_convex_cocompact(np.eye(4), table)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 100_000))
def test_cocompact_invariant_under_diagonal_conjugation(seed):
    rng = np.random.default_rng(seed)
    pt = random_standard(rng)
    m = charts.cartan_of_standard(pt)
    d = np.exp(rng.uniform(-1.0, 1.0, 4))
    conj = m * np.outer(d, 1.0 / d)
    assert (certify.is_convex_cocompact(m, pt.orders)
            == certify.is_convex_cocompact(conj, pt.orders))


def test_concurrent_t_products_match_cartan():
    rng = np.random.default_rng(11)
    for _ in range(20):
        p = random_concurrent(rng)
        m = cartan.cartan_of(charts.build_concurrent(p))
        t13, t24 = certify.concurrent_t_products(
            p.orders, p.v12, p.v23, p.v14, p.v34)
        assert t13 == pytest.approx(m[0, 2] * m[2, 0])
        assert t24 == pytest.approx(m[1, 3] * m[3, 1])


def test_concurrent_scan_minimum_at_base_point():
    report = certify.concurrent_t_scan(O3333, grid_points_per_axis=9)
    assert report.product_at_all_minus_one == pytest.approx(256.0, abs=1e-9)
    assert report.min_product >= 256.0 - 1e-6
    assert report.argmin == (-1.0, -1.0, -1.0, -1.0)


def test_concurrent_scan_bad_box():
    with pytest.raises(ValueError):
        certify.concurrent_t_scan(O3333, box=(-1.0, 2.0))


def test_det_locus_report():
    report = certify.det_locus_check(O3333, samples=2000, seed=0)
    assert report.passed
    assert report.min_abs_det["T13=4"] > 1e-6
    assert report.min_abs_det["T24=4"] > 1e-6
    assert report.min_e["T13=4"] > 0.0
    assert report.min_e["T24=4"] > 0.0


def test_standard_scan_deterministic():
    a = certify.standard_scan(O3333, 6.0, 6.0, samples=2000, seed=5)
    b = certify.standard_scan(O3333, 6.0, 6.0, samples=2000, seed=5)
    assert a.min_a4_v44 == b.min_a4_v44
    assert a.argmin == b.argmin
    assert a.histogram == b.histogram


def test_standard_scan_seed_changes_samples():
    a = certify.standard_scan(O3333, 6.0, 6.0, samples=2000, seed=5)
    b = certify.standard_scan(O3333, 6.0, 6.0, samples=2000, seed=6)
    assert a.argmin != b.argmin


def test_standard_scan_records_schema():
    report = certify.standard_scan(O3333, 6.0, 6.0, samples=500, seed=1,
                                   keep_records=True)
    rec = report.records
    assert set(rec) == {"v23", "v24", "v34", "a4v44", "det_M",
                        "T13_prod", "T24_prod"}
    n = report.valid_samples
    assert all(rec[c].shape == (n,) for c in rec)
    assert np.all(rec["T13_prod"] == 6.0)


def test_standard_scan_argmin_reproduces_minimum():
    report = certify.standard_scan(O3333, 6.0, 6.0, samples=2000, seed=2)
    v23, v24, v34 = report.argmin
    pt = charts.build_standard(O3333, 6.0, 6.0, v23, v24, v34)
    assert pt.a4_v44 == pytest.approx(report.min_a4_v44, rel=1e-9)


def test_standard_scan_rejects_empty():
    with pytest.raises(ValueError):
        certify.standard_scan(O3333, 6.0, 6.0, samples=0, seed=0)
