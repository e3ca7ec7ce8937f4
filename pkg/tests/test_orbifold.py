import math
import pickle
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from projcox import orbifold
from projcox.errors import InfiniteOrder, NonHyperbolic
from projcox.orbifold import (INFINITY, EdgeOrders, OrbifoldSignature,
                              QuadPrismOrders, cg05_dim, d_tp,
                              euler_characteristic, mu,
                              quadrilateral_signature, teichmuller_dim)


def test_mu_exact_values():
    assert mu(2) == pytest.approx(0.0, abs=1e-15)
    assert mu(3) == pytest.approx(1.0, abs=1e-15)
    assert mu(4) == pytest.approx(2.0, abs=1e-15)
    assert mu(6) == pytest.approx(3.0, abs=1e-15)


def test_mu_pentagon():
    # 4 cos^2(pi/5) = (3 + sqrt(5)) / 2
    assert mu(5) == pytest.approx((3.0 + math.sqrt(5.0)) / 2.0, abs=1e-14)


def test_mu_rejects_infinity():
    with pytest.raises(InfiniteOrder):
        mu(INFINITY)


def test_mu_rejects_bad_orders():
    with pytest.raises(ValueError):
        mu(1)
    with pytest.raises(ValueError):
        mu(3.0)  # float orders are ambiguous; require int


@given(n=st.integers(2, 200))
def test_mu_monotone_in_range(n):
    assert 0.0 <= mu(n) < 4.0
    assert mu(n + 1) > mu(n)


def test_infinity_singleton_survives_pickle():
    assert pickle.loads(pickle.dumps(INFINITY)) is INFINITY


def test_edge_orders_symmetric_lookup():
    table = EdgeOrders(3, {(1, 2): 4, (1, 3): 3, (2, 3): 5})
    assert table.order(2, 1) == 4
    assert table.order(3, 2) == 5


def test_edge_orders_missing_pair_rejected():
    with pytest.raises(ValueError):
        EdgeOrders(3, {(1, 2): 4, (1, 3): 3})


def test_infinite_pairs_all_finite():
    table = EdgeOrders(3, {(1, 2): 3, (1, 3): 3, (2, 3): 3})
    assert orbifold.infinite_pairs(table) == []


def test_infinite_pairs_single():
    table = EdgeOrders(3, {(1, 2): INFINITY, (1, 3): 3, (2, 3): 3})
    assert orbifold.infinite_pairs(table) == [(1, 2)]


def test_quad_prism_orders():
    o = QuadPrismOrders(3, 4, 5, 6)
    table = o.to_edge_orders()
    assert table.infinite_pairs() == [(1, 3), (2, 4)]
    assert table.order(1, 2) == 3
    assert table.order(3, 4) == 5
    assert table.order(1, 4) == 6
    assert o.mu23 == pytest.approx(2.0)


def test_quad_prism_rejects_order_two():
    with pytest.raises(ValueError):
        QuadPrismOrders(2, 3, 3, 3)


def test_euler_characteristic_quadrilateral_3333():
    sig = quadrilateral_signature(3, 3, 3, 3)
    assert euler_characteristic(sig) == Fraction(-1, 3)


def test_euler_characteristic_right_angles_flat():
    # D^2(;2,2,2,2) is Euclidean, not hyperbolic
    sig = quadrilateral_signature(2, 2, 2, 2)
    assert euler_characteristic(sig) == 0
    with pytest.raises(NonHyperbolic):
        teichmuller_dim(sig)


def test_euler_characteristic_with_cone_and_boundary():
    # disk, one cone point of order 7, two corner reflectors of order 4,
    # one extra full boundary component on a torus piece would not be a
    # disk; keep chi_underlying = 1:
    sig = OrbifoldSignature(1, (7,), (4, 4), 0)
    assert euler_characteristic(sig) == Fraction(1) - Fraction(6, 7) - Fraction(3, 4)


def test_dimension_counts_quadrilateral_3333():
    sig = quadrilateral_signature(3, 3, 3, 3)
    assert teichmuller_dim(sig) == 1
    assert d_tp(sig) == 1
    assert cg05_dim(sig) == 4


def test_cg05_pentagon():
    sig = OrbifoldSignature(1, (), (3, 3, 3, 3, 3), 0)
    assert cg05_dim(sig) == 7


def test_cg05_counts_order_two_corners():
    # l2 = 1: one right-angle corner contributes 3 - 1 = 2
    sig = OrbifoldSignature(1, (), (2, 3, 3, 3, 3), 0)
    assert euler_characteristic(sig) < 0
    assert cg05_dim(sig) == -8 + 3 * 5 - 1


def test_d_tp_subtracts_boundary():
    sig = OrbifoldSignature(1, (3, 3), (), 1)
    assert euler_characteristic(sig) < 0
    assert d_tp(sig) == teichmuller_dim(sig) - 1


def test_cg05_requires_no_boundary():
    sig = OrbifoldSignature(1, (3, 3), (), 1)
    with pytest.raises(ValueError):
        cg05_dim(sig)


@given(n1=st.integers(3, 30), n2=st.integers(3, 30),
       n3=st.integers(3, 30), n4=st.integers(3, 30))
def test_quadrilateral_reflector_orbifolds_are_hyperbolic(n1, n2, n3, n4):
    """Four corners of order >= 3 always give chi < 0 and the same
    dimension counts regardless of the orders."""
    sig = quadrilateral_signature(n1, n2, n3, n4)
    assert euler_characteristic(sig) < 0
    assert teichmuller_dim(sig) == 1
    assert cg05_dim(sig) == 4
