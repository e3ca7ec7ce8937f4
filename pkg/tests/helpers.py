"""Shared random-point generators for the test suite."""

import numpy as np

from projcox import charts
from projcox.errors import ConditionFailure, SingularSystem
from projcox.orbifold import QuadPrismOrders

ORDER_CHOICES = (3, 4, 5, 6)


def sample_negative_spread(rng: np.random.Generator, spread: float) -> float:
    """Negative coordinate with |v| log-uniform in [e^-spread, e^spread]."""
    return float(-np.exp(rng.uniform(-spread, spread)))


def sample_t_spread(rng: np.random.Generator, spread: float) -> float:
    return float(4.0 + np.exp(rng.uniform(-spread, spread)))


def random_orders(rng: np.random.Generator) -> QuadPrismOrders:
    picks = rng.choice(ORDER_CHOICES, size=4)
    return QuadPrismOrders(*(int(n) for n in picks))


def random_general(rng: np.random.Generator, orders: QuadPrismOrders = None,
                   spread: float = 2.0) -> charts.GeneralChartParams:
    if orders is None:
        orders = random_orders(rng)
    return charts.GeneralChartParams(
        orders,
        sample_t_spread(rng, min(spread + 1.0, 3.0)),
        sample_t_spread(rng, min(spread + 1.0, 3.0)),
        sample_negative_spread(rng, spread),
        sample_negative_spread(rng, spread),
        sample_negative_spread(rng, spread))


def random_concurrent(rng: np.random.Generator, orders: QuadPrismOrders = None,
                      v44: float = 0.0,
                      spread: float = 2.0) -> charts.ConcurrentChartParams:
    if orders is None:
        orders = random_orders(rng)
    return charts.ConcurrentChartParams(
        orders,
        sample_negative_spread(rng, spread), sample_negative_spread(rng, spread),
        sample_negative_spread(rng, spread), sample_negative_spread(rng, spread),
        v44)


def random_standard(rng: np.random.Generator, orders: QuadPrismOrders = None,
                    spread: float = 2.0) -> charts.StandardChartPoint:
    """A valid standard-chart point; resamples past singular systems."""
    while True:
        o = orders if orders is not None else random_orders(rng)
        try:
            return charts.build_standard(
                o,
                sample_t_spread(rng, min(spread + 1.0, 3.0)),
                sample_t_spread(rng, min(spread + 1.0, 3.0)),
                sample_negative_spread(rng, spread),
                sample_negative_spread(rng, spread),
                sample_negative_spread(rng, spread))
        except (SingularSystem, ConditionFailure):
            continue


def balanced_realization(pt: charts.StandardChartPoint):
    """Representative with a4 = sqrt(|a4*v44|), splitting the product
    evenly between alpha_4 and v_4 to keep matrix entries moderate."""
    a4 = max(np.sqrt(abs(pt.a4_v44)), 1e-6)
    return charts.realize_representation(pt, a4=a4)
