"""End-to-end certificates: Coxeter relations, determinant locus,
convex cocompactness, and the appendix-style numeric scans.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import charts, linalg
from .cartan import ReflectionSystem
from .errors import WrongDiagram
from .orbifold import EdgeOrders, QuadPrismOrders, is_finite_order

#: Frobenius tolerance for n-fold products of reflections; looser than
#: the algebraic tolerance because rounding accumulates over the power.
RELATION_TOL = 1e-7


@dataclass
class RelationReport:
    """Residuals of the Coxeter relations of one reflection system."""

    involution_residuals: dict
    finite_pair_residuals: dict
    infinite_pair_products: dict
    tol: float
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_relations(sys: ReflectionSystem, orders: EdgeOrders,
                     tol: float = RELATION_TOL) -> RelationReport:
    """Check R_i^2 = Id, (R_i R_j)^n_ij = Id for finite orders, and
    infinite order of R_i R_j for infinite ones.

    Infinite order is decided by the trace of the product restricted to
    span{v_i, v_j}, which equals M_ij M_ji - 2: a value > 2 gives a
    real eigenvalue pair (lambda, 1/lambda) with lambda > 1, so no
    power returns to the identity.  Products below 4 are reported as
    failures.
    """
    if isinstance(orders, QuadPrismOrders):
        orders = orders.to_edge_orders()
    f = sys.num_sides
    ident = np.eye(sys.dimension)
    refl = {i: sys.reflection(i) for i in range(1, f + 1)}
    failures = []

    involutions = {}
    for i in range(1, f + 1):
        res = float(np.linalg.norm(refl[i] @ refl[i] - ident))
        involutions[i] = res
        if res > tol:
            failures.append(("involution", i))

    finite_res = {}
    infinite_prod = {}
    for (i, j) in sorted(orders.orders):
        n = orders.order(i, j)
        if is_finite_order(n):
            power = linalg.mat_power(refl[i] @ refl[j], n)
            res = float(np.linalg.norm(power - ident))
            finite_res[(i, j)] = res
            if res > tol:
                failures.append(("finite", (i, j)))
        else:
            m = sys.raw_cartan()
            prod = float(m[i - 1, j - 1] * m[j - 1, i - 1])
            infinite_prod[(i, j)] = prod
            if prod < 4.0 - tol:
                failures.append(("infinite", (i, j)))

    return RelationReport(involutions, finite_res, infinite_prod, tol, failures)


def is_convex_cocompact(m: np.ndarray, orders, tol: float = 0.0) -> bool:
    """Convex cocompactness of the quad-prism reflection group:
    both infinite-pair products must exceed 4 strictly.

    A point with T13 = 4 or T24 = 4 is a valid deformation but not
    cocompact; the strictness margin is controlled by tol.
    """
    if isinstance(orders, QuadPrismOrders):
        orders = orders.to_edge_orders()
    expected_infinite = [(1, 3), (2, 4)]
    if orders.size != 4 or orders.infinite_pairs() != expected_infinite:
        raise WrongDiagram("expected the quad-prism pattern: infinite (1,3), (2,4)")
    for (i, j) in orders.finite_pairs():
        if orders.order(i, j) < 3:
            raise WrongDiagram("finite orders must be >= 3")
    m = np.asarray(m, dtype=float)
    t13 = m[0, 2] * m[2, 0]
    t24 = m[1, 3] * m[3, 1]
    return bool(t13 > 4.0 + tol and t24 > 4.0 + tol)


@dataclass
class DetLocusReport:
    """Extremes observed over the T13 = 4 and T24 = 4 boundary slices."""

    samples: int
    seed: int
    min_abs_det: dict
    min_e: dict

    @property
    def passed(self) -> bool:
        return all(v > 0.0 for v in self.min_abs_det.values())


def det_locus_check(orders: QuadPrismOrders, samples: int,
                    seed: int) -> DetLocusReport:
    """Sample standard-chart points on the two T = 4 boundary slices
    and record how close det(M) comes to zero.

    On each slice the other T is drawn from the interior distribution
    and (v23, v24, v34) log-uniformly; E is the positive defect in
    det(M) = (4 - T13)(4 - T24) - E.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    min_abs_det = {}
    min_e = {}
    for slice_name in ("T13=4", "T24=4"):
        t_free = charts.sample_t(rng, samples)
        t13 = np.full(samples, 4.0) if slice_name == "T13=4" else t_free
        t24 = t_free if slice_name == "T13=4" else np.full(samples, 4.0)
        v23 = charts.sample_negative(rng, samples)
        v24 = charts.sample_negative(rng, samples)
        v34 = charts.sample_negative(rng, samples)
        result = charts.solve_standard_batch(orders, t13, t24, v23, v24, v34)
        det_m = result["det_m"][result["valid"]]
        e = (4.0 - t13) * (4.0 - t24) - result["det_m"]
        min_abs_det[slice_name] = float(np.min(np.abs(det_m)))
        min_e[slice_name] = float(np.min(e[result["valid"]]))
    return DetLocusReport(samples, seed, min_abs_det, min_e)


def concurrent_t_products(orders: QuadPrismOrders, v12, v23, v14, v34):
    """T13 and T24 as functions of the concurrent coordinates
    (broadcasts over arrays)."""
    v12, v23, v14, v34 = np.broadcast_arrays(
        *(np.asarray(x, dtype=float) for x in (v12, v23, v14, v34)))
    m13 = v23 + orders.mu34 / v34 - 2.0
    m31 = orders.mu14 / v14 + orders.mu12 / v12 - 2.0
    m24 = v14 + v34 - 2.0
    m42 = v12 + orders.mu23 / v23 - 2.0
    return m13 * m31, m24 * m42


@dataclass
class ConcurrentScanReport:
    """Grid minimum of T13 * T24 over the concurrent chart."""

    grid_points_per_axis: int
    box: tuple
    min_product: float
    argmin: tuple
    product_at_all_minus_one: float


def concurrent_t_scan(orders: QuadPrismOrders, grid_points_per_axis: int = 9,
                      box=(-10.0, -0.1)) -> ConcurrentScanReport:
    """Minimum of T13 * T24 over a log-spaced grid of the four
    concurrent coordinates; the grid always contains the all-(-1)
    point.
    """
    lo, hi = box
    if not (lo < hi < 0.0):
        raise ValueError(f"box must satisfy lo < hi < 0, got {box}")
    g = grid_points_per_axis
    axis = -np.geomspace(-lo, -hi, g)
    # force -1 onto the grid when the box contains it
    if lo < -1.0 < hi:
        axis[np.argmin(np.abs(axis + 1.0))] = -1.0
    v12, v23, v14, v34 = np.meshgrid(axis, axis, axis, axis, indexing="ij")
    t13, t24 = concurrent_t_products(orders, v12, v23, v14, v34)
    product = t13 * t24
    flat = int(np.argmin(product))
    idx = np.unravel_index(flat, product.shape)
    argmin = tuple(float(a[idx]) for a in (v12, v23, v14, v34))
    t13_1, t24_1 = concurrent_t_products(orders, -1.0, -1.0, -1.0, -1.0)
    return ConcurrentScanReport(g, (float(lo), float(hi)),
                                float(product[idx]), argmin,
                                float(t13_1 * t24_1))


@dataclass
class StandardScanReport:
    """Distribution of a4*v44 over random standard-chart points."""

    samples: int
    valid_samples: int
    seed: int
    box: tuple
    t13: float
    t24: float
    min_a4_v44: float
    max_a4_v44: float
    argmin: tuple
    histogram: list
    records: dict = None

    @property
    def summary(self) -> dict:
        return {
            "samples": self.samples, "valid_samples": self.valid_samples,
            "seed": self.seed, "box": list(self.box),
            "t13": self.t13, "t24": self.t24,
            "min_a4_v44": self.min_a4_v44, "max_a4_v44": self.max_a4_v44,
            "argmin": {"v23": self.argmin[0], "v24": self.argmin[1],
                       "v34": self.argmin[2]},
            "histogram": self.histogram,
        }


def standard_scan(orders: QuadPrismOrders, t13: float, t24: float,
                  samples: int, seed: int, box=(-10.0, -0.01),
                  bins: int = 20, keep_records: bool = False) -> StandardScanReport:
    """Monte-Carlo scan of a4*v44 at fixed (T13, T24).

    Coordinates are drawn log-uniformly in |v| over the box;
    near-singular systems are dropped from the statistics.  The result
    is deterministic for a given seed.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    v23 = charts.sample_negative_box(rng, box[0], box[1], samples)
    v24 = charts.sample_negative_box(rng, box[0], box[1], samples)
    v34 = charts.sample_negative_box(rng, box[0], box[1], samples)
    result = charts.solve_standard_batch(orders, t13, t24, v23, v24, v34)
    ok = result["valid"]
    values = result["a4_v44"][ok]
    if values.size == 0:
        raise ValueError("no valid samples; enlarge the box or sample count")
    kmin = int(np.argmin(values))
    counts, edges = np.histogram(values, bins=bins)
    histogram = [{"lo": float(edges[k]), "hi": float(edges[k + 1]),
                  "count": int(counts[k])} for k in range(bins)]
    records = None
    if keep_records:
        records = {
            "v23": v23[ok], "v24": v24[ok], "v34": v34[ok],
            "a4v44": values, "det_M": result["det_m"][ok],
            "T13_prod": np.full(values.shape, float(t13)),
            "T24_prod": np.full(values.shape, float(t24)),
        }
    return StandardScanReport(
        samples, int(np.sum(ok)), seed, (float(box[0]), float(box[1])),
        float(t13), float(t24), float(np.min(values)), float(np.max(values)),
        (float(v23[ok][kmin]), float(v24[ok][kmin]), float(v34[ok][kmin])),
        histogram, records)
