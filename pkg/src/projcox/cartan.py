"""Cartan matrices, Vinberg's conditions, and cyclic invariants.

A reflection system is the tuple (alpha_1..alpha_f, v_1..v_f) of
covectors and vectors defining the projective reflections
R_j = Id - alpha_j (x) v_j.  Its Cartan matrix is M_ij = alpha_i(v_j).
Two systems describe the same polytope up to projective equivalence
exactly when their Cartan matrices are conjugate by a positive diagonal
matrix, which is decided here through cyclic invariants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

import numpy as np

from . import linalg
from .errors import InvariantViolation, UnsupportedShape
from .orbifold import EdgeOrders, QuadPrismOrders, is_finite_order, mu

VINBERG_CONDITIONS = ("C1", "C2", "C3", "C4", "C5")

#: generating set of cyclic invariants for the quad-prism diagram
GENERATING_CYCLES = ((1, 3), (2, 4), (1, 2, 3), (1, 2, 4), (1, 3, 4))


@dataclass(frozen=True)
class ReflectionSystem:
    """Covectors (rows of ``alphas``) and vectors (rows of ``vectors``)
    of f projective reflections in dimension d.
    """

    alphas: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        alphas = np.atleast_2d(np.asarray(self.alphas, dtype=float))
        vectors = np.atleast_2d(np.asarray(self.vectors, dtype=float))
        if alphas.shape != vectors.shape:
            raise ValueError(f"alphas shape {alphas.shape} != vectors shape {vectors.shape}")
        if not (np.all(np.isfinite(alphas)) and np.all(np.isfinite(vectors))):
            raise ValueError("entries must be finite")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "vectors", vectors)

    @property
    def num_sides(self) -> int:
        return self.alphas.shape[0]

    @property
    def dimension(self) -> int:
        return self.alphas.shape[1]

    def reflection(self, i: int) -> np.ndarray:
        """Reflection matrix R_i (1-based side index)."""
        return linalg.reflection(self.alphas[i - 1], self.vectors[i - 1])

    def raw_cartan(self) -> np.ndarray:
        """M_ij = alpha_i(v_j), without invariant checks."""
        return self.alphas @ self.vectors.T


def cartan_of(sys: ReflectionSystem, tol: float = linalg.TOL_ALGEBRAIC) -> np.ndarray:
    """Cartan matrix of the system, validated: diagonal 2, off-diagonal
    <= 0, and zero symmetry (M_ij = 0 iff M_ji = 0).
    """
    m = sys.raw_cartan()
    validate_cartan(m, tol)
    return m


def validate_cartan(m: np.ndarray, tol: float = linalg.TOL_ALGEBRAIC):
    m = np.asarray(m, dtype=float)
    f = m.shape[0]
    if np.max(np.abs(np.diag(m) - 2.0)) > tol:
        raise InvariantViolation("diagonal entries must equal 2")
    off = m[~np.eye(f, dtype=bool)]
    if off.size and np.max(off) > tol:
        raise InvariantViolation("off-diagonal entries must be <= 0")
    for i in range(f):
        for j in range(i + 1, f):
            if (abs(m[i, j]) <= tol) != (abs(m[j, i]) <= tol):
                raise InvariantViolation(f"zero symmetry broken at ({i + 1},{j + 1})")


@dataclass
class ConditionCheck:
    """Outcome of one Vinberg condition: worst residual and the pairs
    that failed (1-based)."""

    passed: bool
    residual: float = 0.0
    failures: list = field(default_factory=list)


@dataclass
class VinbergReport:
    """Per-condition results of check_vinberg."""

    conditions: dict

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions.values())

    def failed_conditions(self):
        return [name for name, c in self.conditions.items() if not c.passed]


def check_vinberg(sys: ReflectionSystem, orders: EdgeOrders,
                  tol: float = linalg.TOL_ALGEBRAIC) -> VinbergReport:
    """Run conditions (C1)-(C5) on the system and report each outcome.

    C5 (nonempty interior) is certified through the linear-relation
    criterion: either the alphas are independent, or their single
    relation has the alternating sign pattern that writes the dependent
    covector with positive coefficients in the sense of the adjacency
    structure.
    """
    if isinstance(orders, QuadPrismOrders):
        orders = orders.to_edge_orders()
    f = sys.num_sides
    if orders.size != f:
        raise ValueError(f"orders table has {orders.size} sides, system has {f}")
    m = sys.raw_cartan()
    report = {}

    # C1: diagonal exactly 2, off-diagonal never 2
    diag_res = float(np.max(np.abs(np.diag(m) - 2.0)))
    c1_fail = [(i + 1, i + 1) for i in range(f) if abs(m[i, i] - 2.0) > tol]
    c1_fail += [(i + 1, j + 1) for i in range(f) for j in range(f)
                if i != j and abs(m[i, j] - 2.0) <= tol]
    report["C1"] = ConditionCheck(not c1_fail, diag_res, c1_fail)

    # C2: off-diagonal <= 0
    c2_fail = [(i + 1, j + 1) for i in range(f) for j in range(f)
               if i != j and m[i, j] > tol]
    c2_res = float(max((m[i - 1, j - 1] for i, j in c2_fail), default=0.0))
    report["C2"] = ConditionCheck(not c2_fail, c2_res, c2_fail)

    # C3: zero symmetry
    c3_fail = [(i + 1, j + 1) for i in range(f) for j in range(i + 1, f)
               if (abs(m[i, j]) <= tol) != (abs(m[j, i]) <= tol)]
    report["C3"] = ConditionCheck(not c3_fail, 0.0, c3_fail)

    # C4: products match mu for finite orders, >= 4 for infinite ones
    c4_fail = []
    c4_res = 0.0
    for (i, j) in sorted(orders.orders):
        prod = m[i - 1, j - 1] * m[j - 1, i - 1]
        n = orders.order(i, j)
        if is_finite_order(n):
            res = abs(prod - mu(n))
            c4_res = max(c4_res, res)
            if res > tol:
                c4_fail.append((i, j))
        elif prod < 4.0 - tol:
            c4_res = max(c4_res, 4.0 - prod)
            c4_fail.append((i, j))
    report["C4"] = ConditionCheck(not c4_fail, c4_res, c4_fail)

    # C5: nonempty interior via the relation-space certificate
    try:
        c5_ok = relation_space_trivial(sys.alphas, m)
    except UnsupportedShape:
        c5_ok = False
    report["C5"] = ConditionCheck(c5_ok)

    return VinbergReport(report)


def relation_space_trivial(alphas: np.ndarray, m: np.ndarray,
                           tol: float = 1e-8) -> bool:
    """Whether no nonzero nonnegative-coefficient relation among the
    rows of the Cartan matrix is a relation among the alphas.

    Independent alphas pass immediately.  With a one-dimensional
    relation space the relation passes iff its coefficients take both
    signs, so neither it nor its negative lies in the nonnegative cone.
    Relation spaces of dimension > 1 are outside the shapes handled
    here.
    """
    alphas = np.atleast_2d(np.asarray(alphas, dtype=float))
    f, d = alphas.shape
    r = linalg.rank(alphas, tol)
    if r == f:
        return True
    if f - r > 1:
        raise UnsupportedShape("relation space has dimension > 1")
    rel = linalg.kernel_basis(alphas.T, tol)
    if rel.shape[0] != 1:
        raise UnsupportedShape("could not isolate a one-dimensional relation space")
    coeffs = rel[0]
    scale = np.max(np.abs(coeffs))
    has_pos = np.any(coeffs > tol * scale)
    has_neg = np.any(coeffs < -tol * scale)
    return bool(has_pos and has_neg)


def _canonical_cycle(cycle) -> tuple:
    """Rotate the cycle so the smallest index comes first.  Orientation
    is preserved: a cycle and its reversal are distinct keys.
    """
    cycle = tuple(cycle)
    if len(set(cycle)) != len(cycle):
        raise ValueError(f"cycle indices must be distinct: {cycle}")
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


@dataclass(frozen=True)
class CyclicInvariants:
    """Values M_{i1 i2} M_{i2 i3} ... M_{ik i1} keyed by canonical
    cycles, both orientations included."""

    values: dict

    def value(self, *cycle) -> float:
        if len(cycle) == 1 and isinstance(cycle[0], tuple):
            cycle = cycle[0]
        return self.values[_canonical_cycle(cycle)]

    def __getitem__(self, cycle) -> float:
        return self.value(cycle)


def cycle_value(m: np.ndarray, cycle) -> float:
    value = 1.0
    k = len(cycle)
    for t in range(k):
        value *= m[cycle[t] - 1, cycle[(t + 1) % k] - 1]
    return float(value)


def cyclic_invariants(m: np.ndarray) -> CyclicInvariants:
    """All cyclic invariants of lengths 2, 3, 4 of a 4x4 Cartan matrix."""
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        raise UnsupportedShape("cyclic invariants are implemented for f = 4")
    values = {}
    for i, j in combinations(range(1, 5), 2):
        values[(i, j)] = cycle_value(m, (i, j))
    for subset in combinations(range(1, 5), 3):
        first, rest = subset[0], subset[1:]
        for tail in permutations(rest):
            cycle = (first,) + tail
            values[cycle] = cycle_value(m, cycle)
    for tail in permutations((2, 3, 4)):
        cycle = (1,) + tail
        values[cycle] = cycle_value(m, cycle)
    return CyclicInvariants(values)


def _relative_residual(x: float, y: float) -> float:
    return abs(x - y) / (1.0 + abs(x) + abs(y))


@dataclass
class IdentityReport:
    """Residuals of the eleven derived-invariant identities."""

    residuals: dict
    tol: float

    @property
    def passed(self) -> bool:
        return all(r <= self.tol for r in self.residuals.values())

    def failures(self):
        return {k: r for k, r in self.residuals.items() if r > self.tol}


def derived_invariant_identities(inv: CyclicInvariants, orders: QuadPrismOrders,
                                 tol: float = 1e-9) -> IdentityReport:
    """Check that every non-generating cyclic invariant is the stated
    rational expression in the five generators and the mu values.

    For the infinite edge (2,4) the length-2 invariant itself plays the
    role of mu.  Residuals are relative: |x - y| / (1 + |x| + |y|).
    """
    m12, m23, m34, m14 = orders.mu12, orders.mu23, orders.mu34, orders.mu14
    t13 = inv[(1, 3)]
    t24 = inv[(2, 4)]
    g123 = inv[(1, 2, 3)]
    g124 = inv[(1, 2, 4)]
    g134 = inv[(1, 3, 4)]
    expected = {
        (1, 3, 2): m12 * m23 * t13 / g123,
        (1, 4, 2): m12 * m14 * t24 / g124,
        (1, 4, 3): m14 * m34 * t13 / g134,
        (2, 3, 4): t24 * g123 * g134 / (t13 * g124),
        (2, 4, 3): m23 * m34 * t13 * g124 / (g123 * g134),
        (1, 2, 3, 4): g123 * g134 / t13,
        (1, 2, 4, 3): m34 * t13 * g124 / g134,
        (1, 3, 2, 4): m23 * t13 * g124 / g123,
        (1, 3, 4, 2): m12 * t24 * g134 / g124,
        (1, 4, 2, 3): m14 * t24 * g123 / g124,
        (1, 4, 3, 2): m12 * m23 * m34 * m14 * t13 / (g123 * g134),
    }
    residuals = {cycle: _relative_residual(inv[cycle], value)
                 for cycle, value in expected.items()}
    return IdentityReport(residuals, tol)


def projectively_equivalent(m1: np.ndarray, m2: np.ndarray,
                            tol: float = 1e-9) -> bool:
    """Whether two 4x4 Cartan matrices are conjugate by a positive
    diagonal matrix, i.e. agree on the generating cyclic invariants.
    """
    inv1 = cyclic_invariants(m1)
    inv2 = cyclic_invariants(m2)
    return all(_relative_residual(inv1[c], inv2[c]) <= tol for c in GENERATING_CYCLES)
