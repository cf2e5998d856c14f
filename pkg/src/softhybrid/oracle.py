"""Dense brute-force mirror of the set algebra and the measures.

Everything here materializes the full m x n grid and walks it with explicit
index loops, row-major, with no sparsity shortcuts. It shares no arithmetic
with :mod:`softhybrid.core` or :mod:`softhybrid.measures`; the test suite
checks the two paths against each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .core import (
    TOL,
    CardinalPair,
    ParameterSpace,
    SoftHybridSet,
    Universe,
    Variant,
    make_set,
)
from .errors import DimensionMismatch, EmptyInput, MixedSpaces
from .measures import EvaluationDomain, MeasurePair, RankedSet


@dataclass(frozen=True, eq=False)
class DenseSet:
    """Full-grid form: ``param_row[i]`` and ``value_grid[i, j]`` for e_i, x_j."""

    param_row: np.ndarray
    value_grid: np.ndarray
    variant: Variant
    universe: Universe
    pspace: ParameterSpace

    def __post_init__(self):
        m, n = len(self.pspace), len(self.universe)
        if self.param_row.shape != (m,) or self.value_grid.shape != (m, n):
            raise DimensionMismatch(
                f"expected shapes ({m},) and ({m}, {n}), got {self.param_row.shape} and {self.value_grid.shape}"
            )
        for arr in (self.param_row, self.value_grid):
            if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
                raise DimensionMismatch("dense grades must lie in [0, 1]")
            arr.setflags(write=False)

    @property
    def m(self) -> int:
        return len(self.pspace)

    @property
    def n(self) -> int:
        return len(self.universe)


def _dense(param_row, value_grid, variant, universe, pspace) -> DenseSet:
    return DenseSet(
        np.asarray(param_row, dtype=float),
        np.asarray(value_grid, dtype=float).reshape(len(pspace), len(universe)),
        Variant(variant),
        universe,
        pspace,
    )


def densify(s: SoftHybridSet) -> DenseSet:
    m, n = s.shape
    params = np.zeros(m)
    grid = np.zeros((m, n))
    for i, e in enumerate(s.pspace.params):
        params[i] = s.params.get(e, 0.0)
        row = s.values.get(e, {})
        for j, x in enumerate(s.universe.items):
            grid[i, j] = row.get(x, 0.0)
    return _dense(params, grid, s.variant, s.universe, s.pspace)


def sparsify(d: DenseSet) -> SoftHybridSet:
    params = {}
    values = {}
    for i, e in enumerate(d.pspace.params):
        if d.param_row[i] != 0.0:
            params[e] = float(d.param_row[i])
        row = {}
        for j, x in enumerate(d.universe.items):
            if d.value_grid[i, j] != 0.0:
                row[x] = float(d.value_grid[i, j])
        if row:
            values[e] = row
    return make_set(d.variant, params, values, d.universe, d.pspace, check_support=False)


# -- dense set algebra -----------------------------------------------------------


def _check_shared(d1: DenseSet, d2: DenseSet, pspace: bool = True) -> None:
    if d1.universe.items != d2.universe.items or (pspace and d1.pspace.params != d2.pspace.params):
        raise MixedSpaces("dense operands live over different spaces")


def _join(v1: Variant, v2: Variant) -> Variant:
    fp = v1 in (Variant.FP_SOFT, Variant.FPFS) or v2 in (Variant.FP_SOFT, Variant.FPFS)
    fv = v1 in (Variant.FUZZY_SOFT, Variant.FPFS) or v2 in (Variant.FUZZY_SOFT, Variant.FPFS)
    if fp and fv:
        return Variant.FPFS
    return Variant.FP_SOFT if fp else Variant.FUZZY_SOFT if fv else Variant.SOFT


def dense_absolute(universe, pspace, variant=Variant.FPFS) -> DenseSet:
    return _dense(np.ones(len(pspace)), np.ones((len(pspace), len(universe))), variant, universe, pspace)


def dense_null(universe, pspace, variant=Variant.FPFS) -> DenseSet:
    return _dense(np.zeros(len(pspace)), np.zeros((len(pspace), len(universe))), variant, universe, pspace)


def dense_complement(d: DenseSet) -> DenseSet:
    params = np.zeros(d.m)
    grid = np.zeros((d.m, d.n))
    for i in range(d.m):
        params[i] = 1.0 - d.param_row[i]
        for j in range(d.n):
            grid[i, j] = 1.0 - d.value_grid[i, j]
    return _dense(params, grid, d.variant, d.universe, d.pspace)


def _pointwise(d1: DenseSet, d2: DenseSet, op) -> DenseSet:
    _check_shared(d1, d2)
    params = np.zeros(d1.m)
    grid = np.zeros((d1.m, d1.n))
    for i in range(d1.m):
        params[i] = op(d1.param_row[i], d2.param_row[i])
        for j in range(d1.n):
            grid[i, j] = op(d1.value_grid[i, j], d2.value_grid[i, j])
    return _dense(params, grid, _join(d1.variant, d2.variant), d1.universe, d1.pspace)


def dense_union(d1: DenseSet, d2: DenseSet) -> DenseSet:
    return _pointwise(d1, d2, max)


def dense_intersection(d1: DenseSet, d2: DenseSet) -> DenseSet:
    return _pointwise(d1, d2, min)


def _dense_product(d1: DenseSet, d2: DenseSet, op, variant) -> DenseSet:
    _check_shared(d1, d2, pspace=False)
    left = [i for i in range(d1.m) if d1.param_row[i] > 0.0]
    right = [k for k in range(d2.m) if d2.param_row[k] > 0.0]
    if not left or not right:
        raise EmptyInput("empty support in parameter product")
    labels = []
    params = []
    rows = []
    for i in left:
        for k in right:
            labels.append("(" + d1.pspace.params[i] + "," + d2.pspace.params[k] + ")")
            params.append(op(d1.param_row[i], d2.param_row[k]))
            rows.append([op(d1.value_grid[i, j], d2.value_grid[k, j]) for j in range(d1.n)])
    return _dense(params, rows, variant, d1.universe, ParameterSpace(tuple(labels)))


def dense_and(d1: DenseSet, d2: DenseSet) -> DenseSet:
    return _dense_product(d1, d2, min, _join(d1.variant, d2.variant))


def dense_or(d1: DenseSet, d2: DenseSet) -> DenseSet:
    return _dense_product(d1, d2, max, _join(d1.variant, d2.variant))


def dense_reduce_left(d1: DenseSet, d2: DenseSet) -> DenseSet:
    return _dense_product(d1, d2, lambda a, b: a, d1.variant)


def dense_reduce_right(d1: DenseSet, d2: DenseSet) -> DenseSet:
    return _dense_product(d1, d2, lambda a, b: b, d2.variant)


def dense_is_subset(d1: DenseSet, d2: DenseSet) -> bool:
    _check_shared(d1, d2)
    for i in range(d1.m):
        if d1.param_row[i] > d2.param_row[i] + TOL:
            return False
        for j in range(d1.n):
            if d1.value_grid[i, j] > d2.value_grid[i, j] + TOL:
                return False
    return True


def dense_equals(d1: DenseSet, d2: DenseSet) -> bool:
    return dense_is_subset(d1, d2) and dense_is_subset(d2, d1)


def dense_pair_add(p, q) -> tuple[float, float]:
    (a1, b1), (a2, b2) = p, q
    return (a1 + a2, b1 + b2)


def dense_pair_leq(p, q) -> bool:
    (a1, b1), (a2, b2) = p, q
    return a1 <= a2 + TOL and b1 <= b2 + TOL


def dense_pair_eq(p, q) -> bool:
    return dense_pair_leq(p, q) and dense_pair_leq(q, p)


# -- dense measures ------------------------------------------------------------------


def dense_sigma_count(grades) -> float:
    total = 0.0
    for g in grades:
        total += g
    return total


def dense_card(d: DenseSet) -> CardinalPair:
    a = 0.0
    b = 0.0
    for i in range(d.m):
        a += d.param_row[i]
        for j in range(d.n):
            b += d.value_grid[i, j]
    return CardinalPair(float(a), float(b))


def _div(num, den, undefined):
    if den == 0.0:
        return undefined
    return float(num / den)


def dense_entropy(d: DenseSet, domain=EvaluationDomain.SUPPORT) -> MeasurePair:
    grid = EvaluationDomain(domain) is EvaluationDomain.GRID
    pn = pd = vn = vd = 0.0
    for i in range(d.m):
        g = d.param_row[i]
        if grid or g > 0.0:
            pn += min(g, 1.0 - g)
            pd += max(g, 1.0 - g)
        for j in range(d.n):
            g = d.value_grid[i, j]
            if grid or g > 0.0:
                vn += min(g, 1.0 - g)
                vd += max(g, 1.0 - g)
    return MeasurePair(_div(pn, pd, 0.0), _div(vn, vd, 0.0))


def dense_sim(d1: DenseSet, d2: DenseSet) -> MeasurePair:
    _check_shared(d1, d2)
    pn = pd = vn = vd = 0.0
    for i in range(d1.m):
        pn += min(d1.param_row[i], d2.param_row[i])
        pd += max(d1.param_row[i], d2.param_row[i])
        for j in range(d1.n):
            vn += min(d1.value_grid[i, j], d2.value_grid[i, j])
            vd += max(d1.value_grid[i, j], d2.value_grid[i, j])
    return MeasurePair(_div(pn, pd, 1.0), _div(vn, vd, 1.0))


def dense_sub(d1: DenseSet, d2: DenseSet) -> MeasurePair:
    _check_shared(d1, d2)
    pn = pd = vn = vd = 0.0
    for i in range(d1.m):
        pn += min(d1.param_row[i], d2.param_row[i])
        pd += d1.param_row[i]
        for j in range(d1.n):
            vn += min(d1.value_grid[i, j], d2.value_grid[i, j])
            vd += d1.value_grid[i, j]
    return MeasurePair(_div(pn, pd, 1.0), _div(vn, vd, 1.0))


def dense_depth(d: DenseSet) -> CardinalPair:
    card = dense_card(d)
    return CardinalPair(max(0.0, d.m - card.a), max(0.0, d.m * d.n - card.b))


def dense_norm(p) -> float:
    a, b = p
    return (abs(a) + abs(b)) / 2


def dense_rank(named) -> list[RankedSet]:
    """Selection-sort ranking: repeatedly take the first minimal norm left."""
    items = list(named)
    if not items:
        raise EmptyInput("nothing to rank")
    rows = [(name, dense_depth(d)) for name, d in items]
    rows = [(name, dep, dense_norm((dep.a, dep.b))) for name, dep in rows]
    out = []
    group = 0
    last = None
    while rows:
        best = 0
        for k in range(1, len(rows)):
            if rows[k][2] < rows[best][2] - TOL:
                best = k
        name, dep, norm = rows.pop(best)
        if last is None or norm - last > TOL:
            group += 1
            last = norm
        out.append(RankedSet(name, dep, norm, len(out) + 1, group))
    return out


def dense_fuzzy_entropy(grades) -> float:
    num = den = 0.0
    for g in grades:
        num += min(g, 1.0 - g)
        den += max(g, 1.0 - g)
    return _div(num, den, 0.0)


def dense_fuzzy_similarity(a, b) -> float:
    num = den = 0.0
    for x, y in zip(a, b):
        num += min(x, y)
        den += max(x, y)
    return _div(num, den, 1.0)


def dense_fuzzy_subsethood(a, b) -> float:
    num = den = 0.0
    for x, y in zip(a, b):
        num += min(x, y)
        den += x
    return _div(num, den, 1.0)


_MEASURES = {
    "card": (1, lambda ds, dom: dense_card(ds[0])),
    "entropy": (1, lambda ds, dom: dense_entropy(ds[0], dom)),
    "sim": (2, lambda ds, dom: dense_sim(ds[0], ds[1])),
    "sub": (2, lambda ds, dom: dense_sub(ds[0], ds[1])),
    "depth": (1, lambda ds, dom: dense_depth(ds[0])),
}


def oracle_measure(kind: str, sets, domain=EvaluationDomain.SUPPORT):
    """Evaluate ``card``/``entropy``/``sim``/``sub``/``depth`` on dense grids."""
    try:
        arity, fn = _MEASURES[kind]
    except KeyError:
        raise ValueError(f"unknown measure kind {kind!r}; expected one of {sorted(_MEASURES)}") from None
    sets = list(sets)
    if len(sets) != arity:
        raise ValueError(f"{kind} takes {arity} set(s), got {len(sets)}")
    dense = [s if isinstance(s, DenseSet) else densify(s) for s in sets]
    return fn(dense, domain)


# -- random generation -------------------------------------------------------------


def default_spaces(m: int, n: int) -> tuple[Universe, ParameterSpace]:
    return (
        Universe(tuple(f"x{j}" for j in range(1, n + 1))),
        ParameterSpace(tuple(f"e{i}" for i in range(1, m + 1))),
    )


def random_set(
    seed,
    variant=Variant.FPFS,
    m: int = 4,
    n: int = 5,
    density: float = 0.5,
    grade_resolution: int = 10,
) -> SoftHybridSet:
    """Deterministic random set over ``e1..em`` x ``x1..xn``.

    Each parameter is supported with probability ``density`` and each cell
    of a supported row is stored with probability ``density``. Fuzzy grades
    are drawn uniformly from ``{1/r, 2/r, ..., 1}``.
    """
    if not 0.0 <= density <= 1.0:
        raise ValueError(f"density must lie in [0, 1], got {density}")
    if grade_resolution < 1:
        raise ValueError("grade_resolution must be >= 1")
    variant = Variant(variant)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    r = grade_resolution

    def draw(fuzzy: bool) -> float:
        return rng.randint(1, r) / r if fuzzy else 1.0

    universe, pspace = default_spaces(m, n)
    params, values = {}, {}
    for e in pspace:
        if rng.random() < density:
            params[e] = draw(variant.fuzzy_params)
            row = {x: draw(variant.fuzzy_values) for x in universe if rng.random() < density}
            if row:
                values[e] = row
    return make_set(variant, params, values, universe, pspace)
