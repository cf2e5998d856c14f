"""Differential tests: every public operation against the dense oracle."""

import random

import numpy as np
import pytest
from conftest import TOL, close, dense_close

from softhybrid import core, measures
from softhybrid import oracle as o
from softhybrid.core import Variant
from softhybrid.errors import DimensionMismatch, EmptyInput

SEEDS = range(1000)


def pair(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 4), rng.randint(1, 4)
    out = []
    for _ in range(2):
        s = o.random_set(rng, rng.choice(list(Variant)), m, n, density=rng.choice((0.0, 0.3, 0.6, 1.0)))
        out.append(core.complement(s) if rng.random() < 0.25 else s)
    return out


@pytest.mark.parametrize(
    "sparse_op, dense_op",
    [(core.union, o.dense_union), (core.intersection, o.dense_intersection)],
    ids=["union", "intersection"],
)
def test_pointwise_ops(sparse_op, dense_op):
    for seed in SEEDS:
        s, t = pair(seed)
        assert dense_close(o.densify(sparse_op(s, t)), dense_op(o.densify(s), o.densify(t))), seed


def test_complement():
    for seed in SEEDS:
        s, _ = pair(seed)
        assert dense_close(o.densify(core.complement(s)), o.dense_complement(o.densify(s))), seed


@pytest.mark.parametrize(
    "sparse_op, dense_op",
    [
        (core.and_product, o.dense_and),
        (core.or_product, o.dense_or),
        (core.reduce_left, o.dense_reduce_left),
        (core.reduce_right, o.dense_reduce_right),
    ],
    ids=["and", "or", "reduce-left", "reduce-right"],
)
def test_products(sparse_op, dense_op):
    checked = 0
    for seed in SEEDS:
        s, t = pair(seed)
        try:
            got = sparse_op(s, t)
        except EmptyInput:
            with pytest.raises(EmptyInput):
                dense_op(o.densify(s), o.densify(t))
            continue
        assert dense_close(o.densify(got), dense_op(o.densify(s), o.densify(t))), seed
        checked += 1
    assert checked > 400


def test_absolute_and_null():
    for m in range(1, 5):
        for n in range(1, 5):
            u, e = o.default_spaces(m, n)
            for v in Variant:
                assert dense_close(o.densify(core.absolute(u, e, v)), o.dense_absolute(u, e, v))
                assert dense_close(o.densify(core.null(u, e, v)), o.dense_null(u, e, v))


def test_inclusion():
    hits = 0
    for seed in SEEDS:
        s, t = pair(seed)
        a = core.intersection(s, t) if seed % 2 else s
        da, dt = o.densify(a), o.densify(t)
        assert core.is_subset(a, t) == o.dense_is_subset(da, dt), seed
        assert core.equals(a, t) == o.dense_equals(da, dt), seed
        hits += core.is_subset(a, t)
    assert hits >= 400


def test_pairs():
    rng = random.Random(7)
    for _ in SEEDS:
        p = core.CardinalPair(rng.randint(0, 5) / 2, rng.randint(0, 5) / 2)
        q = core.CardinalPair(rng.randint(0, 5) / 2, rng.randint(0, 5) / 2)
        assert close(core.pair_add(p, q), o.dense_pair_add(p, q))
        assert core.pair_leq(p, q) == o.dense_pair_leq(p, q)
        assert core.pair_eq(p, q) == o.dense_pair_eq(p, q)


@pytest.mark.parametrize("domain", ["support", "grid"])
def test_unary_measures(domain):
    for seed in SEEDS:
        s, _ = pair(seed)
        d = o.densify(s)
        assert close(measures.cardinality(s), o.dense_card(d)), seed
        assert close(measures.entropy(s, domain), o.dense_entropy(d, domain)), seed
        assert close(measures.depth(s), o.dense_depth(d)), seed
        assert abs(measures.depth_norm(measures.depth(s)) - o.dense_norm(o.dense_depth(d))) <= TOL
        assert close(measures.entropy(s, domain), o.oracle_measure("entropy", [s], domain))


def test_binary_measures():
    for seed in SEEDS:
        s, t = pair(seed)
        ds, dt = o.densify(s), o.densify(t)
        assert close(measures.similarity(s, t), o.dense_sim(ds, dt)), seed
        assert close(measures.subsethood(s, t), o.dense_sub(ds, dt)), seed
        assert close(measures.subsethood(t, s), o.oracle_measure("sub", [t, s])), seed


def test_scalar_forms():
    rng = random.Random(3)
    for _ in SEEDS:
        k = rng.randint(0, 6)
        a = [rng.randint(0, 10) / 10 for _ in range(k)]
        b = [rng.randint(0, 10) / 10 for _ in range(k)]
        ma, mb = dict(enumerate(a)), dict(enumerate(b))
        assert abs(measures.sigma_count(ma) - o.dense_sigma_count(a)) <= TOL
        assert abs(measures.fuzzy_entropy(ma) - o.dense_fuzzy_entropy(a)) <= TOL
        assert abs(measures.fuzzy_similarity(ma, mb) - o.dense_fuzzy_similarity(a, b)) <= TOL
        assert abs(measures.fuzzy_subsethood(ma, mb) - o.dense_fuzzy_subsethood(a, b)) <= TOL


def test_ranking():
    for seed in range(200):
        rng = random.Random(seed)
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        named = [(f"s{k}", o.random_set(rng, Variant.FPFS, m, n, grade_resolution=2)) for k in range(rng.randint(1, 6))]
        got = measures.rank_representatives(named)
        want = o.dense_rank([(name, o.densify(s)) for name, s in named])
        assert [(r.name, r.rank, r.tie_group) for r in got] == [(r.name, r.rank, r.tie_group) for r in want], seed
        assert close([r.norm for r in got], [r.norm for r in want])


def test_densify_round_trip():
    for seed in SEEDS:
        s, _ = pair(seed)
        back = o.sparsify(o.densify(s))
        assert back == s, seed


def test_densify_examples(paper):
    u, e = o.default_spaces(4, 5)
    assert not o.densify(core.null(u, e)).value_grid.any()
    d = o.densify(paper["F_A_fpfs"])
    assert d.value_grid[0].tolist() == [0.3, 0.1, 0, 0, 0]
    with pytest.raises(ValueError):
        d.value_grid[0, 0] = 1.0


def test_dense_shape_checked():
    u, e = o.default_spaces(2, 2)
    with pytest.raises(DimensionMismatch):
        o.DenseSet(np.zeros(3), np.zeros((2, 2)), Variant.FPFS, u, e)


def test_random_set_contract():
    assert o.random_set(5) == o.random_set(5)
    u, e = o.default_spaces(4, 5)
    assert o.random_set(1, density=0.0) == core.null(u, e)
    s = o.random_set(2, Variant.SOFT, density=1.0)
    assert all(g == 1.0 for g in s.params.values()) and all(g == 1.0 for _, _, g in s.cells())


def test_oracle_measure_bad_kind():
    with pytest.raises(ValueError):
        o.oracle_measure("volume", [])
