"""Registered theorem identities, randomized sweeps and counterexample search.

An identity is checked on concrete sets and produces an :class:`IdentityReport`
carrying both sides and the residual between them. A mathematical failure is
data, never an exception. Implications whose premise does not hold on the
given sets are reported as holding vacuously.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .core import (
    TOL,
    SoftHybridSet,
    Variant,
    absolute,
    and_product,
    complement,
    equals,
    intersection,
    is_subset,
    make_set,
    or_product,
    pair_add,
    reduce_left,
    reduce_right,
    union,
)
from .errors import EmptyInput, UnknownIdentity
from .measures import (
    EvaluationDomain,
    cardinality,
    entropy,
    entropy_terms,
    similarity,
    subsethood,
)
from .oracle import default_spaces, random_set

GRID = EvaluationDomain.GRID
SUPPORT = EvaluationDomain.SUPPORT
BOTH = frozenset(EvaluationDomain)


@dataclass(frozen=True)
class IdentityReport:
    name: str
    inputs: str
    left: object
    right: object
    residual: float
    verdict: str
    domain: EvaluationDomain
    note: str = ""
    sets: tuple = field(default=(), repr=False, compare=False)

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"


@dataclass(frozen=True)
class _Outcome:
    left: object
    right: object
    residual: float
    note: str = ""


def _vacuous(note="premise not met") -> _Outcome:
    return _Outcome(None, None, 0.0, note)


def _eq(left, right) -> _Outcome:
    left, right = tuple(left), tuple(right)
    return _Outcome(left, right, max(abs(a - b) for a, b in zip(left, right)))


def _leq(left, right) -> _Outcome:
    left, right = tuple(left), tuple(right)
    return _Outcome(left, right, max(max(0.0, a - b) for a, b in zip(left, right)))


def _iff(left: bool, right: bool) -> _Outcome:
    return _Outcome(left, right, 0.0 if left == right else 1.0)


def _all_grades(s: SoftHybridSet):
    """Every grade of both grids, zeros included."""
    for e in s.pspace:
        yield s.grade(e)
    for e in s.pspace:
        for x in s.universe:
            yield s.value(e, x)


def _close(a: float, b: float) -> bool:
    return abs(a - b) <= TOL


# -- identity bodies -------------------------------------------------------------


def _card_modularity(sets, domain):
    s, t = sets
    return _eq(pair_add(cardinality(union(s, t)), cardinality(intersection(s, t))), pair_add(cardinality(s), cardinality(t)))


def _card_modularity_c(sets, domain):
    return _card_modularity([complement(x) for x in sets], domain)


def _product_modularity(sets, domain):
    s, t = sets
    return _eq(
        pair_add(cardinality(or_product(s, t)), cardinality(and_product(s, t))),
        pair_add(cardinality(reduce_left(s, t)), cardinality(reduce_right(s, t))),
    )


def _product_modularity_c(sets, domain):
    s, t = sets
    c = lambda x: cardinality(complement(x))  # noqa: E731
    return _eq(
        pair_add(c(or_product(s, t)), c(and_product(s, t))),
        pair_add(c(reduce_left(s, t)), c(reduce_right(s, t))),
    )


def _subset_monotone(sets, domain):
    s, t = sets
    if not is_subset(s, t):
        return _vacuous()
    return _leq(cardinality(s), cardinality(t))


def _complement_subset_monotone(sets, domain):
    return _subset_monotone([complement(x) for x in sets], domain)


def _null_characterization(sets, domain):
    (s,) = sets
    card = cardinality(s)
    return _iff(card.a == 0.0 and card.b == 0.0, s.is_null)


def _cardinality_bound(sets, domain):
    (s,) = sets
    m, n = s.shape
    return _leq(cardinality(s), (m, m * n))


def _involution(sets, domain):
    (s,) = sets
    back = complement(complement(s))
    return _Outcome(equals(back, s), True, max(abs(a - b) for a, b in zip(_all_grades(back), _all_grades(s))))


def _entropy_axiom_1(sets, domain):
    (s,) = sets
    ent = entropy(s, domain)
    crisp = all(_close(g, 1.0) for g in s.params.values()) and all(_close(g, 1.0) for _, _, g in s.cells())
    return _iff(ent.p == 0.0 and ent.v == 0.0, crisp)


def _entropy_axiom_2(sets, domain):
    (s, ) = sets
    ent = entropy(s, domain)
    if domain is GRID:
        half = all(_close(g, 0.5) for g in _all_grades(s))
    else:
        stored_p = list(s.params.values())
        stored_v = [g for _, _, g in s.cells()]
        half = bool(stored_p) and bool(stored_v) and all(_close(g, 0.5) for g in stored_p + stored_v)
    return _iff(_close(ent.p, 1.0) and _close(ent.v, 1.0), half)


def _entropy_axiom_3(sets, domain):
    (s,) = sets
    if domain is SUPPORT and not all(0.0 < g < 1.0 for g in _all_grades(s)):
        return _vacuous("support domain: needs every grid grade strictly inside (0, 1)")
    return _eq(entropy(s, domain), entropy(complement(s), domain))


def _entropy_axiom_4(sets, domain):
    s, t = sets
    pairs = list(zip(_all_grades(s), _all_grades(t)))
    below = all(a <= b + TOL and b <= 0.5 + TOL for a, b in pairs)
    above = all(0.5 - TOL <= b and b <= a + TOL for a, b in pairs)
    if not (below or above):
        return _vacuous()
    return _leq(entropy(s, domain), entropy(t, domain))


def _entropy_numden(sets, domain):
    s, t = sets
    lhs = [sum(pair) for pair in zip(*(_flat_terms(entropy_terms(x, domain)) for x in (intersection(s, t), union(s, t))))]
    rhs = [sum(pair) for pair in zip(*(_flat_terms(entropy_terms(x, domain)) for x in (s, t)))]
    return _eq(lhs, rhs)


def _flat_terms(terms):
    (pn, pd), (vn, vd) = terms
    return (pn, pd, vn, vd)


def _ent_equals_sim(sets, domain):
    (s,) = sets
    c = complement(s)
    return _eq(entropy(s, domain), similarity(union(s, c), intersection(s, c)))


def _entropy_ratio_modularity(sets, domain):
    s, t = sets
    e = [entropy(x, domain) for x in (s, t, intersection(s, t), union(s, t))]
    return _eq((e[0].p + e[1].p, e[0].v + e[1].v), (e[2].p + e[3].p, e[2].v + e[3].v))


def _sim_axiom_1(sets, domain):
    s, t = sets
    sim = similarity(s, t)
    return _Outcome(tuple(sim), (0.0, 1.0), max(max(0.0, -c, c - 1.0) for c in sim))


def _sim_axiom_2(sets, domain):
    s, t = sets
    sim = similarity(s, t)
    return _iff(_close(sim.p, 1.0) and _close(sim.v, 1.0), equals(s, t))


def _sim_axiom_3(sets, domain):
    s, t = sets
    return _eq(similarity(s, t), similarity(t, s))


def _sim_axiom_4(sets, domain):
    s, t, r = sets
    if not (is_subset(s, t) and is_subset(t, r)):
        return _vacuous()
    sr = tuple(similarity(s, r))
    bound = tuple(min(a, b) for a, b in zip(similarity(s, t), similarity(t, r)))
    return _leq(sr, bound)


def _sub_axiom_1(sets, domain):
    s, t = sets
    sub = subsethood(s, t)
    return _iff(_close(sub.p, 1.0) and _close(sub.v, 1.0), is_subset(s, t))


def _sub_axiom_2(sets, domain):
    (s,) = sets
    c = complement(s)
    if not is_subset(c, s):
        return _vacuous()
    sub = subsethood(s, c)
    return _iff(sub.p == 0.0 and sub.v == 0.0, equals(s, absolute(s.universe, s.pspace)))


def _sub_axiom_3(sets, domain):
    s, t, r, k = sets
    outcomes = []
    if is_subset(s, t) and is_subset(t, r):
        outcomes.append(_leq(subsethood(r, s), subsethood(t, s)))
    if is_subset(s, t):
        outcomes.append(_leq(subsethood(k, s), subsethood(k, t)))
    if not outcomes:
        return _vacuous()
    return _Outcome(
        tuple(o.left for o in outcomes), tuple(o.right for o in outcomes), max(o.residual for o in outcomes)
    )


def _sim_equals_sub(sets, domain):
    s, t = sets
    return _eq(subsethood(union(s, t), intersection(s, t)), similarity(s, t))


def _sub_intersection_union(sets, domain):
    s, t = sets
    return _eq(subsethood(intersection(s, t), union(s, t)), (1.0, 1.0))


# -- samplers ----------------------------------------------------------------------


def _dims(rng):
    return rng.randint(1, 4), rng.randint(1, 5)


def _operand(rng, m, n, *, nonempty=False):
    while True:
        s = random_set(rng, rng.choice(list(Variant)), m, n, density=rng.choice((0.3, 0.6, 0.9, 1.0)))
        if rng.random() < 0.25:
            s = complement(s)
        if not nonempty or s.support:
            return s


def _sample(k, nonempty=False):
    def sample(rng):
        m, n = _dims(rng)
        return tuple(_operand(rng, m, n, nonempty=nonempty) for _ in range(k))

    return sample


def _sample_subset_pair(rng):
    m, n = _dims(rng)
    x, y = _operand(rng, m, n), _operand(rng, m, n)
    if rng.random() < 0.7:
        return intersection(x, y), x
    return x, y


def _sample_chain(rng):
    m, n = _dims(rng)
    x, y, z = (_operand(rng, m, n) for _ in range(3))
    return intersection(x, y), x, union(x, z)


def _chain_probe(rng):
    m, n = _dims(rng)
    x, y, z, k = (_operand(rng, m, n) for _ in range(4))
    return intersection(x, y), x, union(x, z), k


def _grid_set(m, n, param_levels, value_levels, r):
    universe, pspace = default_spaces(m, n)
    params = {e: param_levels[i] / r for i, e in enumerate(pspace)}
    values = {
        e: {x: value_levels[i][j] / r for j, x in enumerate(universe)} for i, e in enumerate(pspace) if params[e] > 0
    }
    return make_set(None, params, values, universe, pspace)


def _sample_entropy_monotone(rng):
    """Pairs (S, T) with S <= T <= 0.5 or S >= T >= 0.5 on every grid cell."""
    m, n = _dims(rng)
    r = 10
    half = r // 2
    if rng.random() < 0.5:
        tp = [rng.randint(0, half) for _ in range(m)]
        tv = [[rng.randint(0, half) for _ in range(n)] for _ in range(m)]
        sp = [rng.randint(0, k) for k in tp]
        sv = [[rng.randint(0, k) for k in row] for row in tv]
        # zero a row of S where T's row is zeroed by the support condition
        sv = [row if tp[i] else [0] * n for i, row in enumerate(sv)]
        sv = [row if sp[i] else [0] * n for i, row in enumerate(sv)]
        tv = [row if tp[i] else [0] * n for i, row in enumerate(tv)]
    else:
        tp = [rng.randint(half, r) for _ in range(m)]
        tv = [[rng.randint(half, r) for _ in range(n)] for _ in range(m)]
        sp = [rng.randint(k, r) for k in tp]
        sv = [[rng.randint(k, r) for k in row] for row in tv]
    return _grid_set(m, n, sp, sv, r), _grid_set(m, n, tp, tv, r)


def _sample_half(rng):
    m, n = _dims(rng)
    universe, pspace = default_spaces(m, n)
    choice = rng.random()
    if choice < 0.35:
        params = {e: 0.5 for e in pspace}
        values = {e: {x: 0.5 for x in universe} for e in pspace}
    elif choice < 0.7:
        params = {e: 0.5 for e in pspace if rng.random() < 0.6}
        values = {e: {x: 0.5 for x in universe if rng.random() < 0.6} for e in params}
    else:
        return (_operand(rng, m, n),)
    return (make_set(None, params, values, universe, pspace),)


def _sample_interior_or_not(rng):
    m, n = _dims(rng)
    if rng.random() < 0.5:
        return (_operand(rng, m, n),)
    universe, pspace = default_spaces(m, n)
    draw = lambda: rng.randint(1, 9) / 10
    params = {e: draw() for e in pspace}
    values = {e: {x: draw() for x in universe} for e in pspace}
    return (make_set(None, params, values, universe, pspace),)


def _sample_crisp_or_not(rng):
    m, n = _dims(rng)
    variant = Variant.SOFT if rng.random() < 0.5 else rng.choice(list(Variant))
    s = random_set(rng, variant, m, n, density=rng.choice((0.0, 0.3, 0.6, 1.0)))
    return (complement(s) if rng.random() < 0.25 else s,)


def _sample_upper_half(rng):
    """Sets with complement(S) <= S, occasionally the absolute set."""
    m, n = _dims(rng)
    r = 10
    if rng.random() < 0.3:
        return (_grid_set(m, n, [r] * m, [[r] * n for _ in range(m)], r),)
    if rng.random() < 0.15:
        return (_operand(rng, m, n),)
    p = [rng.randint(r // 2, r) for _ in range(m)]
    v = [[rng.randint(r // 2, r) for _ in range(n)] for _ in range(m)]
    return (_grid_set(m, n, p, v, r),)


def _sample_null_or_not(rng):
    m, n = _dims(rng)
    density = 0.0 if rng.random() < 0.3 else rng.choice((0.3, 0.6, 1.0))
    return (random_set(rng, rng.choice(list(Variant)), m, n, density=density),)


def _sample_equal_or_not(rng):
    m, n = _dims(rng)
    s = _operand(rng, m, n)
    if rng.random() < 0.4:
        return s, s
    return s, _operand(rng, m, n)


# -- registry ------------------------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    name: str
    arity: int
    body: Callable[[Sequence[SoftHybridSet], EvaluationDomain], _Outcome]
    sample: Callable[[random.Random], tuple]
    description: str
    domains: frozenset = BOTH
    paper_claim: bool = False  # claimed in the literature but false in general


_REGISTRY: dict[str, Identity] = {}


def _register(name, arity, body, sample, description, domains=BOTH, paper_claim=False):
    _REGISTRY[name] = Identity(name, arity, body, sample, description, frozenset(domains), paper_claim)


_register("cardinality-modularity", 2, _card_modularity, _sample(2), "|S u T| + |S n T| = |S| + |T|")
_register(
    "cardinality-modularity-complement", 2, _card_modularity_c, _sample(2), "|S' u T'| + |S' n T'| = |S'| + |T'|"
)
_register(
    "product-modularity",
    2,
    _product_modularity,
    _sample(2, nonempty=True),
    "|S or T| + |S and T| = |reduce_left| + |reduce_right|",
)
_register(
    "product-modularity-complement",
    2,
    _product_modularity_c,
    _sample(2, nonempty=True),
    "product modularity with every term complemented over the product space",
)
_register("subset-monotonicity", 2, _subset_monotone, _sample_subset_pair, "S <= T implies |S| <= |T|")
_register(
    "complement-subset-monotonicity",
    2,
    _complement_subset_monotone,
    lambda rng: _sample_subset_pair(rng)[::-1],
    "S' <= T' implies |S'| <= |T'|",
)
_register("null-characterization", 1, _null_characterization, _sample_null_or_not, "|S| = (0, 0) iff S is null")
_register("cardinality-bound", 1, _cardinality_bound, _sample(1), "|S| <= (m, m*n)")
_register("involution", 1, _involution, _sample(1), "complement(complement(S)) = S")
_register(
    "entropy-axiom-1", 1, _entropy_axiom_1, _sample_crisp_or_not, "entropy(S) = (0, 0) iff every stored grade is 1"
)
_register("entropy-axiom-2", 1, _entropy_axiom_2, _sample_half, "entropy(S) = (1, 1) iff S = complement(S)")
_register("entropy-axiom-3", 1, _entropy_axiom_3, _sample_interior_or_not, "entropy(S) = entropy(complement(S))")
_register(
    "entropy-axiom-4",
    2,
    _entropy_axiom_4,
    _sample_entropy_monotone,
    "S <= T <= 0.5 (or S >= T >= 0.5) pointwise implies entropy(S) <= entropy(T)",
    domains={GRID},
)
_register(
    "entropy-numden-modularity",
    2,
    _entropy_numden,
    _sample(2),
    "entropy numerators and denominators are modular over (n, u)",
)
_register(
    "ent-equals-sim",
    1,
    _ent_equals_sim,
    _sample(1),
    "entropy(S) = similarity(S u S', S n S')",
    domains={GRID},
)
_register(
    "entropy-ratio-modularity",
    2,
    _entropy_ratio_modularity,
    _sample(2),
    "entropy(S) + entropy(T) = entropy(S n T) + entropy(S u T) (false in general)",
    paper_claim=True,
)
_register("similarity-axiom-1", 2, _sim_axiom_1, _sample(2), "0 <= similarity <= 1")
_register("similarity-axiom-2", 2, _sim_axiom_2, _sample_equal_or_not, "similarity(S, T) = (1, 1) iff S = T")
_register("similarity-axiom-3", 2, _sim_axiom_3, _sample(2), "similarity is symmetric")
_register(
    "similarity-axiom-4",
    3,
    _sim_axiom_4,
    _sample_chain,
    "S <= T <= R implies similarity(S, R) <= similarity(S, T), similarity(T, R)",
)
_register("subsethood-axiom-1", 2, _sub_axiom_1, _sample_subset_pair, "subsethood(S, T) = (1, 1) iff S <= T")
_register(
    "subsethood-axiom-2",
    1,
    _sub_axiom_2,
    _sample_upper_half,
    "given S' <= S: subsethood(S, S') = (0, 0) iff S is absolute",
)
_register(
    "subsethood-axiom-3",
    4,
    _sub_axiom_3,
    _chain_probe,
    "S <= T <= R implies sub(R, S) <= sub(T, S); S <= T implies sub(K, S) <= sub(K, T)",
)
_register("sim-equals-sub", 2, _sim_equals_sub, _sample(2), "subsethood(S u T, S n T) = similarity(S, T)")
_register("sub-intersection-union", 2, _sub_intersection_union, _sample(2), "subsethood(S n T, S u T) = (1, 1)")


def identity_names(include_paper_claims: bool = True) -> list[str]:
    return [n for n, i in _REGISTRY.items() if include_paper_claims or not i.paper_claim]


def get_identity(name: str) -> Identity:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {name!r}") from None


def describe(sets: Sequence[SoftHybridSet], names: Sequence[str] | None = None) -> str:
    names = names or [chr(ord("S") + i) if i < 2 else f"X{i}" for i in range(len(sets))]
    return "; ".join(f"{n}={s!r}" for n, s in zip(names, sets))


def check_identity(name: str, sets: Sequence[SoftHybridSet], domain=GRID, *, names=None) -> IdentityReport:
    """Evaluate one registered identity on concrete sets.

    Identities asserted only in the grid domain are evaluated there whatever
    ``domain`` is requested; the report's ``domain`` and ``note`` say so.
    """
    ident = get_identity(name)
    sets = tuple(sets)
    if len(sets) != ident.arity:
        raise ValueError(f"identity {name!r} takes {ident.arity} set(s), got {len(sets)}")
    domain = EvaluationDomain(domain)
    note = ""
    if domain not in ident.domains:
        note = f"asserted in {GRID} domain only; evaluated there"
        domain = GRID
    out = ident.body(sets, domain)
    note = "; ".join(n for n in (note, out.note) if n)
    verdict = "holds" if out.residual <= TOL else "fails"
    return IdentityReport(name, describe(sets, names), out.left, out.right, out.residual, verdict, domain, note, sets)


@dataclass(frozen=True)
class SweepResult:
    name: str
    cases: int
    vacuous: int
    failures: int
    max_residual: float
    domain: EvaluationDomain
    first_failure: IdentityReport | None = None

    @property
    def holds(self) -> bool:
        return self.failures == 0


def sweep(name: str, cases: int = 1000, seed=0, domain=GRID) -> SweepResult:
    """Check ``name`` on ``cases`` seeded random inputs drawn by its sampler."""
    ident = get_identity(name)
    rng = random.Random(f"{seed}/{name}/{EvaluationDomain(domain).value}")
    failures = vacuous = 0
    worst = 0.0
    first = None
    effective = EvaluationDomain(domain)
    for _ in range(cases):
        report = check_identity(name, ident.sample(rng), domain)
        effective = report.domain
        if report.left is None:
            vacuous += 1
        worst = max(worst, report.residual)
        if not report.holds:
            failures += 1
            first = first or report
    return SweepResult(name, cases, vacuous, failures, worst, effective, first)


def check_on_sets(name: str, named_sets, domain=GRID) -> list[IdentityReport]:
    """Check ``name`` on every compatible tuple drawn from ``named_sets``.

    Tuples whose operands cannot be combined (for example a parameter product
    with an empty support) are skipped.
    """
    ident = get_identity(name)
    items = list(named_sets.items() if hasattr(named_sets, "items") else named_sets)
    reports = []
    for combo in itertools.product(items, repeat=ident.arity):
        names = [n for n, _ in combo]
        try:
            reports.append(check_identity(name, [s for _, s in combo], domain, names=names))
        except EmptyInput:
            continue
    return reports


def _enumerate_sets(m: int, n: int, resolution: int):
    universe, pspace = default_spaces(m, n)
    levels = [k / resolution for k in range(resolution + 1)]
    for prow in itertools.product(levels, repeat=m):
        live = [i for i in range(m) if prow[i] > 0]
        for cells in itertools.product(levels, repeat=len(live) * n):
            params = {pspace.params[i]: prow[i] for i in range(m)}
            values = {}
            for k, i in enumerate(live):
                values[pspace.params[i]] = {universe.items[j]: cells[k * n + j] for j in range(n)}
            yield make_set(None, params, values, universe, pspace)


def find_counterexample(
    name: str = "entropy-ratio-modularity",
    max_m: int = 3,
    max_n: int = 3,
    resolution: int = 10,
    domain=GRID,
) -> IdentityReport | None:
    """Smallest failing input for a binary identity by bounded enumeration.

    Shapes (m, n) are visited by increasing grid size m + m*n, then m; within
    a shape, both operands run over all grids with grades in
    ``{0, 1/r, ..., 1}`` in lexicographic order. Returns the first failure.
    """
    ident = get_identity(name)
    if ident.arity != 2:
        raise ValueError("counterexample search supports binary identities only")
    shapes = sorted(
        ((m, n) for m in range(1, max_m + 1) for n in range(1, max_n + 1)), key=lambda mn: (mn[0] + mn[0] * mn[1], mn[0])
    )
    for m, n in shapes:
        pool = list(_enumerate_sets(m, n, resolution)) if (resolution + 1) ** (m + m * n) <= 20000 else None
        outer = pool if pool is not None else _enumerate_sets(m, n, resolution)
        for s in outer:
            inner = pool if pool is not None else _enumerate_sets(m, n, resolution)
            for t in inner:
                report = check_identity(name, (s, t), domain)
                if not report.holds:
                    return report
    return None
