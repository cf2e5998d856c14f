"""Cardinality, entropy, similarity, subsethood and depth of soft hybrid sets.

Every measure is a pair: the first component is computed from the parameter
grades, the second from the value grades. Sums always run in the canonical
parameter/universe order so results do not depend on how a set was built.

Undefined ratios (0/0) resolve as: entropy 0, similarity 1, subsethood 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .core import TOL, CardinalPair, SoftHybridSet, same_spaces
from .errors import EmptyInput, MixedSpaces


class EvaluationDomain(str, Enum):
    """Where entropy sums range.

    ``support`` sums over stored grades only and reproduces the published
    worked values; ``grid`` sums over all of E and E x U and is the domain in
    which the entropy axioms and identities hold.
    """

    SUPPORT = "support"
    GRID = "grid"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class MeasurePair:
    p: float
    v: float

    def __post_init__(self):
        for c in (self.p, self.v):
            if not 0.0 <= c <= 1.0:
                raise ValueError(f"measure components must lie in [0, 1], got ({self.p}, {self.v})")

    def __iter__(self):
        yield self.p
        yield self.v


def _ratio(num: float, den: float, undefined: float) -> float:
    return num / den if den > 0.0 else undefined


# -- scalar fuzzy-set forms ---------------------------------------------------


def sigma_count(grades: Mapping[object, float]) -> float:
    return sum(grades.values(), 0.0)


def _complement_terms(grades: Iterable[float]) -> tuple[float, float]:
    num = den = 0.0
    for g in grades:
        c = 1.0 - g
        num += min(g, c)
        den += max(g, c)
    return num, den


def fuzzy_entropy(grades: Mapping[object, float]) -> float:
    num, den = _complement_terms(grades.values())
    return _ratio(num, den, 0.0)


def _keys(m1: Mapping, m2: Mapping) -> list:
    return list(m1) + [k for k in m2 if k not in m1]


def fuzzy_similarity(m1: Mapping[object, float], m2: Mapping[object, float]) -> float:
    num = den = 0.0
    for k in _keys(m1, m2):
        a, b = m1.get(k, 0.0), m2.get(k, 0.0)
        num += min(a, b)
        den += max(a, b)
    return _ratio(num, den, 1.0)


def fuzzy_subsethood(m1: Mapping[object, float], m2: Mapping[object, float]) -> float:
    num = den = 0.0
    for k, a in m1.items():
        num += min(a, m2.get(k, 0.0))
        den += a
    return _ratio(num, den, 1.0)


# -- pair measures --------------------------------------------------------------


def cardinality(s: SoftHybridSet) -> CardinalPair:
    return CardinalPair(sigma_count(s.params), sum((g for _, _, g in s.cells()), 0.0))


def _grid_values(s: SoftHybridSet):
    for e in s.pspace:
        row = s.row(e)
        for x in s.universe:
            yield row.get(x, 0.0)


def entropy_terms(s: SoftHybridSet, domain=EvaluationDomain.SUPPORT):
    """Numerator and denominator sums ``((pn, pd), (vn, vd))`` of the entropy."""
    domain = EvaluationDomain(domain)
    if domain is EvaluationDomain.SUPPORT:
        params = s.params.values()
        values = (g for _, _, g in s.cells())
    else:
        params = (s.grade(e) for e in s.pspace)
        values = _grid_values(s)
    return _complement_terms(params), _complement_terms(values)


def entropy(s: SoftHybridSet, domain=EvaluationDomain.SUPPORT) -> MeasurePair:
    (pn, pd), (vn, vd) = entropy_terms(s, domain)
    return MeasurePair(_ratio(pn, pd, 0.0), _ratio(vn, vd, 0.0))


def _pair_rows(s: SoftHybridSet, t: SoftHybridSet):
    """Aligned ``(a, b)`` value grades over the union of both supports."""
    for e in s.pspace:
        rs, rt = s.row(e), t.row(e)
        if not rs and not rt:
            continue
        for x in s.universe:
            if x in rs or x in rt:
                yield rs.get(x, 0.0), rt.get(x, 0.0)


def similarity(s: SoftHybridSet, t: SoftHybridSet) -> MeasurePair:
    same_spaces(s, t)
    pn = pd = 0.0
    for e in s.pspace:
        a, b = s.grade(e), t.grade(e)
        pn += min(a, b)
        pd += max(a, b)
    vn = vd = 0.0
    for a, b in _pair_rows(s, t):
        vn += min(a, b)
        vd += max(a, b)
    return MeasurePair(_ratio(pn, pd, 1.0), _ratio(vn, vd, 1.0))


def subsethood(s: SoftHybridSet, t: SoftHybridSet) -> MeasurePair:
    """Degree to which ``s`` is contained in ``t``: ``|s & t| / |s|`` per side."""
    same_spaces(s, t)
    pn = pd = 0.0
    for e, a in s.params.items():
        pn += min(a, t.grade(e))
        pd += a
    vn = vd = 0.0
    for e, x, a in s.cells():
        vn += min(a, t.value(e, x))
        vd += a
    return MeasurePair(_ratio(pn, pd, 1.0), _ratio(vn, vd, 1.0))


def depth(s: SoftHybridSet) -> CardinalPair:
    """Distance from the absolute set: ``(m, m*n) - cardinality(s)``."""
    m, n = s.shape
    card = cardinality(s)
    return CardinalPair(max(0.0, m - card.a), max(0.0, m * n - card.b))


def depth_norm(p: CardinalPair) -> float:
    return (abs(p.a) + abs(p.b)) / 2


@dataclass(frozen=True)
class RankedSet:
    name: str
    depth: CardinalPair
    norm: float
    rank: int
    tie_group: int


def rank_representatives(sets) -> list[RankedSet]:
    """Order sets by ascending depth norm; the first is the best representative.

    ``sets`` is a mapping name -> set or an iterable of ``(name, set)`` pairs.
    Norms within TOL of each other share a tie group and keep input order.
    """
    items = list(sets.items() if isinstance(sets, Mapping) else sets)
    if not items:
        raise EmptyInput("nothing to rank")
    first = items[0][1]
    for name, s in items[1:]:
        try:
            same_spaces(first, s)
        except MixedSpaces as exc:
            raise MixedSpaces(f"set {name!r}: {exc}") from None

    scored = []
    for pos, (name, s) in enumerate(items):
        d = depth(s)
        scored.append((depth_norm(d), pos, name, d))
    scored.sort(key=lambda r: (r[0], r[1]))

    groups: list[list] = []
    for row in scored:
        if not groups or row[0] - groups[-1][0][0] > TOL:
            groups.append([])
        groups[-1].append(row)

    out = []
    for group, members in enumerate(groups, start=1):
        for norm, _, name, d in sorted(members, key=lambda r: r[1]):
            out.append(RankedSet(name, d, norm, len(out) + 1, group))
    return out
