"""Soft hybrid sets over finite universes and their set algebra.

A soft hybrid set is a pair of grids that share one parameter space E and
one universe U:

* parameter grades ``mu(e)`` in [0, 1] for every ``e`` in E, and
* value grades ``f(e)(x)`` in [0, 1] for every ``(e, x)`` in E x U.

Only strictly positive grades are stored; an absent entry means grade 0.
The four variants (soft, fuzzy-soft, fp-soft, fpfs) differ only in which of
the two grids may hold grades other than 0 and 1.

Every operation in this module is pure: operands are never mutated and all
values are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import (
    EmptyInput,
    GradeOutOfRange,
    MixedSpaces,
    SoftSetError,
    SupportViolation,
    UnknownLabel,
    VariantViolation,
)

TOL = 1e-9


def _check_labels(labels: Iterable[str], kind: str) -> tuple[str, ...]:
    labels = tuple(labels)
    if not labels:
        raise SoftSetError(f"{kind} must contain at least one label")
    seen = set()
    for label in labels:
        if not isinstance(label, str) or not label:
            raise SoftSetError(f"{kind} labels must be nonempty strings, got {label!r}")
        if label in seen:
            raise SoftSetError(f"duplicate {kind} label {label!r}")
        seen.add(label)
    return labels


@dataclass(frozen=True)
class Universe:
    """The ordered items x1..xn of a finite universe."""

    items: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "items", _check_labels(self.items, "universe"))

    @cached_property
    def index(self) -> Mapping[str, int]:
        return MappingProxyType({x: i for i, x in enumerate(self.items)})

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[str]:
        return iter(self.items)

    def __contains__(self, label) -> bool:
        return label in self.index


@dataclass(frozen=True)
class ParameterSpace:
    """The ordered parameters e1..em."""

    params: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "params", _check_labels(self.params, "parameter"))

    @cached_property
    def index(self) -> Mapping[str, int]:
        return MappingProxyType({e: i for i, e in enumerate(self.params)})

    def __len__(self) -> int:
        return len(self.params)

    def __iter__(self) -> Iterator[str]:
        return iter(self.params)

    def __contains__(self, label) -> bool:
        return label in self.index

    @classmethod
    def product(cls, left: Iterable[str], right: Iterable[str]) -> "ParameterSpace":
        """Composite labels ``(e,t)`` in lexicographic source order."""
        right = tuple(right)
        return cls(tuple(product_label(e, t) for e in left for t in right))


def product_label(e: str, t: str) -> str:
    return f"({e},{t})"


class Variant(str, Enum):
    SOFT = "soft"
    FUZZY_SOFT = "fuzzy-soft"
    FP_SOFT = "fp-soft"
    FPFS = "fpfs"

    @property
    def fuzzy_params(self) -> bool:
        return self in (Variant.FP_SOFT, Variant.FPFS)

    @property
    def fuzzy_values(self) -> bool:
        return self in (Variant.FUZZY_SOFT, Variant.FPFS)

    @classmethod
    def from_flags(cls, fuzzy_params: bool, fuzzy_values: bool) -> "Variant":
        if fuzzy_params and fuzzy_values:
            return cls.FPFS
        if fuzzy_params:
            return cls.FP_SOFT
        if fuzzy_values:
            return cls.FUZZY_SOFT
        return cls.SOFT

    def join(self, other: "Variant") -> "Variant":
        """Least-constrained variant covering both (fuzzy-soft v fp-soft = fpfs)."""
        return Variant.from_flags(
            self.fuzzy_params or other.fuzzy_params,
            self.fuzzy_values or other.fuzzy_values,
        )

    def __str__(self) -> str:
        return self.value


def as_grade(value, where: str = "") -> float:
    """Validate a membership grade, clamping values within TOL of [0, 1]."""
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise GradeOutOfRange(f"grade{_at(where)} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value) or value < -TOL or value > 1.0 + TOL:
        raise GradeOutOfRange(f"grade{_at(where)} is {value!r}, outside [0, 1]")
    return min(1.0, max(0.0, value))


def _at(where: str) -> str:
    return f" at {where}" if where else ""


def _is_one(g: float) -> bool:
    return abs(g - 1.0) <= TOL


@dataclass(frozen=True)
class CardinalPair:
    """A nonnegative pair (parameter-side count, value-side count)."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a >= 0 and self.b >= 0):
            raise ValueError(f"cardinal pair components must be >= 0, got ({self.a}, {self.b})")

    def __iter__(self):
        yield self.a
        yield self.b

    def __add__(self, other: "CardinalPair") -> "CardinalPair":
        return pair_add(self, other)

    def __le__(self, other: "CardinalPair") -> bool:
        return pair_leq(self, other)


def pair_add(p: CardinalPair, q: CardinalPair) -> CardinalPair:
    return CardinalPair(p.a + q.a, p.b + q.b)


def pair_leq(p: CardinalPair, q: CardinalPair) -> bool:
    """Componentwise order; incomparable pairs are not <= either way."""
    return p.a <= q.a + TOL and p.b <= q.b + TOL


def pair_eq(p: CardinalPair, q: CardinalPair) -> bool:
    return abs(p.a - q.a) <= TOL and abs(p.b - q.b) <= TOL


@dataclass(frozen=True)
class SoftHybridSet:
    """Sparse soft hybrid set; build it with :func:`make_set`.

    ``params`` maps parameter label to grade and ``values`` maps parameter
    label to a mapping item label -> grade. Both hold strictly positive
    grades only, keyed in the canonical order of ``pspace``/``universe``.
    """

    variant: Variant
    params: Mapping[str, float]
    values: Mapping[str, Mapping[str, float]]
    universe: Universe
    pspace: ParameterSpace

    def grade(self, e: str) -> float:
        return self.params.get(e, 0.0)

    def value(self, e: str, x: str) -> float:
        row = self.values.get(e)
        return row.get(x, 0.0) if row else 0.0

    def row(self, e: str) -> Mapping[str, float]:
        return self.values.get(e, _EMPTY)

    @property
    def support(self) -> tuple[str, ...]:
        """Parameters with positive grade, in canonical order."""
        return tuple(self.params)

    def cells(self) -> Iterator[tuple[str, str, float]]:
        """Stored value grades ``(e, x, grade)`` in row-major canonical order."""
        for e, row in self.values.items():
            for x, g in row.items():
                yield e, x, g

    @property
    def is_null(self) -> bool:
        return not self.params and not self.values

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.pspace), len(self.universe)

    def __repr__(self) -> str:
        rows = ", ".join(
            f"{self.grade(e):g}/{e}:{{{', '.join(f'{g:g}/{x}' for x, g in self.row(e).items())}}}"
            for e in self.pspace
            if e in self.params or e in self.values
        )
        return f"SoftHybridSet<{self.variant.value}>({rows})"


_EMPTY: Mapping[str, float] = MappingProxyType({})


def _build(variant, params, values, universe, pspace) -> SoftHybridSet:
    """Trusted constructor: drops zeros and orders keys canonically."""
    pidx = pspace.index
    uidx = universe.index
    p = {e: g for e, g in sorted(params.items(), key=lambda kv: pidx[kv[0]]) if g > 0.0}
    v = {}
    for e, row in sorted(values.items(), key=lambda kv: pidx[kv[0]]):
        kept = {x: g for x, g in sorted(row.items(), key=lambda kv: uidx[kv[0]]) if g > 0.0}
        if kept:
            v[e] = MappingProxyType(kept)
    return SoftHybridSet(Variant(variant), MappingProxyType(p), MappingProxyType(v), universe, pspace)


def infer_variant(params: Mapping[str, float], values: Mapping[str, Mapping[str, float]]) -> Variant:
    """Strictest variant satisfied by the given (positive) grades."""
    fuzzy_params = any(not _is_one(g) for g in params.values())
    fuzzy_values = any(not _is_one(g) for row in values.values() for g in row.values())
    return Variant.from_flags(fuzzy_params, fuzzy_values)


def make_set(
    variant,
    params: Mapping[str, float],
    values: Mapping[str, Mapping[str, float]],
    universe: Universe,
    pspace: ParameterSpace,
    *,
    name: str | None = None,
    check_support: bool = True,
) -> SoftHybridSet:
    """Validate raw grades and build a normalized set.

    ``variant`` may be a :class:`Variant`, its string value, or ``None`` to
    infer the strictest satisfied variant. Zero grades are dropped. With
    ``check_support`` (the default) a value set at a parameter of grade 0 is
    rejected; pass ``False`` to load sets produced by :func:`complement`.
    """
    label = f"set {name!r}" if name else "set"
    p: dict[str, float] = {}
    for e, g in params.items():
        if e not in pspace:
            raise UnknownLabel(f"{label}: unknown parameter {e!r}")
        p[e] = as_grade(g, f"{label} params[{e!r}]")
    v: dict[str, dict[str, float]] = {}
    for e, row in values.items():
        if e not in pspace:
            raise UnknownLabel(f"{label}: unknown parameter {e!r} in values")
        kept = {}
        for x, g in row.items():
            if x not in universe:
                raise UnknownLabel(f"{label}: unknown universe item {x!r} in values[{e!r}]")
            kept[x] = as_grade(g, f"{label} values[{e!r}][{x!r}]")
        v[e] = kept

    if check_support:
        for e, row in v.items():
            if p.get(e, 0.0) == 0.0 and any(g > 0.0 for g in row.values()):
                raise SupportViolation(f"{label}: parameter {e!r} has grade 0 but a nonempty value set")

    p = {e: g for e, g in p.items() if g > 0.0}
    v = {e: {x: g for x, g in row.items() if g > 0.0} for e, row in v.items()}
    if variant is None:
        variant = infer_variant(p, v)
    else:
        try:
            variant = Variant(variant)
        except ValueError:
            raise VariantViolation(f"{label}: unknown variant {variant!r}") from None
        _check_variant(variant, p, v, label)
    return _build(variant, p, v, universe, pspace)


def _check_variant(variant: Variant, params, values, label: str) -> None:
    if not variant.fuzzy_params:
        for e, g in params.items():
            if not _is_one(g):
                raise VariantViolation(f"{label}: {variant.value} set needs crisp parameter grades, params[{e!r}] = {g!r}")
    if not variant.fuzzy_values:
        for e, row in values.items():
            for x, g in row.items():
                if not _is_one(g):
                    raise VariantViolation(
                        f"{label}: {variant.value} set needs crisp value grades, values[{e!r}][{x!r}] = {g!r}"
                    )


def absolute(universe: Universe, pspace: ParameterSpace, variant=Variant.FPFS) -> SoftHybridSet:
    params = {e: 1.0 for e in pspace}
    values = {e: {x: 1.0 for x in universe} for e in pspace}
    return _build(variant, params, values, universe, pspace)


def null(universe: Universe, pspace: ParameterSpace, variant=Variant.FPFS) -> SoftHybridSet:
    return _build(variant, {}, {}, universe, pspace)


def complement(s: SoftHybridSet) -> SoftHybridSet:
    """Pointwise ``1 - g`` over the full E and E x U grids.

    Value grades are complemented at every parameter, including those whose
    complemented grade is 0, so the result may carry value sets at
    zero-grade parameters. This keeps complement an involution.
    """
    params = {e: 1.0 - s.grade(e) for e in s.pspace}
    values = {}
    for e in s.pspace:
        row = s.row(e)
        values[e] = {x: 1.0 - row.get(x, 0.0) for x in s.universe}
    return _build(s.variant, params, values, s.universe, s.pspace)


def same_spaces(s: SoftHybridSet, t: SoftHybridSet) -> None:
    if s.universe != t.universe:
        raise MixedSpaces("operands live over different universes")
    if s.pspace != t.pspace:
        raise MixedSpaces("operands live over different parameter spaces")


def _same_universe(s: SoftHybridSet, t: SoftHybridSet) -> None:
    if s.universe != t.universe:
        raise MixedSpaces("operands live over different universes")


def union(s: SoftHybridSet, t: SoftHybridSet) -> SoftHybridSet:
    same_spaces(s, t)
    params = {e: max(s.grade(e), t.grade(e)) for e in s.pspace}
    values = {}
    for e in s.pspace:
        rs, rt = s.row(e), t.row(e)
        if rs or rt:
            values[e] = {x: max(rs.get(x, 0.0), rt.get(x, 0.0)) for x in s.universe}
    return _build(s.variant.join(t.variant), params, values, s.universe, s.pspace)


def intersection(s: SoftHybridSet, t: SoftHybridSet) -> SoftHybridSet:
    same_spaces(s, t)
    params = {e: min(s.grade(e), t.grade(e)) for e in s.pspace}
    values = {}
    for e in s.pspace:
        rs, rt = s.row(e), t.row(e)
        if rs and rt:
            values[e] = {x: min(rs.get(x, 0.0), rt.get(x, 0.0)) for x in s.universe}
    return _build(s.variant.join(t.variant), params, values, s.universe, s.pspace)


def _product_space(s: SoftHybridSet, t: SoftHybridSet) -> ParameterSpace:
    _same_universe(s, t)
    if not s.support or not t.support:
        raise EmptyInput("parameter product needs both operands to have nonempty support")
    return ParameterSpace.product(s.support, t.support)


def _product(s, t, combine, variant) -> SoftHybridSet:
    pspace = _product_space(s, t)
    params, values = {}, {}
    for e in s.support:
        for u in t.support:
            label = product_label(e, u)
            params[label] = combine(s.grade(e), t.grade(u))
            rs, rt = s.row(e), t.row(u)
            values[label] = {x: combine(rs.get(x, 0.0), rt.get(x, 0.0)) for x in s.universe}
    return _build(variant, params, values, s.universe, pspace)


def and_product(s: SoftHybridSet, t: SoftHybridSet) -> SoftHybridSet:
    """``s AND t`` over supp(s) x supp(t): min of both grades at ``(e,t)``."""
    return _product(s, t, min, s.variant.join(t.variant))


def or_product(s: SoftHybridSet, t: SoftHybridSet) -> SoftHybridSet:
    """``s OR t`` over supp(s) x supp(t): max of both grades at ``(e,t)``."""
    return _product(s, t, max, s.variant.join(t.variant))


def reduce_left(s: SoftHybridSet, t: SoftHybridSet) -> SoftHybridSet:
    """Parameter reduction copying ``s`` at ``e`` to every ``(e,t)``."""
    return _product(s, t, lambda a, b: a, s.variant)


def reduce_right(s: SoftHybridSet, t: SoftHybridSet) -> SoftHybridSet:
    """Parameter reduction copying ``t`` at ``t`` to every ``(e,t)``."""
    return _product(s, t, lambda a, b: b, t.variant)


def restrict(s: SoftHybridSet, params: Iterable[str]) -> SoftHybridSet:
    """Copy of ``s`` with every grade outside ``params`` set to 0."""
    keep = set(params)
    unknown = keep.difference(s.pspace)
    if unknown:
        raise UnknownLabel(f"unknown parameters {sorted(unknown)!r}")
    return _build(
        s.variant,
        {e: g for e, g in s.params.items() if e in keep},
        {e: dict(row) for e, row in s.values.items() if e in keep},
        s.universe,
        s.pspace,
    )


def is_subset(s: SoftHybridSet, t: SoftHybridSet) -> bool:
    """Pointwise ``<=`` of both grids (tolerance TOL)."""
    same_spaces(s, t)
    for e, g in s.params.items():
        if g > t.grade(e) + TOL:
            return False
    for e, x, g in s.cells():
        if g > t.value(e, x) + TOL:
            return False
    return True


def equals(s: SoftHybridSet, t: SoftHybridSet) -> bool:
    return is_subset(s, t) and is_subset(t, s)
