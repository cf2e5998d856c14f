"""JSON workspaces: a universe, a parameter space and named sets over them.

The format::

    {"universe": ["x1", ...], "parameters": ["e1", ...],
     "sets": [{"name": "F_A", "variant": "fpfs" | ... | null,
               "params": {"e2": 0.2}, "values": {"e2": {"x2": 1.0}}}]}

``variant: null`` (or a missing ``variant``) infers the strictest variant the
grades satisfy. Explicit zero grades are accepted and dropped. Output is
canonical: keys follow declaration order, floats use their shortest repr and
the text ends with a newline, so serializing twice gives identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .core import ParameterSpace, SoftHybridSet, Universe, make_set
from .errors import (
    DatasetSyntaxError,
    DuplicateName,
    MixedSpaces,
    SchemaError,
    SoftSetError,
)

_TOP_REQUIRED = {"universe", "parameters", "sets"}
_TOP_OPTIONAL = {"format"}
_SET_REQUIRED = {"name", "params", "values"}
_SET_OPTIONAL = {"variant"}


@dataclass(frozen=True)
class Workspace:
    universe: Universe
    pspace: ParameterSpace
    sets: Mapping[str, SoftHybridSet] = field(default_factory=dict)

    def __post_init__(self):
        for name, s in self.sets.items():
            if s.universe != self.universe or s.pspace != self.pspace:
                raise MixedSpaces(f"set {name!r} does not live over the workspace spaces")

    def __getitem__(self, name: str) -> SoftHybridSet:
        try:
            return self.sets[name]
        except KeyError:
            raise SoftSetError(f"no set named {name!r}; available: {', '.join(self.sets) or '(none)'}") from None

    def with_sets(self, sets: Mapping[str, SoftHybridSet]) -> "Workspace":
        return Workspace(self.universe, self.pspace, dict(sets))


def _no_duplicate_keys(pairs):
    out = {}
    for key, value in pairs:
        if key in out:
            raise SchemaError(f"duplicate key {key!r}")
        out[key] = value
    return out


def _check_keys(obj, required, optional, where):
    if not isinstance(obj, dict):
        raise SchemaError(f"{where} must be an object")
    missing = required - obj.keys()
    if missing:
        raise SchemaError(f"{where} is missing field(s) {sorted(missing)}")
    extra = obj.keys() - required - optional
    if extra:
        raise SchemaError(f"{where} has unknown field(s) {sorted(extra)}")


def _labels(value, where):
    if not isinstance(value, list) or not value:
        raise SchemaError(f"{where} must be a nonempty list of labels")
    for label in value:
        if not isinstance(label, str) or not label:
            raise SchemaError(f"{where} labels must be nonempty strings, got {label!r}")
    if len(set(value)) != len(value):
        raise SchemaError(f"{where} contains duplicate labels")
    return tuple(value)


def _grade_map(value, where):
    if not isinstance(value, dict):
        raise SchemaError(f"{where} must be an object")
    for key, g in value.items():
        if isinstance(g, bool) or not isinstance(g, (int, float)):
            raise SchemaError(f"{where}[{key!r}] must be a number, got {g!r}")
    return value


def parse_workspace(text: str, *, check_support: bool = True) -> Workspace:
    """Parse and fully validate a workspace document."""
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise DatasetSyntaxError(
            f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})", exc.lineno, exc.colno
        ) from None

    _check_keys(doc, _TOP_REQUIRED, _TOP_OPTIONAL, "workspace")
    universe = Universe(_labels(doc["universe"], "universe"))
    pspace = ParameterSpace(_labels(doc["parameters"], "parameters"))
    if not isinstance(doc["sets"], list):
        raise SchemaError("sets must be a list")

    sets: dict[str, SoftHybridSet] = {}
    for k, entry in enumerate(doc["sets"]):
        _check_keys(entry, _SET_REQUIRED, _SET_OPTIONAL, f"sets[{k}]")
        name = entry["name"]
        if not isinstance(name, str) or not name:
            raise SchemaError(f"sets[{k}].name must be a nonempty string")
        if name in sets:
            raise DuplicateName(f"duplicate set name {name!r}")
        variant = entry.get("variant")
        if variant is not None and not isinstance(variant, str):
            raise SchemaError(f"set {name!r}: variant must be a string or null")
        params = _grade_map(entry["params"], f"set {name!r} params")
        values = entry["values"]
        if not isinstance(values, dict):
            raise SchemaError(f"set {name!r} values must be an object")
        values = {e: _grade_map(row, f"set {name!r} values[{e!r}]") for e, row in values.items()}
        sets[name] = make_set(variant, params, values, universe, pspace, name=name, check_support=check_support)
    return Workspace(universe, pspace, sets)


def _set_doc(name: str, s: SoftHybridSet) -> dict:
    return {
        "name": name,
        "variant": s.variant.value,
        "params": dict(s.params),
        "values": {e: dict(row) for e, row in s.values.items()},
    }


def serialize_workspace(ws: Workspace) -> str:
    doc = {
        "universe": list(ws.universe.items),
        "parameters": list(ws.pspace.params),
        "sets": [_set_doc(name, s) for name, s in ws.sets.items()],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def load_workspace(path, *, check_support: bool = True) -> Workspace:
    return parse_workspace(Path(path).read_text(encoding="utf-8"), check_support=check_support)


def save_workspace(ws: Workspace, path) -> None:
    Path(path).write_text(serialize_workspace(ws), encoding="utf-8")


def fixture_path(name: str) -> Path:
    """Path of a bundled fixture such as ``paper.json`` or ``depth.json``."""
    return Path(__file__).with_name("fixtures") / name


def load_fixture(name: str) -> Workspace:
    return load_workspace(fixture_path(name))
