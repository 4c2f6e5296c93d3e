"""JSON round-trips for distributions, triangle functions, spaces and maps.

Objects serialize to plain dicts of JSON types; floats survive exactly
because json uses shortest round-trip repr. Structural problems in parsed
input raise ParseError with enough context to locate the offending key;
value-level validation stays with the constructors.

Formats:
    distribution   {"jumps": [[t, v], ...]}
    triangle       {"kind": "sum|max|conorm|pointwise", "tnorm": "min|prod|luk"}
    space          {"points": [...], "triangle": {...},
                    "distances": [{"x": ..., "y": ..., "dist": {...}}, ...]}
                   diagonal omitted, each unordered pair exactly once
    map            {"values": {label: distribution, ...}}
    self-map       {"map": {label: label, ...}}
"""

from __future__ import annotations

import json
from typing import Any

from .distributions import Distribution, make_step
from .errors import InputError, ParseError
from .lipschitz import ProbLipMap, SelfMap
from .spaces import PMSpace
from .triangle import Kind, TNorm, TriangleFunction

__all__ = [
    "distribution_to_obj",
    "distribution_from_obj",
    "triangle_to_obj",
    "triangle_from_obj",
    "space_to_obj",
    "space_from_obj",
    "map_to_obj",
    "map_from_obj",
    "self_map_to_obj",
    "self_map_from_obj",
    "read_json",
    "write_json",
]


def _require_dict(obj: Any, where: str) -> dict:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object, got {type(obj).__name__}")
    return obj


def _require_key(obj: dict, key: str, where: str) -> Any:
    if key not in obj:
        raise ParseError(f"{where}: missing key {key!r}")
    return obj[key]


def _require_number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"{where}: expected a number, got {type(value).__name__}")
    return float(value)


def _require_str(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise ParseError(f"{where}: expected a string, got {type(value).__name__}")
    return value


def distribution_to_obj(f: Distribution) -> dict:
    return {"jumps": [[t, v] for t, v in f.jumps]}


def distribution_from_obj(obj: Any, where: str = "distribution") -> Distribution:
    obj = _require_dict(obj, where)
    jumps = _require_key(obj, "jumps", where)
    if not isinstance(jumps, list):
        raise ParseError(f"{where}: 'jumps' must be a list")
    pairs = []
    for i, item in enumerate(jumps):
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ParseError(f"{where}: jump {i} must be a [location, level] pair")
        t = _require_number(item[0], f"{where}: jump {i} location")
        v = _require_number(item[1], f"{where}: jump {i} level")
        pairs.append((t, v))
    return make_step(pairs)


def triangle_to_obj(tf: TriangleFunction) -> dict:
    return {"kind": tf.kind.value, "tnorm": tf.tnorm.value}


def triangle_from_obj(obj: Any, where: str = "triangle") -> TriangleFunction:
    obj = _require_dict(obj, where)
    kind_s = _require_str(_require_key(obj, "kind", where), f"{where}: 'kind'")
    tnorm_s = _require_str(_require_key(obj, "tnorm", where), f"{where}: 'tnorm'")
    try:
        kind = Kind(kind_s)
    except ValueError:
        raise ParseError(f"{where}: unknown kind {kind_s!r}") from None
    try:
        tnorm = TNorm(tnorm_s)
    except ValueError:
        raise ParseError(f"{where}: unknown tnorm {tnorm_s!r}") from None
    return TriangleFunction(kind=kind, tnorm=tnorm)


def space_to_obj(space: PMSpace) -> dict:
    distances = [
        {"x": x, "y": y, "dist": distribution_to_obj(space.distribution(x, y))}
        for x, y in space.pair_list()
    ]
    return {
        "points": list(space.points),
        "triangle": triangle_to_obj(space.tf),
        "distances": distances,
    }


def space_from_obj(obj: Any, where: str = "space") -> PMSpace:
    obj = _require_dict(obj, where)
    points_raw = _require_key(obj, "points", where)
    if not isinstance(points_raw, list) or not points_raw:
        raise ParseError(f"{where}: 'points' must be a nonempty list")
    points = tuple(
        _require_str(p, f"{where}: point {i}") for i, p in enumerate(points_raw)
    )
    tf = triangle_from_obj(_require_key(obj, "triangle", where), f"{where}: triangle")
    distances = _require_key(obj, "distances", where)
    if not isinstance(distances, list):
        raise ParseError(f"{where}: 'distances' must be a list")
    pairs: dict[tuple[str, str], Distribution] = {}
    for i, entry in enumerate(distances):
        here = f"{where}: distances[{i}]"
        entry = _require_dict(entry, here)
        x = _require_str(_require_key(entry, "x", here), f"{here}: 'x'")
        y = _require_str(_require_key(entry, "y", here), f"{here}: 'y'")
        dist = distribution_from_obj(_require_key(entry, "dist", here), f"{here}: dist")
        if x not in points or y not in points:
            raise ParseError(f"{here}: unknown point in pair ({x!r}, {y!r})")
        if x == y:
            raise ParseError(f"{here}: diagonal pair ({x!r}, {y!r}) must be omitted")
        key = (x, y) if points.index(x) < points.index(y) else (y, x)
        if key in pairs:
            raise ParseError(f"{here}: duplicate pair ({x!r}, {y!r})")
        pairs[key] = dist
    n = len(points)
    if len(pairs) != n * (n - 1) // 2:
        have = set(pairs)
        for i in range(n):
            for j in range(i + 1, n):
                if (points[i], points[j]) not in have:
                    raise ParseError(
                        f"{where}: missing pair ({points[i]!r}, {points[j]!r})"
                    )
    try:
        return PMSpace.from_pairs(points, tf, pairs)
    except InputError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def map_to_obj(f: ProbLipMap) -> dict:
    return {
        "values": {label: distribution_to_obj(d) for label, d in zip(f.labels, f.dists)}
    }


def map_from_obj(obj: Any, where: str = "map") -> ProbLipMap:
    obj = _require_dict(obj, where)
    values = _require_key(obj, "values", where)
    values = _require_dict(values, f"{where}: 'values'")
    out: dict[str, Distribution] = {}
    for label, dist_obj in values.items():
        label = _require_str(label, f"{where}: label")
        out[label] = distribution_from_obj(dist_obj, f"{where}: values[{label!r}]")
    if not out:
        raise ParseError(f"{where}: 'values' must be nonempty")
    return ProbLipMap.from_dict(out)


def self_map_to_obj(m: SelfMap) -> dict:
    return {"map": dict(zip(m.labels, m.images))}


def self_map_from_obj(obj: Any, where: str = "self-map") -> SelfMap:
    obj = _require_dict(obj, where)
    mapping = _require_dict(_require_key(obj, "map", where), f"{where}: 'map'")
    out: dict[str, str] = {}
    for src, dst in mapping.items():
        src = _require_str(src, f"{where}: source label")
        out[src] = _require_str(dst, f"{where}: map[{src!r}]")
    if not out:
        raise ParseError(f"{where}: 'map' must be nonempty")
    return SelfMap.from_dict(out)


def read_json(path: str) -> Any:
    """Parse a JSON file, reporting failures as ParseError with the path."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def write_json(obj: Any, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")
