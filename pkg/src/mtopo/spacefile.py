"""JSON space files: ``domain``, ``w``, ``ground`` and ``opens``."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import MTopoError, SpaceFileError
from .mset import MSet, MSpace, make_mset
from .topology import MTopology, build_topology

__all__ = ["load_space", "parse_space", "dump_space", "space_to_dict"]


def _counts(obj, where, space):
    if not isinstance(obj, dict):
        raise SpaceFileError(f"{where}: expected an element -> count object, got {type(obj).__name__}")
    for k, v in obj.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise SpaceFileError(f"{where}.{k}: count must be an integer, got {v!r}")
    try:
        return make_mset(space, obj)
    except MTopoError as exc:
        raise SpaceFileError(f"{where}: {exc}") from exc


def parse_space(doc) -> MTopology:
    """Decode a parsed document; topology axioms are checked by
    :func:`build_topology` and surface as its own exceptions."""
    if not isinstance(doc, dict):
        raise SpaceFileError("document root must be an object")
    missing = [k for k in ("domain", "w", "ground", "opens") if k not in doc]
    if missing:
        raise SpaceFileError(f"missing field(s): {', '.join(missing)}")
    extra = sorted(set(doc) - {"domain", "w", "ground", "opens"})
    if extra:
        raise SpaceFileError(f"unknown field(s): {', '.join(extra)}")
    domain, w = doc["domain"], doc["w"]
    if not isinstance(domain, list) or not all(isinstance(x, str) for x in domain):
        raise SpaceFileError("domain: expected an array of strings")
    if isinstance(w, bool) or not isinstance(w, int):
        raise SpaceFileError(f"w: expected an integer, got {w!r}")
    try:
        space = MSpace(tuple(domain), w)
    except MTopoError as exc:
        raise SpaceFileError(f"domain/w: {exc}") from exc
    ground = _counts(doc["ground"], "ground", space)
    if not isinstance(doc["opens"], list):
        raise SpaceFileError("opens: expected an array")
    opens = [_counts(u, f"opens[{i}]", space) for i, u in enumerate(doc["opens"])]
    return build_topology(ground, opens)


def load_space(path) -> MTopology:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpaceFileError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return parse_space(doc)


def space_to_dict(topo: MTopology) -> dict:
    return {
        "domain": list(topo.space.domain),
        "w": topo.space.w,
        "ground": topo.ground.as_dict(),
        "opens": [u.as_dict() for u in topo.opens],
    }


def dump_space(topo: MTopology, *, compact: bool = False) -> str:
    doc = space_to_dict(topo)
    if compact:
        return json.dumps(doc, ensure_ascii=False, separators=(",", ":"))
    return json.dumps(doc, ensure_ascii=False, indent=2)


def mset_from_json(obj, space: MSpace) -> MSet:
    return _counts(obj, "set", space)
