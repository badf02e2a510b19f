"""JSON dessin files and classification records.

A dessin file holds one object ``{"degree": d, "x": [...], "y": [...],
"name": "..."}`` or a list of such objects.  Points are zero-based and
``x[i]`` is the image of point ``i``.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from .dessin import RegularDessin, is_reflexible
from .errors import InvalidInput, ParseError
from .permgroup import Perm
from .symmetry import SymmetryReport, decide_symmetric, decide_symmetric_maximal, grow_normal, table1_candidates

FIELDS = ("degree", "x", "y", "name")


def _perm_field(obj: dict, key: str, degree: int) -> Perm:
    arr = obj.get(key)
    if not isinstance(arr, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in arr):
        raise ParseError(f"field {key!r} must be an array of integers")
    if len(arr) != degree:
        raise ParseError(f"field {key!r} has length {len(arr)}, expected {degree}")
    try:
        return Perm(arr)
    except InvalidInput as exc:
        raise ParseError(f"field {key!r}: {exc}") from None


def dessin_from_dict(obj: Any) -> RegularDessin:
    """Parse one record; raises ParseError or NotRegular."""
    if not isinstance(obj, dict):
        raise ParseError("a dessin record must be a JSON object")
    unknown = set(obj) - set(FIELDS)
    if unknown:
        raise ParseError(f"unknown fields: {sorted(unknown)}")
    degree = obj.get("degree")
    if not isinstance(degree, int) or isinstance(degree, bool) or degree < 1:
        raise ParseError("field 'degree' must be a positive integer")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("field 'name' must be a string")
    x = _perm_field(obj, "x", degree)
    y = _perm_field(obj, "y", degree)
    return RegularDessin(x, y, name)


def dessin_to_dict(D: RegularDessin) -> dict:
    out = {"degree": D.degree, "x": list(D.x.images), "y": list(D.y.images)}
    if D.name is not None:
        out["name"] = D.name
    return out


def read_records(path: str | Path) -> list[Any]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from None
    return data if isinstance(data, list) else [data]


def load_dessin(path: str | Path) -> RegularDessin:
    records = read_records(path)
    if len(records) != 1:
        raise ParseError(f"{path}: expected exactly one dessin, found {len(records)}")
    return dessin_from_dict(records[0])


def load_dessins(path: str | Path) -> list[RegularDessin]:
    return [dessin_from_dict(r) for r in read_records(path)]


def save_dessin(D: RegularDessin | list[RegularDessin], path: str | Path) -> None:
    payload = [dessin_to_dict(d) for d in D] if isinstance(D, list) else dessin_to_dict(D)
    Path(path).write_text(json.dumps(payload) + "\n", encoding="utf-8")


@dataclass
class ReportRecord:
    name: str | None
    degree: int
    type: tuple[int, int, int]
    genus: int
    reflexible: bool
    conditions: dict[str, dict] = field(default_factory=dict)
    symmetric: bool = False
    degenerate: bool = False
    maximal: bool = False
    growth: list[str] = field(default_factory=list)
    table1: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["type"] = list(self.type)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> ReportRecord:
        d = dict(d)
        d["type"] = tuple(d["type"])
        return cls(**d)

    def holding(self) -> list[str]:
        return [k for k in ("c1", "c2", "c3", "c4") if self.conditions[k]["holds"]]


def _images(p: Perm | None) -> list[int] | None:
    return None if p is None else list(p.images)


def conditions_dict(report: SymmetryReport) -> dict[str, dict]:
    c2, c3 = report.c2, report.c3
    return {
        "c1": {"holds": report.c1 is not None, "witness": _images(report.c1)},
        "c2": {"holds": c2 is not None, "rotation": c2[0] if c2 else None, "witness": _images(c2[1] if c2 else None)},
        "c3": {
            "holds": c3 is not None,
            "rotation": c3.rotation if c3 else None,
            "gamma": _images(c3.gamma if c3 else None),
            "delta": _images(c3.delta if c3 else None),
            "gamma_trivial": c3.gamma_trivial if c3 else None,
        },
        "c4": {"holds": report.c4},
    }


def build_record(D: RegularDessin, maximal: bool = False) -> ReportRecord:
    report = decide_symmetric_maximal(D, True) if maximal else decide_symmetric(D)
    return ReportRecord(
        name=D.name,
        degree=D.degree,
        type=tuple(D.type),
        genus=D.genus,
        reflexible=is_reflexible(D),
        conditions=conditions_dict(report),
        symmetric=report.symmetric,
        degenerate=report.degenerate,
        maximal=maximal,
        growth=[f"{s.rule}@{s.rotation}" for s in grow_normal(D)],
        table1=[row.case_label for row in table1_candidates(D.type)],
    )
