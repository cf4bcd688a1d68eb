"""JSON documents for forms, configurations and solution curves.

Polynomials are lists of ``[i, j, k, numerator, denominator]`` rows for the
monomial ``X0^i X1^j X2^k``; rationals elsewhere are ``[numerator,
denominator]`` pairs (plain integers are accepted on input).
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .candidates import SolutionSet
from .config import ChartPoint, Configuration, DivisorClass, Point, validate
from .errors import FolintError, InvalidConfiguration
from .polyform import ProjectiveOneForm, saturate, vector_field_to_form
from .poly import Poly

__all__ = [
    "FormatError",
    "loads_json",
    "form_from_json",
    "form_to_json",
    "config_from_json",
    "config_to_json",
    "solutions_from_json",
    "solutions_to_json",
    "rational_to_json",
    "rational_from_json",
]


class FormatError(FolintError):
    """A document is malformed."""


def loads_json(text: str | bytes) -> Any:
    if isinstance(text, bytes):
        raw = text
        try:
            text = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"invalid UTF-8 at byte offset {exc.start}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[:exc.pos].encode("utf-8"))
        raise FormatError(f"malformed JSON at byte offset {offset} (line {exc.lineno}, "
                          f"column {exc.colno}): {exc.msg}") from None


def rational_to_json(q) -> List[int]:
    q = Fraction(q)
    return [q.numerator, q.denominator]


def rational_from_json(v) -> Fraction:
    if isinstance(v, bool):
        raise FormatError(f"expected a rational, got {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if (isinstance(v, list) and len(v) == 2 and all(isinstance(a, int) and not isinstance(a, bool) for a in v)
            and v[1] != 0):
        return Fraction(v[0], v[1])
    raise FormatError(f"expected [numerator, denominator], got {v!r}")


def _poly(rows, what: str) -> Poly:
    if not isinstance(rows, list):
        raise FormatError(f"{what}: expected a list of coefficient rows")
    try:
        return Poly.from_list(rows, 3)
    except (ValueError, TypeError) as exc:
        raise FormatError(f"{what}: {exc}") from None


def _require(obj, key: str, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise FormatError(f"{where}: missing field {key!r}")
    return obj[key]


def form_from_json(doc) -> ProjectiveOneForm:
    if not isinstance(doc, dict):
        raise FormatError("form file: expected a JSON object")
    if "one_form" in doc:
        f = doc["one_form"]
        A, B, C = (_poly(_require(f, k, "one_form"), f"one_form.{k}") for k in "ABC")
        return saturate(A, B, C)
    if "vector_field" in doc:
        f = doc["vector_field"]
        U, V, W = (_poly(_require(f, k, "vector_field"), f"vector_field.{k}") for k in "UVW")
        return vector_field_to_form(U, V, W)
    raise FormatError("form file: needs a 'one_form' or 'vector_field' object")


def form_to_json(omega: ProjectiveOneForm) -> Dict[str, Any]:
    return {"one_form": {"A": omega.A.to_list(), "B": omega.B.to_list(), "C": omega.C.to_list()}}


def config_to_json(cfg: Configuration) -> Dict[str, Any]:
    pts = []
    for i, pt in enumerate(cfg.points):
        entry: Dict[str, Any] = {
            "id": i,
            "parent": pt.parent,
            "proximate_to": sorted(pt.proximate_to),
            "nu": pt.nu,
            "eps": pt.eps,
            "dicritical": bool(pt.dicritical),
        }
        if pt.coordinates is not None:
            cp = pt.coordinates
            entry["coordinates"] = {"path": list(cp.path), "x": rational_to_json(cp.x),
                                    "y": rational_to_json(cp.y)}
        pts.append(entry)
    return {"points": pts}


def _int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise FormatError(f"{where}: expected an integer, got {v!r}")
    return v


def config_from_json(doc) -> Configuration:
    pts_doc = _require(doc, "points", "config file")
    if not isinstance(pts_doc, list):
        raise FormatError("config file: 'points' must be a list")
    ids: Dict[Any, int] = {}
    for i, p in enumerate(pts_doc):
        pid = p.get("id", i) if isinstance(p, dict) else i
        if not isinstance(pid, (int, str)) or isinstance(pid, bool):
            raise FormatError(f"point {i}: id must be an integer or string")
        if pid in ids:
            raise FormatError(f"point {i}: duplicate id {pid!r}")
        ids[pid] = i

    def ref(v, where):
        if v not in ids:
            raise FormatError(f"{where}: unknown point id {v!r}")
        return ids[v]

    points: List[Point] = []
    for i, p in enumerate(pts_doc):
        where = f"point {i}"
        if not isinstance(p, dict):
            raise FormatError(f"{where}: expected an object")
        parent = p.get("parent")
        parent = None if parent is None else ref(parent, where)
        prox = p.get("proximate_to", [])
        if not isinstance(prox, list):
            raise FormatError(f"{where}: proximate_to must be a list")
        coords = None
        if p.get("coordinates") is not None:
            c = p["coordinates"]
            path = _require(c, "path", where)
            if not isinstance(path, list) or not path:
                raise FormatError(f"{where}: coordinates.path must be a non-empty list")
            coords = ChartPoint(tuple(_int(k, where) for k in path),
                                rational_from_json(c.get("x", 0)), rational_from_json(c.get("y", 0)))
        dic = p.get("dicritical", False)
        if not isinstance(dic, bool):
            raise FormatError(f"{where}: dicritical must be a boolean")
        points.append(Point(parent=parent, proximate_to=frozenset(ref(q, where) for q in prox),
                            coordinates=coords, nu=_int(p.get("nu", 0), where),
                            eps=_int(p.get("eps", 1 if dic else 0), where), dicritical=dic))
    cfg = Configuration(tuple(points))
    errs = validate(cfg)
    if errs:
        raise InvalidConfiguration("; ".join(errs))
    return cfg


def solutions_from_json(doc, cfg: Configuration) -> SolutionSet:
    curves_doc = _require(doc, "curves", "solutions file")
    if not isinstance(curves_doc, list):
        raise FormatError("solutions file: 'curves' must be a list")
    curves: List[Tuple[Poly, DivisorClass]] = []
    for i, c in enumerate(curves_doc):
        where = f"curve {i}"
        f = _poly(_require(c, "polynomial", where), where)
        deg = _int(c.get("degree", f.degree), where)
        if f.degree != deg or not f.is_homogeneous():
            raise FormatError(f"{where}: polynomial is not homogeneous of degree {deg}")
        mults = _require(c, "multiplicities", where)
        if not isinstance(mults, list) or len(mults) != cfg.n:
            raise FormatError(f"{where}: expected {cfg.n} multiplicities")
        curves.append((f, DivisorClass.from_degree(deg, [_int(m, where) for m in mults])))
    return SolutionSet(tuple(curves))


def solutions_to_json(S: SolutionSet) -> Dict[str, Any]:
    return {"curves": [{"polynomial": f.to_list(), "degree": int(c.c[0]),
                        "multiplicities": [int(m) for m in c.multiplicities]} for f, c in S.curves]}
